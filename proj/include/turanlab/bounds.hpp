#pragma once

// Evaluators for the explicit bounds on induced Turán numbers and the Ramsey
// quantities they depend on. Each evaluator returns a BoundReport; `certified`
// is false whenever an asymptotic term or an unspecified constant was dropped.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turanlab {

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double value = 0.0;
    bool certified = false;
    std::string notes;
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational&) const = default;
};

// Exact binomial coefficient; throws std::overflow_error beyond 64 bits.
std::uint64_t binomial(int n, int k);

// Erdős–Szekeres: R(a,b) <= C(a+b-2, b-1). Requires a,b >= 1.
std::uint64_t ramsey_upper(int a, int b);

// Known small Ramsey numbers. Each entry carries a provenance string; entries
// with a <= 2 or b <= 2 are computed rather than stored.
class RamseyTable {
public:
    struct Entry {
        int a = 0;
        int b = 0;
        std::uint64_t value = 0;
        std::string source;
    };

    // The table shipped in data/ramsey_small.txt, compiled in.
    static const RamseyTable& builtin();

    // Lines "a b value source...", '#' comments, blank lines ignored.
    // Throws std::runtime_error with the line number on malformed input or
    // when an entry exceeds its Erdős–Szekeres bound.
    static RamseyTable parse(std::istream& in);
    static RamseyTable load(const std::string& path);

    std::optional<std::uint64_t> exact(int a, int b) const;

    // Least upper bound from the recursion R(a,b) <= R(a-1,b) + R(a,b-1),
    // seeded with exact values where known.
    std::uint64_t upper(int a, int b) const;

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

// Table lookup (symmetric); R(1,b) = 1 and R(2,b) = b computed directly.
std::optional<std::uint64_t> ramsey_exact(int a, int b);

// e(G) <= n^{2-1/s} 4^s ((r+t)^{t/s} + (r+s) + 2(r+t)^{t(s+1)/s^2}(r+s)) + 2*4^s n
// for K_r-free graphs with no induced K_{s,t}.
BoundReport thm1_bound(int n, int r, int s, int t);

// m*t_m(G) <= 2(t+r)^{tm/s}(r+s)^s n^{m-(m-1)/s} + (r+s)^s n^{m-1}.
BoundReport thm2_clique_bound(int n, int r, int s, int t, int m);

// Lower bound on the clique number of an n-vertex graph with minimum degree d
// and no induced K_{2,t+1}: the smaller of the two cases the argument ends in,
//   (d^2/(2n) (1 - 2/n^{1/t}))^{1/t} - t     and     (d^2/(2nt))^{1/t}.
// Requires t >= 2, n >= 2^t + 1, 0 <= d <= n-1.
BoundReport thm3_clique_lb(int n, double d, int t);

// The headline form (d^2/(2nt))^{1/t} - t with the (1 - o(1)) factor dropped.
BoundReport thm3_statement_form(int n, double d, int t);

// alpha(k,t) = (2k-2)(t-1)((2k-2)(t-1) - 1).
std::int64_t odd_cycle_alpha(int k, int t);

// (alpha(k,t)^{1/2} + 1)^{1/2} n^{3/2}/2 + beta_k n^{1+1/(2k)}.
// certified only when the caller vouches for beta_k (beta_certified).
BoundReport thm4_odd_cycle_bound(int n, int k, int t, double beta_k, bool beta_certified = false);

// beta_k = sqrt(c_k / 2) where c_k/3 n^{1+1/k} caps the triangles of a
// C_{2k+1}-free graph.
double beta_from_triangle_constant(double c_k);

// ex(n, {C4, C5}) <= n^{3/2}/(2 sqrt 2) + 4 (n/2)^{1/2}.
BoundReport es_c4c5_bound(int n);

// sqrt(2) t^{1/2} (v_H + t)^{t/2} n^{3/2}, o(1) dropped.
BoundReport cor5_leading(int n, int v_h, int t);

// s / (t(s+1) + s^2), the exponent in the polynomial clique-number bound.
Rational eh_exponent(int s, int t);

// 4^s ((s-1)(2k-3)/s!)^{1/s} n^{2-1/s}. Requires k >= s >= 3.
BoundReport kss_leading(int n, int k, int s);

// (2k-2)(t-1): common-neighbourhood cap for non-adjacent pairs in
// C_{2k+1}-free graphs with no induced K_{2,t}.
std::int64_t erdos_gallai_cap(int k, int t);

// d^t/n^{t-1} - C(n,s)(r/n)^t.
double drc_threshold(int n, double d, int s, int r, int t);

// n^s / (2^s 4^{s^2}).
double ramsey_multiplicity_lb(int n, int s);

// (d / (2(r+s)^s))^s: minimum number of s-independent sets in the common
// neighbourhood of an (m-1)-clique with d > R(r-m+1, s) common neighbours.
double clique_neighbourhood_independent_lb(double d, int r, int s);

// Registry used by the command line. Parameter names: n r s t m d k beta vh.
// Throws std::invalid_argument for unknown ids or missing parameters.
BoundReport evaluate_bound(const std::string& id, const std::map<std::string, double>& params);
std::vector<std::string> bound_ids();

}  // namespace turanlab
