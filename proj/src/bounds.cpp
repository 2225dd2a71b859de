#include "turanlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace turanlab {

namespace detail {
extern const char* const kRamseyTableText;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

BoundReport report(std::string name, std::vector<std::pair<std::string, double>> params,
                   double value, bool certified, std::string notes = {}) {
    return BoundReport{std::move(name), std::move(params), value, certified, std::move(notes)};
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial arguments must be non-negative");
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t ramsey_upper(int a, int b) {
    require(a >= 1 && b >= 1, "Ramsey arguments must be positive");
    return binomial(a + b - 2, b - 1);
}

// ---------------------------------------------------------------------------
// RamseyTable

RamseyTable RamseyTable::parse(std::istream& in) {
    RamseyTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Entry e;
        if (!(fields >> e.a)) continue;  // blank
        if (!(fields >> e.b >> e.value))
            throw std::runtime_error("ramsey table line " + std::to_string(line_no) + ": expected 'a b value source'");
        std::getline(fields >> std::ws, e.source);
        if (e.source.empty())
            throw std::runtime_error("ramsey table line " + std::to_string(line_no) + ": missing source");
        if (e.a < 1 || e.b < 1)
            throw std::runtime_error("ramsey table line " + std::to_string(line_no) + ": arguments must be positive");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.value > ramsey_upper(e.a, e.b))
            throw std::runtime_error("ramsey table line " + std::to_string(line_no) +
                                     ": value exceeds the Erdos-Szekeres bound");
        if (table.index_.contains({e.a, e.b}))
            throw std::runtime_error("ramsey table line " + std::to_string(line_no) + ": duplicate entry");
        table.index_[{e.a, e.b}] = table.entries_.size();
        table.entries_.push_back(std::move(e));
    }
    return table;
}

RamseyTable RamseyTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ramsey table '" + path + "'");
    return parse(in);
}

const RamseyTable& RamseyTable::builtin() {
    static const RamseyTable table = [] {
        std::istringstream in(detail::kRamseyTableText);
        return parse(in);
    }();
    return table;
}

std::optional<std::uint64_t> RamseyTable::exact(int a, int b) const {
    require(a >= 1 && b >= 1, "Ramsey arguments must be positive");
    if (a > b) std::swap(a, b);
    if (a == 1) return 1;
    if (a == 2) return static_cast<std::uint64_t>(b);
    auto it = index_.find({a, b});
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].value;
}

std::uint64_t RamseyTable::upper(int a, int b) const {
    require(a >= 1 && b >= 1, "Ramsey arguments must be positive");
    std::map<std::pair<int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int)> go = [&](int x, int y) -> std::uint64_t {
        if (x > y) std::swap(x, y);
        if (auto e = exact(x, y)) return *e;
        auto it = memo.find({x, y});
        if (it != memo.end()) return it->second;
        const std::uint64_t v = std::min(ramsey_upper(x, y), go(x - 1, y) + go(x, y - 1));
        memo[{x, y}] = v;
        return v;
    };
    return go(a, b);
}

std::optional<std::uint64_t> ramsey_exact(int a, int b) { return RamseyTable::builtin().exact(a, b); }

// ---------------------------------------------------------------------------
// Evaluators

BoundReport thm1_bound(int n, int r, int s, int t) {
    require(n >= 1, "thm1 needs n >= 1");
    require(r >= 2 && s >= 2 && t >= 2, "thm1 needs r, s, t >= 2");
    const double N = n, R = r, S = s, T = t;
    const double four_s = std::pow(4.0, S);
    const double bracket = std::pow(R + T, T / S) + (R + S) + 2.0 * std::pow(R + T, T * (S + 1) / (S * S)) * (R + S);
    const double value = std::pow(N, 2.0 - 1.0 / S) * four_s * bracket + 2.0 * four_s * N;
    return report("thm1", {{"n", N}, {"r", R}, {"s", S}, {"t", T}}, value, true,
                  "edge bound for K_r-free graphs with no induced K_{s,t}");
}

BoundReport thm2_clique_bound(int n, int r, int s, int t, int m) {
    require(n >= 1, "thm2 needs n >= 1");
    require(m >= 2, "thm2 needs m >= 2");
    require(r >= 2 && s >= 2 && t >= 2, "thm2 needs r, s, t >= 2");
    const double N = n, R = r, S = s, T = t, M = m;
    const double value = 2.0 * std::pow(T + R, T * M / S) * std::pow(R + S, S) * std::pow(N, M - (M - 1) / S) +
                         std::pow(R + S, S) * std::pow(N, M - 1);
    return report("thm2", {{"n", N}, {"r", R}, {"s", S}, {"t", T}, {"m", M}}, value, true,
                  "caps m * t_m(G); divide by m for a clique-count cap");
}

namespace {

void check_thm3(int n, double d, int t) {
    require(t >= 2, "thm3 needs t >= 2");
    require(t < 62 && n >= (1L << t) + 1, "thm3 needs n >= 2^t + 1");
    require(d >= 0.0 && d <= n - 1, "thm3 needs 0 <= d <= n-1");
}

}  // namespace

BoundReport thm3_clique_lb(int n, double d, int t) {
    check_thm3(n, d, t);
    const double N = n, T = t;
    const double inner = d * d / (2.0 * N) * (1.0 - 2.0 / std::pow(N, 1.0 / T));
    const double degree_case = std::pow(inner, 1.0 / T) - T;
    const double early_exit = std::pow(d * d / (2.0 * N * T), 1.0 / T);
    const double statement = early_exit - T;
    std::ostringstream notes;
    notes.precision(17);
    notes << "min of case bound " << degree_case << " and early-exit clique " << early_exit
          << "; headline form (d^2/(2nt))^{1/t} - t = " << statement << " (leading term, not certified)";
    return report("thm3", {{"n", N}, {"d", d}, {"t", T}}, std::min(degree_case, early_exit), true, notes.str());
}

BoundReport thm3_statement_form(int n, double d, int t) {
    check_thm3(n, d, t);
    const double N = n, T = t;
    return report("thm3-statement", {{"n", N}, {"d", d}, {"t", T}},
                  std::pow(d * d / (2.0 * N * T), 1.0 / T) - T, false, "(1 - o(1)) factor dropped");
}

std::int64_t odd_cycle_alpha(int k, int t) {
    require(k >= 2 && t >= 2, "alpha(k,t) needs k, t >= 2");
    const std::int64_t cap = erdos_gallai_cap(k, t);
    return cap * (cap - 1);
}

BoundReport thm4_odd_cycle_bound(int n, int k, int t, double beta_k, bool beta_certified) {
    require(n >= 1, "thm4 needs n >= 1");
    require(k >= 2 && t >= 2, "thm4 needs k, t >= 2");
    require(beta_k >= 0.0, "thm4 needs beta_k >= 0");
    const double N = n;
    const auto alpha = static_cast<double>(odd_cycle_alpha(k, t));
    const double value = std::sqrt(std::sqrt(alpha) + 1.0) * std::pow(N, 1.5) / 2.0 +
                         beta_k * std::pow(N, 1.0 + 1.0 / (2.0 * k));
    return report("thm4", {{"n", N}, {"k", double(k)}, {"t", double(t)}, {"beta", beta_k}, {"alpha", alpha}},
                  value, beta_certified,
                  beta_certified ? "beta_k supplied from a concrete triangle constant"
                                 : "beta_k not derived from a concrete constant; leading term only");
}

double beta_from_triangle_constant(double c_k) {
    require(c_k >= 0.0, "triangle constant must be non-negative");
    return std::sqrt(c_k / 2.0);
}

BoundReport es_c4c5_bound(int n) {
    require(n >= 1, "es-c4c5 needs n >= 1");
    const double N = n;
    const double value = std::pow(N, 1.5) / (2.0 * std::sqrt(2.0)) + 4.0 * std::sqrt(N / 2.0);
    return report("es-c4c5", {{"n", N}}, value, true, "upper bound on ex(n,{C4,C5})");
}

BoundReport cor5_leading(int n, int v_h, int t) {
    require(n >= 1, "cor5 needs n >= 1");
    require(v_h >= 1, "cor5 needs v_H >= 1");
    require(t >= 2, "cor5 needs t >= 2");
    const double N = n, V = v_h, T = t;
    const double value = std::sqrt(2.0) * std::sqrt(T) * std::pow(V + T, T / 2.0) * std::pow(N, 1.5);
    return report("cor5", {{"n", N}, {"vh", V}, {"t", T}}, value, false, "o(1) term dropped");
}

Rational eh_exponent(int s, int t) {
    require(s >= 2 && t >= 2, "exponent needs s, t >= 2");
    std::int64_t num = s;
    std::int64_t den = std::int64_t{t} * (s + 1) + std::int64_t{s} * s;
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

BoundReport kss_leading(int n, int k, int s) {
    require(s >= 3, "kss needs s >= 3");
    require(k >= s, "kss needs k >= s");
    require(n >= 1, "kss needs n >= 1");
    const double N = n, K = k, S = s;
    double factorial = 1.0;
    for (int i = 2; i <= s; ++i) factorial *= i;
    const double coefficient = std::pow(4.0, S) * std::pow((S - 1.0) * (2.0 * K - 3.0) / factorial, 1.0 / S);
    return report("kss", {{"n", N}, {"k", K}, {"s", S}}, coefficient * std::pow(N, 2.0 - 1.0 / S), false,
                  "o(n^{2-1/s}) term dropped");
}

std::int64_t erdos_gallai_cap(int k, int t) {
    require(k >= 2 && t >= 2, "cap needs k, t >= 2");
    return std::int64_t{2 * k - 2} * (t - 1);
}

double drc_threshold(int n, double d, int s, int r, int t) {
    require(n >= 1, "drc threshold needs n >= 1");
    require(s >= 1 && r >= 1 && t >= 1, "drc threshold needs s, r, t >= 1");
    require(d >= 0.0 && d <= n - 1, "drc threshold needs 0 <= d <= n-1");
    double choose = 1.0;
    for (int i = 1; i <= s; ++i) choose = choose * (n - s + i) / i;
    if (s > n) choose = 0.0;
    const double N = n;
    return std::pow(d, t) / std::pow(N, t - 1) - choose * std::pow(r / N, t);
}

double ramsey_multiplicity_lb(int n, int s) {
    require(n >= 1 && s >= 1, "multiplicity bound needs n, s >= 1");
    return std::pow(static_cast<double>(n), s) / (std::pow(2.0, s) * std::pow(4.0, double(s) * s));
}

double clique_neighbourhood_independent_lb(double d, int r, int s) {
    require(d >= 0.0 && r >= 1 && s >= 1, "invalid parameters");
    return std::pow(d / (2.0 * std::pow(double(r + s), s)), s);
}

// ---------------------------------------------------------------------------

namespace {

struct Args {
    const std::string& id;
    const std::map<std::string, double>& values;

    double real(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) throw std::invalid_argument("bound " + id + " needs --" + key);
        return it->second;
    }
    double real_or(const std::string& key, double fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    int integer(const std::string& key) const {
        const double v = real(key);
        if (v != std::floor(v)) throw std::invalid_argument("--" + key + " must be an integer");
        return static_cast<int>(v);
    }
};

}  // namespace

std::vector<std::string> bound_ids() {
    return {"cor5", "drc", "eg-cap", "eh-exponent", "es-c4c5", "kss", "ramsey-exact", "ramsey-upper",
            "thm1", "thm2", "thm3", "thm4"};
}

BoundReport evaluate_bound(const std::string& id, const std::map<std::string, double>& params) {
    const Args a{id, params};
    if (id == "thm1") return thm1_bound(a.integer("n"), a.integer("r"), a.integer("s"), a.integer("t"));
    if (id == "thm2")
        return thm2_clique_bound(a.integer("n"), a.integer("r"), a.integer("s"), a.integer("t"), a.integer("m"));
    if (id == "thm3") return thm3_clique_lb(a.integer("n"), a.real("d"), a.integer("t"));
    if (id == "thm4") return thm4_odd_cycle_bound(a.integer("n"), a.integer("k"), a.integer("t"), a.real_or("beta", 0.0));
    if (id == "es-c4c5") return es_c4c5_bound(a.integer("n"));
    if (id == "cor5") return cor5_leading(a.integer("n"), a.integer("vh"), a.integer("t"));
    if (id == "kss") return kss_leading(a.integer("n"), a.integer("k"), a.integer("s"));
    if (id == "eh-exponent") {
        const int s = a.integer("s"), t = a.integer("t");
        const Rational e = eh_exponent(s, t);
        return report("eh-exponent", {{"s", double(s)}, {"t", double(t)}}, e.to_double(), false,
                      "exponent " + e.to_string() + "; Omega constant unspecified");
    }
    if (id == "eg-cap") {
        const int k = a.integer("k"), t = a.integer("t");
        return report("eg-cap", {{"k", double(k)}, {"t", double(t)}}, double(erdos_gallai_cap(k, t)), true,
                      "d(x,y) cap for non-adjacent pairs");
    }
    if (id == "drc") {
        const int n = a.integer("n"), s = a.integer("s"), r = a.integer("r"), t = a.integer("t");
        const double d = a.real("d");
        return report("drc", {{"n", double(n)}, {"d", d}, {"s", double(s)}, {"r", double(r)}, {"t", double(t)}},
                      drc_threshold(n, d, s, r, t), true, "guaranteed size of the extracted set");
    }
    if (id == "ramsey-upper") {
        const int s = a.integer("s"), t = a.integer("t");
        return report("ramsey-upper", {{"s", double(s)}, {"t", double(t)}}, double(ramsey_upper(s, t)), true,
                      "Erdos-Szekeres binomial");
    }
    if (id == "ramsey-exact") {
        const int s = a.integer("s"), t = a.integer("t");
        const auto v = RamseyTable::builtin().exact(s, t);
        if (!v) throw std::invalid_argument("R(" + std::to_string(s) + "," + std::to_string(t) + ") is not tabulated");
        return report("ramsey-exact", {{"s", double(s)}, {"t", double(t)}}, double(*v), s <= 2 || t <= 2 || (s == 3 && t == 3),
                      "table value");
    }
    throw std::invalid_argument("unknown bound id '" + id + "'");
}

}  // namespace turanlab
