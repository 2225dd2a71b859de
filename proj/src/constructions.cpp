#include "turanlab/constructions.hpp"

#include "turanlab/simd/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace turanlab {

namespace {

// Monic irreducible polynomials, coefficients low degree first. Irreducibility
// is re-checked by the constructor (every non-zero element must be invertible).
const std::map<int, std::vector<int>>& irreducible_polynomials() {
    static const std::map<int, std::vector<int>> table{
        {4, {1, 1, 1}},              // x^2 + x + 1 over GF(2)
        {8, {1, 1, 0, 1}},           // x^3 + x + 1
        {16, {1, 1, 0, 0, 1}},       // x^4 + x + 1
        {32, {1, 0, 1, 0, 0, 1}},    // x^5 + x^2 + 1
        {64, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
        {9, {1, 0, 1}},              // x^2 + 1 over GF(3)
        {27, {1, 2, 0, 1}},          // x^3 + 2x + 1
        {25, {2, 0, 1}},             // x^2 + 2 over GF(5)
        {49, {1, 0, 1}},             // x^2 + 1 over GF(7)
    };
    return table;
}

}  // namespace

PrimePowerField::PrimePowerField(int q) : q_(q) {
    if (q < 2 || q > 64) throw std::invalid_argument("field order must be a prime power in 2..64");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    for (int rest = q; rest > 1; rest /= p) {
        if (rest % p != 0)
            throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        ++e;
    }
    p_ = p;
    e_ = e;

    std::vector<int> modulus;
    if (e > 1) {
        auto it = irreducible_polynomials().find(q);
        if (it == irreducible_polynomials().end())
            throw std::invalid_argument("no irreducible polynomial tabulated for q = " + std::to_string(q));
        modulus = it->second;
    }

    auto digits = [&](int x) {
        std::vector<int> d(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i, x /= p) d[i] = x % p;
        return d;
    };
    auto number = [&](const std::vector<int>& d) {
        int x = 0;
        for (int i = e - 1; i >= 0; --i) x = x * p + d[i];
        return x;
    };

    const auto size = static_cast<std::size_t>(q) * q;
    add_.resize(size);
    mul_.resize(size);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        const auto da = digits(a);
        std::vector<int> n(da.size());
        for (int i = 0; i < e; ++i) n[i] = (p - da[i]) % p;
        neg_[a] = static_cast<std::uint8_t>(number(n));
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b);
            std::vector<int> s(static_cast<std::size_t>(e));
            for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            add_[index(a, b)] = static_cast<std::uint8_t>(number(s));

            std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            // reduce modulo the monic modulus
            for (int deg = 2 * e - 2; deg >= e; --deg) {
                const int c = prod[deg];
                if (c == 0) continue;
                for (int i = 0; i <= e; ++i)
                    prod[deg - e + i] = ((prod[deg - e + i] - c * modulus[i]) % p + p) % p;
            }
            prod.resize(static_cast<std::size_t>(e));
            mul_[index(a, b)] = static_cast<std::uint8_t>(number(prod));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
    for (int a = 1; a < q; ++a)
        if (inv_[a] == 0) throw std::logic_error("tabulated polynomial for q = " + std::to_string(q) + " is reducible");

    if (q == 2) generator_ = 1;
    for (int g = 2; g < q && generator_ == 0; ++g) {
        int order = 1;
        for (int x = g; x != 1; x = mul(x, g)) ++order;
        if (order == q - 1) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("multiplicative group has no generator");
}

int PrimePowerField::inv(int a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return inv_[a];
}

int PrimePowerField::pow(int a, long k) const {
    int result = 1;
    int base = a;
    for (; k > 0; k >>= 1) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::vector<int> PrimePowerField::multiplicative_subgroup(int t) const {
    if (t < 1 || (q_ - 1) % t != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(t) + " does not divide q-1 = " +
                                    std::to_string(q_ - 1));
    const int h = pow(generator_, (q_ - 1) / t);
    std::vector<int> out;
    int x = 1;
    for (int i = 0; i < t; ++i, x = mul(x, h)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> projective_points(const PrimePowerField& f) {
    const int q = f.order();
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});
    return pts;
}

namespace {

int dot(const PrimePowerField& f, const std::array<int, 3>& x, const std::array<int, 3>& y) {
    return f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), f.mul(x[2], y[2]));
}

void require_fits(long vertices, const char* what) {
    if (vertices > kMaxVertices)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(vertices) +
                                    " vertices, above the 64-vertex limit");
}

}  // namespace

Graph turan_graph(int n, int r) {
    if (r < 2) throw std::invalid_argument("Turán graph needs r >= 2");
    if (n < 1) throw std::invalid_argument("Turán graph needs n >= 1");
    std::vector<int> part(static_cast<std::size_t>(n));
    int v = 0;
    for (int i = 0; i < r; ++i) {
        const int size = n / r + (i < n % r ? 1 : 0);
        for (int j = 0; j < size; ++j) part[v++] = i;
    }
    GraphBuilder b(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (part[x] != part[y]) b.add_edge(x, y);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be non-empty");
    require_fits(long{a} + b, "complete bipartite graph");
    return named_graph("K", {a, b});
}

Graph projective_plane_incidence(const PrimePowerField& f) {
    const auto pts = projective_points(f);
    const int n = static_cast<int>(pts.size());
    require_fits(2L * n, "projective plane incidence graph");
    GraphBuilder b(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot(f, pts[i], pts[j]) == 0) b.add_edge(i, n + j);
    return b.build();
}

Graph bollobas_gyori(const PrimePowerField& f) {
    const auto pts = projective_points(f);
    const int n = static_cast<int>(pts.size());
    require_fits(3L * n, "Bollobás–Győri graph");
    GraphBuilder b(3 * n);
    for (int i = 0; i < n; ++i) {
        b.add_edge(2 * i, 2 * i + 1);
        for (int j = 0; j < n; ++j)
            if (dot(f, pts[i], pts[j]) == 0) {
                b.add_edge(2 * i, 2 * n + j);
                b.add_edge(2 * i + 1, 2 * n + j);
            }
    }
    return b.build();
}

Graph polarity_graph(const PrimePowerField& f) {
    const auto pts = projective_points(f);
    const int n = static_cast<int>(pts.size());
    require_fits(n, "polarity graph");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dot(f, pts[i], pts[j]) == 0) b.add_edge(i, j);
    return b.build();
}

Graph furedi_k2t(const PrimePowerField& f, int t) {
    const int q = f.order();
    const auto subgroup = f.multiplicative_subgroup(t);  // validates t | q-1
    std::vector<bool> in_subgroup(static_cast<std::size_t>(q), false);
    for (int h : subgroup) in_subgroup[h] = true;

    // orbit representative: the pair with smallest code a*q+b in its orbit
    const int pairs = q * q;
    std::vector<int> orbit_of(static_cast<std::size_t>(pairs), -1);
    std::vector<std::pair<int, int>> reps;
    for (int code = 1; code < pairs; ++code) {
        if (orbit_of[code] >= 0) continue;
        const int a = code / q;
        const int b = code % q;
        const int id = static_cast<int>(reps.size());
        reps.emplace_back(a, b);
        for (int h : subgroup) orbit_of[f.mul(h, a) * q + f.mul(h, b)] = id;
    }
    const int n = static_cast<int>(reps.size());
    require_fits(n, "Füredi graph");
    GraphBuilder g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto [a, b] = reps[i];
            const auto [x, y] = reps[j];
            if (in_subgroup[f.add(f.mul(a, x), f.mul(b, y))]) g.add_edge(i, j);
        }
    return g.build();
}

Graph CutResult::cut_subgraph() const {
    const int n = host.order();
    const Row a = side_a.bits();
    const Row b = low_bits(n) & ~a;
    std::array<Row, kMaxVertices> rows{};
    for (int v = 0; v < n; ++v) rows[v] = host.row(v) & (((a >> v) & 1u) ? b : a);
    return Graph::from_rows(n, std::span<const Row>(rows.data(), static_cast<std::size_t>(n)));
}

bool is_locally_maximal(const Graph& g, VertexSet side_a) {
    const Row a = side_a.bits();
    for (int v = 0; v < g.order(); ++v) {
        const Row own = ((a >> v) & 1u) ? a : (low_bits(g.order()) & ~a);
        const int same = std::popcount(g.row(v) & own);
        if (same > g.degree(v) - same) return false;
    }
    return true;
}

CutResult local_max_cut(const Graph& g) {
    Row even = 0;
    for (int v = 0; v < g.order(); v += 2) even |= bit(v);
    return local_max_cut(g, VertexSet(even));
}

CutResult local_max_cut(const Graph& g, VertexSet initial) {
    const int n = g.order();
    if (!initial.is_subset_of(g.vertices())) throw std::out_of_range("initial side outside graph");
    const Row all = low_bits(n);
    Row a = initial.bits();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const bool in_a = (a >> v) & 1u;
            const int same = std::popcount(g.row(v) & (in_a ? a : (all & ~a)));
            if (same > g.degree(v) - same) {
                a ^= bit(v);
                moved = true;
            }
        }
    }
    std::array<std::uint8_t, kMaxVertices> across{};
    simd::masked_popcounts(g.rows(), all & ~a, std::span<std::uint8_t>(across.data(), static_cast<std::size_t>(n)));
    std::size_t cut = 0;
    for (int v : VertexSet(a)) cut += across[v];
    return CutResult{g, VertexSet(a), cut};
}

ConstraintSet certification_constraints(const std::string& family, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("family " + family + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (family == "turan") {
        need(2);
        const int r = params[1];
        return {{named_graph("K", {r + 1}), Mode::subgraph, "K" + std::to_string(r + 1)}};
    }
    if (family == "kab") {
        need(2);
        return {{named_graph("P", {4}), Mode::induced, "P4"}};
    }
    if (family == "incidence") {
        need(1);
        return {{named_graph("C", {4}), Mode::subgraph, "C4"}};
    }
    if (family == "polarity") {
        need(1);
        return {{named_graph("K", {2, 2}), Mode::subgraph, "K2,2"}};
    }
    if (family == "bg") {
        need(1);
        return {{named_graph("C", {5}), Mode::subgraph, "C5"}, {named_graph("C", {4}), Mode::induced, "C4"}};
    }
    if (family == "furedi") {
        need(2);
        const int t = params[1];
        return {{named_graph("K", {2, t + 1}), Mode::subgraph, "K2," + std::to_string(t + 1)}};
    }
    throw std::invalid_argument("unknown construction family '" + family + "'");
}

}  // namespace turanlab
