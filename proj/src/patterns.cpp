#include "turanlab/patterns.hpp"

#include "turanlab/simd/kernels.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace turanlab {

std::string to_string(Mode mode) { return mode == Mode::induced ? "ind" : "sub"; }

std::string PatternSpec::describe() const {
    const std::string name = label.empty() ? "G" + std::to_string(pattern.order()) : label;
    return name + "-" + to_string(mode);
}

std::string describe(const ConstraintSet& c) {
    std::string out;
    for (const auto& spec : c) {
        if (!out.empty()) out += ' ';
        out += spec.describe();
    }
    return out;
}

// ---------------------------------------------------------------------------
// PatternMatcher

namespace {

using DegreeMasks = std::array<Row, kMaxVertices + 1>;

// masks[d] = vertices of degree >= d.
void degree_masks(const Graph& host, DegreeMasks& at_least, DegreeMasks& co_at_least) {
    const int n = host.order();
    std::array<std::uint8_t, kMaxVertices> deg{};
    simd::masked_popcounts(host.rows(), low_bits(n), std::span<std::uint8_t>(deg.data(), n));
    at_least.fill(0);
    co_at_least.fill(0);
    for (int v = 0; v < n; ++v) {
        at_least[deg[v]] |= bit(v);
        co_at_least[n - 1 - deg[v]] |= bit(v);
    }
    for (int d = kMaxVertices - 1; d >= 0; --d) {
        at_least[d] |= at_least[d + 1];
        co_at_least[d] |= co_at_least[d + 1];
    }
}

}  // namespace

PatternMatcher::PatternMatcher(const Graph& pattern, Mode mode)
    : pattern_(pattern), mode_(mode), root_plan_(make_plan(-1)) {
    anchored_plans_.reserve(static_cast<std::size_t>(pattern.order()));
    for (int p = 0; p < pattern.order(); ++p) anchored_plans_.push_back(make_plan(p));
}

PatternMatcher::Plan PatternMatcher::make_plan(int start) const {
    const int k = pattern_.order();
    Plan plan;
    if (k == 0) return plan;
    Row placed = 0;
    if (start < 0) {
        start = 0;
        for (int v = 1; v < k; ++v)
            if (pattern_.degree(v) > pattern_.degree(start)) start = v;
    }
    plan.order.push_back(start);
    placed |= bit(start);
    while (static_cast<int>(plan.order.size()) < k) {
        int best = -1;
        int best_links = -1;
        for (int v = 0; v < k; ++v) {
            if ((placed >> v) & 1u) continue;
            const int links = std::popcount(pattern_.row(v) & placed);
            if (links > best_links ||
                (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        plan.order.push_back(best);
        placed |= bit(best);
    }
    plan.earlier_adjacent.assign(k, 0);
    plan.earlier_nonadjacent.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j) {
            if (pattern_.adjacent(plan.order[i], plan.order[j]))
                plan.earlier_adjacent[i] |= bit(j);
            else
                plan.earlier_nonadjacent[i] |= bit(j);
        }
    return plan;
}

bool PatternMatcher::extend(const Graph& host, const Plan& plan, std::size_t depth, Row used,
                            int* image, const Row* degree_ok, const Row* codegree_ok) const {
    if (depth == plan.order.size()) return true;
    Row cand = degree_ok[depth] & ~used;
    if (mode_ == Mode::induced) cand &= codegree_ok[depth];
    for (int j : VertexSet(plan.earlier_adjacent[depth])) cand &= host.row(image[j]);
    if (mode_ == Mode::induced)
        for (int j : VertexSet(plan.earlier_nonadjacent[depth])) cand &= ~host.row(image[j]);
    for (int c : VertexSet(cand)) {
        image[depth] = c;
        if (extend(host, plan, depth + 1, used | bit(c), image, degree_ok, codegree_ok)) return true;
    }
    return false;
}

std::optional<Embedding> PatternMatcher::run(const Graph& host, const Plan& plan, int anchor) const {
    const int k = pattern_.order();
    const int n = host.order();
    if (k == 0) return Embedding{};
    if (k > n) return std::nullopt;

    DegreeMasks at_least;
    DegreeMasks co_at_least;
    degree_masks(host, at_least, co_at_least);

    // per placement position: admissible host vertices by degree
    std::array<Row, kMaxVertices> degree_ok{};
    std::array<Row, kMaxVertices> codegree_ok{};
    for (int i = 0; i < k; ++i) {
        const int p = plan.order[i];
        degree_ok[i] = at_least[pattern_.degree(p)];
        codegree_ok[i] = co_at_least[k - 1 - pattern_.degree(p)];
    }
    if (anchor >= 0) {
        degree_ok[0] &= bit(anchor);
        if (!degree_ok[0]) return std::nullopt;
    }

    std::array<int, kMaxVertices> image{};
    if (!extend(host, plan, 0, 0, image.data(), degree_ok.data(), codegree_ok.data()))
        return std::nullopt;
    Embedding out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[plan.order[i]] = image[i];
    return out;
}

std::optional<Embedding> PatternMatcher::find(const Graph& host) const {
    return run(host, root_plan_, -1);
}

std::optional<Embedding> PatternMatcher::find_through(const Graph& host, int anchor) const {
    if (anchor < 0 || anchor >= host.order()) throw std::out_of_range("anchor outside host");
    for (const Plan& plan : anchored_plans_)
        if (auto e = run(host, plan, anchor)) return e;
    return std::nullopt;
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    return PatternMatcher(pattern, Mode::subgraph).occurs_in(host);
}

bool contains_induced(const Graph& host, const Graph& pattern) {
    return PatternMatcher(pattern, Mode::induced).occurs_in(host);
}

std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern) {
    return PatternMatcher(pattern, Mode::subgraph).find(host);
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    return PatternMatcher(pattern, Mode::induced).find(host);
}

// ---------------------------------------------------------------------------
// Clique counting: pivoting clique tree. Every clique of the graph is
// represented exactly once by a root-to-leaf path holding `held` forced
// vertices and `pivots` optional vertices, contributing C(pivots, m - held)
// cliques of order m.

namespace {

struct Binomials {
    std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};
    Binomials() {
        for (int a = 0; a <= kMaxVertices; ++a) {
            c[a][0] = 1;
            for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
        }
    }
};

const Binomials& binomials() {
    static const Binomials table;
    return table;
}

void pivot_tree(const Graph& g, Row candidates, int held, int pivots,
                std::vector<std::uint64_t>& profile) {
    if (candidates == 0) {
        const auto& c = binomials().c;
        for (int k = 0; k <= pivots; ++k) profile[held + k] += c[pivots][k];
        return;
    }
    std::array<std::uint8_t, kMaxVertices> links{};
    simd::masked_popcounts(g.rows(), candidates,
                           std::span<std::uint8_t>(links.data(), static_cast<std::size_t>(g.order())));
    int pivot = -1;
    for (int v : VertexSet(candidates))
        if (pivot < 0 || links[v] > links[pivot]) pivot = v;

    pivot_tree(g, candidates & g.row(pivot), held, pivots + 1, profile);
    Row rest = candidates & ~bit(pivot);
    for (int v : VertexSet(rest & ~g.row(pivot))) {
        pivot_tree(g, rest & g.row(v), held + 1, pivots, profile);
        rest &= ~bit(v);
    }
}

}  // namespace

std::vector<std::uint64_t> clique_profile(const Graph& g) {
    std::vector<std::uint64_t> profile(static_cast<std::size_t>(g.order()) + 1, 0);
    pivot_tree(g, low_bits(g.order()), 0, 0, profile);
    return profile;
}

std::uint64_t count_cliques(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("clique order must be at least 1");
    if (m > g.order()) return 0;
    return clique_profile(g)[m];
}

std::uint64_t count_independent_sets(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("independent set order must be at least 1");
    return count_cliques(complement(g), s);
}

// ---------------------------------------------------------------------------
// Maximum clique: greedy colouring bound (Tomita-style) over bitsets.

namespace {

struct CliqueSearch {
    const Graph& g;
    Row best = 0;
    int best_size = 0;

    void expand(Row current, int size, Row candidates) {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> colour{};
        int count = 0;
        Row uncoloured = candidates;
        for (int k = 1; uncoloured; ++k) {
            Row q = uncoloured;
            while (q) {
                const int v = std::countr_zero(q);
                q &= ~g.row(v) & ~bit(v);
                uncoloured &= ~bit(v);
                order[count] = v;
                colour[count] = k;
                ++count;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + colour[i] <= best_size) return;
            const int v = order[i];
            const Row next = candidates & g.row(v);
            if (next == 0) {
                if (size + 1 > best_size) {
                    best_size = size + 1;
                    best = current | bit(v);
                }
            } else {
                expand(current | bit(v), size + 1, next);
            }
            candidates &= ~bit(v);
        }
    }
};

}  // namespace

VertexSet maximum_clique(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("clique number of the empty graph is undefined");
    CliqueSearch search{g};
    search.expand(0, 0, low_bits(g.order()));
    return VertexSet(search.best);
}

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

int independence_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("independence number of the empty graph is undefined");
    return clique_number(complement(g));
}

// ---------------------------------------------------------------------------

bool ConstraintReport::all_satisfied() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.satisfied; });
}

ConstraintReport check_constraints(const Graph& g, const ConstraintSet& c) {
    ConstraintReport report;
    for (const auto& spec : c) {
        ConstraintOutcome outcome{spec, true, std::nullopt};
        outcome.witness = PatternMatcher(spec.pattern, spec.mode).find(g);
        outcome.satisfied = !outcome.witness.has_value();
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

ConstraintChecker::ConstraintChecker(const ConstraintSet& c) : constraints_(c) {
    matchers_.reserve(c.size());
    for (const auto& spec : c) matchers_.emplace_back(spec.pattern, spec.mode);
}

bool ConstraintChecker::satisfied(const Graph& g) const {
    return std::none_of(matchers_.begin(), matchers_.end(),
                        [&](const PatternMatcher& m) { return m.occurs_in(g); });
}

bool ConstraintChecker::satisfied_through(const Graph& g, int vertex) const {
    return std::none_of(matchers_.begin(), matchers_.end(),
                        [&](const PatternMatcher& m) { return m.occurs_through(g, vertex); });
}

}  // namespace turanlab
