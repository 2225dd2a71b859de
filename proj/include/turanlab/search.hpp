#pragma once

#include "turanlab/bounds.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace turanlab {

// Node budget used when SearchOptions leaves it at zero. Reads
// TURANLAB_BUDGET_NODES when set to a positive integer.
std::uint64_t default_node_budget();

struct SearchOptions {
    std::uint64_t node_budget = 0;  // 0: default_node_budget()
    double time_budget_seconds = 0;  // 0: unlimited
    int threads = 1;
    std::size_t witness_cap = 100;
};

struct SearchStats {
    std::uint64_t nodes = 0;   // graphs accepted into the generation tree
    std::uint64_t pruned = 0;  // subtrees cut by the edge bound
    std::uint64_t witness_overflow = 0;
    double seconds = 0;
};

struct SearchResult {
    int n = 0;
    ConstraintSet constraints;
    // -1 when no graph on n vertices satisfies the constraints.
    long long max_edges = -1;
    // Canonically labelled, sorted by certificate, at most witness_cap.
    std::vector<Graph> witnesses;
    std::vector<std::string> certificates;
    SearchStats stats;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument for n < 1, n > 64 or a pattern on fewer than
// two vertices.
void validate_search_input(int n, const ConstraintSet& c);

// Maximum edge count over n-vertex graphs satisfying every constraint, by
// canonical augmentation (one vertex at a time, each isomorphism class
// generated once). Throws BudgetExceeded when a limit is hit.
SearchResult extremal_number(int n, const ConstraintSet& c, const SearchOptions& options = {});

// Calls `visit` once per isomorphism class of constrained graphs on exactly
// n vertices (or on every order 1..n with all_orders). Graphs arrive in their
// generation labelling. Returning false from `visit` stops the enumeration.
// Returns the number of graphs visited.
std::uint64_t enumerate_graphs(int n, const ConstraintSet& c,
                               const std::function<bool(const Graph&)>& visit,
                               const SearchOptions& options = {}, bool all_orders = false);

// Every labelled graph on n <= 6 vertices; -1 if none qualifies.
long long exhaustive_oracle(int n, const ConstraintSet& c);

// Independent strategy: labelled vertex-by-vertex branch and bound with
// incremental constraint checks and the exact value for smaller orders as
// the remaining-edge bound. Returns -1 if no graph qualifies.
long long branch_and_bound_extremal(int n, const ConstraintSet& c, const SearchOptions& options = {});

struct RamseySearchResult {
    int a = 0;
    int b = 0;
    int value = 0;         // least n with no (K_a, independent b)-free graph
    Graph critical;        // a witness on value-1 vertices
    std::uint64_t nodes = 0;  // (K_a, E_b)-free classes seen over all orders
};

// Grows n until no graph avoids both a K_a and an independent b-set.
// Throws std::invalid_argument when a, b < 2 or no answer below max_n.
RamseySearchResult ramsey_number_search(int a, int b, int max_n = 20, const SearchOptions& options = {});

// Whether some red/blue colouring of K_n has neither a red K_a nor a blue
// K_b. Plain labelled backtracking over edges, no isomorphism reduction.
bool ramsey_colouring_exists(int a, int b, int n);

// Every s-subset of a has at least r common neighbours in g.
bool drc_property_holds(const Graph& g, VertexSet a, int s, int r);

// Dependent random choice. Each sample draws t vertices uniformly with
// repetition, takes their common neighbourhood A0 and removes one vertex from
// every s-subset of A0 with fewer than r common neighbours. With no t_exp the
// samples sweep t = 0, 1, ..., n cyclically (t = 0 gives A0 = V). Returns the
// largest surviving set, or nullopt when every sample ends empty.
std::optional<VertexSet> drc_find_set(const Graph& g, int s, int r, int samples, std::uint64_t seed,
                                      std::optional<int> t_exp = std::nullopt);

// Structural recognition of the pattern families the bounds speak about.
struct PatternShape {
    int order = 0;
    bool complete = false;
    std::optional<std::pair<int, int>> complete_bipartite;  // part sizes, smaller first
    std::optional<int> cycle_length;
};
PatternShape identify_shape(const Graph& pattern);

enum class Comparison { upper, lower, equal, info };
std::string to_string(Comparison kind);

struct BoundColumn {
    std::string id;
    double value = 0;
    Comparison kind = Comparison::upper;
    bool certified = true;
    // Set when the column compares its own quantity instead of the row's
    // exact value (e.g. a co-degree cap checked on the same graphs).
    std::optional<double> measured;

    bool passes(double row_exact) const;
};

struct VerificationRow {
    int n = 0;
    std::string constraints;
    double exact = 0;
    std::vector<BoundColumn> bounds;

    bool pass() const;
};

// The value a bound id takes for (n, c), or std::invalid_argument when the
// constraint set lacks the shape the bound needs. Ids: thm1, es-c4c5, thm4
// (beta = 0, leading term), cor5 (leading term).
BoundColumn applicable_bound(const std::string& id, int n, const ConstraintSet& c);

// One row per n in [n_lo, n_hi] (ascending, empty when n_lo > n_hi): the
// exact extremal number and each bound evaluated at n.
std::vector<VerificationRow> verify_bounds(int n_lo, int n_hi, const ConstraintSet& c,
                                           const std::vector<std::string>& bound_ids,
                                           const SearchOptions& options = {});

}  // namespace turanlab
