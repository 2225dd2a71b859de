#pragma once

// Containment tests (subgraph / induced) and exact clique and independent-set
// counting.

#include "turanlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace turanlab {

enum class Mode { subgraph, induced };

std::string to_string(Mode mode);

// A forbidden pattern. Complete patterns behave identically in both modes.
struct PatternSpec {
    Graph pattern;
    Mode mode = Mode::subgraph;
    std::string label;  // display name, e.g. "C4"; may be empty

    std::string describe() const;  // "C4-ind", "K3-sub", ...
};

using ConstraintSet = std::vector<PatternSpec>;

std::string describe(const ConstraintSet& c);

// embedding[i] = host vertex that pattern vertex i maps to.
using Embedding = std::vector<int>;

// Backtracking matcher compiled once per (pattern, mode). Pattern vertices are
// placed highest-degree first, then by most already-placed neighbours, so each
// step intersects candidate bitsets with the rows of mapped neighbours (and,
// in induced mode, removes rows of mapped non-neighbours).
class PatternMatcher {
public:
    PatternMatcher(const Graph& pattern, Mode mode);

    const Graph& pattern() const { return pattern_; }
    Mode mode() const { return mode_; }

    std::optional<Embedding> find(const Graph& host) const;

    // Only embeddings whose image contains host vertex `anchor`.
    std::optional<Embedding> find_through(const Graph& host, int anchor) const;

    bool occurs_in(const Graph& host) const { return find(host).has_value(); }
    bool occurs_through(const Graph& host, int anchor) const {
        return find_through(host, anchor).has_value();
    }

private:
    struct Plan {
        std::vector<int> order;             // pattern vertices in placement order
        std::vector<Row> earlier_adjacent;  // positions (bit i = order[i]) adjacent to order[k]
        std::vector<Row> earlier_nonadjacent;
    };

    Plan make_plan(int start) const;
    bool extend(const Graph& host, const Plan& plan, std::size_t depth, Row used, int* image,
                const Row* degree_ok, const Row* codegree_ok) const;
    std::optional<Embedding> run(const Graph& host, const Plan& plan, int anchor) const;

    Graph pattern_;
    Mode mode_;
    Plan root_plan_;
    std::vector<Plan> anchored_plans_;  // one per pattern vertex placed first
};

bool contains_subgraph(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);
std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern);
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

// Number of m-vertex complete subgraphs t_m(G). m >= 1, else std::invalid_argument.
std::uint64_t count_cliques(const Graph& g, int m);

// profile[k] = t_k(G) for k = 0..n (profile[0] = 1, the empty clique).
std::vector<std::uint64_t> clique_profile(const Graph& g);

// |I_s(G)| = t_s(complement(G)).
std::uint64_t count_independent_sets(const Graph& g, int s);

// Maximum clique by colour-bounded branch and bound. Throws for n = 0.
VertexSet maximum_clique(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

struct ConstraintOutcome {
    PatternSpec spec;
    bool satisfied = true;                // pattern absent in the forbidden sense
    std::optional<Embedding> witness;     // first embedding found when violated
};

struct ConstraintReport {
    std::vector<ConstraintOutcome> outcomes;
    bool all_satisfied() const;
};

ConstraintReport check_constraints(const Graph& g, const ConstraintSet& c);

// Compiled form of a ConstraintSet for repeated checks inside the search.
class ConstraintChecker {
public:
    explicit ConstraintChecker(const ConstraintSet& c);

    const ConstraintSet& constraints() const { return constraints_; }

    bool satisfied(const Graph& g) const;

    // Assumes g minus `vertex` already satisfies every constraint; only
    // embeddings through `vertex` are examined.
    bool satisfied_through(const Graph& g, int vertex) const;

private:
    ConstraintSet constraints_;
    std::vector<PatternMatcher> matchers_;
};

}  // namespace turanlab
