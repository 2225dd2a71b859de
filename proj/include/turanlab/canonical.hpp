#pragma once

// Canonical labelling by individualisation-refinement.
//
// The ordered partition is refined to an equitable one (cells split by the
// number of neighbours in each splitter cell, fragments ordered by count).
// The search tree individualises vertices of the first non-singleton cell;
// leaves are compared by their relabelled adjacency rows and the largest is
// canonical. Automorphisms found at leaves prune the tree two ways: children
// in the same orbit as an explored sibling (under generators fixing the path
// prefix) are skipped, and a leaf equivalent to an earlier leaf returns the
// search to the point where the two paths diverged.

#include "turanlab/graph.hpp"

#include <string>
#include <vector>

namespace turanlab {

struct CanonicalForm {
    // relabeling[i] = vertex of the input placed at canonical position i.
    std::vector<int> relabeling;
    // graph6 of the canonically relabelled graph. Equal iff isomorphic.
    std::string certificate;
    // orbit[v] = smallest vertex in the Aut(G)-orbit of v.
    std::vector<int> orbit;
    // Automorphism generators found during the search; gen[v] = image of v.
    std::vector<std::vector<int>> generators;
    std::size_t leaves = 0;
};

CanonicalForm canonical_form(const Graph& g);

// canonical_form(g).certificate
std::string certificate(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace turanlab
