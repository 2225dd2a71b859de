#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using namespace turanlab;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) b.add_edge(u, v);
    return b.build();
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline PatternSpec spec(const std::string& family, std::initializer_list<int> params, Mode mode) {
    std::string label = family;
    for (auto it = params.begin(); it != params.end(); ++it)
        label += (it == params.begin() ? "" : ",") + std::to_string(*it);
    return {named_graph(family, params), mode, label};
}

inline PatternSpec sub(const std::string& family, std::initializer_list<int> params) {
    return spec(family, params, Mode::subgraph);
}

inline PatternSpec ind(const std::string& family, std::initializer_list<int> params) {
    return spec(family, params, Mode::induced);
}

// Brute-force isomorphism by trying every permutation (small n only).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (a.relabeled(perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace testing_support
