// Acceptance run: one PASS/FAIL line per criterion. A criterion fails when
// its checks fail, when it throws, or when it exceeds its wall-clock limit.

#include "turanlab/bounds.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace turanlab;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) detail << "first failure: " << what << "; ";
        ok = ok && condition;
    }
};

PatternSpec spec(const std::string& family, std::initializer_list<int> params, Mode mode) {
    std::string label = family;
    for (auto it = params.begin(); it != params.end(); ++it)
        label += (it == params.begin() ? "" : ",") + std::to_string(*it);
    return {named_graph(family, params), mode, label};
}
PatternSpec sub(const std::string& f, std::initializer_list<int> p) { return spec(f, p, Mode::subgraph); }
PatternSpec ind(const std::string& f, std::initializer_list<int> p) { return spec(f, p, Mode::induced); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (edge(rng)) b.add_edge(u, v);
    return b.build();
}

int max_nonadjacent_codegree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) best = std::max(best, common_degree(g, VertexSet::of({u, v})));
    return best;
}

std::uint64_t sum_independent_common_degrees(const Graph& g, int s) {
    std::uint64_t total = 0;
    const int n = g.order();
    std::function<void(int, Row, int)> grow = [&](int next, Row set, int size) {
        if (size == s) {
            total += static_cast<std::uint64_t>(common_degree(g, VertexSet(set)));
            return;
        }
        for (int v = next; v < n; ++v)
            if ((g.row(v) & set) == 0) grow(v + 1, set | bit(v), size + 1);
    };
    grow(0, 0, 0);
    return total;
}

// 1. Augmentation search against the labelled oracle.
void oracle_equivalence(Verdict& v) {
    const std::vector<std::pair<std::string, std::initializer_list<int>>> families = {
        {"C", {3}}, {"C", {4}}, {"C", {5}}, {"K", {3}}, {"K", {4}}, {"K", {1, 2}}, {"K", {2, 2}}};
    std::vector<PatternSpec> pool;
    for (const auto& [f, p] : families) {
        pool.push_back(sub(f, p));
        pool.push_back(ind(f, p));
    }
    std::mt19937_64 rng(20240601);
    std::set<std::vector<int>> drawn;
    while (drawn.size() < 20) {
        const int size = 1 + static_cast<int>(rng() % 3);
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < size) pick.insert(static_cast<int>(rng() % pool.size()));
        drawn.insert(std::vector<int>(pick.begin(), pick.end()));
    }
    int comparisons = 0;
    for (const auto& indices : drawn) {
        ConstraintSet c;
        for (int i : indices) c.push_back(pool[i]);
        for (int n = 1; n <= 6; ++n) {
            const long long fast = extremal_number(n, c).max_edges;
            const long long slow = exhaustive_oracle(n, c);
            v.require(fast == slow, "n=" + std::to_string(n) + " " + describe(c) + ": " + std::to_string(fast) +
                                        " vs " + std::to_string(slow));
            ++comparisons;
        }
    }
    v.detail << comparisons << " comparisons over 20 constraint sets";
}

// 2. Triangle-free graphs without induced C4 are C4-free.
void c3c4_identity(Verdict& v) {
    const std::vector<long long> expected{3, 5, 6, 8, 10};
    for (int n = 4; n <= 8; ++n) {
        const long long induced = extremal_number(n, {sub("C", {3}), ind("C", {4})}).max_edges;
        const long long plain = extremal_number(n, {sub("C", {3}), sub("C", {4})}).max_edges;
        const long long cross = n <= 6 ? exhaustive_oracle(n, {sub("C", {3}), ind("C", {4})})
                                       : branch_and_bound_extremal(n, {sub("C", {3}), ind("C", {4})});
        v.require(induced == plain && induced == cross && induced == expected[n - 4],
                  "n=" + std::to_string(n));
        v.detail << induced << (n < 8 ? "," : "");
    }
}

// 3. Edge bound and co-degree cap for {K3-sub, K2,2-ind}.
void thm1_check(Verdict& v) {
    SearchOptions opts;
    opts.witness_cap = 1'000'000;
    int worst_codegree = 0;
    for (int n = 4; n <= 9; ++n) {
        const SearchResult r = extremal_number(n, {sub("K", {3}), ind("K", {2, 2})}, opts);
        v.require(r.stats.witness_overflow == 0, "witness cap reached");
        v.require(static_cast<double>(r.max_edges) <= thm1_bound(n, 3, 2, 2).value, "edge bound n=" + std::to_string(n));
        for (const Graph& w : r.witnesses) worst_codegree = std::max(worst_codegree, max_nonadjacent_codegree(w));
    }
    const auto r32 = ramsey_exact(3, 2);
    v.require(r32 && *r32 == 3, "R(3,2) = 3");
    v.require(worst_codegree <= 3, "co-degree cap");
    v.detail << "max non-adjacent co-degree " << worst_codegree;
}

// 4. Triangle counts of K4-free graphs without induced K2,2.
void thm2_check(Verdict& v) {
    std::uint64_t graphs = 0;
    double worst_ratio = 0;
    enumerate_graphs(
        9, {sub("K", {4}), ind("K", {2, 2})},
        [&](const Graph& g) {
            ++graphs;
            const double lhs = 3.0 * static_cast<double>(count_cliques(g, 3));
            const double rhs = thm2_clique_bound(g.order(), 4, 2, 2, 3).value;
            v.require(lhs <= rhs, "3 t3 bound");
            worst_ratio = std::max(worst_ratio, lhs / rhs);
            return true;
        },
        {}, true);
    v.detail << graphs << " graphs, max ratio " << worst_ratio;
}

// 5. Clique number lower bound for induced-K2,3-free graphs.
void thm3_check(Verdict& v) {
    const ConstraintSet c{ind("K", {2, 3})};
    int remaining = 500;
    int checked = 0;
    for (int n = 5; n <= 10 && remaining > 0; ++n) {
        const int quota = (remaining + (10 - n)) / (10 - n + 1);
        int taken = 0;
        enumerate_graphs(n, c, [&](const Graph& g) {
            const double lb = thm3_clique_lb(n, g.min_degree(), 2).value;
            v.require(clique_number(g) >= lb, "n=" + std::to_string(n));
            return ++taken < quota;
        });
        remaining -= taken;
        checked += taken;
    }
    v.require(checked == 500, "500 graphs");
    v.detail << checked << " graphs";
}

// 6. Co-degree cap in C5-free graphs without induced K2,2.
void thm4_check(Verdict& v) {
    const int cap = static_cast<int>(erdos_gallai_cap(2, 2));
    int worst = 0;
    std::uint64_t graphs = 0;
    enumerate_graphs(
        9, {sub("C", {5}), ind("K", {2, 2})},
        [&](const Graph& g) {
            ++graphs;
            worst = std::max(worst, max_nonadjacent_codegree(g));
            return true;
        },
        {}, true);
    v.require(cap == 2, "cap value");
    v.require(worst <= cap, "co-degree cap");
    v.detail << graphs << " graphs, max co-degree " << worst;
}

// 7. Double-counting identities.
void identities(Verdict& v) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 13;
        const Graph g = random_graph(rng, n, 0.15 + 0.7 * (trial % 11) / 10.0);
        for (int s : {2, 3}) {
            std::uint64_t link_cliques = 0, link_independent = 0;
            for (int x = 0; x < n; ++x) {
                const Graph link = induced_on(g, g.neighbors(x));
                if (link.order() == 0) continue;
                link_cliques += count_cliques(link, s);
                link_independent += count_cliques(complement(link), s);
            }
            v.require(link_cliques == static_cast<std::uint64_t>(s + 1) * count_cliques(g, s + 1), "clique identity");
            v.require(sum_independent_common_degrees(g, s) == link_independent, "independent-set identity");
        }
    }
    v.detail << "200 graphs, s = 2, 3";
}

// 8. Ramsey multiplicity for s = 2.
void ramsey_multiplicity(Verdict& v) {
    std::mt19937_64 rng(88);
    double slack = 1e9;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 33 + trial % 8;
        const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
        const double total = static_cast<double>(count_cliques(g, 2) + count_cliques(complement(g), 2));
        v.require(total >= ramsey_multiplicity_lb(n, 2), "n=" + std::to_string(n));
        slack = std::min(slack, total / ramsey_multiplicity_lb(n, 2));
    }
    v.detail << "min ratio " << slack;
}

// 9. Algebraic constructions.
void constructions(Verdict& v) {
    for (int q : {2, 3, 4, 5}) {
        const Graph g = polarity_graph(PrimePowerField(q));
        v.require(!contains_subgraph(g, named_graph("K", {2, 2})), "polarity K2,2-free");
        v.require(g.edge_count() == static_cast<std::size_t>(q * (q + 1) * (q + 1) / 2), "polarity edges");
    }
    const Graph f = furedi_k2t(PrimePowerField(5), 2);
    v.require(f.order() == 12 && !contains_subgraph(f, named_graph("K", {2, 3})), "furedi(5,2)");
    for (int q : {2, 3}) {
        const Graph g = bollobas_gyori(PrimePowerField(q));
        const long long points = q * q + q + 1;
        v.require(!contains_subgraph(g, named_graph("C", {5})) && !contains_induced(g, named_graph("C", {4})),
                  "bg certification");
        v.require(static_cast<long long>(g.edge_count()) == (2 * q + 3) * points, "bg edge count");
        v.detail << "bg(" << q << "): " << g.edge_count() << " edges vs quoted " << 2 * (q + 2) * points << "; ";
    }
    const Graph heawood = projective_plane_incidence(PrimePowerField(2));
    v.require(heawood.order() == 14 && heawood.edge_count() == 21, "incidence(2) size");
    v.require(!contains_subgraph(heawood, named_graph("C", {3})) && !contains_subgraph(heawood, named_graph("C", {4})) &&
                  !contains_subgraph(heawood, named_graph("C", {5})) && contains_subgraph(heawood, named_graph("C", {6})),
              "incidence(2) girth 6");
}

// 10. Max-cut pipeline.
void max_cut(Verdict& v) {
    const std::vector<std::pair<Graph, int>> cases{{furedi_k2t(PrimePowerField(9), 2), 2},
                                                   {polarity_graph(PrimePowerField(5)), 1}};
    for (const auto& [g, t] : cases) {
        const CutResult cut = local_max_cut(g);
        const Graph bip = cut.cut_subgraph();
        v.require(2 * cut.cut_edges >= g.edge_count(), "half the edges");
        v.require(!contains_subgraph(bip, named_graph("C", {3})) && !contains_subgraph(bip, named_graph("C", {5})),
                  "short odd cycles");
        bool bipartite = true;
        for (const auto& [a, b] : bip.edges()) bipartite &= cut.side_a.contains(a) != cut.side_a.contains(b);
        v.require(bipartite, "cut subgraph bipartite");
        v.require(!contains_induced(bip, named_graph("K", {2, t + 1})), "induced K2,t+1-free");
        v.detail << g.order() << " vertices: " << cut.cut_edges << "/" << g.edge_count() << " edges cut; ";
    }
}

// 11. Dependent random choice postcondition.
void drc(Verdict& v) {
    std::mt19937_64 rng(1111);
    int nonempty = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 29);
        const Graph g = random_graph(rng, n, 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
        const int s = 1 + static_cast<int>(rng() % 3);
        const int r = static_cast<int>(rng() % 5);
        try {
            const auto a = drc_find_set(g, s, r, 20, rng());
            if (a) {
                ++nonempty;
                v.require(drc_property_holds(g, *a, s, r), "property violated");
            }
        } catch (const std::logic_error& e) {
            v.require(false, e.what());
        }
    }
    const auto all = drc_find_set(named_graph("K", {20}), 2, 5, 200, 1);
    v.require(all && all->size() == 20, "K20 returns every vertex");
    v.detail << nonempty << " non-empty results";
}

// 12. C4/C5 bound against search.
void es_check(Verdict& v) {
    for (int n = 4; n <= 8; ++n) {
        const long long e = extremal_number(n, {sub("C", {4}), sub("C", {5})}).max_edges;
        v.require(static_cast<double>(e) <= es_c4c5_bound(n).value, "n=" + std::to_string(n));
        v.detail << e << (n < 8 ? "," : "");
    }
}

// 13. R(3,3) from scratch.
void ramsey33(Verdict& v) {
    const RamseySearchResult r = ramsey_number_search(3, 3);
    v.require(r.value == 6, "search value");
    v.require(ramsey_exact(3, 3) == std::optional<std::uint64_t>(r.value), "table agreement");
    v.require(ramsey_colouring_exists(3, 3, 5) && !ramsey_colouring_exists(3, 3, 6), "labelled colouring check");
    v.require(isomorphic(r.critical, named_graph("C", {5})), "critical graph is C5");
    v.detail << "R(3,3) = " << r.value << " after " << r.nodes << " nodes";
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    void (*run)(Verdict&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "search agrees with the labelled oracle", 60, oracle_equivalence},
        {2, "C3-sub/C4-ind equals C3/C4-sub", 300, c3c4_identity},
        {3, "K3-free, induced-K2,2-free edge bound and co-degree cap", 600, thm1_check},
        {4, "triangle-count bound for K4-free, induced-K2,2-free graphs", 600, thm2_check},
        {5, "clique-number lower bound on 500 induced-K2,3-free graphs", 300, thm3_check},
        {6, "co-degree cap in C5-free, induced-K2,2-free graphs", 300, thm4_check},
        {7, "double-counting identities", 60, identities},
        {8, "Ramsey multiplicity for s = 2", 10, ramsey_multiplicity},
        {9, "constructions certified", 120, constructions},
        {10, "max-cut pipeline", 60, max_cut},
        {11, "dependent random choice postcondition", 60, drc},
        {12, "C4/C5 bound against exact values", 300, es_check},
        {13, "R(3,3) by exhaustive search", 60, ramsey33},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        v.require(seconds <= c.limit_seconds, "time limit");
        failures += !v.ok;
        std::printf("%s criterion %2d: %s [%.2f s / %.0f s] %s\n", v.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_seconds, v.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
