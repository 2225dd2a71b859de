#include "support.hpp"

#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"

#include <doctest.h>

#include <sstream>

using namespace turanlab;
using testing_support::random_graph;

TEST_CASE("VertexSet basics") {
    const VertexSet s = VertexSet::of({0, 3, 63});
    CHECK(s.size() == 3);
    CHECK(s.contains(63));
    CHECK_FALSE(s.contains(1));
    CHECK(s.first() == 0);
    CHECK(s.last() == 63);
    CHECK(s.to_vector() == std::vector<int>{0, 3, 63});
    CHECK(s.without(3).with(5) == VertexSet::of({0, 5, 63}));
    CHECK(VertexSet().first() == -1);
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet::of({1, 2}).is_subset_of(VertexSet::of({0, 1, 2})));
}

TEST_CASE("named graphs") {
    const Graph c5 = named_graph("C", {5});
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.min_degree() == 2);
    CHECK(c5.max_degree() == 2);

    const Graph k23 = named_graph("K", {2, 3});
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.adjacent(0, 1));
    CHECK_FALSE(k23.adjacent(2, 4));
    CHECK(k23.adjacent(1, 4));

    const Graph p4 = named_graph("P", {4});
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);

    const Graph petersen = named_graph("Petersen", {});
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(petersen.min_degree() == 3);
    CHECK(petersen.max_degree() == 3);

    CHECK_THROWS_AS(named_graph("C", {2}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("Q", {3}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("K", {65}), std::invalid_argument);
}

TEST_CASE("graph construction is validated") {
    const Row bad_loop[2] = {0b01, 0};
    CHECK_THROWS_AS(Graph::from_rows(2, bad_loop), std::invalid_argument);
    const Row asymmetric[2] = {0b10, 0};
    CHECK_THROWS_AS(Graph::from_rows(2, asymmetric), std::invalid_argument);
    CHECK_THROWS(GraphBuilder(3).add_edge(0, 3));
    CHECK_THROWS(GraphBuilder(3).add_edge(1, 1));
    CHECK_THROWS(Graph(65));
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("complement") {
    CHECK(complement(named_graph("K", {5})) == Graph(5));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 64;
        const Graph g = random_graph(rng, n, 0.4);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2);
    }
    CHECK(testing_support::brute_isomorphic(complement(named_graph("C", {5})), named_graph("C", {5})));
}

TEST_CASE("induced subgraphs") {
    const Graph k23 = named_graph("K", {2, 3});
    CHECK(induced_on(k23, VertexSet::of({2, 3, 4})) == Graph(3));
    CHECK(induced_on(named_graph("C", {6}), VertexSet::of({0, 1, 2, 3})) == named_graph("P", {4}));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 30;
        const Graph g = random_graph(rng, n, 0.5);
        CHECK(induced_on(g, g.vertices()) == g);
        // Nested sets: A inside B, relabelled through B's ordering.
        const Row b_bits = rng() & low_bits(n);
        const Row a_bits = b_bits & rng();
        std::vector<int> b_members = VertexSet(b_bits).to_vector();
        Row a_in_b = 0;
        for (std::size_t i = 0; i < b_members.size(); ++i)
            if ((a_bits >> b_members[i]) & 1u) a_in_b |= bit(static_cast<int>(i));
        CHECK(induced_on(induced_on(g, VertexSet(b_bits)), VertexSet(a_in_b)) == induced_on(g, VertexSet(a_bits)));
    }
    CHECK_THROWS_AS(induced_on(k23, VertexSet::of({5})), std::out_of_range);
}

TEST_CASE("common neighbourhoods") {
    const Graph k23 = named_graph("K", {2, 3});
    CHECK(common_neighborhood(k23, VertexSet::of({0, 1})) == VertexSet::of({2, 3, 4}));
    CHECK(common_degree(k23, VertexSet::of({0, 1})) == 3);
    const Graph c5 = named_graph("C", {5});
    CHECK(common_neighborhood(c5, VertexSet::of({0, 2})) == VertexSet::of({1}));
    // Triangle-free: adjacent pairs share nothing.
    const Graph petersen = named_graph("Petersen", {});
    for (const auto& [u, v] : petersen.edges()) CHECK(common_neighborhood(petersen, VertexSet::of({u, v})).empty());

    std::mt19937_64 rng(3);
    const Graph g = random_graph(rng, 40, 0.3);
    for (int v = 0; v < g.order(); ++v) CHECK(common_neighborhood(g, VertexSet::of({v})) == g.neighbors(v));
    CHECK_THROWS_AS(common_neighborhood(g, VertexSet()), std::invalid_argument);
}

TEST_CASE("extension and relabelling") {
    const Graph p3 = named_graph("P", {3});
    const Graph c4 = p3.extended(VertexSet::of({0, 2}));
    CHECK(c4.order() == 4);
    CHECK(testing_support::brute_isomorphic(c4, named_graph("C", {4})));
    const std::vector<int> perm{2, 0, 1};
    const Graph r = p3.relabeled(perm);
    // old vertex 1 (the middle) now sits at position 2.
    CHECK(r.degree(2) == 2);
}

TEST_CASE("graph6 format examples") {
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == named_graph("K", {2}));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(parse_graph6("A_")) == "A_");
    CHECK(write_graph6(Graph()) == "?");

    // Reference encodings produced by networkx for the same labellings.
    CHECK(write_graph6(named_graph("K", {3})) == "Bw");
    CHECK(write_graph6(named_graph("C", {5})) == "Dhc");
    CHECK(write_graph6(named_graph("P", {4})) == "Ch");
    CHECK(write_graph6(named_graph("K", {2, 3})) == "D]o");
    CHECK(write_graph6(named_graph("Petersen", {})) == "IheA@GUAo");

    const std::string k64 = "~?@?" + std::string(336, '~');
    CHECK(write_graph6(named_graph("K", {64})) == k64);
    CHECK(parse_graph6(k64) == named_graph("K", {64}));
    const std::string p62 =
        "}hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@"
        "?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_??????"
        "?G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_";
    CHECK(write_graph6(named_graph("P", {62})) == p62);
    CHECK(parse_graph6(">>graph6<<Bw\n") == named_graph("K", {3}));
    CHECK(parse_graph6("Bw\r\n") == named_graph("K", {3}));
}

TEST_CASE("graph6 rejects malformed input") {
    for (const char* bad : {"", "B", "Bww", "Bx", "A`", "B\x7f", "~??", "~?@A~", "B w"})
        CHECK_THROWS_AS(parse_graph6(bad), Graph6Error);

    std::istringstream stream("Bw\n\nA_\nZZ\n");
    try {
        read_graph6_stream(stream);
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = trial % 31;
        const Graph g = random_graph(rng, n, (trial % 10) / 10.0);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    for (int n : {62, 63, 64}) {
        const Graph g = random_graph(rng, n, 0.5);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}
