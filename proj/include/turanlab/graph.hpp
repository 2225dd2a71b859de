#pragma once

// Simple undirected graphs on at most 64 vertices, one adjacency word per
// vertex. Graph and VertexSet are immutable value types; graphs are built
// through GraphBuilder or the checked row constructors below.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace turanlab {

inline constexpr int kMaxVertices = 64;

using Row = std::uint64_t;

constexpr Row bit(int v) { return Row{1} << v; }

constexpr Row low_bits(int n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

// A set of vertex indices in {0..63}.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(Row rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Row rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Row bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> members);
    static VertexSet of(std::span<const int> members);
    static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

    constexpr Row bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1u); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    // Lowest / highest member; -1 when empty.
    constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }
    constexpr int last() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;
    std::string to_string() const;

private:
    Row bits_ = 0;
};

class Graph {
public:
    // The graph with no vertices.
    Graph() = default;

    // Empty graph on n vertices.
    explicit Graph(int n);

    // Validates symmetry, absence of loops and row range; throws std::invalid_argument.
    static Graph from_rows(int n, std::span<const Row> rows);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    Row row(int v) const { return adj_[v]; }
    std::span<const Row> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const;

    // Graph on n+1 vertices: this graph plus vertex n joined to `neighbors`.
    // `neighbors` must lie inside {0..n-1}; n must be < 64.
    Graph extended(VertexSet neighbors) const;

    // Relabel: vertex perm[i] of this graph becomes vertex i of the result.
    Graph relabeled(std::span<const int> perm) const;

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<Row, kMaxVertices> adj_{};
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int order() const { return n_; }
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    Graph build() const;

private:
    void check(int u, int v) const;

    int n_;
    std::array<Row, kMaxVertices> adj_{};
};

// Every u~v with u != v not adjacent in g.
Graph complement(const Graph& g);

// Subgraph induced on s, relabelled 0..|s|-1 in increasing vertex order.
// Throws std::out_of_range when s leaves the vertex range of g.
Graph induced_on(const Graph& g, VertexSet s);

// Vertices adjacent to every member of s. Throws std::invalid_argument for empty s.
VertexSet common_neighborhood(const Graph& g, VertexSet s);

// d(x1..xs) = |N(x1..xs)|.
int common_degree(const Graph& g, VertexSet s);

// Builders for the families named in the literature.
//
//   "C", {k}       cycle 0-1-...-(k-1)-0, k >= 3
//   "P", {k}       path 0-1-...-(k-1), k >= 1
//   "K", {r}       complete graph, r >= 1
//   "K", {a,b,...} complete multipartite, parts in order, each >= 1
//   "E", {k}       k isolated vertices
//   "Petersen", {} outer 5-cycle 0..4, spokes i~i+5, inner pentagram 5+i~5+(i+2)%5
//
// Throws std::invalid_argument for unknown families or invalid parameters.
Graph named_graph(const std::string& family, std::span<const int> params);
Graph named_graph(const std::string& family, std::initializer_list<int> params);

}  // namespace turanlab
