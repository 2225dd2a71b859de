#include "turanlab/graph.hpp"

#include "turanlab/simd/kernels.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace turanlab {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> members) {
    return of(std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::span<const int> members) {
    Row bits = 0;
    for (int v : members) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0..63");
        bits |= bit(v);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_member = true;
    for (int v : *this) {
        if (!first_member) os << ',';
        os << v;
        first_member = false;
    }
    os << '}';
    return os.str();
}

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
    check_order(n);
    if (rows.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("row count does not match graph order");
    Graph g(n);
    const Row range = low_bits(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~range) throw std::invalid_argument("row references vertex outside graph");
        if (rows[v] & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        g.adj_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u)
        for (int v : VertexSet(rows[u]))
            if (!((rows[v] >> u) & 1u)) throw std::invalid_argument("adjacency is not symmetric");
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(simd::popcount_sum(rows()) / 2);
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

Graph Graph::extended(VertexSet neighbors) const {
    Graph g = *this;
    const int v = n_;
    g.n_ = n_ + 1;
    g.adj_[v] = neighbors.bits();
    for (int u : neighbors) g.adj_[u] |= bit(v);
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("permutation length does not match graph order");
    std::array<int, kMaxVertices> inverse{};
    Row seen = 0;
    for (int i = 0; i < n_; ++i) {
        const int v = perm[i];
        if (v < 0 || v >= n_ || ((seen >> v) & 1u))
            throw std::invalid_argument("not a permutation of the vertex set");
        seen |= bit(v);
        inverse[v] = i;
    }
    Graph g(n_);
    for (int i = 0; i < n_; ++i) {
        Row r = 0;
        for (int w : VertexSet(adj_[perm[i]])) r |= bit(inverse[w]);
        g.adj_[i] = r;
    }
    return g;
}

GraphBuilder::GraphBuilder(int n) : n_(n) { check_order(n); }

void GraphBuilder::check(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") outside vertex range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g(n_);
    g.adj_ = adj_;
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::array<Row, kMaxVertices> rows{};
    simd::complement_rows(g.rows(), std::span<Row>(rows.data(), static_cast<std::size_t>(n)));
    return Graph::from_rows(n, std::span<const Row>(rows.data(), static_cast<std::size_t>(n)));
}

Graph induced_on(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices()))
        throw std::out_of_range("vertex set " + s.to_string() + " outside graph of order " +
                                std::to_string(g.order()));
    const int k = s.size();
    std::array<int, kMaxVertices> members{};
    int i = 0;
    for (int v : s) members[i++] = v;
    std::array<Row, kMaxVertices> rows{};
    for (int a = 0; a < k; ++a) {
        const Row r = g.row(members[a]);
        Row out = 0;
        for (int b = 0; b < k; ++b)
            if ((r >> members[b]) & 1u) out |= bit(b);
        rows[a] = out;
    }
    return Graph::from_rows(k, std::span<const Row>(rows.data(), static_cast<std::size_t>(k)));
}

VertexSet common_neighborhood(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("common neighbourhood of the empty set is undefined");
    if (!s.is_subset_of(g.vertices()))
        throw std::out_of_range("vertex set " + s.to_string() + " outside graph");
    return VertexSet(simd::and_selected(g.rows(), s.bits()));
}

int common_degree(const Graph& g, VertexSet s) { return common_neighborhood(g, s).size(); }

Graph named_graph(const std::string& family, std::initializer_list<int> params) {
    return named_graph(family, std::span<const int>(params.begin(), params.size()));
}

Graph named_graph(const std::string& family, std::span<const int> params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("family " + family + " takes " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (family == "C") {
        need(1);
        const int k = params[0];
        if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
        GraphBuilder b(k);
        for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
        return b.build();
    }
    if (family == "P") {
        need(1);
        const int k = params[0];
        if (k < 1) throw std::invalid_argument("path needs at least one vertex");
        GraphBuilder b(k);
        for (int i = 0; i + 1 < k; ++i) b.add_edge(i, i + 1);
        return b.build();
    }
    if (family == "E") {
        need(1);
        if (params[0] < 1) throw std::invalid_argument("empty graph needs at least one vertex");
        return Graph(params[0]);
    }
    if (family == "K") {
        if (params.empty()) throw std::invalid_argument("family K takes at least one parameter");
        if (params.size() == 1) {
            const int r = params[0];
            if (r < 1) throw std::invalid_argument("complete graph needs at least one vertex");
            GraphBuilder b(r);
            for (int u = 0; u < r; ++u)
                for (int v = u + 1; v < r; ++v) b.add_edge(u, v);
            return b.build();
        }
        int total = 0;
        for (int p : params) {
            if (p < 1) throw std::invalid_argument("every part of a complete multipartite graph needs a vertex");
            total += p;
        }
        GraphBuilder b(total);
        std::vector<int> part_of;
        for (std::size_t i = 0; i < params.size(); ++i) part_of.insert(part_of.end(), params[i], static_cast<int>(i));
        for (int u = 0; u < total; ++u)
            for (int v = u + 1; v < total; ++v)
                if (part_of[u] != part_of[v]) b.add_edge(u, v);
        return b.build();
    }
    if (family == "Petersen") {
        need(0);
        GraphBuilder b(10);
        for (int i = 0; i < 5; ++i) {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(i, i + 5);
            b.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return b.build();
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace turanlab
