#include "turanlab/canonical.hpp"

#include "turanlab/graph6.hpp"
#include "turanlab/simd/kernels.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>

namespace turanlab {

namespace {

// Ordered partition of positions 0..n-1. Cells are contiguous ranges of
// `lab`; bit s of `starts` marks a cell beginning at position s and
// cell_end[s] is one past its last position.
struct Partition {
    int n = 0;
    std::array<int, kMaxVertices> lab{};
    std::array<int, kMaxVertices> cell_end{};
    Row starts = 0;

    bool discrete() const { return std::popcount(starts) == n; }
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

void refine(const Graph& g, Partition& p, Row pending) {
    const int n = p.n;
    std::array<std::uint8_t, kMaxVertices> count{};
    const std::span<std::uint8_t> counts(count.data(), static_cast<std::size_t>(n));
    while (pending && !p.discrete()) {
        const int s = std::countr_zero(pending);
        pending &= pending - 1;
        Row splitter = 0;
        for (int i = s; i < p.cell_end[s]; ++i) splitter |= bit(p.lab[i]);
        simd::masked_popcounts(g.rows(), splitter, counts);

        for (int c : VertexSet(p.starts)) {
            const int e = p.cell_end[c];
            if (e - c == 1) continue;
            const std::uint8_t first = count[p.lab[c]];
            bool uniform = true;
            for (int i = c + 1; i < e && uniform; ++i) uniform = count[p.lab[i]] == first;
            if (uniform) continue;
            std::sort(p.lab.begin() + c, p.lab.begin() + e, [&](int a, int b) {
                return count[a] != count[b] ? count[a] < count[b] : a < b;
            });
            int frag = c;
            for (int i = c + 1; i <= e; ++i) {
                if (i == e || count[p.lab[i]] != count[p.lab[frag]]) {
                    p.starts |= bit(frag);
                    p.cell_end[frag] = i;
                    pending |= bit(frag);
                    frag = i;
                }
            }
        }
    }
}

void individualise(const Graph& g, Partition& p, int v) {
    int pos = 0;
    while (p.lab[pos] != v) ++pos;
    const int c = 63 - std::countl_zero(p.starts & low_bits(pos + 1));
    const int e = p.cell_end[c];
    std::swap(p.lab[pos], p.lab[c]);
    p.cell_end[c] = c + 1;
    p.starts |= bit(c + 1);
    p.cell_end[c + 1] = e;
    refine(g, p, bit(c));
}

using Rows = std::array<Row, kMaxVertices>;

class Canoniser {
public:
    explicit Canoniser(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        Partition root;
        root.n = n_;
        std::iota(root.lab.begin(), root.lab.begin() + n_, 0);
        if (n_ > 0) {
            root.starts = 1;
            root.cell_end[0] = n_;
            refine(g_, root, 1);
        }
        search(root);

        CanonicalForm out;
        out.relabeling.assign(best_lab_.begin(), best_lab_.begin() + n_);
        out.certificate = write_graph6(g_.relabeled(out.relabeling));
        UnionFind orbits(n_);
        for (const auto& gen : generators_)
            for (int v = 0; v < n_; ++v) orbits.unite(v, gen[v]);
        out.orbit.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) out.orbit[v] = orbits.find(v);
        out.generators = std::move(generators_);
        out.leaves = leaves_;
        return out;
    }

private:
    static constexpr int kNoJump = INT_MAX;

    // Returns the tree level to resume at, or kNoJump.
    int search(const Partition& p) {
        if (p.discrete()) return leaf(p);
        const int level = static_cast<int>(path_.size());
        const int c = first_open_cell(p);
        Row cell = 0;
        for (int i = c; i < p.cell_end[c]; ++i) cell |= bit(p.lab[i]);

        Row explored = 0;
        for (int v : VertexSet(cell)) {
            if (explored && equivalent_to_explored(v, explored)) continue;
            explored |= bit(v);
            Partition child = p;
            individualise(g_, child, v);
            path_.push_back(v);
            const int resume = search(child);
            path_.pop_back();
            if (resume < level) return resume;
        }
        return kNoJump;
    }

    static int first_open_cell(const Partition& p) {
        for (int c : VertexSet(p.starts))
            if (p.cell_end[c] - c > 1) return c;
        return -1;
    }

    bool equivalent_to_explored(int v, Row explored) const {
        if (generators_.empty()) return false;
        UnionFind uf(n_);
        bool any = false;
        for (const auto& gen : generators_) {
            bool fixes_path = true;
            for (int x : path_)
                if (gen[x] != x) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            any = true;
            for (int u = 0; u < n_; ++u) uf.unite(u, gen[u]);
        }
        if (!any) return false;
        const int root = uf.find(v);
        for (int w : VertexSet(explored))
            if (uf.find(w) == root) return true;
        return false;
    }

    void leaf_rows(const Partition& p, Rows& rows) const {
        std::array<int, kMaxVertices> position{};
        for (int i = 0; i < n_; ++i) position[p.lab[i]] = i;
        for (int i = 0; i < n_; ++i) {
            Row r = 0;
            for (int w : VertexSet(g_.row(p.lab[i]))) r |= bit(position[w]);
            rows[i] = r;
        }
    }

    int compare(const Rows& a, const Rows& b) const {
        for (int i = 0; i < n_; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    void record_automorphism(const std::array<int, kMaxVertices>& from, const Partition& to) {
        std::vector<int> gen(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) gen[from[i]] = to.lab[i];
        generators_.push_back(std::move(gen));
    }

    int common_prefix(const std::vector<int>& other) const {
        std::size_t i = 0;
        while (i < path_.size() && i < other.size() && path_[i] == other[i]) ++i;
        return static_cast<int>(i);
    }

    int leaf(const Partition& p) {
        ++leaves_;
        Rows rows{};
        leaf_rows(p, rows);
        if (!have_first_) {
            have_first_ = true;
            first_rows_ = best_rows_ = rows;
            first_lab_ = best_lab_ = p.lab;
            first_path_ = best_path_ = path_;
            return kNoJump;
        }
        if (compare(rows, first_rows_) == 0) {
            record_automorphism(first_lab_, p);
            return common_prefix(first_path_);
        }
        const int cmp = compare(rows, best_rows_);
        if (cmp == 0) {
            record_automorphism(best_lab_, p);
            return common_prefix(best_path_);
        }
        if (cmp > 0) {
            best_rows_ = rows;
            best_lab_ = p.lab;
            best_path_ = path_;
        }
        return kNoJump;
    }

    const Graph& g_;
    int n_;
    std::vector<int> path_;
    bool have_first_ = false;
    Rows first_rows_{};
    Rows best_rows_{};
    std::array<int, kMaxVertices> first_lab_{};
    std::array<int, kMaxVertices> best_lab_{};
    std::vector<int> first_path_;
    std::vector<int> best_path_;
    std::vector<std::vector<int>> generators_;
    std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canoniser(g).run(); }

std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && certificate(a) == certificate(b);
}

}  // namespace turanlab
