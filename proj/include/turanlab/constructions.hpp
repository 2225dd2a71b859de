#pragma once

// Extremal graph constructions: Turán graphs, complete bipartite graphs,
// projective-plane incidence graphs, Erdős–Rényi polarity graphs, Füredi's
// K_{2,t+1}-free graphs, the Bollobás–Győri point-doubled incidence graph,
// and a local-search max cut.

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace turanlab {

// GF(q) for prime powers q <= 64 with full addition and multiplication tables.
// Elements are 0..q-1; element x stands for the polynomial whose base-p digits
// are the coefficients of 1, a, a^2, ... modulo a fixed irreducible polynomial.
class PrimePowerField {
public:
    // Throws std::invalid_argument if q is not a prime power in 2..64.
    explicit PrimePowerField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const { return add_[index(a, b)]; }
    int mul(int a, int b) const { return mul_[index(a, b)]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int inv(int a) const;  // throws std::domain_error for 0
    int pow(int a, long k) const;

    // A generator of the cyclic multiplicative group.
    int generator() const { return generator_; }

    // The unique subgroup of order t of GF(q)*, sorted. t must divide q-1.
    std::vector<int> multiplicative_subgroup(int t) const;

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    int generator_ = 0;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

// Points of PG(2,q) as normalised triples (first non-zero coordinate 1), in
// the order (1,a,b) for a,b ascending, then (0,1,b), then (0,0,1).
std::vector<std::array<int, 3>> projective_points(const PrimePowerField& f);

// Complete r-partite graph on n vertices with part sizes differing by at most
// one; larger parts first, each part contiguous. Throws for r < 2 or n < 1.
Graph turan_graph(int n, int r);

// K_{a,b}: vertices 0..a-1 form the first side. Throws for a < 1 or b < 1.
Graph complete_bipartite(int a, int b);

// Points 0..N-1 then lines N..2N-1 (line i has the coordinates of point i),
// point ~ line iff their dot product vanishes. N = q^2+q+1; needs 2N <= 64.
Graph projective_plane_incidence(const PrimePowerField& f);

// Incidence graph with every point replaced by two adjacent copies, both
// joined to every line through the point. Vertices: copies 2i and 2i+1 of
// point i, then lines 2N..3N-1. 3N vertices and (2q+3)N edges.
Graph bollobas_gyori(const PrimePowerField& f);

// ER_q: points of PG(2,q), x ~ y iff x.y = 0 and x != y (absolute points keep
// their vertex, lose the loop).
Graph polarity_graph(const PrimePowerField& f);

// Füredi's graph: vertices are the orbits of GF(q)^2 \ {0} under scaling by
// the order-t subgroup H of GF(q)*, <a,b> ~ <x,y> iff ax+by in H (loops
// dropped). Throws std::invalid_argument unless t >= 1 and t | q-1.
Graph furedi_k2t(const PrimePowerField& f, int t);

struct CutResult {
    Graph host;
    VertexSet side_a;
    std::size_t cut_edges = 0;

    // Bipartite spanning subgraph of host keeping only crossing edges.
    Graph cut_subgraph() const;
};

// First-improvement local search: starting from `initial` (default: even
// vertex indices), repeatedly scan vertices in index order and move any vertex
// with more neighbours on its own side than across. Every vertex of the result
// has at least half its neighbours across, so cut_edges >= e(host)/2.
CutResult local_max_cut(const Graph& g);
CutResult local_max_cut(const Graph& g, VertexSet initial);

// True iff every vertex has at least as many neighbours across the cut as on
// its own side.
bool is_locally_maximal(const Graph& g, VertexSet side_a);

// The constraint set each construction is certified against:
//   "turan"     (n,r)  K_{r+1}-sub
//   "kab"       (a,b)  P4-ind
//   "incidence" (q)    C4-sub
//   "polarity"  (q)    K2,2-sub
//   "bg"        (q)    C5-sub, C4-ind
//   "furedi"    (q,t)  K2,t+1-sub
ConstraintSet certification_constraints(const std::string& family, const std::vector<int>& params);

}  // namespace turanlab
