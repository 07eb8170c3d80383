// Edge-ordered graphs: containment testing, the C4^{1243} pattern with its
// neighbor-order detection shortcut, rank-preserving isomorphism, and exact
// small-n extremal search.
#ifndef ORDEX_EDGE_ORDERED_HPP
#define ORDEX_EDGE_ORDERED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ordex/orders.hpp"

namespace ordex {

// Simple graph plus a total edge order: edges are listed in strictly
// increasing order, position = rank.
struct EdgeOrderedGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;   // normalized u < v

    int num_edges() const { return static_cast<int>(edges.size()); }
    bool check_well_formed() const;
    // Rank of edge {u,v}, or -1 if absent. Linear scan; hot paths index.
    int rank_of(int u, int v) const;
};

EdgeOrderedGraph make_edge_ordered(int num_vertices, std::vector<std::pair<int, int>> edges);

// Injective vertex map from pattern to host; image edges must exist and
// their ranks must induce the pattern's edge order.
struct Embedding {
    std::vector<int> vertex_map;   // pattern vertex -> host vertex
};

bool validate_embedding(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern,
                        const Embedding& emb);

// The four-cycle abcd with edges ordered ab < bc < da < cd.
EdgeOrderedGraph c4_1243();

// Exact containment by backtracking over pattern edges in rank order
// (mapped host ranks must increase, which enforces order-consistency by
// construction).
std::optional<Embedding> contains(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern);

// The neighbor-order reduction: for each vertex u, order its neighbors by
// incident-edge rank; a triple common to two such orders in the same
// relative order yields, by pigeonhole on rank comparisons, a C4^{1243}.
// Sound (any returned embedding is validated) but not complete.
std::optional<Embedding> find_c4_fast(const EdgeOrderedGraph& host);

// Rank-preserving graph isomorphism; the k-th edge of g must map to the
// k-th edge of h, so the search branches only on edge orientations.
bool edge_ordered_isomorphic(const EdgeOrderedGraph& g, const EdgeOrderedGraph& h);

// Exact ex_<(n, pattern) by DFS over edge-ordered graphs built one
// top-ranked edge at a time, deduplicated by canonical form under vertex
// permutations. Exact but exponential: n <= 6 enforced (n <= 5 is fast).
int brute_force_ex_ordered(int n, const EdgeOrderedGraph& pattern);

// Neighbor list of u ordered by incident-edge rank (the order A^u).
LinearOrder neighbor_order(const EdgeOrderedGraph& g, int u);

}  // namespace ordex

#endif
