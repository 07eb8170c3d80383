// Instance generators: polarity-graph families with sum of lengths of
// order n^{3/2}, families from arbitrary C4-free graphs, and seeded random
// valid families for the property suites.
#ifndef ORDEX_CONSTRUCTIONS_HPP
#define ORDEX_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "ordex/orders.hpp"

namespace ordex {

// The polarity graph of the projective plane over F_q: vertices are the
// q^2+q+1 projective points, u ~ v iff u.v = 0 (mod q), u != v. C4-free;
// degrees are q+1 except at the q+1 absolute points (degree q).
struct PolarityGraph {
    int q = 0;
    int num_vertices = 0;
    std::vector<std::array<int, 3>> coords;      // canonical representatives
    std::vector<std::vector<int>> adj;           // sorted neighbor lists

    long long num_edges() const;
};

// q must be prime and <= 31 (coordinate budget). Throws otherwise.
PolarityGraph polarity_graph(int q);

// No two vertices share two common neighbors. Exhaustive pair scan.
bool is_c4_free(const std::vector<std::vector<int>>& adj);

// Symbols = vertices, one order per vertex = its neighborhood in
// seeded-random internal order. Pairwise intersections have size <= 1, so
// the family is valid and pairwise intersection-reverse. Throws if the
// graph is not C4-free.
OrderFamily family_from_c4_free(const std::vector<std::vector<int>>& adj, std::uint64_t seed);

OrderFamily family_from_polarity(int q, std::uint64_t seed);

struct FamilySeedSpec {
    int n = 0;                 // number of orders
    Symbol universe = 0;       // n'
    int min_len = 0;
    int max_len = 0;           // uniform length in [min_len, max_len], capped at universe
    std::uint64_t seed = 0;
};

// Random orders repaired to validity: while some pair shares a same-order
// triple, the higher-indexed order is truncated just before the last
// element of the triple. Deterministic in the spec; always validates.
OrderFamily random_valid_family(const FamilySeedSpec& spec);

}  // namespace ordex

#endif
