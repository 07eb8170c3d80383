// Exact-arithmetic geometric graphs: proper-crossing predicates,
// self-crossing four-cycle enumeration, and the random-bipartition slope
// reduction to an edge-ordered graph.
#ifndef ORDEX_GEO_HPP
#define ORDEX_GEO_HPP

#include <cstdint>
#include <vector>

#include "ordex/edge_ordered.hpp"

namespace ordex {

// Coordinate budget: orientation determinants of in-budget points fit
// comfortably in 128-bit intermediates.
inline constexpr long long kCoordinateBudget = 1LL << 30;

struct Point {
    long long x = 0, y = 0;
    bool operator==(const Point&) const = default;
};

struct GeometricGraph {
    std::vector<Point> points;
    std::vector<std::pair<int, int>> edges;   // vertex index pairs, u < v

    int num_vertices() const { return static_cast<int>(points.size()); }
    // distinct in-budget points, well-formed edge list
    bool check_well_formed() const;
    bool has_vertical_edge() const;
};

GeometricGraph make_geometric(std::vector<Point> points, std::vector<std::pair<int, int>> edges);

// Sign of the orientation of (p,q,r): +1 counterclockwise, -1 clockwise,
// 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// True iff the open segments pq and rs cross transversally. Rejects shared
// endpoints and any collinear triple among the four points (throws
// std::invalid_argument); degeneracies are errors, not answers.
bool properly_cross(const Point& p, const Point& q, const Point& r, const Point& s);

struct SelfCrossingC4 {
    std::array<int, 4> cycle;                        // v1 v2 v3 v4 around the cycle
    std::array<std::pair<int, int>, 2> crossing_pair; // the two properly crossing opposite edges
};

// All abstract 4-cycles with a properly crossing opposite edge pair.
// Straight edges sharing an endpoint cannot properly cross, so only the
// two opposite pairs are tested. Requires general position on every tested
// quadruple.
std::vector<SelfCrossingC4> enumerate_self_crossing_c4(const GeometricGraph& g);

// Random L/R bipartition from the seed (mt19937_64, one draw per vertex in
// index order; low bit set = L), keep edges whose left-x endpoint is in L
// and right-x endpoint in R, order kept edges by ascending slope with exact
// cross-multiplied comparisons, ties by (left endpoint, right endpoint).
// Throws on vertical edges.
EdgeOrderedGraph slope_reduction(const GeometricGraph& g, std::uint64_t seed);

struct SlopeClaimResult {
    bool extremes_adjacent = true;     // holds for every non-self-crossing 4-cycle checked
    int cycles_checked = 0;
    int self_crossing_cycles = 0;      // cycles of gprime exempt from the claim
    bool geometry_crossing_free = false;
    bool avoids_c4_1243 = true;        // checked iff geometry_crossing_free

    bool pass() const { return extremes_adjacent && avoids_c4_1243; }
};

// Checks, on every 4-cycle of gprime that is not self-crossing in the
// drawing, that the minimum- and maximum-slope edges share a vertex; when
// the geometry has no self-crossing 4-cycle at all, additionally checks
// that gprime avoids C4^{1243} with the exact containment search. Throws
// if gprime is inconsistent with the geometry (unknown edges, vertex-count
// mismatch, or ranks out of slope order).
SlopeClaimResult verify_slope_claim(const EdgeOrderedGraph& gprime, const GeometricGraph& geometry);

// x-shear (x, y) -> (x + factor * y, y). Affine with determinant 1, so all
// orientation signs, and hence crossings, are preserved. With factor >
// max |dx/dy| over non-horizontal edges no edge is vertical afterwards.
// Slope order is preserved within each slope-sign class (and cyclically
// overall), not linearly.
GeometricGraph apply_shear(const GeometricGraph& g, long long factor);

// The smallest factor the utility accepts as removing all verticality:
// 1 + max over edges with dy != 0 of floor(|dx| / |dy|).
long long shear_factor_for(const GeometricGraph& g);

}  // namespace ordex

#endif
