#include "ordex/geo.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ordex {

bool GeometricGraph::check_well_formed() const {
    for (const Point& p : points)
        if (p.x < -kCoordinateBudget || p.x > kCoordinateBudget ||
            p.y < -kCoordinateBudget || p.y > kCoordinateBudget)
            return false;
    std::set<std::pair<long long, long long>> seen;
    for (const Point& p : points)
        if (!seen.insert({p.x, p.y}).second) return false;
    std::set<std::pair<int, int>> es;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices() || u == v) return false;
        if (!es.insert({std::min(u, v), std::max(u, v)}).second) return false;
    }
    return true;
}

bool GeometricGraph::has_vertical_edge() const {
    for (const auto& [u, v] : edges)
        if (points[u].x == points[v].x) return true;
    return false;
}

GeometricGraph make_geometric(std::vector<Point> points, std::vector<std::pair<int, int>> edges) {
    GeometricGraph g;
    g.points = std::move(points);
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    g.edges = std::move(edges);
    if (!g.check_well_formed())
        throw std::invalid_argument("make_geometric: malformed graph (duplicates, range, budget)");
    return g;
}

int orientation(const Point& p, const Point& q, const Point& r) {
    const __int128 det = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                         static_cast<__int128>(q.y - p.y) * (r.x - p.x);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

bool properly_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    if (p == r || p == s || q == r || q == s)
        throw std::invalid_argument("properly_cross: segments share an endpoint");
    const int o1 = orientation(p, q, r);
    const int o2 = orientation(p, q, s);
    const int o3 = orientation(r, s, p);
    const int o4 = orientation(r, s, q);
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)
        throw std::invalid_argument("properly_cross: collinear triple (degenerate input)");
    return o1 != o2 && o3 != o4;
}

std::vector<SelfCrossingC4> enumerate_self_crossing_c4(const GeometricGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

    std::vector<SelfCrossingC4> out;
    // every 4-cycle splits into two opposite vertex pairs; emit it from the
    // opposite pair containing the overall minimum vertex
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            std::vector<int> common;
            for (int x = u + 1; x < n; ++x)
                if (x != w && adj[u][x] && adj[w][x]) common.push_back(x);
            for (std::size_t a = 0; a < common.size(); ++a) {
                for (std::size_t b = a + 1; b < common.size(); ++b) {
                    const int x = common[a], y = common[b];
                    if (std::min(x, y) < u) continue;   // u must be the overall minimum
                    // cycle u - x - w - y - u
                    const std::array<int, 4> cyc{u, x, w, y};
                    std::array<std::pair<int, int>, 2> cross_pair;
                    int found = 0;
                    const std::pair<int, int> e1{u, x}, e2{x, w}, e3{w, y}, e4{y, u};
                    if (properly_cross(g.points[u], g.points[x], g.points[w], g.points[y])) {
                        cross_pair = {e1, e3};
                        found = 1;
                    } else if (properly_cross(g.points[x], g.points[w], g.points[y], g.points[u])) {
                        cross_pair = {e2, e4};
                        found = 1;
                    }
                    if (found) out.push_back(SelfCrossingC4{cyc, cross_pair});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SelfCrossingC4& a, const SelfCrossingC4& b) { return a.cycle < b.cycle; });
    return out;
}

namespace {

struct OrientedEdge {
    int left, right;       // x(left) < x(right)
    long long dx, dy;      // right - left, dx > 0
};

// slope(a) < slope(b), exact
bool slope_less(const OrientedEdge& a, const OrientedEdge& b) {
    return static_cast<__int128>(a.dy) * b.dx < static_cast<__int128>(b.dy) * a.dx;
}

OrientedEdge orient_by_x(const GeometricGraph& g, int u, int v) {
    if (g.points[u].x > g.points[v].x) std::swap(u, v);
    return OrientedEdge{u, v, g.points[v].x - g.points[u].x, g.points[v].y - g.points[u].y};
}

}  // namespace

EdgeOrderedGraph slope_reduction(const GeometricGraph& g, std::uint64_t seed) {
    if (g.has_vertical_edge())
        throw std::invalid_argument("slope_reduction: vertical edge present (shear first)");

    std::mt19937_64 rng(seed);
    std::vector<char> left_class(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) left_class[v] = static_cast<char>(rng() & 1);

    std::vector<OrientedEdge> kept;
    for (const auto& [u, v] : g.edges) {
        const OrientedEdge e = orient_by_x(g, u, v);
        if (left_class[e.left] && !left_class[e.right]) kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(), [](const OrientedEdge& a, const OrientedEdge& b) {
        if (slope_less(a, b)) return true;
        if (slope_less(b, a)) return false;
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });

    std::vector<std::pair<int, int>> edges;
    edges.reserve(kept.size());
    for (const auto& e : kept) edges.emplace_back(e.left, e.right);
    return make_edge_ordered(g.num_vertices(), std::move(edges));
}

SlopeClaimResult verify_slope_claim(const EdgeOrderedGraph& gprime,
                                    const GeometricGraph& geometry) {
    if (gprime.num_vertices != geometry.num_vertices())
        throw std::invalid_argument("verify_slope_claim: vertex count mismatch");
    std::set<std::pair<int, int>> geo_edges(geometry.edges.begin(), geometry.edges.end());
    for (const auto& e : gprime.edges)
        if (!geo_edges.count(e))
            throw std::invalid_argument("verify_slope_claim: edge not present in the geometry");
    for (int r = 0; r + 1 < gprime.num_edges(); ++r) {
        const OrientedEdge a = orient_by_x(geometry, gprime.edges[r].first, gprime.edges[r].second);
        const OrientedEdge b =
            orient_by_x(geometry, gprime.edges[r + 1].first, gprime.edges[r + 1].second);
        if (slope_less(b, a))
            throw std::invalid_argument("verify_slope_claim: edge ranks not in slope order");
    }

    SlopeClaimResult res;
    const int n = gprime.num_vertices;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : gprime.edges) adj[u][v] = adj[v][u] = 1;

    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            std::vector<int> common;
            for (int x = u + 1; x < n; ++x)
                if (x != w && adj[u][x] && adj[w][x]) common.push_back(x);
            for (std::size_t a = 0; a < common.size(); ++a) {
                for (std::size_t b = a + 1; b < common.size(); ++b) {
                    const int x = common[a], y = common[b];
                    if (std::min(x, y) < u) continue;
                    ++res.cycles_checked;
                    const bool crossing =
                        properly_cross(geometry.points[u], geometry.points[x], geometry.points[w],
                                       geometry.points[y]) ||
                        properly_cross(geometry.points[x], geometry.points[w], geometry.points[y],
                                       geometry.points[u]);
                    if (crossing) {
                        ++res.self_crossing_cycles;
                        continue;   // exempt from the claim
                    }
                    const std::array<std::pair<int, int>, 4> cyc_edges{
                        std::pair{u, x}, std::pair{x, w}, std::pair{w, y}, std::pair{y, u}};
                    int min_e = 0, max_e = 0;
                    std::array<int, 4> rank;
                    for (int t = 0; t < 4; ++t) {
                        rank[t] = gprime.rank_of(cyc_edges[t].first, cyc_edges[t].second);
                        if (rank[t] < rank[min_e]) min_e = t;
                        if (rank[t] > rank[max_e]) max_e = t;
                    }
                    // around a 4-cycle, edges t and t+2 are the non-adjacent pair
                    if ((min_e ^ max_e) == 2) res.extremes_adjacent = false;
                }
            }
        }
    }

    res.geometry_crossing_free = enumerate_self_crossing_c4(geometry).empty();
    if (res.geometry_crossing_free)
        res.avoids_c4_1243 = !contains(gprime, c4_1243()).has_value();
    return res;
}

long long shear_factor_for(const GeometricGraph& g) {
    long long best = 0;
    for (const auto& [u, v] : g.edges) {
        const long long dx = g.points[v].x - g.points[u].x;
        const long long dy = g.points[v].y - g.points[u].y;
        if (dy == 0) continue;
        const long long q = std::abs(dx) / std::abs(dy);
        best = std::max(best, q);
    }
    return best + 1;
}

GeometricGraph apply_shear(const GeometricGraph& g, long long factor) {
    std::vector<Point> pts;
    pts.reserve(g.points.size());
    for (const Point& p : g.points) pts.push_back(Point{p.x + factor * p.y, p.y});
    GeometricGraph out = make_geometric(std::move(pts), g.edges);
    if (out.has_vertical_edge())
        throw std::invalid_argument("apply_shear: factor too small, vertical edge remains");
    return out;
}

}  // namespace ordex
