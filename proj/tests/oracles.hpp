// Independent brute-force oracles for the test suites. Everything here is
// written from the definitions, not from the library's fast paths: the
// oracles recompute positions, products and subsets directly so agreement
// tests mean something.
#ifndef ORDEX_TESTS_ORACLES_HPP
#define ORDEX_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ordex/edge_ordered.hpp"
#include "ordex/geo.hpp"
#include "ordex/orders.hpp"
#include "ordex/zo_matrix.hpp"

namespace ordex::oracle {

inline int slow_position(const std::vector<Symbol>& seq, Symbol a) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == a) return static_cast<int>(i);
    return -1;
}

inline int slow_f(const std::vector<Symbol>& seq, Symbol a, Symbol b) {
    const int pa = slow_position(seq, a);
    const int pb = slow_position(seq, b);
    if (pa < 0 || pb < 0) return 0;
    return pa < pb ? 1 : -1;
}

inline std::vector<Symbol> slow_half(const std::vector<Symbol>& seq, int eps) {
    const std::size_t h = (seq.size() + 1) / 2;
    if (eps == 0) return std::vector<Symbol>(seq.begin(), seq.begin() + h);
    return std::vector<Symbol>(seq.begin() + h, seq.end());
}

// Definitional quadruple loop for S: ordered index pairs, both halves,
// ordered symbol pairs over the whole universe.
inline long long slow_S(const OrderFamily& f) {
    long long s = 0;
    const int n = f.num_orders();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int eps = 0; eps < 2; ++eps) {
                const auto hi = slow_half(f.orders[i].seq, eps);
                const auto hj = slow_half(f.orders[j].seq, eps);
                for (Symbol a = 0; a < f.universe_size; ++a)
                    for (Symbol b = 0; b < f.universe_size; ++b)
                        if (a != b) s += slow_f(hi, a, b) * slow_f(hj, a, b);
            }
        }
    }
    return s;
}

inline long long slow_pair_f_sum(const std::vector<Symbol>& b1, const std::vector<Symbol>& b2,
                                 Symbol universe) {
    long long s = 0;
    for (Symbol a = 0; a < universe; ++a)
        for (Symbol b = 0; b < universe; ++b)
            if (a != b) s += slow_f(b1, a, b) * slow_f(b2, a, b);
    return s;
}

// All common triples, same relative order in both.
inline bool slow_has_same_order_triple(const std::vector<Symbol>& b1,
                                       const std::vector<Symbol>& b2) {
    std::vector<Symbol> common;
    for (Symbol s : b1.size() <= b2.size() ? b1 : b2)
        if (slow_position(b1, s) >= 0 && slow_position(b2, s) >= 0) common.push_back(s);
    const int m = static_cast<int>(common.size());
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                if (x == y || y == z || x == z) continue;
                const Symbol a = common[x], b = common[y], c = common[z];
                if (slow_f(b1, a, b) == 1 && slow_f(b2, a, b) == 1 &&
                    slow_f(b1, b, c) == 1 && slow_f(b2, b, c) == 1)
                    return true;
            }
    return false;
}

// Existence of a 2-coloring of the common symbols with both classes fully
// reversed, by enumerating all colorings (common size <= ~20).
inline bool slow_two_chain_exists(const std::vector<Symbol>& b1, const std::vector<Symbol>& b2) {
    std::vector<Symbol> common;
    for (Symbol s : b1)
        if (slow_position(b2, s) >= 0) common.push_back(s);
    const int m = static_cast<int>(common.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
            for (int y = x + 1; y < m && ok; ++y) {
                if (((mask >> x) & 1) != ((mask >> y) & 1)) continue;
                if (slow_f(b1, common[x], common[y]) * slow_f(b2, common[x], common[y]) != -1)
                    ok = false;
            }
        if (ok) return true;
    }
    return false;
}

// Exhaustive edge-ordered containment: try every injection of pattern
// vertices into host vertices.
inline bool slow_eo_contains(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern) {
    if (pattern.num_vertices > host.num_vertices) return false;
    std::vector<int> map(pattern.num_vertices, -1);
    std::vector<char> used(host.num_vertices, 0);

    auto check = [&]() {
        int prev = -1;
        for (const auto& [pu, pv] : pattern.edges) {
            const int r = host.rank_of(map[pu], map[pv]);
            if (r < 0 || r <= prev) return false;
            prev = r;
        }
        return true;
    };
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == pattern.num_vertices) return check();
        for (int hv = 0; hv < host.num_vertices; ++hv) {
            if (used[hv]) continue;
            used[hv] = 1;
            map[pv] = hv;
            if (self(self, pv + 1)) return true;
            used[hv] = 0;
            map[pv] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Naive matrix containment over all row and column subsets.
inline bool slow_mx_contains(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    if (a.rows > m.rows || a.cols > m.cols) return false;
    std::vector<int> rows, cols;
    auto choose = [&](auto&& self, std::vector<int>& sel, int need, int from, int total,
                      auto&& inner) -> bool {
        if (static_cast<int>(sel.size()) == need) return inner(inner);
        for (int v = from; v < total; ++v) {
            sel.push_back(v);
            if (self(self, sel, need, v + 1, total, inner)) return true;
            sel.pop_back();
        }
        return false;
    };
    auto with_cols = [&](auto&&) -> bool {
        auto test = [&](auto&&) -> bool {
            for (int r = 0; r < a.rows; ++r)
                for (int c = 0; c < a.cols; ++c)
                    if (a.at(r, c) && !m.at(rows[r], cols[c])) return false;
            return true;
        };
        return choose(choose, cols, a.cols, 0, m.cols, test);
    };
    return choose(choose, rows, a.rows, 0, m.rows, with_cols);
}

// Unordered extremal number by full enumeration of n-vertex graphs
// (n <= 5; 2^C(n,2) hosts) against a fixed small forbidden subgraph.
inline bool slow_unordered_contains(int n, unsigned edge_mask,
                                    const std::vector<std::pair<int, int>>& all_pairs,
                                    const EdgeOrderedGraph& pattern) {
    // injection search ignoring edge order
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t e = 0; e < all_pairs.size(); ++e)
        if ((edge_mask >> e) & 1) {
            adj[all_pairs[e].first][all_pairs[e].second] = 1;
            adj[all_pairs[e].second][all_pairs[e].first] = 1;
        }
    if (pattern.num_vertices > n) return false;
    std::vector<int> map(pattern.num_vertices, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == pattern.num_vertices) {
            for (const auto& [a, b] : pattern.edges)
                if (!adj[map[a]][map[b]]) return false;
            return true;
        }
        for (int hv = 0; hv < n; ++hv) {
            if (used[hv]) continue;
            used[hv] = 1;
            map[pv] = hv;
            if (self(self, pv + 1)) return true;
            used[hv] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int slow_unordered_ex(int n, const EdgeOrderedGraph& pattern) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
        if (slow_unordered_contains(n, mask, all_pairs, pattern)) continue;
        best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int slow_sign(long long ax, long long ay, long long bx, long long by, long long cx,
                     long long cy) {
    const __int128 det =
        static_cast<__int128>(bx - ax) * (cy - ay) - static_cast<__int128>(by - ay) * (cx - ax);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

inline bool slow_segments_cross(const Point& p, const Point& q, const Point& r, const Point& s) {
    const int o1 = slow_sign(p.x, p.y, q.x, q.y, r.x, r.y);
    const int o2 = slow_sign(p.x, p.y, q.x, q.y, s.x, s.y);
    const int o3 = slow_sign(r.x, r.y, s.x, s.y, p.x, p.y);
    const int o4 = slow_sign(r.x, r.y, s.x, s.y, q.x, q.y);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

// All self-crossing 4-cycles by direct 4-subset x pairing enumeration,
// canonicalized the same way the library output is.
inline std::vector<std::array<int, 4>> slow_self_crossing_c4(const GeometricGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    // cycles with 'a' first and opposite vertex w: (a,x,w,y), x<y
                    const std::array<std::array<int, 4>, 3> cycles{
                        std::array<int, 4>{a, c, b, d},    // opposite b
                        std::array<int, 4>{a, b, c, d},    // opposite c
                        std::array<int, 4>{a, b, d, c}};   // opposite d
                    for (const auto& cyc : cycles) {
                        const auto [v1, v2, v3, v4] = cyc;
                        if (!(adj[v1][v2] && adj[v2][v3] && adj[v3][v4] && adj[v4][v1])) continue;
                        const bool cross =
                            slow_segments_cross(g.points[v1], g.points[v2], g.points[v3],
                                                g.points[v4]) ||
                            slow_segments_cross(g.points[v2], g.points[v3], g.points[v4],
                                                g.points[v1]);
                        if (cross) out.push_back(cyc);
                    }
                }
    return out;
}

// ---- seeded generators ----

inline EdgeOrderedGraph random_eograph(int n, int m, std::uint64_t seed) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    m = std::min<int>(m, static_cast<int>(pairs.size()));
    pairs.resize(m);
    return make_edge_ordered(n, std::move(pairs));
}

inline ZeroOneMatrix random_matrix(int rows, int cols, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(density);
    ZeroOneMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, bit(rng) ? 1 : 0);
    return m;
}

// Points in general position (distinct x, no 3 collinear), random edges.
inline GeometricGraph random_geometry(int n, double edge_density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(0, 1 << 20);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point p{coord(rng), coord(rng)};
        bool ok = true;
        for (const Point& q : pts)
            if (q.x == p.x) { ok = false; break; }
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                if (slow_sign(pts[i].x, pts[i].y, pts[j].x, pts[j].y, p.x, p.y) == 0) ok = false;
        if (ok) pts.push_back(p);
    }
    std::bernoulli_distribution keep(edge_density);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) edges.emplace_back(u, v);
    return make_geometric(std::move(pts), std::move(edges));
}

}  // namespace ordex::oracle

#endif
