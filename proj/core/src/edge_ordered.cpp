#include "ordex/edge_ordered.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ordex {

bool EdgeOrderedGraph::check_well_formed() const {
    std::unordered_set<long long> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices || u == v) return false;
        const long long key = static_cast<long long>(std::min(u, v)) * num_vertices + std::max(u, v);
        if (!seen.insert(key).second) return false;
    }
    return true;
}

int EdgeOrderedGraph::rank_of(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int r = 0; r < num_edges(); ++r)
        if (edges[r] == std::make_pair(u, v)) return r;
    return -1;
}

EdgeOrderedGraph make_edge_ordered(int num_vertices, std::vector<std::pair<int, int>> edges) {
    EdgeOrderedGraph g;
    g.num_vertices = num_vertices;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    g.edges = std::move(edges);
    if (!g.check_well_formed())
        throw std::invalid_argument("make_edge_ordered: loops, duplicates or out-of-range vertices");
    return g;
}

EdgeOrderedGraph c4_1243() {
    // vertices a=0 b=1 c=2 d=3; edges ab < bc < da < cd
    return make_edge_ordered(4, {{0, 1}, {1, 2}, {3, 0}, {2, 3}});
}

bool validate_embedding(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern,
                        const Embedding& emb) {
    if (static_cast<int>(emb.vertex_map.size()) != pattern.num_vertices) return false;
    std::unordered_set<int> used;
    for (int hv : emb.vertex_map) {
        if (hv < 0 || hv >= host.num_vertices) return false;
        if (!used.insert(hv).second) return false;
    }
    int prev_rank = -1;
    for (const auto& [pu, pv] : pattern.edges) {
        const int r = host.rank_of(emb.vertex_map[pu], emb.vertex_map[pv]);
        if (r < 0 || r <= prev_rank) return false;
        prev_rank = r;
    }
    return true;
}

namespace {

struct ContainSearch {
    const EdgeOrderedGraph& host;
    const EdgeOrderedGraph& pattern;
    bool force_top;                    // last pattern edge must map to last host edge
    std::vector<int> pmap;             // pattern vertex -> host vertex (-1 unassigned)
    std::vector<int> hused;            // host vertex -> pattern vertex (-1 free)

    ContainSearch(const EdgeOrderedGraph& h, const EdgeOrderedGraph& p, bool ft)
        : host(h), pattern(p), force_top(ft),
          pmap(p.num_vertices, -1), hused(h.num_vertices, -1) {}

    bool assign(int pv, int hv) {
        if (pmap[pv] >= 0) return pmap[pv] == hv;
        if (hused[hv] >= 0) return false;
        pmap[pv] = hv;
        hused[hv] = pv;
        return true;
    }
    void unassign(int pv, int hv) {
        if (pmap[pv] == hv && hused[hv] == pv) {
            pmap[pv] = -1;
            hused[hv] = -1;
        }
    }

    bool try_edge(int t, int r) {
        const auto [pu, pv] = pattern.edges[t];
        const auto [hu, hv] = host.edges[r];
        for (int o = 0; o < 2; ++o) {
            const int a = o == 0 ? hu : hv;
            const int b = o == 0 ? hv : hu;
            const bool had_u = pmap[pu] >= 0, had_v = pmap[pv] >= 0;
            if (!assign(pu, a)) continue;
            if (!assign(pv, b)) {
                if (!had_u) unassign(pu, a);
                continue;
            }
            if (rec(t + 1, r + 1)) return true;
            if (!had_v) unassign(pv, b);
            if (!had_u) unassign(pu, a);
        }
        return false;
    }

    bool rec(int t, int min_rank) {
        if (t == pattern.num_edges()) return true;
        if (force_top && t + 1 == pattern.num_edges()) {
            const int last = host.num_edges() - 1;
            return last >= min_rank && try_edge(t, last);
        }
        // remaining host edges must cover the remaining pattern edges
        const int hi = host.num_edges() - (pattern.num_edges() - t - 1);
        for (int r = min_rank; r < hi; ++r)
            if (try_edge(t, r)) return true;
        return false;
    }
};

std::optional<Embedding> contains_impl(const EdgeOrderedGraph& host,
                                       const EdgeOrderedGraph& pattern, bool force_top) {
    if (pattern.num_vertices > host.num_vertices) return std::nullopt;
    if (pattern.num_edges() > host.num_edges()) return std::nullopt;
    ContainSearch s(host, pattern, force_top);
    if (!s.rec(0, 0)) return std::nullopt;
    Embedding emb;
    emb.vertex_map = s.pmap;
    // isolated pattern vertices take the smallest free host vertices
    int next = 0;
    for (int& hv : emb.vertex_map) {
        if (hv >= 0) continue;
        while (s.hused[next] >= 0) ++next;
        hv = next;
        s.hused[next] = 1;
    }
    return emb;
}

}  // namespace

std::optional<Embedding> contains(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern) {
    return contains_impl(host, pattern, false);
}

LinearOrder neighbor_order(const EdgeOrderedGraph& g, int u) {
    LinearOrder out;
    for (const auto& [a, b] : g.edges) {    // rank order
        if (a == u) out.seq.push_back(b);
        else if (b == u) out.seq.push_back(a);
    }
    return out;
}

namespace {

// Build the C4^{1243} embedding for the cycle p-q-r-s-p whose min-rank edge
// is pq and max-rank edge is rs; orientation depends on which of the two
// middle edges is smaller.
std::optional<Embedding> cycle_to_c4_embedding(const EdgeOrderedGraph& host, int p, int q, int r,
                                               int s) {
    const int qr = host.rank_of(q, r);
    const int sp = host.rank_of(s, p);
    Embedding emb;
    if (qr < sp) emb.vertex_map = {p, q, r, s};
    else emb.vertex_map = {q, p, s, r};
    if (!validate_embedding(host, c4_1243(), emb)) return std::nullopt;
    return emb;
}

}  // namespace

std::optional<Embedding> find_c4_fast(const EdgeOrderedGraph& host) {
    const int n = host.num_vertices;
    std::vector<LinearOrder> nbr(n);
    for (int u = 0; u < n; ++u) nbr[u] = neighbor_order(host, u);

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto triple = common_triple_same_order(nbr[u], nbr[v]);
            if (!triple) continue;
            const auto& x = *triple;
            int sign[3];
            for (int t = 0; t < 3; ++t)
                sign[t] = host.rank_of(u, x[t]) > host.rank_of(v, x[t]) ? 1 : -1;
            // pigeonhole: two of the three comparisons agree
            static constexpr int pick[3][2] = {{0, 1}, {0, 2}, {1, 2}};
            for (const auto& [i, j] : pick) {
                if (sign[i] != sign[j]) continue;
                // sign -1: u-edges below v-edges, min = u-x_i, max = v-x_j;
                // sign +1: swap the roles of u and v
                const auto emb = sign[i] < 0
                    ? cycle_to_c4_embedding(host, u, x[i], v, x[j])
                    : cycle_to_c4_embedding(host, v, x[i], u, x[j]);
                if (emb) return emb;
                break;   // first (i,j) only; validation failure would be a bug
            }
        }
    }
    return std::nullopt;
}

bool edge_ordered_isomorphic(const EdgeOrderedGraph& g, const EdgeOrderedGraph& h) {
    if (g.num_vertices != h.num_vertices || g.num_edges() != h.num_edges()) return false;

    std::vector<int> gmap(g.num_vertices, -1), hmap(h.num_vertices, -1);
    // the k-th edge of g must map onto the k-th edge of h; only the
    // orientation is free
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == g.num_edges()) return true;
        const auto [a, b] = g.edges[t];
        const auto [x, y] = h.edges[t];
        for (int o = 0; o < 2; ++o) {
            const int p = o == 0 ? x : y;
            const int q = o == 0 ? y : x;
            const bool ok_a = gmap[a] < 0 ? hmap[p] < 0 : gmap[a] == p;
            const bool ok_b = gmap[b] < 0 ? hmap[q] < 0 : gmap[b] == q;
            if (!ok_a || !ok_b) continue;
            const bool set_a = gmap[a] < 0, set_b = gmap[b] < 0;
            if (set_a) { gmap[a] = p; hmap[p] = a; }
            if (set_b) { gmap[b] = q; hmap[q] = b; }
            if (self(self, t + 1)) return true;
            if (set_b) { gmap[b] = -1; hmap[q] = -1; }
            if (set_a) { gmap[a] = -1; hmap[p] = -1; }
        }
        return false;
    };
    return rec(rec, 0);
}

namespace {

// Canonical key of an edge-ordered graph: the lexicographically smallest
// byte encoding of the edge sequence over all vertex relabelings.
std::string canonical_key(const std::vector<std::pair<int, int>>& edges,
                          const std::vector<std::vector<int>>& perms) {
    std::string best;
    std::string cur(edges.size() * 2, '\0');
    for (const auto& p : perms) {
        for (std::size_t t = 0; t < edges.size(); ++t) {
            int u = p[edges[t].first];
            int v = p[edges[t].second];
            if (u > v) std::swap(u, v);
            cur[2 * t] = static_cast<char>(u);
            cur[2 * t + 1] = static_cast<char>(v);
        }
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

}  // namespace

int brute_force_ex_ordered(int n, const EdgeOrderedGraph& pattern) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("brute_force_ex_ordered: n capped at 6");
    if (n < 2) return 0;

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);

    int best = 0;
    std::unordered_set<std::string> seen;
    EdgeOrderedGraph host;
    host.num_vertices = n;

    auto dfs = [&](auto&& self) -> void {
        best = std::max(best, host.num_edges());
        if (host.num_edges() == static_cast<int>(all_edges.size())) return;
        for (const auto& e : all_edges) {
            if (std::find(host.edges.begin(), host.edges.end(), e) != host.edges.end()) continue;
            host.edges.push_back(e);
            // prefixes of an avoider avoid, so any new copy uses the new top
            // edge; forcing it keeps the incremental check cheap
            if (!contains_impl(host, pattern, true)) {
                if (seen.insert(canonical_key(host.edges, perms)).second) self(self);
            }
            host.edges.pop_back();
        }
    };
    dfs(dfs);
    return best;
}

}  // namespace ordex
