#include "ordex/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ordex {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

long long PolarityGraph::num_edges() const {
    long long s = 0;
    for (const auto& a : adj) s += static_cast<long long>(a.size());
    return s / 2;
}

PolarityGraph polarity_graph(int q) {
    if (!is_prime(q)) throw std::invalid_argument("polarity_graph: q must be prime");
    if (q > 31) throw std::invalid_argument("polarity_graph: q capped at 31");

    PolarityGraph g;
    g.q = q;
    // projective points with first nonzero coordinate normalized to 1:
    // (1,y,z), (0,1,z), (0,0,1)
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) g.coords.push_back({1, y, z});
    for (int z = 0; z < q; ++z) g.coords.push_back({0, 1, z});
    g.coords.push_back({0, 0, 1});
    g.num_vertices = static_cast<int>(g.coords.size());

    g.adj.resize(g.num_vertices);
    for (int u = 0; u < g.num_vertices; ++u) {
        for (int v = u + 1; v < g.num_vertices; ++v) {
            const auto& a = g.coords[u];
            const auto& b = g.coords[v];
            const int dot = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
            if (dot == 0) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    }
    return g;
}

bool is_c4_free(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> mark(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int x : adj[u]) mark[x] = 1;
            for (int x : adj[v])
                if (mark[x]) ++common;
            for (int x : adj[u]) mark[x] = 0;
            if (common >= 2) return false;
        }
    }
    return true;
}

OrderFamily family_from_c4_free(const std::vector<std::vector<int>>& adj, std::uint64_t seed) {
    if (!is_c4_free(adj)) throw std::invalid_argument("family_from_c4_free: graph contains a C4");
    OrderFamily f;
    f.universe_size = static_cast<Symbol>(adj.size());
    f.orders.reserve(adj.size());
    std::mt19937_64 rng(seed);
    for (const auto& nbrs : adj) {
        LinearOrder o;
        o.seq.assign(nbrs.begin(), nbrs.end());
        std::shuffle(o.seq.begin(), o.seq.end(), rng);
        f.orders.push_back(std::move(o));
    }
    return f;
}

OrderFamily family_from_polarity(int q, std::uint64_t seed) {
    return family_from_c4_free(polarity_graph(q).adj, seed);
}

OrderFamily random_valid_family(const FamilySeedSpec& spec) {
    if (spec.n < 0 || spec.universe < 0 || spec.min_len < 0 || spec.max_len < spec.min_len)
        throw std::invalid_argument("random_valid_family: malformed spec");

    std::mt19937_64 rng(spec.seed);
    OrderFamily f;
    f.universe_size = spec.universe;
    f.orders.resize(spec.n);

    std::vector<Symbol> pool(spec.universe);
    for (Symbol a = 0; a < spec.universe; ++a) pool[a] = a;
    for (auto& o : f.orders) {
        const int cap = std::min<int>(spec.max_len, spec.universe);
        const int lo = std::min(spec.min_len, cap);
        std::uniform_int_distribution<int> len_dist(lo, cap);
        const int len = len_dist(rng);
        std::shuffle(pool.begin(), pool.end(), rng);
        o.seq.assign(pool.begin(), pool.begin() + len);
    }

    // repair: drop the tail of the higher-indexed order past the conflicting
    // triple until no violation remains; each step shortens one order
    while (true) {
        const auto witnesses = family_validate(f);
        if (witnesses.empty()) break;
        const TripleWitness& w = witnesses.front();
        LinearOrder& o = f.orders[w.j];
        int cut = 0;
        for (Symbol s : {w.a, w.b, w.c}) cut = std::max(cut, o.position(s));
        o.seq.resize(cut);
    }
    return f;
}

}  // namespace ordex
