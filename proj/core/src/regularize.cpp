#include "ordex/regularize.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ordex {

long long BipartiteIncidence::num_edges() const {
    long long e = 0;
    for (const auto& a : adj) e += static_cast<long long>(a.size());
    return e;
}

bool BipartiteIncidence::has_edge(int left, Symbol right) const {
    if (left < 0 || left >= num_left) return false;
    const auto& a = adj[left];
    return std::binary_search(a.begin(), a.end(), right);
}

bool BipartiteIncidence::is_subgraph_of(const BipartiteIncidence& g) const {
    if (num_left > g.num_left || num_right > g.num_right) return false;
    for (int i = 0; i < num_left; ++i)
        for (Symbol a : adj[i])
            if (!g.has_edge(i, a)) return false;
    return true;
}

BipartiteIncidence build_incidence(const OrderFamily& f) {
    BipartiteIncidence g;
    g.num_left = f.num_orders();
    g.num_right = f.universe_size;
    g.adj.resize(g.num_left);
    for (int i = 0; i < g.num_left; ++i) {
        g.adj[i] = f.orders[i].seq;
        std::sort(g.adj[i].begin(), g.adj[i].end());
    }
    return g;
}

namespace {

struct PeelResult {
    std::vector<char> left_alive, right_alive;
    long long edges = 0;
    long long delta = 0, Delta = 0;
};

// One scale: drop every vertex whose original degree exceeds d, then
// repeatedly drop vertices of current degree < d/k (exactly: deg*k_den <
// d*k_num). The peeling fixed point is unique, so the result does not
// depend on processing order.
PeelResult peel_at_scale(const BipartiteIncidence& g,
                         const std::vector<std::vector<int>>& radj,
                         long long d, const Rational& k) {
    const int nl = g.num_left;
    const int nr = g.num_right;
    PeelResult r;
    r.left_alive.assign(nl, 1);
    r.right_alive.assign(nr, 1);

    for (int i = 0; i < nl; ++i)
        if (static_cast<long long>(g.adj[i].size()) > d) r.left_alive[i] = 0;
    for (int a = 0; a < nr; ++a)
        if (static_cast<long long>(radj[a].size()) > d) r.right_alive[a] = 0;

    std::vector<long long> ldeg(nl, 0), rdeg(nr, 0);
    for (int i = 0; i < nl; ++i) {
        if (!r.left_alive[i]) continue;
        for (Symbol a : g.adj[i])
            if (r.right_alive[a]) { ++ldeg[i]; ++rdeg[a]; }
    }

    // deg < d/k  <=>  deg * k_num < d * k_den
    auto too_low = [&](long long deg) { return lt_product(deg, k.num, d, k.den); };

    std::deque<std::pair<bool, int>> work;
    for (int i = 0; i < nl; ++i)
        if (r.left_alive[i] && too_low(ldeg[i])) work.emplace_back(true, i);
    for (int a = 0; a < nr; ++a)
        if (r.right_alive[a] && too_low(rdeg[a])) work.emplace_back(false, a);

    while (!work.empty()) {
        const auto [is_left, v] = work.front();
        work.pop_front();
        if (is_left) {
            if (!r.left_alive[v]) continue;
            r.left_alive[v] = 0;
            for (Symbol a : g.adj[v]) {
                if (!r.right_alive[a]) continue;
                if (too_low(--rdeg[a])) work.emplace_back(false, a);
            }
        } else {
            if (!r.right_alive[v]) continue;
            r.right_alive[v] = 0;
            for (int i : radj[v]) {
                if (!r.left_alive[i]) continue;
                if (too_low(--ldeg[i])) work.emplace_back(true, i);
            }
        }
    }

    r.delta = -1;
    auto take = [&](long long deg) {
        r.Delta = std::max(r.Delta, deg);
        r.delta = r.delta < 0 ? deg : std::min(r.delta, deg);
    };
    for (int i = 0; i < nl; ++i) {
        if (!r.left_alive[i]) continue;
        r.edges += ldeg[i];
        take(ldeg[i]);
    }
    for (int a = 0; a < nr; ++a)
        if (r.right_alive[a]) take(rdeg[a]);
    if (r.delta < 0) r.delta = 0;
    return r;
}

BipartiteIncidence materialize(const BipartiteIncidence& g, const std::vector<char>& left_alive,
                               const std::vector<char>& right_alive) {
    BipartiteIncidence out;
    out.num_left = g.num_left;
    out.num_right = g.num_right;
    out.adj.resize(g.num_left);
    for (int i = 0; i < g.num_left; ++i) {
        if (!left_alive[i]) continue;
        for (Symbol a : g.adj[i])
            if (right_alive[a]) out.adj[i].push_back(a);
    }
    return out;
}

}  // namespace

std::pair<BipartiteIncidence, RegularityReport>
extract_almost_regular(const BipartiteIncidence& g, const Rational& k_target) {
    if (k_target < Rational(1)) throw std::invalid_argument("extract_almost_regular: k_target < 1");

    const long long total_edges = g.num_edges();
    RegularityReport rep;
    if (total_edges == 0) {
        BipartiteIncidence empty;
        empty.num_left = g.num_left;
        empty.num_right = g.num_right;
        empty.adj.resize(g.num_left);
        return {std::move(empty), rep};
    }

    std::vector<std::vector<int>> radj(g.num_right);
    long long dmax = 0;
    for (int i = 0; i < g.num_left; ++i) {
        dmax = std::max(dmax, static_cast<long long>(g.adj[i].size()));
        for (Symbol a : g.adj[i]) radj[a].push_back(i);
    }
    for (const auto& v : radj) dmax = std::max(dmax, static_cast<long long>(v.size()));

    PeelResult best;
    bool have = false;
    for (long long d = dmax; d >= 1; d /= 2) {
        PeelResult cand = peel_at_scale(g, radj, d, k_target);
        if (cand.edges == 0) continue;
        if (!have || cand.edges > best.edges ||
            (cand.edges == best.edges && cand.Delta < best.Delta)) {
            best = std::move(cand);
            have = true;
        }
    }

    BipartiteIncidence sub;
    if (have) {
        sub = materialize(g, best.left_alive, best.right_alive);
        rep.delta = best.delta;
        rep.Delta = best.Delta;
        rep.retained_edges = best.edges;
    } else {
        // every scale peeled to empty (stars and similar skews); a single
        // edge is 1-regular and keeps the output nonempty
        sub.num_left = g.num_left;
        sub.num_right = g.num_right;
        sub.adj.resize(g.num_left);
        for (int i = 0; i < g.num_left; ++i) {
            if (!g.adj[i].empty()) {
                sub.adj[i].push_back(g.adj[i].front());
                break;
            }
        }
        rep.delta = 1;
        rep.Delta = 1;
        rep.retained_edges = 1;
    }
    rep.k_achieved = rep.delta > 0 ? Rational(rep.Delta, rep.delta) : Rational(0);
    rep.retained_fraction = Rational(rep.retained_edges, total_edges);
    rep.target_met = rep.retained_edges > 0 &&
        le_product(rep.Delta, k_target.den, k_target.num, rep.delta);
    return {std::move(sub), rep};
}

RestrictedFamily restrict_family(const OrderFamily& f, const BipartiteIncidence& sub) {
    const BipartiteIncidence full = build_incidence(f);
    if (!sub.is_subgraph_of(full))
        throw std::invalid_argument("restrict_family: not a subgraph of the family incidence");

    RestrictedFamily out;
    std::vector<Symbol> new_id(f.universe_size, -1);
    for (int i = 0; i < f.num_orders() && i < sub.num_left; ++i) {
        const auto& keep = sub.adj[i];
        if (keep.empty()) continue;
        LinearOrder o;
        for (Symbol a : f.orders[i].seq) {
            if (!std::binary_search(keep.begin(), keep.end(), a)) continue;
            if (new_id[a] < 0) {
                new_id[a] = static_cast<Symbol>(out.symbol_map.size());
                out.symbol_map.push_back(a);
            }
            o.seq.push_back(new_id[a]);
        }
        out.family.orders.push_back(std::move(o));
        out.order_map.push_back(i);
    }
    out.family.universe_size = static_cast<Symbol>(out.symbol_map.size());
    return out;
}

}  // namespace ordex
