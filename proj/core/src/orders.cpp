#include "ordex/orders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ordex/parallel.hpp"

namespace ordex {

bool LinearOrder::check_distinct() const {
    std::unordered_set<Symbol> seen(seq.begin(), seq.end());
    return seen.size() == seq.size();
}

int LinearOrder::position(Symbol a) const {
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] == a) return static_cast<int>(i);
    return -1;
}

CyclicOrder CyclicOrder::from_sequence(std::vector<Symbol> s) {
    CyclicOrder c;
    if (s.empty()) return c;
    // lexicographically minimal rotation; entries are distinct, so rotating
    // to the minimum element suffices
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < s[best]) best = i;
    c.seq.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        c.seq.push_back(s[(best + i) % s.size()]);
    return c;
}

bool CyclicOrder::is_canonical() const {
    return from_sequence(seq).seq == seq;
}

bool OrderFamily::check_well_formed() const {
    for (const auto& o : orders) {
        if (!o.check_distinct()) return false;
        for (Symbol a : o.seq)
            if (a < 0 || a >= universe_size) return false;
    }
    return true;
}

int f_single(const LinearOrder& order, Symbol a, Symbol b) {
    if (a == b) throw std::invalid_argument("f_single: a == b");
    int pa = -1, pb = -1;
    for (std::size_t i = 0; i < order.seq.size(); ++i) {
        if (order.seq[i] == a) pa = static_cast<int>(i);
        else if (order.seq[i] == b) pb = static_cast<int>(i);
    }
    if (pa < 0 || pb < 0) return 0;
    return pa < pb ? 1 : -1;
}

int f_pair(const LinearOrder& b1, const LinearOrder& b2, Symbol a, Symbol b) {
    return f_single(b1, a, b) * f_single(b2, a, b);
}

HalfSplit split(const LinearOrder& order) {
    const std::size_t l = order.seq.size();
    const std::size_t h = (l + 1) / 2;
    HalfSplit out;
    out.first.seq.assign(order.seq.begin(), order.seq.begin() + h);
    out.second.seq.assign(order.seq.begin() + h, order.seq.end());
    return out;
}

namespace {

// Positions (in b2) of the common symbols, scanned in b1 order. The pair
// structure of (b1,b2) is fully captured by this sequence: an increasing
// pair is a same-order pair, a decreasing one is reversed.
std::vector<std::pair<Symbol, int>> common_positions(const LinearOrder& b1,
                                                     const LinearOrder& b2) {
    std::unordered_map<Symbol, int> pos2;
    pos2.reserve(b2.seq.size() * 2);
    for (std::size_t i = 0; i < b2.seq.size(); ++i) pos2.emplace(b2.seq[i], static_cast<int>(i));
    std::vector<std::pair<Symbol, int>> out;
    for (Symbol s : b1.seq) {
        auto it = pos2.find(s);
        if (it != pos2.end()) out.emplace_back(s, it->second);
    }
    return out;
}

}  // namespace

IntRevResult is_intersection_reverse(const LinearOrder& b1, const LinearOrder& b2) {
    const auto common = common_positions(b1, b2);
    IntRevResult r;
    for (std::size_t t = 0; t + 1 < common.size(); ++t) {
        if (common[t].second < common[t + 1].second) {
            r.intersection_reverse = false;
            r.witness = std::make_pair(common[t].first, common[t + 1].first);
            return r;
        }
    }
    return r;
}

std::optional<std::array<Symbol, 3>> common_triple_same_order(const LinearOrder& b1,
                                                              const LinearOrder& b2) {
    const auto common = common_positions(b1, b2);
    if (common.size() < 3) return std::nullopt;
    // patience-style detection of an increasing subsequence of length 3 in
    // the position sequence, with parent links for reconstruction
    const int m = static_cast<int>(common.size());
    std::vector<int> tail_idx;     // tail_idx[k]: index with smallest tail among inc. subseqs of length k+1
    std::vector<int> parent(m, -1);
    for (int t = 0; t < m; ++t) {
        const int p = common[t].second;
        // first tail with position >= p
        std::size_t k = 0;
        while (k < tail_idx.size() && common[tail_idx[k]].second < p) ++k;
        if (k > 0) parent[t] = tail_idx[k - 1];
        if (k == tail_idx.size()) tail_idx.push_back(t);
        else tail_idx[k] = t;
        if (k == 2) {
            const int c = t, b = parent[c], a = parent[b];
            return std::array<Symbol, 3>{common[a].first, common[b].first, common[c].first};
        }
    }
    return std::nullopt;
}

std::vector<TripleWitness> family_validate(const OrderFamily& f, int threads) {
    const int n = f.num_orders();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::optional<TripleWitness>> slots(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t t) {
        const auto [i, j] = pairs[t];
        if (auto triple = common_triple_same_order(f.orders[i], f.orders[j]))
            slots[t] = TripleWitness{i, j, (*triple)[0], (*triple)[1], (*triple)[2]};
    });

    std::vector<TripleWitness> out;
    for (const auto& s : slots)
        if (s) out.push_back(*s);
    return out;
}

TwoChainDecomposition two_chain_decomposition(const LinearOrder& b1, const LinearOrder& b2) {
    if (auto triple = common_triple_same_order(b1, b2))
        throw std::invalid_argument("two_chain_decomposition: orders share a same-order triple");

    const auto common = common_positions(b1, b2);   // b1 order with b2 positions
    const int m = static_cast<int>(common.size());
    TwoChainDecomposition out;
    // x < y in the agreement poset iff x precedes y in both, i.e. iff the
    // b2-position increases along the b1 scan. Minimal elements are those
    // with no smaller b2-position earlier in the scan.
    for (int t = 0; t < m; ++t) {
        bool minimal = true;
        for (int u = 0; u < t; ++u) {
            if (common[u].second < common[t].second) { minimal = false; break; }
        }
        (minimal ? out.t1 : out.t2).push_back(common[t].first);
    }
    return out;
}

LinearOrder linearize(const CyclicOrder& c, Symbol start) {
    int p = -1;
    for (std::size_t i = 0; i < c.seq.size(); ++i)
        if (c.seq[i] == start) { p = static_cast<int>(i); break; }
    if (p < 0) throw std::invalid_argument("linearize: start symbol absent");
    LinearOrder out;
    out.seq.reserve(c.seq.size());
    for (std::size_t i = 0; i < c.seq.size(); ++i)
        out.seq.push_back(c.seq[(p + i) % c.seq.size()]);
    return out;
}

OrderFamily cyclic_family_to_linear(const CyclicFamily& f) {
    OrderFamily out;
    out.universe_size = f.universe_size;
    out.orders.reserve(f.orders.size());
    for (const auto& c : f.orders) {
        if (c.seq.empty()) out.orders.emplace_back();
        else out.orders.push_back(linearize(c, c.seq.front()));   // canonical start = min symbol
    }
    return out;
}

long long total_weight(const OrderFamily& f) {
    long long s = 0;
    for (const auto& o : f.orders) s += static_cast<long long>(o.size());
    return s;
}

RatioReport ratio(const OrderFamily& f) {
    RatioReport r;
    r.total = total_weight(f);
    r.n = f.num_orders();
    r.total_sq = r.total * r.total;
    r.n_cubed = r.n * r.n * r.n;
    r.display = r.n > 0 ? static_cast<double>(r.total) / std::pow(static_cast<double>(r.n), 1.5) : 0.0;
    return r;
}

bool ratio_within(const OrderFamily& f, long long lo_num, long long lo_den,
                  long long hi_num, long long hi_den) {
    const RatioReport r = ratio(f);
    using I = __int128;
    // lo_num/lo_den * n^{3/2} <= total  <=>  lo_num^2 * n^3 <= lo_den^2 * total^2
    const bool lo_ok = I(lo_num) * lo_num * r.n_cubed <= I(lo_den) * lo_den * r.total_sq;
    const bool hi_ok = I(hi_den) * hi_den * r.total_sq <= I(hi_num) * hi_num * r.n_cubed;
    return lo_ok && hi_ok;
}

}  // namespace ordex
