#include "ordex/audit.hpp"

#include <algorithm>
#include <cmath>

#include "ordex/parallel.hpp"

namespace ordex {

namespace {

// One sequence prepared for pairwise work: the raw order plus its symbol
// list sorted for merging.
struct SeqView {
    std::vector<Symbol> seq;
    std::vector<std::pair<Symbol, int>> by_symbol;   // (symbol, position), sorted by symbol

    explicit SeqView(const std::vector<Symbol>& s) : seq(s) {
        by_symbol.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            by_symbol.emplace_back(s[i], static_cast<int>(i));
        std::sort(by_symbol.begin(), by_symbol.end());
    }
};

struct Fenwick {
    std::vector<int> t;
    explicit Fenwick(int n) : t(n + 1, 0) {}
    void add(int i) { for (++i; i < static_cast<int>(t.size()); i += i & -i) ++t[i]; }
    int prefix(int i) const {  // count of values <= i
        int s = 0;
        for (++i; i > 0; i -= i & -i) s += t[i];
        return s;
    }
};

struct PairHalfResult {
    long long fsum = 0;
    int inter = 0;
    bool intrev = true;
};

// Inversion counting over the common symbols: with m common symbols,
// I- inversions (reversed pairs) and C(m,2)-I- same-order pairs, the
// ordered-pair f-sum is 2*C(m,2) - 4*I-.
PairHalfResult pair_stats(const SeqView& v1, const SeqView& v2) {
    PairHalfResult r;
    std::vector<std::pair<int, int>> common;   // (pos in v1, pos in v2), merged by symbol
    {
        std::size_t a = 0, b = 0;
        while (a < v1.by_symbol.size() && b < v2.by_symbol.size()) {
            if (v1.by_symbol[a].first < v2.by_symbol[b].first) ++a;
            else if (v2.by_symbol[b].first < v1.by_symbol[a].first) ++b;
            else {
                common.emplace_back(v1.by_symbol[a].second, v2.by_symbol[b].second);
                ++a; ++b;
            }
        }
    }
    const int m = static_cast<int>(common.size());
    r.inter = m;
    if (m < 2) return r;
    std::sort(common.begin(), common.end());   // scan in v1 order
    Fenwick fw(static_cast<int>(v2.seq.size()));
    long long inversions = 0;
    for (int t = 0; t < m; ++t) {
        const int p2 = common[t].second;
        inversions += t - fw.prefix(p2);       // earlier entries with larger v2 position
        fw.add(p2);
    }
    const long long all_pairs = static_cast<long long>(m) * (m - 1) / 2;
    r.fsum = 2 * all_pairs - 4 * inversions;
    r.intrev = inversions == all_pairs;
    return r;
}

int intersection_size(const SeqView& v1, const SeqView& v2) {
    int m = 0;
    std::size_t a = 0, b = 0;
    while (a < v1.by_symbol.size() && b < v2.by_symbol.size()) {
        if (v1.by_symbol[a].first < v2.by_symbol[b].first) ++a;
        else if (v2.by_symbol[b].first < v1.by_symbol[a].first) ++b;
        else { ++m; ++a; ++b; }
    }
    return m;
}

struct AuditContext {
    const OrderFamily& f;
    std::vector<SeqView> full;
    std::vector<SeqView> half[2];
    std::vector<PairStats> pairs;   // i < j

    AuditContext(const OrderFamily& fam, int threads) : f(fam) {
        const int n = fam.num_orders();
        full.reserve(n);
        half[0].reserve(n);
        half[1].reserve(n);
        for (const auto& o : fam.orders) {
            const HalfSplit hs = split(o);
            full.emplace_back(o.seq);
            half[0].emplace_back(hs.first.seq);
            half[1].emplace_back(hs.second.seq);
        }
        std::vector<std::pair<int, int>> idx;
        idx.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
        pairs.resize(idx.size());
        parallel_for(idx.size(), threads, [&](std::size_t t) {
            const auto [i, j] = idx[t];
            PairStats ps;
            ps.i = i;
            ps.j = j;
            for (int eps = 0; eps < 2; ++eps) {
                const PairHalfResult hr = pair_stats(half[eps][i], half[eps][j]);
                ps.fsum[eps] = hr.fsum;
                ps.inter[eps] = hr.inter;
                ps.intrev[eps] = hr.intrev;
            }
            ps.inter_full = intersection_size(full[i], full[j]);
            pairs[t] = ps;
        });
    }
};

long long two_choose(long long d) { return d * (d - 1); }   // 2 * C(d,2)

std::vector<long long> symbol_degrees(const OrderFamily& f) {
    std::vector<long long> d(static_cast<std::size_t>(std::max<Symbol>(f.universe_size, 0)), 0);
    for (const auto& o : f.orders)
        for (Symbol a : o.seq) ++d[static_cast<std::size_t>(a)];
    return d;
}

CheckResult make_pass(std::string name, long long lhs, long long rhs, std::string detail = {}) {
    return CheckResult{std::move(name), CheckResult::Status::pass, lhs, rhs, std::move(detail)};
}
CheckResult make_fail(std::string name, long long lhs, long long rhs, std::string detail) {
    return CheckResult{std::move(name), CheckResult::Status::fail, lhs, rhs, std::move(detail)};
}
CheckResult make_skip(std::string name, std::string detail) {
    return CheckResult{std::move(name), CheckResult::Status::skipped, 0, 0, std::move(detail)};
}

long long s_from_pairs(const std::vector<PairStats>& pairs) {
    long long s = 0;
    for (const auto& p : pairs) s += p.fsum[0] + p.fsum[1];
    return 2 * s;   // f-sums are symmetric in (i,j); ordered pairs double the i<j sum
}

long long sum_sq_lengths(const OrderFamily& f) {
    long long s = 0;
    for (const auto& o : f.orders) {
        const long long l = static_cast<long long>(o.size());
        s += l * l;
    }
    return s;
}

CheckResult run_s_lower_bound(const OrderFamily& f, long long s_value) {
    // doubled form of S >= -1/2 sum |A^i|^2
    const long long lhs = 2 * s_value;
    const long long rhs = -sum_sq_lengths(f);
    if (lhs >= rhs) return make_pass("s_lower_bound", lhs, rhs, "2S >= -sum|A|^2");
    return make_fail("s_lower_bound", lhs, rhs, "2S < -sum|A|^2");
}

CheckResult run_f_bounds(const AuditContext& ctx) {
    long long checked = 0;
    for (const auto& p : ctx.pairs) {
        for (int eps = 0; eps < 2; ++eps) {
            ++checked;
            const long long k = p.inter[eps];
            if (p.fsum[eps] > k)
                return make_fail("f_bounds", p.fsum[eps], k,
                                 "fsum > |cap| at (i=" + std::to_string(p.i) + ",j=" +
                                     std::to_string(p.j) + ",eps=" + std::to_string(eps) + ")");
            if (p.intrev[eps] && p.fsum[eps] != k - k * k)
                return make_fail("f_bounds", p.fsum[eps], k - k * k,
                                 "int-rev equality k-k^2 violated at (i=" + std::to_string(p.i) +
                                     ",j=" + std::to_string(p.j) + ",eps=" + std::to_string(eps) + ")");
        }
    }
    return make_pass("f_bounds", checked, checked, "all (i,j,eps) pairs");
}

CheckResult run_gain_bound(const AuditContext& ctx) {
    for (const auto& p : ctx.pairs) {
        long long lhs = 0;
        for (int eps = 0; eps < 2; ++eps)
            if (p.intrev[eps]) lhs += static_cast<long long>(p.inter[eps]) * p.inter[eps];
        const long long rhs = 2LL * p.inter[0] * p.inter[1];
        if (lhs < rhs)
            return make_fail("gain_bound", lhs, rhs,
                             "at (i=" + std::to_string(p.i) + ",j=" + std::to_string(p.j) + ")");
    }
    return make_pass("gain_bound", static_cast<long long>(ctx.pairs.size()),
                     static_cast<long long>(ctx.pairs.size()), "all index pairs");
}

CheckResult run_disjointness(const AuditContext& ctx) {
    for (const auto& p : ctx.pairs) {
        for (int eps = 0; eps < 2; ++eps) {
            if (!p.intrev[eps] && p.inter[1 - eps] != 0)
                return make_fail("disjointness_claim", p.inter[1 - eps], 0,
                                 "halves " + std::to_string(1 - eps) + " not disjoint at (i=" +
                                     std::to_string(p.i) + ",j=" + std::to_string(p.j) + ")");
        }
    }
    return make_pass("disjointness_claim", static_cast<long long>(ctx.pairs.size()),
                     static_cast<long long>(ctx.pairs.size()), "all (i,j,eps)");
}

CheckResult run_s_upper_bound(long long s_value, long long inter_sum, long long gain_sum) {
    const long long rhs = inter_sum - gain_sum;
    if (s_value <= rhs) return make_pass("s_upper_bound", s_value, rhs, "S <= sum|cap| - gain");
    return make_fail("s_upper_bound", s_value, rhs, "S > sum|cap| - gain");
}

struct SabData {
    std::map<std::pair<Symbol, Symbol>, long long> sab;
    long long total = 0;        // sum s_{a,b}
    long long cross = 0;        // sum_i |A0||A1|
    long long two_binom = 0;    // sum 2*C(s_{a,b},2)
};

SabData collect_sab(const OrderFamily& f) {
    SabData d;
    for (const auto& o : f.orders) {
        const HalfSplit hs = split(o);
        d.cross += static_cast<long long>(hs.first.size()) * hs.second.size();
        for (Symbol a : hs.first.seq)
            for (Symbol b : hs.second.seq) ++d.sab[{a, b}];
    }
    for (const auto& [key, s] : d.sab) {
        d.total += s;
        d.two_binom += two_choose(s);
    }
    return d;
}

}  // namespace

bool AuditReport::all_unconditional_pass() const {
    for (const auto& c : checks)
        if (c.failed()) return false;
    return true;
}

long long pair_f_sum(const LinearOrder& b1, const LinearOrder& b2) {
    return pair_stats(SeqView(b1.seq), SeqView(b2.seq)).fsum;
}

long long compute_S(const OrderFamily& f, int threads) {
    AuditContext ctx(f, threads);
    return s_from_pairs(ctx.pairs);
}

long long lambda_ab(const OrderFamily& f, Symbol a, Symbol b) {
    // sum over ordered i!=j of f(A^i,a,b) f(A^j,a,b) = (sum_i f)^2 - sum_i f^2
    long long lin = 0, sq = 0;
    for (const auto& o : f.orders) {
        const long long v = f_single(o, a, b);
        lin += v;
        sq += v * v;
    }
    return lin * lin - sq;
}

CheckResult check_s_lower_bound(const OrderFamily& f) {
    return run_s_lower_bound(f, compute_S(f));
}

CheckResult check_f_bounds(const OrderFamily& f) {
    if (!family_validate(f).empty()) return make_skip("f_bounds", "family invalid");
    return run_f_bounds(AuditContext(f, 1));
}

CheckResult check_gain_bound(const OrderFamily& f) {
    if (!family_validate(f).empty()) return make_skip("gain_bound", "family invalid");
    return run_gain_bound(AuditContext(f, 1));
}

CheckResult check_disjointness_claim(const OrderFamily& f) {
    if (!family_validate(f).empty()) return make_skip("disjointness_claim", "family invalid");
    return run_disjointness(AuditContext(f, 1));
}

CheckResult check_s_upper_bound(const OrderFamily& f) {
    if (!family_validate(f).empty()) return make_skip("s_upper_bound", "family invalid");
    AuditContext ctx(f, 1);
    long long inter = 0, gain = 0;
    for (const auto& p : ctx.pairs) {
        inter += 2LL * p.inter_full;
        for (int eps = 0; eps < 2; ++eps)
            if (p.intrev[eps]) gain += 2LL * p.inter[eps] * p.inter[eps];
    }
    return run_s_upper_bound(s_from_pairs(ctx.pairs), inter, gain);
}

CheckResult sab_identities(const OrderFamily& f) {
    const SabData d = collect_sab(f);
    AuditContext ctx(f, 1);
    long long quad = 0;
    for (const auto& p : ctx.pairs) quad += 2LL * p.inter[0] * p.inter[1];
    if (quad != d.two_binom)
        return make_fail("sab_identities", quad, d.two_binom, "quadratic identity");
    if (d.total != d.cross)
        return make_fail("sab_identities", d.total, d.cross, "linear identity");
    return make_pass("sab_identities", quad, d.two_binom);
}

long long intersection_sum(const OrderFamily& f, int threads) {
    AuditContext ctx(f, threads);
    long long s = 0;
    for (const auto& p : ctx.pairs) s += 2LL * p.inter_full;
    return s;
}

CheckResult intersection_sum_check(const OrderFamily& f) {
    const long long lhs = intersection_sum(f);
    long long rhs = 0;
    for (long long d : symbol_degrees(f)) rhs += two_choose(d);
    if (lhs == rhs) return make_pass("intersection_degree_identity", lhs, rhs);
    return make_fail("intersection_degree_identity", lhs, rhs, "sum|cap| != sum_a 2C(d_a,2)");
}

AuditReport full_audit(const OrderFamily& f, const Rational& k_param, int threads) {
    AuditReport rep;
    rep.n_orders = f.num_orders();
    rep.universe_size = f.universe_size;

    AuditContext ctx(f, threads);
    rep.pairs = ctx.pairs;
    rep.s_value = s_from_pairs(ctx.pairs);
    rep.sum_sq_lengths = sum_sq_lengths(f);
    rep.lower_bound = -((rep.sum_sq_lengths + 1) / 2);   // floor(-sumsq/2)

    for (const auto& p : ctx.pairs) {
        rep.intersection_sum += 2LL * p.inter_full;
        rep.quad_sum += 2LL * p.inter[0] * p.inter[1];
        for (int eps = 0; eps < 2; ++eps)
            if (p.intrev[eps]) rep.gain_sum += 2LL * p.inter[eps] * p.inter[eps];
    }

    const SabData sd = collect_sab(f);
    rep.sab = sd.sab;
    rep.sab_total = sd.total;
    rep.cross_total = sd.cross;

    rep.violations = family_validate(f, threads);
    const bool valid = rep.violations.empty();
    if (valid) {
        rep.checks.push_back(make_pass("family_valid", 0, 0));
    } else {
        const auto& w = rep.violations.front();
        rep.checks.push_back(make_fail("family_valid",
                                       static_cast<long long>(rep.violations.size()), 0,
                                       "first witness: orders (" + std::to_string(w.i) + "," +
                                           std::to_string(w.j) + ") triple (" + std::to_string(w.a) +
                                           "," + std::to_string(w.b) + "," + std::to_string(w.c) + ")"));
    }

    rep.checks.push_back(run_s_lower_bound(f, rep.s_value));
    if (valid) {
        rep.checks.push_back(run_f_bounds(ctx));
        rep.checks.push_back(run_gain_bound(ctx));
        rep.checks.push_back(run_disjointness(ctx));
        rep.checks.push_back(run_s_upper_bound(rep.s_value, rep.intersection_sum, rep.gain_sum));
    } else {
        rep.checks.push_back(make_skip("f_bounds", "family invalid"));
        rep.checks.push_back(make_skip("gain_bound", "family invalid"));
        rep.checks.push_back(make_skip("disjointness_claim", "family invalid"));
        rep.checks.push_back(make_skip("s_upper_bound", "family invalid"));
    }

    if (rep.quad_sum == sd.two_binom && sd.total == sd.cross)
        rep.checks.push_back(make_pass("sab_identities", rep.quad_sum, sd.two_binom));
    else if (rep.quad_sum != sd.two_binom)
        rep.checks.push_back(make_fail("sab_identities", rep.quad_sum, sd.two_binom, "quadratic identity"));
    else
        rep.checks.push_back(make_fail("sab_identities", sd.total, sd.cross, "linear identity"));

    {
        long long deg_side = 0;
        for (long long d : symbol_degrees(f)) deg_side += two_choose(d);
        if (rep.intersection_sum == deg_side)
            rep.checks.push_back(make_pass("intersection_degree_identity", rep.intersection_sum, deg_side));
        else
            rep.checks.push_back(make_fail("intersection_degree_identity", rep.intersection_sum,
                                           deg_side, "sum|cap| != sum_a 2C(d_a,2)"));
    }

    // Informational tail: the closing S bound and the pairwise-product
    // lower bound for the supplied K. Reported, never asserted.
    {
        const double K = k_param.as_double();
        const double M = static_cast<double>(total_weight(f));
        const double n = static_cast<double>(rep.n_orders);
        if (n > 0 && K > 0) {
            rep.s_k_bound_lhs = static_cast<double>(rep.s_value);
            rep.s_k_bound_rhs = K * K * M * M / n - std::pow(M, 4) / (25.0 * K * K * std::pow(n, 4));
            rep.quad_k_bound_lhs = static_cast<double>(rep.quad_sum);
            rep.quad_k_bound_rhs = std::pow(M, 4) / (50.0 * K * K * std::pow(n, 4));
        }
        // degree stats over the incidence graph, isolated vertices ignored
        long long dmin = -1, dmax = 0;
        auto take = [&](long long d) {
            if (d == 0) return;
            dmax = std::max(dmax, d);
            dmin = dmin < 0 ? d : std::min(dmin, d);
        };
        for (const auto& o : f.orders) take(static_cast<long long>(o.size()));
        for (long long d : symbol_degrees(f)) take(d);
        rep.almost_regular_for_k = dmin < 0 ||
            le_product(dmax, k_param.den, k_param.num, dmin);
    }

    return rep;
}

}  // namespace ordex
