#include "ordex/zo_matrix.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ordex {

ZeroOneMatrix matrix_from_rows(const std::vector<std::string>& rows_01) {
    if (rows_01.empty()) throw std::invalid_argument("matrix_from_rows: no rows");
    ZeroOneMatrix m(static_cast<int>(rows_01.size()), static_cast<int>(rows_01[0].size()));
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows_01[r].size()) != m.cols)
            throw std::invalid_argument("matrix_from_rows: ragged rows");
        for (int c = 0; c < m.cols; ++c) {
            const char ch = rows_01[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("matrix_from_rows: not 0/1");
            m.set(r, c, ch == '1' ? 1 : 0);
        }
    }
    return m;
}

bool validate_matrix_embedding(const ZeroOneMatrix& host, const ZeroOneMatrix& pattern,
                               const MatrixEmbedding& emb) {
    if (static_cast<int>(emb.row_idx.size()) != pattern.rows ||
        static_cast<int>(emb.col_idx.size()) != pattern.cols)
        return false;
    for (std::size_t i = 1; i < emb.row_idx.size(); ++i)
        if (emb.row_idx[i] <= emb.row_idx[i - 1]) return false;
    for (std::size_t i = 1; i < emb.col_idx.size(); ++i)
        if (emb.col_idx[i] <= emb.col_idx[i - 1]) return false;
    for (int r : emb.row_idx)
        if (r < 0 || r >= host.rows) return false;
    for (int c : emb.col_idx)
        if (c < 0 || c >= host.cols) return false;
    for (int r = 0; r < pattern.rows; ++r)
        for (int c = 0; c < pattern.cols; ++c)
            if (pattern.at(r, c) && !host.at(emb.row_idx[r], emb.col_idx[c])) return false;
    return true;
}

namespace {

// With the rows fixed, pattern columns can be matched greedily: the
// leftmost host column satisfying a pattern column never blocks a later
// one, so greedy is complete.
std::optional<std::vector<int>> match_columns(const ZeroOneMatrix& m, const ZeroOneMatrix& a,
                                              const std::vector<int>& rows) {
    std::vector<int> cols;
    cols.reserve(a.cols);
    int next = 0;
    for (int pc = 0; pc < a.cols; ++pc) {
        int found = -1;
        for (int hc = next; hc < m.cols; ++hc) {
            bool ok = true;
            for (int pr = 0; pr < a.rows; ++pr) {
                if (a.at(pr, pc) && !m.at(rows[pr], hc)) { ok = false; break; }
            }
            if (ok) { found = hc; break; }
        }
        if (found < 0) return std::nullopt;
        cols.push_back(found);
        next = found + 1;
    }
    return cols;
}

bool pick_rows(const ZeroOneMatrix& m, const ZeroOneMatrix& a, int pr, int from,
               std::vector<int>& rows, MatrixEmbedding& out) {
    if (pr == a.rows) {
        if (auto cols = match_columns(m, a, rows)) {
            out.row_idx = rows;
            out.col_idx = *cols;
            return true;
        }
        return false;
    }
    for (int hr = from; hr <= m.rows - (a.rows - pr); ++hr) {
        rows.push_back(hr);
        if (pick_rows(m, a, pr + 1, hr + 1, rows, out)) return true;
        rows.pop_back();
    }
    return false;
}

}  // namespace

std::optional<MatrixEmbedding> contains_pattern(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    if (a.rows > m.rows || a.cols > m.cols) return std::nullopt;
    MatrixEmbedding emb;
    std::vector<int> rows;
    rows.reserve(a.rows);
    if (pick_rows(m, a, 0, 0, rows, emb)) return emb;
    return std::nullopt;
}

int weight(const ZeroOneMatrix& m) {
    int w = 0;
    for (std::uint8_t b : m.bits) w += b;
    return w;
}

namespace {

struct ExSearch {
    const ZeroOneMatrix& pattern;
    int n;
    ZeroOneMatrix m;
    std::vector<int> masks;   // candidate row masks, high popcount first
    int best = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    bool expired = false;
    long long node_counter = 0;

    ExSearch(int n_, const ZeroOneMatrix& a) : pattern(a), n(n_), m(n_, n_) {
        masks.resize(static_cast<std::size_t>(1) << n);
        std::iota(masks.begin(), masks.end(), 0);
        std::stable_sort(masks.begin(), masks.end(), [](int x, int y) {
            return __builtin_popcount(static_cast<unsigned>(x)) >
                   __builtin_popcount(static_cast<unsigned>(y));
        });
    }

    bool out_of_time() {
        if (!has_deadline) return false;
        if (expired) return true;
        if ((++node_counter & 0x3ff) != 0) return false;
        expired = std::chrono::steady_clock::now() >= deadline;
        return expired;
    }

    void fill_row(int r, int mask) {
        for (int c = 0; c < n; ++c) m.set(r, c, (mask >> c) & 1);
    }

    // prefix view: only the first `rows` rows of m count
    bool prefix_contains(int rows) const {
        ZeroOneMatrix pre(rows, n);
        std::copy(m.bits.begin(), m.bits.begin() + static_cast<std::size_t>(rows) * n,
                  pre.bits.begin());
        return contains_pattern(pre, pattern).has_value();
    }

    void dfs(int r, int w) {
        best = std::max(best, w);
        if (r == n || out_of_time()) return;
        if (w + (n - r) * n <= best) return;   // even all-ones rows cannot beat best
        for (int mask : masks) {
            const int pc = __builtin_popcount(static_cast<unsigned>(mask));
            if (w + pc + (n - r - 1) * n <= best) break;   // masks sorted by popcount
            fill_row(r, mask);
            if (!prefix_contains(r + 1)) dfs(r + 1, w + pc);
            if (expired) break;
        }
        fill_row(r, 0);
    }
};

}  // namespace

ExSearchResult brute_force_Ex_budgeted(int n, const ZeroOneMatrix& a, long long budget_millis) {
    if (n < 0 || n > 6) throw std::invalid_argument("brute_force_Ex: exact mode capped at n = 6");
    if (n == 0) return {0, true};
    if (weight(a) == 0) throw std::invalid_argument("brute_force_Ex: all-zero pattern");
    ExSearch s(n, a);
    if (budget_millis > 0) {
        s.has_deadline = true;
        s.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_millis);
    }
    s.dfs(0, 0);
    return {s.best, !s.expired};
}

int brute_force_Ex(int n, const ZeroOneMatrix& a) {
    return brute_force_Ex_budgeted(n, a, 0).best;
}

int heuristic_Ex(int n, const ZeroOneMatrix& a, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("heuristic_Ex: negative n");
    if (n == 0) return 0;
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) cells.emplace_back(r, c);
    std::mt19937_64 rng(seed);
    std::shuffle(cells.begin(), cells.end(), rng);
    ZeroOneMatrix m(n, n);
    int w = 0;
    for (const auto& [r, c] : cells) {
        m.set(r, c, 1);
        if (contains_pattern(m, a)) m.set(r, c, 0);
        else ++w;
    }
    return w;
}

ZeroOneMatrix s_t(int t) {
    if (t < 1) throw std::invalid_argument("s_t: t must be >= 1");
    ZeroOneMatrix m(3, 2 * t);
    for (int c = 0; c < 2 * t; ++c) {
        m.set(0, c, c % 2 == 0 ? 1 : 0);
        m.set(2, c, c % 2 == 0 ? 0 : 1);
    }
    m.set(1, 0, 1);
    m.set(1, 2 * t - 1, 1);
    return m;
}

ZeroOneMatrix hat() {
    return matrix_from_rows({"010", "101"});
}

std::pair<ZeroOneMatrix, ZeroOneMatrix> z_examples() {
    return {matrix_from_rows({"1010", "0101", "1001"}),
            matrix_from_rows({"0101", "1010", "1001"})};
}

ConnectHypotheses connect_hypotheses(const ZeroOneMatrix& a) {
    ConnectHypotheses h;
    h.no_zero_column = true;
    for (int c = 0; c < a.cols; ++c) {
        bool any = false;
        for (int r = 0; r < a.rows; ++r) any = any || a.at(r, c);
        if (!any) { h.no_zero_column = false; break; }
    }
    h.contains_hat = contains_pattern(a, hat()).has_value();
    h.consecutive_rows_share_column = true;
    for (int r = 0; r + 1 < a.rows; ++r) {
        bool share = false;
        for (int c = 0; c < a.cols; ++c)
            if (a.at(r, c) && a.at(r + 1, c)) { share = true; break; }
        if (!share) { h.consecutive_rows_share_column = false; break; }
    }
    return h;
}

EdgeOrderedGraph g_of(const ZeroOneMatrix& a) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < a.cols; ++c)           // left to right
        for (int r = 0; r < a.rows; ++r)       // top to bottom
            if (a.at(r, c)) edges.emplace_back(r, a.rows + c);
    return make_edge_ordered(a.rows + a.cols, std::move(edges));
}

bool verify_connect(const ZeroOneMatrix& m, const ZeroOneMatrix& a) {
    if (!connect_hypotheses(a).all())
        throw std::invalid_argument("verify_connect: pattern fails the connect hypotheses");
    if (contains_pattern(m, a)) return true;   // vacuous
    return !contains(g_of(m), g_of(a)).has_value();
}

}  // namespace ordex
