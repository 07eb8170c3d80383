// Zero-one matrix pattern containment, small-n extremal numbers, the hat
// and S_t patterns, the lexicographic edge-ordering G(A), and the connect
// transfer verifier.
#ifndef ORDEX_ZO_MATRIX_HPP
#define ORDEX_ZO_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordex/edge_ordered.hpp"

namespace ordex {

struct ZeroOneMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> bits;   // row-major

    ZeroOneMatrix() = default;
    ZeroOneMatrix(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
    void set(int r, int c, std::uint8_t v) { bits[static_cast<std::size_t>(r) * cols + c] = v; }
    bool operator==(const ZeroOneMatrix& o) const = default;
};

ZeroOneMatrix matrix_from_rows(const std::vector<std::string>& rows_01);

// Strictly increasing row and column selections; each pattern 1-entry must
// land on a host 1.
struct MatrixEmbedding {
    std::vector<int> row_idx;
    std::vector<int> col_idx;
};

bool validate_matrix_embedding(const ZeroOneMatrix& host, const ZeroOneMatrix& pattern,
                               const MatrixEmbedding& emb);

// Backtracking over row selections; columns are then matched greedily left
// to right (leftmost feasible column is always safe).
std::optional<MatrixEmbedding> contains_pattern(const ZeroOneMatrix& m, const ZeroOneMatrix& a);

int weight(const ZeroOneMatrix& m);

// Exact Ex(n, a) by row-by-row branch and bound. n <= 5 is fast; n = 6 is
// allowed but can be slow; larger n is rejected (use heuristic_Ex there).
int brute_force_Ex(int n, const ZeroOneMatrix& a);

struct ExSearchResult {
    int best = 0;
    bool exact = true;   // false iff the time budget expired first
};

// Same search with a wall-clock budget; budget_millis = 0 means unlimited.
// On expiry the best weight found so far is returned with exact = false.
ExSearchResult brute_force_Ex_budgeted(int n, const ZeroOneMatrix& a, long long budget_millis);

// Seeded greedy lower bound for larger n: visit cells in random order and
// keep a 1 whenever the matrix still avoids the pattern. Not exact.
int heuristic_Ex(int n, const ZeroOneMatrix& a, std::uint64_t seed);

// The 3 x 2t matrix with alternating first and last rows (starting 1 and 0
// respectively) and a middle row supported on the first and last columns.
ZeroOneMatrix s_t(int t);

// [[0,1,0],[1,0,1]]
ZeroOneMatrix hat();

// The two displayed 3x4 example matrices whose G(.) are isomorphic.
std::pair<ZeroOneMatrix, ZeroOneMatrix> z_examples();

struct ConnectHypotheses {
    bool no_zero_column = false;
    bool contains_hat = false;
    bool consecutive_rows_share_column = false;
    bool all() const { return no_zero_column && contains_hat && consecutive_rows_share_column; }
};
ConnectHypotheses connect_hypotheses(const ZeroOneMatrix& a);

// Bipartite graph of the matrix (row-vertices 0..rows-1, column-vertices
// rows..rows+cols-1), one edge per 1-entry, ordered by column then row.
// All-zero rows/columns stay as isolated vertices.
EdgeOrderedGraph g_of(const ZeroOneMatrix& a);

// The connect transfer on one instance: if m avoids a then g_of(m) must
// avoid g_of(a). Requires connect_hypotheses(a) to hold (throws otherwise).
// Vacuously passes when m contains a.
bool verify_connect(const ZeroOneMatrix& m, const ZeroOneMatrix& a);

}  // namespace ordex

#endif
