// Bipartite incidence graph of a family (orders vs symbols) and extraction
// of an almost-regular subgraph by multi-scale degree peeling.
#ifndef ORDEX_REGULARIZE_HPP
#define ORDEX_REGULARIZE_HPP

#include <vector>

#include "ordex/orders.hpp"
#include "ordex/rational.hpp"

namespace ordex {

struct BipartiteIncidence {
    int num_left = 0;                          // order indices
    Symbol num_right = 0;                      // symbol ids
    std::vector<std::vector<Symbol>> adj;      // per order, sorted symbol list

    long long num_edges() const;
    bool has_edge(int left, Symbol right) const;
    bool is_subgraph_of(const BipartiteIncidence& g) const;
};

struct RegularityReport {
    long long delta = 0;            // min degree on the reported subgraph
    long long Delta = 0;            // max degree
    Rational k_achieved{0, 1};      // Delta / delta (0 when empty)
    long long retained_edges = 0;
    Rational retained_fraction{0, 1};
    bool target_met = false;        // Delta <= k_target * delta and nonempty
};

BipartiteIncidence build_incidence(const OrderFamily& f);

// Multi-scale peeling: for each scale d = Delta, Delta/2, ..., 1, drop
// vertices of degree > d, then repeatedly drop vertices of degree < d/k,
// and keep the candidate with the most edges (ties toward smaller Delta).
// Falls back to a single edge when every scale peels to empty, so the
// result is nonempty whenever the input has an edge. The Delta <= k*delta
// invariant always holds on the output; no edge-retention guarantee is
// claimed. Throws if k_target < 1.
std::pair<BipartiteIncidence, RegularityReport>
extract_almost_regular(const BipartiteIncidence& g, const Rational& k_target);

struct RestrictedFamily {
    OrderFamily family;
    std::vector<int> order_map;      // new order index -> original order index
    std::vector<Symbol> symbol_map;  // new symbol id -> original symbol id
};

// Keeps, in order i, the subsequence of symbols adjacent to i in sub.
// Orders that become empty are dropped and the universe is re-indexed
// densely. Throws if sub is not a subgraph of build_incidence(f).
RestrictedFamily restrict_family(const OrderFamily& f, const BipartiteIncidence& sub);

}  // namespace ordex

#endif
