// Linear and cyclic orders on symbol subsets, and the pairwise primitives
// used throughout the toolkit: the f-functions, half-splitting,
// intersection-reverse testing, common-triple detection, and the
// dual-Dilworth two-chain decomposition.
#ifndef ORDEX_ORDERS_HPP
#define ORDEX_ORDERS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordex {

using Symbol = std::int32_t;

// A linear order on a subset of the symbol universe, stored as a
// non-repeating sequence. Distinctness is the caller's invariant;
// check_distinct verifies it.
struct LinearOrder {
    std::vector<Symbol> seq;

    LinearOrder() = default;
    explicit LinearOrder(std::vector<Symbol> s) : seq(std::move(s)) {}

    std::size_t size() const { return seq.size(); }
    bool empty() const { return seq.empty(); }
    bool check_distinct() const;
    // Position of a in the sequence, or -1 if absent. Linear scan; callers
    // on hot paths build their own index.
    int position(Symbol a) const;
    bool contains(Symbol a) const { return position(a) >= 0; }
};

// A cyclic order stored in its canonical rotation (the lexicographically
// minimal one; for distinct entries this starts at the minimum symbol).
struct CyclicOrder {
    std::vector<Symbol> seq;

    static CyclicOrder from_sequence(std::vector<Symbol> s);
    std::size_t size() const { return seq.size(); }
    bool is_canonical() const;
};

struct OrderFamily {
    Symbol universe_size = 0;                 // n'
    std::vector<LinearOrder> orders;          // n of them

    int num_orders() const { return static_cast<int>(orders.size()); }
    // Every entry distinct within its order and within [0, universe_size).
    bool check_well_formed() const;
};

struct CyclicFamily {
    Symbol universe_size = 0;
    std::vector<CyclicOrder> orders;
};

struct HalfSplit {
    LinearOrder first;    // leading ceil(L/2) entries
    LinearOrder second;   // trailing floor(L/2) entries
};

// Witness that symbols a,b,c appear in the same relative order in
// orders i and j.
struct TripleWitness {
    int i = 0, j = 0;
    Symbol a = 0, b = 0, c = 0;
};

// Partition of the common symbols of two orders into two sets, each
// pairwise reversed between the orders.
struct TwoChainDecomposition {
    std::vector<Symbol> t1;   // minimal elements of the agreement poset
    std::vector<Symbol> t2;   // the rest
};

struct IntRevResult {
    bool intersection_reverse = true;
    // A common pair appearing in the same order in both (set iff not int-rev).
    std::optional<std::pair<Symbol, Symbol>> witness;
};

// f(B,a,b): 0 if either symbol absent, +1 if a precedes b, -1 if b precedes a.
// Throws std::invalid_argument if a == b.
int f_single(const LinearOrder& order, Symbol a, Symbol b);

// f(B,B',a,b) = f(B,a,b) * f(B',a,b).
int f_pair(const LinearOrder& b1, const LinearOrder& b2, Symbol a, Symbol b);

// Leading ceil(L/2) entries and trailing floor(L/2) entries.
HalfSplit split(const LinearOrder& order);

// True iff every pair of distinct common symbols appears in reverse order
// in the two sequences (vacuously true on intersections of size < 2).
IntRevResult is_intersection_reverse(const LinearOrder& b1, const LinearOrder& b2);

// Some triple of common symbols appearing in the same relative order in
// both, or nullopt. Length-3 increasing-subsequence detection on the
// position sequence, O(m log m) in the common size m.
std::optional<std::array<Symbol, 3>> common_triple_same_order(const LinearOrder& b1,
                                                              const LinearOrder& b2);

// One TripleWitness per violating unordered pair {i, j}; empty iff valid.
// threads > 1 shards the pair scan; output is identical regardless.
std::vector<TripleWitness> family_validate(const OrderFamily& f, int threads = 1);

// Requires common_triple_same_order(b1,b2) == nullopt (throws otherwise).
// Builds the poset on common symbols with x < y iff the pair appears in the
// same order in both; its height is at most 2, so minimal elements and the
// rest are both antichains, i.e. fully reversed pairs.
TwoChainDecomposition two_chain_decomposition(const LinearOrder& b1, const LinearOrder& b2);

// Rotation of c beginning at start. Throws if start is absent.
LinearOrder linearize(const CyclicOrder& c, Symbol start);

// Linearizes every order at its canonical (minimum-symbol) start.
OrderFamily cyclic_family_to_linear(const CyclicFamily& f);

long long total_weight(const OrderFamily& f);

// Sum-of-lengths vs n^{3/2}, kept exact: the comparison squares both sides
// so it never leaves the integers. n is the number of orders.
struct RatioReport {
    long long total = 0;        // sum |A^i|
    long long n = 0;            // number of orders
    long long total_sq = 0;     // total^2
    long long n_cubed = 0;      // n^3
    double display = 0.0;       // total / n^{3/2}, display only
};
RatioReport ratio(const OrderFamily& f);

// Exact test  lo * n^{3/2} <= total <= hi * n^{3/2}  with lo = lo_num/lo_den,
// hi = hi_num/hi_den, evaluated as lo_num^2 * n^3 <= lo_den^2 * total^2  etc.
bool ratio_within(const OrderFamily& f, long long lo_num, long long lo_den,
                  long long hi_num, long long hi_den);

}  // namespace ordex

#endif
