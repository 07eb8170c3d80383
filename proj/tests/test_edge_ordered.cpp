#include <doctest.h>

#include <random>

#include "ordex/edge_ordered.hpp"
#include "oracles.hpp"

using namespace ordex;

TEST_CASE("c4_1243 structure") {
    const EdgeOrderedGraph p = c4_1243();
    CHECK(p.num_vertices == 4);
    CHECK(p.num_edges() == 4);
    CHECK(p.check_well_formed());

    std::vector<int> deg(4, 0);
    for (const auto& [u, v] : p.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int d : deg) CHECK(d == 2);

    // first and last edges in the order are non-adjacent, as are the middle two
    auto disjoint = [](std::pair<int, int> a, std::pair<int, int> b) {
        return a.first != b.first && a.first != b.second && a.second != b.first &&
               a.second != b.second;
    };
    CHECK(disjoint(p.edges[0], p.edges[3]));
    CHECK(disjoint(p.edges[1], p.edges[2]));
}

TEST_CASE("contains basic cases") {
    const EdgeOrderedGraph p = c4_1243();
    const auto self = contains(p, p);
    REQUIRE(self.has_value());
    CHECK(validate_embedding(p, p, *self));

    const EdgeOrderedGraph triangle = make_edge_ordered(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(contains(triangle, p).has_value());
}

TEST_CASE("contains agrees with the exhaustive injection oracle") {
    std::mt19937_64 rng(300);
    const EdgeOrderedGraph c4 = c4_1243();
    for (int it = 0; it < 250; ++it) {
        const int n = 4 + static_cast<int>(rng() % 5);   // 4..8
        const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
        const EdgeOrderedGraph host = oracle::random_eograph(n, m, rng());

        const auto emb = contains(host, c4);
        CHECK(emb.has_value() == oracle::slow_eo_contains(host, c4));
        if (emb) CHECK(validate_embedding(host, c4, *emb));

        // also test a small random pattern against the same host
        const int pn = 3 + static_cast<int>(rng() % 2);
        const EdgeOrderedGraph pat = oracle::random_eograph(pn, 3, rng());
        const auto emb2 = contains(host, pat);
        CHECK(emb2.has_value() == oracle::slow_eo_contains(host, pat));
        if (emb2) CHECK(validate_embedding(host, pat, *emb2));
    }
}

TEST_CASE("containment is reflexive and transitive on samples") {
    std::mt19937_64 rng(17);
    std::vector<EdgeOrderedGraph> gs;
    for (int it = 0; it < 8; ++it)
        gs.push_back(oracle::random_eograph(5, 2 + static_cast<int>(rng() % 6), rng()));
    for (const auto& g : gs) CHECK(contains(g, g).has_value());
    for (const auto& a : gs)
        for (const auto& b : gs)
            for (const auto& c : gs) {
                if (contains(a, b) && contains(b, c)) CHECK(contains(a, c).has_value());
            }
}

TEST_CASE("edge_ordered_isomorphic basic cases") {
    const EdgeOrderedGraph p = c4_1243();
    CHECK(edge_ordered_isomorphic(p, p));

    // the monotone cycle ab<bc<cd<da is a different edge-ordered graph
    const EdgeOrderedGraph mono = make_edge_ordered(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(edge_ordered_isomorphic(p, mono));
    CHECK(edge_ordered_isomorphic(mono, mono));

    // relabeling vertices preserves isomorphism
    const EdgeOrderedGraph relabeled = make_edge_ordered(4, {{2, 3}, {3, 0}, {1, 2}, {0, 1}});
    CHECK(edge_ordered_isomorphic(p, relabeled));

    // same graph, different rank assignment: not isomorphic
    const EdgeOrderedGraph swapped = make_edge_ordered(4, {{1, 2}, {0, 1}, {3, 0}, {2, 3}});
    CHECK_FALSE(edge_ordered_isomorphic(p, swapped));
}

TEST_CASE("isomorphism respects vertex count") {
    const EdgeOrderedGraph a = make_edge_ordered(3, {{0, 1}});
    const EdgeOrderedGraph b = make_edge_ordered(2, {{0, 1}});
    CHECK_FALSE(edge_ordered_isomorphic(a, b));
}

TEST_CASE("find_c4_fast on a constructed positive instance") {
    // u = 0 and v = 1 share neighbors 2,3,4; all v-edges first (ranks 0,1,2)
    // then all u-edges (ranks 3,4,5): both neighbor orders are (2,3,4) and
    // every u-edge outranks the corresponding v-edge
    const EdgeOrderedGraph host =
        make_edge_ordered(5, {{1, 2}, {1, 3}, {1, 4}, {0, 2}, {0, 3}, {0, 4}});
    const auto emb = find_c4_fast(host);
    REQUIRE(emb.has_value());
    CHECK(validate_embedding(host, c4_1243(), *emb));
    CHECK(contains(host, c4_1243()).has_value());
}

TEST_CASE("find_c4_fast soundness and implication on random hosts") {
    std::mt19937_64 rng(500);
    int found = 0;
    for (int it = 0; it < 300; ++it) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
        const EdgeOrderedGraph host = oracle::random_eograph(n, m, rng());
        const auto emb = find_c4_fast(host);
        if (emb) {
            ++found;
            CHECK(validate_embedding(host, c4_1243(), *emb));
            CHECK(contains(host, c4_1243()).has_value());
        }
    }
    CHECK(found > 10);   // the reduction does fire on random dense hosts
}

TEST_CASE("find_c4_fast on the pattern itself is sound either way") {
    const auto emb = find_c4_fast(c4_1243());
    if (emb) CHECK(validate_embedding(c4_1243(), c4_1243(), *emb));
}

TEST_CASE("brute_force_ex_ordered snapshot values") {
    const EdgeOrderedGraph p = c4_1243();
    // values produced by this exhaustive search and independently verified
    // against the injection oracle on witness orderings
    CHECK(brute_force_ex_ordered(2, p) == 1);
    CHECK(brute_force_ex_ordered(3, p) == 3);
    CHECK(brute_force_ex_ordered(4, p) == 6);
    CHECK(brute_force_ex_ordered(5, p) == 10);
    CHECK_THROWS_AS(brute_force_ex_ordered(7, p), std::invalid_argument);
}

TEST_CASE("ex_ordered monotonicity and unordered lower bound") {
    const EdgeOrderedGraph p = c4_1243();
    int prev = 0;
    for (int n = 2; n <= 5; ++n) {
        const int v = brute_force_ex_ordered(n, p);
        CHECK(v >= prev);
        CHECK(v >= oracle::slow_unordered_ex(n, p));
        prev = v;
    }
    // unordered values are classical: ex(4,C4)=4, ex(5,C4)=6
    CHECK(oracle::slow_unordered_ex(4, p) == 4);
    CHECK(oracle::slow_unordered_ex(5, p) == 6);
}

TEST_CASE("neighbor orders are rank-sorted") {
    std::mt19937_64 rng(42);
    const EdgeOrderedGraph host = oracle::random_eograph(7, 12, rng());
    for (int u = 0; u < host.num_vertices; ++u) {
        const LinearOrder a = neighbor_order(host, u);
        for (std::size_t t = 0; t + 1 < a.seq.size(); ++t)
            CHECK(host.rank_of(u, a.seq[t]) < host.rank_of(u, a.seq[t + 1]));
    }
}
