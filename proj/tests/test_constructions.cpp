#include <doctest.h>

#include "ordex/audit.hpp"
#include "ordex/constructions.hpp"

using namespace ordex;

TEST_CASE("polarity graph vertex counts and degrees") {
    const PolarityGraph g2 = polarity_graph(2);
    CHECK(g2.num_vertices == 7);   // Fano plane

    const PolarityGraph g7 = polarity_graph(7);
    CHECK(g7.num_vertices == 57);
    int min_deg = 1 << 30, max_deg = 0, absolute = 0;
    for (const auto& nbrs : g7.adj) {
        min_deg = std::min(min_deg, static_cast<int>(nbrs.size()));
        max_deg = std::max(max_deg, static_cast<int>(nbrs.size()));
        if (static_cast<int>(nbrs.size()) == 7) ++absolute;
    }
    CHECK(min_deg == 7);
    CHECK(max_deg == 8);
    CHECK(absolute == 8);   // q+1 absolute points of degree q

    CHECK_THROWS_AS(polarity_graph(6), std::invalid_argument);
    CHECK_THROWS_AS(polarity_graph(37), std::invalid_argument);
}

TEST_CASE("polarity graphs are C4-free") {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        const PolarityGraph g = polarity_graph(q);
        CHECK(g.num_vertices == q * q + q + 1);
        CHECK(is_c4_free(g.adj));
    }
}

TEST_CASE("family_from_c4_free on a star") {
    // star K_{1,4}: center 0
    std::vector<std::vector<int>> adj{{1, 2, 3, 4}, {0}, {0}, {0}, {0}};
    const OrderFamily f = family_from_c4_free(adj, 3);
    CHECK(f.num_orders() == 5);
    CHECK(f.orders[0].size() == 4);
    CHECK(total_weight(f) == 8);
    CHECK(family_validate(f).empty());
}

TEST_CASE("family_from_c4_free rejects C4") {
    std::vector<std::vector<int>> c4{{1, 3}, {0, 2}, {1, 3}, {0, 2}};
    CHECK_THROWS_AS(family_from_c4_free(c4, 1), std::invalid_argument);
}

TEST_CASE("polarity families: weight, validity, pairwise int-rev") {
    for (int q : {5, 7, 11}) {
        const PolarityGraph g = polarity_graph(q);
        const OrderFamily f = family_from_polarity(q, 11);
        CHECK(total_weight(f) == 2 * g.num_edges());
        CHECK(family_validate(f).empty());
        if (q <= 11) {
            int max_common = 0;
            for (int i = 0; i < f.num_orders(); ++i)
                for (int j = i + 1; j < f.num_orders(); ++j) {
                    int common = 0;
                    for (Symbol a : f.orders[i].seq)
                        if (f.orders[j].contains(a)) ++common;
                    max_common = std::max(max_common, common);
                    CHECK(is_intersection_reverse(f.orders[i], f.orders[j]).intersection_reverse);
                }
            CHECK(max_common <= 1);
        }
    }
}

TEST_CASE("polarity ratio stays in the band") {
    for (int q : {5, 7, 11, 13}) {
        const OrderFamily f = family_from_polarity(q, 1);
        CHECK(ratio_within(f, 9, 10, 11, 10));
    }
}

TEST_CASE("random_valid_family determinism and validity") {
    FamilySeedSpec s;
    s.n = 9;
    s.universe = 12;
    s.min_len = 0;
    s.max_len = 8;
    s.seed = 20260809;

    const OrderFamily f1 = random_valid_family(s);
    const OrderFamily f2 = random_valid_family(s);
    REQUIRE(f1.num_orders() == f2.num_orders());
    for (int i = 0; i < f1.num_orders(); ++i) CHECK(f1.orders[i].seq == f2.orders[i].seq);
    CHECK(family_validate(f1).empty());
    CHECK(f1.check_well_formed());

    FamilySeedSpec one;
    one.n = 1;
    one.universe = 5;
    one.max_len = 5;
    one.seed = 4;
    CHECK(family_validate(random_valid_family(one)).empty());
}

TEST_CASE("random families cover the repair path") {
    int repaired = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        FamilySeedSpec s;
        s.n = 10;
        s.universe = 8;
        s.min_len = 4;
        s.max_len = 8;
        s.seed = seed;
        const OrderFamily f = random_valid_family(s);
        CHECK(family_validate(f).empty());
        // dense specs essentially always need repair; count shrunken orders
        for (const auto& o : f.orders)
            if (static_cast<int>(o.size()) < s.min_len) ++repaired;
    }
    CHECK(repaired > 0);
}
