#include <catch2/catch_amalgamated.hpp>

#include "turan/constructions.hpp"
#include "turan/formulas.hpp"
#include "turan/solver.hpp"

using namespace turan;

TEST_CASE("extremal_lnk fig.1 instances") {
    Graph a = extremal_lnk(6, 5, Variant::clique);
    CHECK(a.edge_count() == 10);
    CHECK(max_linear_forest(a).value == 4);

    Graph b = extremal_lnk(6, 5, Variant::join);
    CHECK(b == join(Graph::complete(2), Graph::empty(4)));
    CHECK(b.edge_count() == 9);
    CHECK(max_linear_forest(b).value == 4);

    Graph c = extremal_lnk(6, 4, Variant::join);
    CHECK(c.edge_count() == 6);
    CHECK(max_linear_forest(c).value == 3);

    CHECK_THROWS_AS(extremal_lnk(6, 0, Variant::join), std::invalid_argument);
    CHECK_THROWS_AS(extremal_lnk(6, 6, Variant::clique), std::invalid_argument);
}

TEST_CASE("extremal_matching instances") {
    Graph j = extremal_matching(10, 2, Variant::join);
    CHECK(j.edge_count() == 17);
    CHECK(max_matching(j).value == 2);

    CHECK(extremal_matching(5, 2, Variant::clique) == Graph::complete(5));
    CHECK(extremal_matching(7, 3, Variant::clique) == Graph::complete(7));
    CHECK_THROWS_AS(extremal_matching(6, 3, Variant::clique), std::invalid_argument);
}

TEST_CASE("edge-count identities hold symbolically") {
    for (int n = 2; n <= 300; ++n) {
        for (int k = 1; k <= n - 1 && k <= 40; ++k) {
            std::uint64_t un = static_cast<std::uint64_t>(n), uk = static_cast<std::uint64_t>(k);
            std::uint64_t clique_e = binomial(uk, 2);
            std::uint64_t half = (uk - 1) / 2;
            std::uint64_t join_e = binomial(un, 2) - binomial(un - half, 2) + (k % 2 == 1 ? 0 : 1);
            if (n <= 64) {
                CHECK(static_cast<std::uint64_t>(extremal_lnk(n, k, Variant::clique).edge_count()) == clique_e);
                CHECK(static_cast<std::uint64_t>(extremal_lnk(n, k, Variant::join).edge_count()) == join_e);
            }
            CHECK(ex_linear_forest(un, uk).value == std::max(clique_e, join_e));
        }
    }
}

TEST_CASE("both variants are free and one attains the formula") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            Graph clique = extremal_lnk(n, k, Variant::clique);
            Graph joined = extremal_lnk(n, k, Variant::join);
            CHECK(is_lnk_free(clique, k));
            CHECK(is_lnk_free(joined, k));
            std::uint64_t best = std::max(clique.edge_count(), joined.edge_count());
            CHECK(best == ex_linear_forest(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)).value);
            // tightness: the join variant misses freeness by exactly one edge
            CHECK(max_linear_forest(joined).value == k - 1);
        }
    }
}

TEST_CASE("matching variants have nu exactly k") {
    for (int n = 3; n <= 12; ++n) {
        for (int k = 1; 2 * k + 1 <= n; ++k) {
            CHECK(max_matching(extremal_matching(n, k, Variant::clique)).value == k);
            CHECK(max_matching(extremal_matching(n, k, Variant::join)).value == k);
        }
    }
}

TEST_CASE("certify") {
    Certificate c1 = certify(join(Graph::complete(2), Graph::empty(4)), 5, Family::lnk);
    CHECK(c1.edge_count == 9);
    REQUIRE(c1.matched_branch_value.has_value());
    CHECK(*c1.matched_branch_value == 9);
    CHECK(c1.verdict == FreenessVerdict::exact_free);

    Certificate c2 = certify(Graph::complete(5), 3, Family::lnk);
    CHECK(c2.edge_count == 10);
    CHECK_FALSE(c2.matched_branch_value.has_value());
    CHECK(c2.verdict == FreenessVerdict::exact_not_free);

    // above the solver cap only the count identity is certified
    Certificate c3 = certify(extremal_lnk(40, 9, Variant::join), 9, Family::lnk);
    CHECK(c3.verdict == FreenessVerdict::structural_only);
    REQUIRE(c3.matched_branch_value.has_value());
    CHECK(*c3.matched_branch_value == static_cast<std::uint64_t>(c3.edge_count));
}
