#include <catch2/catch_amalgamated.hpp>

#include "turan/formulas.hpp"

using namespace turan;

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(1000000, 2) == 499999500000ull);
    CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("ex_linear_forest") {
    auto a = ex_linear_forest(6, 5);
    CHECK(a.value == 10);
    CHECK(a.attained_by == Branch::clique);

    auto b = ex_linear_forest(10, 5);
    CHECK(b.value == 17);
    CHECK(b.attained_by == Branch::join);

    auto c = ex_linear_forest(6, 4);
    CHECK(c.value == 6);
    CHECK(c.attained_by == Branch::tie);

    CHECK(ex_linear_forest(5, 4).value == 6);  // k = n-1: C(n-1,2)

    CHECK_THROWS_AS(ex_linear_forest(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(ex_linear_forest(5, 5), std::invalid_argument);
}

TEST_CASE("ex_matching") {
    CHECK(ex_matching(7, 0).value == 0);
    CHECK(ex_matching(10, 2).value == 17);
    auto k5 = ex_matching(5, 2);
    CHECK(k5.value == 10);  // 2k+1 = n: K_5 itself
    CHECK(ex_matching(7, 1).value == 6);
    CHECK_THROWS_AS(ex_matching(0, 1), std::invalid_argument);
}

TEST_CASE("ex_ham_path") {
    CHECK(ex_ham_path(5) == 6);
    CHECK(ex_ham_path(2) == 0);
    for (std::uint64_t n = 2; n <= 100; ++n)
        CHECK(ex_ham_path(n) == ex_linear_forest(n, n - 1).value);
    CHECK_THROWS_AS(ex_ham_path(1), std::invalid_argument);
}

TEST_CASE("matching reduction identity") {
    // ex(n; L_{n,2k+1}) = ex(n; M_{k+1})
    for (std::uint64_t n = 3; n <= 200; ++n)
        for (std::uint64_t k = 1; 2 * k + 1 <= n - 1; ++k)
            CHECK(ex_linear_forest(n, 2 * k + 1).value == ex_matching(n, k).value);
}

TEST_CASE("monotonicity in n and k") {
    for (std::uint64_t n = 3; n <= 60; ++n)
        for (std::uint64_t k = 1; k <= n - 1; ++k) {
            CHECK(ex_linear_forest(n + 1, k).value >= ex_linear_forest(n, k).value);
            if (k + 1 <= n - 1)
                CHECK(ex_linear_forest(n, k + 1).value >= ex_linear_forest(n, k).value);
        }
}

TEST_CASE("eventual crossover to the join branch") {
    for (std::uint64_t k = 3; k <= 30; ++k) {
        bool crossed = false;
        for (std::uint64_t n = k + 1; n <= 2000 && !crossed; ++n)
            if (ex_linear_forest(n, k).attained_by == Branch::join) crossed = true;
        CHECK(crossed);
    }
}

TEST_CASE("ex_conjecture_r") {
    auto t = ex_conjecture_r(6, 4, 3);
    CHECK(t.value == 10);
    CHECK(t.attained_by == Branch::tie);

    // r = 2 reduces to the odd-k linear forest formula
    for (std::uint64_t m = 1; m <= 10; ++m) {
        std::uint64_t k = 2 * m + 1;
        for (std::uint64_t n = k + 1; n <= 50; ++n)
            CHECK(ex_conjecture_r(n, k, 2).value == ex_linear_forest(n, k).value);
    }

    // r = 1 is trivial: both arms equal k-1
    for (std::uint64_t m = 1; m <= 8; ++m) {
        auto r1 = ex_conjecture_r(20, m + 1, 1);
        CHECK(r1.value == m);
        CHECK(r1.attained_by == Branch::tie);
    }

    CHECK_THROWS_AS(ex_conjecture_r(10, 5, 3), std::invalid_argument);  // k not 1 mod r
    CHECK_THROWS_AS(ex_conjecture_r(10, 1, 3), std::invalid_argument);  // m = 0
    CHECK_THROWS_AS(ex_conjecture_r(4, 4, 3), std::invalid_argument);   // n < k+r-2
}
