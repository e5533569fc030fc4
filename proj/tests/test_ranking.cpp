#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

#include "porank/ranking.hpp"

using namespace porank;

TEST_CASE("ranking construction validates the permutation") {
    CHECK_THROWS_AS(Ranking({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Ranking({0, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Ranking(std::vector<int>{}), std::invalid_argument);
    const Ranking r({2, 0, 1});
    CHECK(r.label_at(0) == 2);
    CHECK(r.position_of(2) == 0);
    CHECK(r.position_of(1) == 2);
    for (int pos = 0; pos < r.size(); ++pos) CHECK(r.position_of(r.label_at(pos)) == pos);
}

TEST_CASE("kendall distance on the spec'd cases") {
    CHECK(kendall_distance(Ranking({0, 1, 2}), Ranking({0, 1, 2})) == 0);
    CHECK(kendall_distance(Ranking({0, 1, 2}), Ranking({2, 1, 0})) == 3);
    CHECK(kendall_distance(Ranking({0, 1, 2}), Ranking({1, 0, 2})) == 1);
    CHECK_THROWS_AS(kendall_distance(Ranking({0, 1}), Ranking({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("kendall distance is a right-invariant metric") {
    Rng rng(7);
    for (int m = 2; m <= 7; ++m) {
        for (int trial = 0; trial < 50; ++trial) {
            const Ranking a = Ranking::random(m, rng);
            const Ranking b = Ranking::random(m, rng);
            const Ranking c = Ranking::random(m, rng);
            const int dab = kendall_distance(a, b);
            CHECK(dab == kendall_distance(b, a));
            CHECK((dab == 0) == (a == b));
            CHECK(dab <= kendall_distance(a, c) + kendall_distance(c, b));

            // composing both orders with a common permutation preserves the value
            std::vector<int> composed_a(m), composed_b(m);
            for (int pos = 0; pos < m; ++pos) {
                composed_a[pos] = a.label_at(c.label_at(pos));
                composed_b[pos] = b.label_at(c.label_at(pos));
            }
            CHECK(kendall_distance(Ranking(composed_a), Ranking(composed_b)) == dab);
        }
    }
}

TEST_CASE("enumerate_rankings yields M! distinct rankings") {
    CHECK(enumerate_rankings(1).size() == 1);
    CHECK(enumerate_rankings(3).size() == 6);
    CHECK(enumerate_rankings(4).size() == 24);
    for (int m = 1; m <= 7; ++m) {
        const auto all = enumerate_rankings(m);
        std::set<std::vector<int>> seen;
        for (const Ranking& r : all) seen.insert(r.order());
        std::size_t factorial = 1;
        for (int j = 2; j <= m; ++j) factorial *= j;
        CHECK(seen.size() == factorial);
        CHECK(all.size() == factorial);
    }
    CHECK_THROWS_AS(enumerate_rankings(kEnumerationCap + 1), std::invalid_argument);
}

TEST_CASE("transposition property holds for kendall and fails when negated") {
    const RankingDistance kendall = [](const Ranking& a, const Ranking& b) {
        return static_cast<double>(kendall_distance(a, b));
    };
    CHECK(check_transposition_property(kendall, 1000, 4, 11));
    for (int m = 3; m <= 6; ++m) CHECK(check_transposition_property(kendall, 1000, m, 13));

    SUBCASE("M=2 base case") {
        CHECK(check_transposition_property(kendall, 100, 2, 17));
    }

    const RankingDistance negated = [&](const Ranking& a, const Ranking& b) {
        return -static_cast<double>(kendall_distance(a, b));
    };
    CHECK_FALSE(check_transposition_property(negated, 1000, 4, 19));
}
