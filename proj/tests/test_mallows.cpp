#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>

#include "porank/mallows.hpp"
#include "support/oracles.hpp"

using namespace porank;

TEST_CASE("log normalizer closed form") {
    CHECK(mallows_log_normalizer(0.0, 3) == doctest::Approx(std::log(6.0)).epsilon(1e-12));
    // two-ranking enumeration at theta = ln 2: 1 + e^{-theta} = 1.5
    CHECK(mallows_log_normalizer(std::log(2.0), 2) == doctest::Approx(std::log(1.5)).epsilon(1e-12));
    CHECK(mallows_log_normalizer(3.7, 1) == 0.0);
    CHECK(mallows_log_normalizer(0.0, 1) == 0.0);

    SUBCASE("matches direct enumeration") {
        for (const double theta : {1e-12, 1e-6, 0.05, 0.5, 2.0, 10.0}) {
            for (int m = 2; m <= 6; ++m) {
                const Ranking ident = Ranking::identity(m);
                double sum = 0.0;
                for_each_ranking(m, [&](const Ranking& pi) {
                    sum += std::exp(-theta * kendall_distance(pi, ident));
                });
                CHECK(mallows_log_normalizer(theta, m) ==
                      doctest::Approx(std::log(sum)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("log pdf values") {
    const Ranking center({0, 1, 2});
    SUBCASE("theta = 0 is uniform") {
        const MallowsModel uniform(center, 0.0);
        for (const Ranking& pi : enumerate_rankings(3)) {
            CHECK(mallows_log_pdf(uniform, pi) == doctest::Approx(std::log(1.0 / 6)).epsilon(1e-12));
        }
    }
    SUBCASE("center has the maximum probability -ln phi") {
        const MallowsModel model(center, 1.3);
        CHECK(mallows_log_pdf(model, center) ==
              doctest::Approx(-mallows_log_normalizer(1.3, 3)).epsilon(1e-12));
    }
    SUBCASE("M=2 two-ranking enumeration at theta = ln 2") {
        const MallowsModel model(Ranking({0, 1}), std::log(2.0));
        CHECK(mallows_log_pdf(model, Ranking({0, 1})) ==
              doctest::Approx(std::log(2.0 / 3)).epsilon(1e-12));
        CHECK(mallows_log_pdf(model, Ranking({1, 0})) ==
              doctest::Approx(std::log(1.0 / 3)).epsilon(1e-12));
    }
    SUBCASE("dimension mismatch") {
        const MallowsModel model(center, 1.0);
        CHECK_THROWS_AS(mallows_log_pdf(model, Ranking({0, 1})), std::invalid_argument);
    }
}

TEST_CASE("pdf sums to one over the symmetric group") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(5));
        const MallowsModel model(Ranking::random(m, rng), 10.0 * rng.uniform01());
        double total = 0.0;
        for_each_ranking(m, [&](const Ranking& pi) { total += std::exp(mallows_log_pdf(model, pi)); });
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pairwise marginals") {
    SUBCASE("uniform model gives exactly one half") {
        const MallowsModel uniform(Ranking({0, 1, 2, 3}), 0.0);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (i != j) CHECK(pairwise_marginal(uniform, i, j) == 0.5);
            }
        }
    }
    SUBCASE("peaked model approaches the one-point distribution") {
        const MallowsModel model(Ranking({0, 1, 2}), 5.0);
        CHECK(pairwise_marginal(model, 0, 1) > 0.99);
        CHECK(pairwise_marginal(model, 0, 1) ==
              doctest::Approx(testing::mallows_marginal_by_enumeration(model, 0, 1))
                  .epsilon(1e-12));
    }
    SUBCASE("gap cache agrees with naive enumeration across random draws") {
        Rng rng(37);
        for (int trial = 0; trial < 40; ++trial) {
            const int m = 2 + static_cast<int>(rng.below(5));
            const MallowsModel model(Ranking::random(m, rng), 8.0 * rng.uniform01());
            const int i = static_cast<int>(rng.below(m));
            int j = static_cast<int>(rng.below(m));
            while (j == i) j = static_cast<int>(rng.below(m));
            const double expected = testing::mallows_marginal_by_enumeration(model, i, j);
            CHECK(std::abs(pairwise_marginal(model, i, j) - expected) < 1e-12);
        }
    }
    SUBCASE("marginal sides with the center, strictly for positive theta") {
        Rng rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            const int m = 3 + static_cast<int>(rng.below(4));
            const MallowsModel model(Ranking::random(m, rng), 0.1 + 5.0 * rng.uniform01());
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    const double marginal = pairwise_marginal(model, i, j);
                    if (model.center.prefers(i, j)) {
                        CHECK(marginal > 0.5);
                    } else {
                        CHECK(marginal < 0.5);
                    }
                }
            }
        }
    }
    SUBCASE("marginal is non-decreasing in the positional gap") {
        for (const double theta : {0.2, 1.0, 4.0}) {
            for (int m = 3; m <= 6; ++m) {
                const auto gaps = mallows_gap_marginals(theta, m);
                for (std::size_t g = 1; g < gaps.size(); ++g) CHECK(gaps[g] >= gaps[g - 1]);
            }
        }
    }
    SUBCASE("closed-form gap marginal cross-check") {
        // independent identity: P(gap g) = h(g+1) - h(g), h(k) = k / (1 - e^{-k theta})
        for (const double theta : {0.3, 1.0, 2.5}) {
            const auto gaps = mallows_gap_marginals(theta, 6);
            const auto h = [&](double k) { return k / -std::expm1(-k * theta); };
            for (std::size_t g = 1; g <= gaps.size(); ++g) {
                CHECK(gaps[g - 1] == doctest::Approx(h(g + 1.0) - h(g)).epsilon(1e-12));
            }
        }
    }
    SUBCASE("errors") {
        const MallowsModel model(Ranking({0, 1, 2}), 1.0);
        CHECK_THROWS_AS(pairwise_marginal(model, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("build_preference_relation is reciprocal and matches the marginals") {
    const MallowsModel model(Ranking({2, 0, 1, 3}), 1.7);
    const ValuedPreferenceRelation p = build_preference_relation(model);
    CHECK(p.is_reciprocal(0.0));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) CHECK(p.p(i, j) == doctest::Approx(pairwise_marginal(model, i, j)).epsilon(1e-15));
        }
    }
}

TEST_CASE("sampler") {
    const Ranking center({1, 2, 0});
    SUBCASE("deterministic given the seed") {
        const MallowsModel model(center, 1.0);
        const auto a = sample_mallows(model, 50, 99);
        const auto b = sample_mallows(model, 50, 99);
        REQUIRE(a.size() == 50);
        CHECK(a == b);
        CHECK(sample_mallows(model, 50, 100) != a);
    }
    SUBCASE("uniform limit frequencies") {
        const MallowsModel model(center, 0.0);
        const auto samples = sample_mallows(model, 60000, 7);
        std::map<std::vector<int>, int> counts;
        for (const Ranking& r : samples) counts[r.order()]++;
        for (const auto& [order, count] : counts) {
            CHECK(std::abs(count / 60000.0 - 1.0 / 6) < 0.01);
        }
        CHECK(counts.size() == 6);
    }
    SUBCASE("one-point limit") {
        const MallowsModel model(center, 10.0);
        const auto samples = sample_mallows(model, 4000, 17);
        int at_mode = 0;
        for (const Ranking& r : samples) at_mode += (r == center);
        CHECK(at_mode > 0.99 * 4000);
    }
    SUBCASE("chi-square goodness of fit, M=4, n=50000") {
        const MallowsModel model(Ranking({2, 0, 3, 1}), 0.8);
        const auto samples = sample_mallows(model, 50000, 23);
        std::map<std::vector<int>, int> counts;
        for (const Ranking& r : samples) counts[r.order()]++;
        double statistic = 0.0;
        for_each_ranking(4, [&](const Ranking& pi) {
            const double expected = 50000.0 * std::exp(mallows_log_pdf(model, pi));
            const auto it = counts.find(pi.order());
            const double observed = it == counts.end() ? 0.0 : it->second;
            statistic += (observed - expected) * (observed - expected) / expected;
        });
        CHECK(testing::chi_square_tail(statistic, 23) > 0.001);
    }
}

TEST_CASE("expected distance matches enumeration") {
    for (const double theta : {0.0, 0.3, 1.0, 5.0}) {
        for (int m = 2; m <= 5; ++m) {
            const Ranking ident = Ranking::identity(m);
            double weighted = 0.0, total = 0.0;
            for_each_ranking(m, [&](const Ranking& pi) {
                const double w = std::exp(-theta * kendall_distance(pi, ident));
                weighted += w * kendall_distance(pi, ident);
                total += w;
            });
            CHECK(mallows_expected_distance(theta, m) ==
                  doctest::Approx(weighted / total).epsilon(1e-10));
        }
    }
}

TEST_CASE("borda ranking breaks ties toward the smaller label") {
    // both labels 0 and 2 have mean position 1
    const Ranking a({0, 1, 2});
    const Ranking b({2, 1, 0});
    CHECK(borda_ranking({a, b}) == Ranking({0, 2, 1}));
}

TEST_CASE("fit_mallows") {
    SUBCASE("identical rankings cap theta") {
        const Ranking r({3, 1, 0, 2});
        const auto [model, report] = fit_mallows(std::vector<Ranking>(40, r));
        CHECK(model.center == r);
        CHECK(model.theta == kThetaMax);
        CHECK(report.boundary_hit);
    }
    SUBCASE("uniform rankings give theta near zero") {
        Rng rng(43);
        std::vector<Ranking> data;
        for (int i = 0; i < 5000; ++i) data.push_back(Ranking::random(5, rng));
        const auto [model, report] = fit_mallows(data);
        CHECK(model.theta < 0.05);
        CHECK_FALSE(report.boundary_hit);
    }
    SUBCASE("recovers a seeded model") {
        const Ranking center({4, 0, 2, 1, 3});
        const auto samples = sample_mallows(MallowsModel(center, 1.0), 5000, 47);
        const auto [model, report] = fit_mallows(samples);
        CHECK(model.center == center);
        CHECK(std::abs(model.theta - 1.0) < 0.15);
        CHECK(report.converged);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(fit_mallows({}), std::invalid_argument);
        CHECK_THROWS_AS(fit_mallows({Ranking({0, 1}), Ranking({0, 1, 2})}), std::invalid_argument);
    }
}

TEST_CASE("model construction validates theta") {
    CHECK_THROWS_AS(MallowsModel(Ranking({0, 1}), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(MallowsModel(Ranking({0, 1}), kThetaMax + 1.0), std::invalid_argument);
}
