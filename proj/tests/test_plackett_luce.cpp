#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>

#include "porank/plackett_luce.hpp"
#include "support/oracles.hpp"

using namespace porank;

TEST_CASE("model normalizes and validates weights") {
    const PLModel model({2.0, 1.0, 1.0});
    CHECK(model.weights[0] == doctest::Approx(0.5));
    CHECK(model.weights[1] == doctest::Approx(0.25));
    CHECK_THROWS_AS(PLModel({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PLModel({1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(PLModel({}), std::invalid_argument);
}

TEST_CASE("log pdf") {
    SUBCASE("uniform weights give the uniform distribution") {
        const PLModel model({1.0, 1.0, 1.0});
        for (const Ranking& pi : enumerate_rankings(3)) {
            CHECK(pl_log_pdf(model, pi) == doctest::Approx(std::log(1.0 / 6)).epsilon(1e-12));
        }
    }
    SUBCASE("M=2 single factor") {
        const PLModel model({2.0, 1.0});
        CHECK(pl_log_pdf(model, Ranking({0, 1})) == doctest::Approx(std::log(2.0 / 3)).epsilon(1e-12));
    }
    SUBCASE("M=3 stagewise product (2/4)(1/2)(1)") {
        const PLModel model({2.0, 1.0, 1.0});
        CHECK(pl_log_pdf(model, Ranking({0, 1, 2})) ==
              doctest::Approx(std::log(0.25)).epsilon(1e-12));
    }
    SUBCASE("sums to one across random weights") {
        Rng rng(53);
        for (int trial = 0; trial < 30; ++trial) {
            const int m = 2 + static_cast<int>(rng.below(5));
            std::vector<double> w(m);
            for (double& x : w) x = std::exp(rng.normal());
            const PLModel model(w);
            double total = 0.0;
            for_each_ranking(m, [&](const Ranking& pi) { total += std::exp(pl_log_pdf(model, pi)); });
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(pl_log_pdf(PLModel({1.0, 1.0}), Ranking({0, 1, 2})), std::invalid_argument);
    }
}

TEST_CASE("pairwise marginal is the Bradley-Terry ratio and matches enumeration") {
    const PLModel model({2.0, 1.0, 1.0});
    CHECK(pairwise_marginal(model, 0, 1) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(pairwise_marginal(model, 0, 1) ==
          doctest::Approx(testing::pl_marginal_by_enumeration(model, 0, 1)).epsilon(1e-10));

    Rng rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(5));
        std::vector<double> w(m);
        for (double& x : w) x = std::exp(rng.normal());
        const PLModel random_model(w);
        const int i = static_cast<int>(rng.below(m));
        int j = static_cast<int>(rng.below(m));
        while (j == i) j = static_cast<int>(rng.below(m));
        const double expected = testing::pl_marginal_by_enumeration(random_model, i, j);
        CHECK(std::abs(pairwise_marginal(random_model, i, j) - expected) < 1e-10);
    }
    CHECK_THROWS_AS(pairwise_marginal(model, 2, 2), std::invalid_argument);
}

TEST_CASE("preference relation from Bradley-Terry ratios") {
    const PLModel model({4.0, 2.0, 1.0});
    const ValuedPreferenceRelation p = build_preference_relation(model);
    CHECK(p.p(0, 1) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(p.p(0, 2) == doctest::Approx(4.0 / 5).epsilon(1e-12));
    CHECK(p.p(1, 2) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(p.is_reciprocal());
}

TEST_CASE("vase-model sampler") {
    SUBCASE("deterministic given the seed") {
        const PLModel model({3.0, 2.0, 1.0});
        CHECK(sample_pl(model, 40, 5) == sample_pl(model, 40, 5));
        CHECK(sample_pl(model, 40, 6) != sample_pl(model, 40, 5));
    }
    SUBCASE("uniform weights, uniform frequencies") {
        const PLModel model({1.0, 1.0, 1.0});
        const auto samples = sample_pl(model, 60000, 61);
        std::map<std::vector<int>, int> counts;
        for (const Ranking& r : samples) counts[r.order()]++;
        CHECK(counts.size() == 6);
        for (const auto& [order, count] : counts) {
            CHECK(std::abs(count / 60000.0 - 1.0 / 6) < 0.01);
        }
    }
    SUBCASE("first position frequency is v1 over the total") {
        const PLModel model({9.0, 0.5, 0.5});
        const auto samples = sample_pl(model, 20000, 67);
        int first = 0;
        for (const Ranking& r : samples) first += (r.label_at(0) == 0);
        CHECK(first / 20000.0 == doctest::Approx(0.9).epsilon(0.02));
    }
    SUBCASE("chi-square goodness of fit, M=4, n=50000") {
        const PLModel model({0.5, 0.2, 0.2, 0.1});
        const auto samples = sample_pl(model, 50000, 71);
        std::map<std::vector<int>, int> counts;
        for (const Ranking& r : samples) counts[r.order()]++;
        double statistic = 0.0;
        for_each_ranking(4, [&](const Ranking& pi) {
            const double expected = 50000.0 * std::exp(pl_log_pdf(model, pi));
            const auto it = counts.find(pi.order());
            const double observed = it == counts.end() ? 0.0 : it->second;
            statistic += (observed - expected) * (observed - expected) / expected;
        });
        CHECK(testing::chi_square_tail(statistic, 23) > 0.001);
    }
}

TEST_CASE("MM iteration never decreases the log-likelihood") {
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 3 + static_cast<int>(rng.below(3));
        std::vector<double> truth(m);
        for (double& x : truth) x = std::exp(rng.normal());
        const auto data = sample_pl(PLModel(truth), 200, rng.next_bits());

        std::vector<double> weights(m, 1.0 / m);
        const auto log_likelihood = [&](const std::vector<double>& w) {
            const PLModel model(w);
            double total = 0.0;
            for (const Ranking& r : data) total += pl_log_pdf(model, r);
            return total;
        };
        double previous = log_likelihood(weights);
        for (int it = 0; it < 50; ++it) {
            weights = pl_mm_step(weights, data);
            const double current = log_likelihood(weights);
            CHECK(current >= previous - 1e-10);
            previous = current;
        }
    }
}

TEST_CASE("fit_pl") {
    SUBCASE("symmetric input recovers uniform weights") {
        const auto [model, report] = fit_pl(enumerate_rankings(3));
        for (const double w : model.weights) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-6));
        CHECK(report.converged);
        CHECK_FALSE(report.boundary_hit);
    }
    SUBCASE("recovers seeded weights within 10 percent") {
        const PLModel truth({2.0, 1.0, 1.0});
        const auto data = sample_pl(truth, 5000, 79);
        const auto [model, report] = fit_pl(data);
        for (int label = 0; label < 3; ++label) {
            CHECK(std::abs(model.weights[label] - truth.weights[label]) / truth.weights[label] < 0.10);
        }
        CHECK(report.converged);
    }
    SUBCASE("degenerate input hits the positivity floor") {
        const Ranking r({1, 0, 2});
        const auto [model, report] = fit_pl(std::vector<Ranking>(100, r));
        CHECK(report.boundary_hit);
        // weights decrease along the observed ranking
        CHECK(model.weights[1] > model.weights[0]);
        CHECK(model.weights[0] > model.weights[2]);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(fit_pl({}), std::invalid_argument);
        CHECK_THROWS_AS(fit_pl({Ranking({0, 1}), Ranking({0, 1, 2})}), std::invalid_argument);
    }
}
