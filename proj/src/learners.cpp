#include "porank/learners.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "porank/rng.hpp"

namespace porank {

void LearnerConfig::validate() const {
    if (k < 1) throw std::invalid_argument("LearnerConfig: k must be >= 1");
    if (ensemble_size < 1) throw std::invalid_argument("LearnerConfig: ensemble_size must be >= 1");
}

namespace {

struct Standardizer {
    std::vector<double> mean;
    std::vector<double> scale;

    explicit Standardizer(const Dataset& train) {
        const int n = train.n(), d = train.d();
        mean.assign(d, 0.0);
        scale.assign(d, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < d; ++c) mean[c] += train.row(i)[c];
        }
        for (double& v : mean) v /= n;
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < d; ++c) {
                const double delta = train.row(i)[c] - mean[c];
                scale[c] += delta * delta;
            }
        }
        for (double& v : scale) {
            v = std::sqrt(v / n);
            if (v == 0.0) v = 1.0;  // constant feature: leave it centered at zero
        }
    }

    double distance_squared(const double* row, std::span<const double> x) const {
        double sum = 0.0;
        for (std::size_t c = 0; c < mean.size(); ++c) {
            const double delta = (row[c] - mean[c]) / scale[c] - (x[c] - mean[c]) / scale[c];
            sum += delta * delta;
        }
        return sum;
    }
};

} // namespace

std::vector<Ranking> knn_neighbors(const Dataset& train, std::span<const double> x, int k) {
    if (static_cast<int>(x.size()) != train.d()) {
        throw std::invalid_argument("knn_neighbors: feature dimension mismatch");
    }
    if (k < 1 || k > train.n()) {
        throw std::invalid_argument("knn_neighbors: k must lie in [1, N]");
    }
    const Standardizer standardizer(train);
    std::vector<std::pair<double, int>> by_distance(train.n());
    for (int i = 0; i < train.n(); ++i) {
        by_distance[i] = {standardizer.distance_squared(train.row(i), x), i};
    }
    // pair ordering breaks distance ties toward the smaller row index
    std::partial_sort(by_distance.begin(), by_distance.begin() + k, by_distance.end());
    std::vector<Ranking> neighbors;
    neighbors.reserve(k);
    for (int i = 0; i < k; ++i) neighbors.push_back(train.rankings[by_distance[i].second]);
    return neighbors;
}

FittedModel predict_model(const Dataset& train, std::span<const double> x,
                          const LearnerConfig& cfg) {
    cfg.validate();
    const std::vector<Ranking> neighbors = knn_neighbors(train, x, cfg.k);
    if (cfg.model_kind == ModelKind::mallows) return fit_mallows(neighbors).first;
    return fit_pl(neighbors).first;
}

ValuedPreferenceRelation build_preference_relation(const FittedModel& model) {
    return std::visit([](const auto& m) { return build_preference_relation(m); }, model);
}

ValuedPreferenceRelation ensemble_relation(const Dataset& train, std::span<const double> x,
                                           const LearnerConfig& cfg) {
    cfg.validate();
    if (cfg.k > train.n()) throw std::invalid_argument("ensemble_relation: k must be <= N");
    const int n = train.n(), d = train.d(), m = train.m();
    const int b = cfg.ensemble_size;

    std::vector<int> votes(static_cast<std::size_t>(m) * m, 0);
    Dataset member = train;
    for (int member_index = 0; member_index < b; ++member_index) {
        Rng rng(cfg.rng_seed + static_cast<std::uint64_t>(member_index));
        for (int i = 0; i < n; ++i) {
            const int source = static_cast<int>(rng.below(n));
            std::copy_n(train.row(source), d, member.features.begin() + static_cast<std::size_t>(i) * d);
            member.rankings[i] = train.rankings[source];
        }
        const Ranking prediction = borda_ranking(knn_neighbors(member, x, cfg.k));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i != j && prediction.prefers(i, j)) ++votes[static_cast<std::size_t>(i) * m + j];
            }
        }
    }

    ValuedPreferenceRelation relation(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            relation.set_pair(i, j, static_cast<double>(votes[static_cast<std::size_t>(i) * m + j]) / b);
        }
    }
    return relation;
}

} // namespace porank
