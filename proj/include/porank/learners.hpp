#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "porank/dataset.hpp"
#include "porank/mallows.hpp"
#include "porank/plackett_luce.hpp"
#include "porank/relation.hpp"

namespace porank {

enum class ModelKind { mallows, pl };

struct LearnerConfig {
    int k = 20;
    ModelKind model_kind = ModelKind::mallows;
    int ensemble_size = 10;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

/// Rankings of the k training instances nearest to x, measured by Euclidean
/// distance on per-feature z-scores (statistics from the training set;
/// constant features contribute zero). Distance ties break toward the
/// smaller training-row index.
std::vector<Ranking> knn_neighbors(const Dataset& train, std::span<const double> x, int k);

using FittedModel = std::variant<MallowsModel, PLModel>;

/// Fits the configured model to the k nearest neighbors of x.
FittedModel predict_model(const Dataset& train, std::span<const double> x,
                          const LearnerConfig& cfg);

ValuedPreferenceRelation build_preference_relation(const FittedModel& model);

/// The ensemble baseline: cfg.ensemble_size k-NN Borda rankers, each trained
/// on a bootstrap resample (with replacement, size N, seed = rng_seed +
/// member index). p(i, j) is the fraction of members ranking i before j, so
/// every entry is a multiple of 1/ensemble_size and reciprocity is exact.
ValuedPreferenceRelation ensemble_relation(const Dataset& train, std::span<const double> x,
                                           const LearnerConfig& cfg);

} // namespace porank
