#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "porank/fit_report.hpp"
#include "porank/ranking.hpp"
#include "porank/relation.hpp"

namespace porank {

/// Weights are clamped to this floor (after normalization) when the MLE
/// diverges, e.g. when some label is never ranked above another.
inline constexpr double kWeightFloor = 1e-9;

/// Stagewise choice distribution over rankings:
///
///   P(pi) = prod_i v[pi(i)] / (v[pi(i)] + ... + v[pi(M-1)])
///
/// Weights are kept normalized to sum 1 as the canonical representative of
/// the scale-invariance class.
struct PLModel {
    std::vector<double> weights;

    explicit PLModel(std::vector<double> weights_);

    int size() const { return static_cast<int>(weights.size()); }
};

double pl_log_pdf(const PLModel& model, const Ranking& pi);

/// P(y_i precedes y_j) = v_i / (v_i + v_j), the Bradley-Terry marginal of the
/// stagewise model.
double pairwise_marginal(const PLModel& model, int i, int j);

ValuedPreferenceRelation build_preference_relation(const PLModel& model);

/// Vase-model sampler: labels drawn sequentially without replacement, the
/// k-th accepted draw filling position k.
std::vector<Ranking> sample_pl(const PLModel& model, int n, std::uint64_t rng_seed);

/// One minorization-maximization step (Hunter, 2004):
///   v_i <- w_i / sum_n sum_{t=1..min(rank_n(i), M-1)} 1 / suffix_sum_n(t)
/// where w_i counts the rankings in which label i is not ranked last.
/// The result is normalized; the log-likelihood never decreases.
std::vector<double> pl_mm_step(const std::vector<double>& weights,
                               const std::vector<Ranking>& rankings);

/// MM iteration until the max relative weight change drops below 1e-8 or
/// 10000 iterations, whichever comes first. Weights that collapse toward zero
/// are clamped at kWeightFloor and reported via FitReport::boundary_hit.
std::pair<PLModel, FitReport> fit_pl(const std::vector<Ranking>& rankings);

inline constexpr double kPlFitTolerance = 1e-8;
inline constexpr int kPlFitMaxIterations = 10000;

} // namespace porank
