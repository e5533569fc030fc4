#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "porank/fit_report.hpp"
#include "porank/ranking.hpp"
#include "porank/relation.hpp"
#include "porank/rng.hpp"

namespace porank {

/// Largest admissible spread parameter. At M <= 10, theta = 20 is numerically
/// indistinguishable from the one-point distribution on the center ranking.
inline constexpr double kThetaMax = 20.0;

/// Distance-based exponential distribution over rankings:
///
///   P(pi) = exp(-theta * D(pi, center)) / phi(theta)
///
/// with D the Kendall distance. theta = 0 gives the uniform distribution;
/// growing theta concentrates the mass on the center ranking.
struct MallowsModel {
    Ranking center;
    double theta;

    MallowsModel(Ranking center_, double theta_);

    int size() const { return center.size(); }
};

/// ln phi(theta) for the Kendall distance:
/// phi(theta) = prod_{j=1..M} (1 - e^{-j theta}) / (1 - e^{-theta}),
/// with the theta = 0 limit handled analytically as ln M!.
double mallows_log_normalizer(double theta, int m);

/// Expected Kendall distance under the model, -d/dtheta ln phi(theta),
/// from the analytic derivative of the closed-form log-normalizer.
double mallows_expected_distance(double theta, int m);

double mallows_log_pdf(const MallowsModel& model, const Ranking& pi);

/// P(y_i precedes y_j) by exact enumeration over the symmetric group.
/// By right-invariance of the Kendall distance the value depends only on
/// (theta, M, signed positional gap of i and j in the center), so a single
/// enumeration per gap suffices; see mallows_gap_marginals.
double pairwise_marginal(const MallowsModel& model, int i, int j);

/// marginals[g-1] = P(a precedes b) for labels at center positions p and p+g.
/// One enumeration per gap g in 1..M-1.
std::vector<double> mallows_gap_marginals(double theta, int m);

/// Full reciprocal relation of pairwise marginals (at most M-1 enumerations).
ValuedPreferenceRelation build_preference_relation(const MallowsModel& model);

/// Repeated-insertion sampler: the j-th item of the center is inserted at
/// position i in 1..j with probability proportional to exp(-theta (j - i)).
/// Enumeration-free, so it works beyond the enumeration cap.
std::vector<Ranking> sample_mallows(const MallowsModel& model, int n, std::uint64_t rng_seed);

/// Maximum-likelihood fit: center by Borda count (ties to the smaller label
/// index), theta by bisection on the moment equation
/// mean D(pi_n, center) = mallows_expected_distance(theta, M) over [0, kThetaMax].
std::pair<MallowsModel, FitReport> fit_mallows(const std::vector<Ranking>& rankings);

/// Borda aggregation: labels sorted by mean position, ties broken by the
/// smaller label index.
Ranking borda_ranking(const std::vector<Ranking>& rankings);

} // namespace porank
