#pragma once

#include <optional>
#include <string>
#include <vector>

#include "porank/abstention.hpp"
#include "porank/dataset.hpp"
#include "porank/learners.hpp"
#include "porank/relation.hpp"

namespace porank {

enum class Method { probabilistic_mallows, probabilistic_pl, baseline_ensemble };

std::string method_tag(Method method);

/// Gamma rank correlation between the true ranking and a predicted partial
/// order: (C - D) / (C + D) over the asserted pairs, where C counts pairs
/// agreeing with the truth and D pairs disagreeing. Empty on total abstention.
std::optional<double> gamma_correctness(const Ranking& truth, const PartialOrder& pred);

/// Fraction of the M(M-1)/2 label pairs on which the prediction asserts an
/// order; one minus the relative number of abstentions.
double completeness(const PartialOrder& pred);

/// One point of a correctness/completeness trade-off curve. correctness is
/// the mean gamma over the n_evaluated instances on which it was defined;
/// instances with total abstention are excluded, never imputed.
struct TradeoffPoint {
    double q = 0.5;
    double completeness = 0.0;
    std::optional<double> correctness;
    long n_evaluated = 0;
};

struct TradeoffCurve {
    Method method = Method::probabilistic_mallows;
    std::vector<TradeoffPoint> points;  // ordered by strictly increasing q
};

/// Default grid: 0.5 to 0.95 in steps of 0.05.
std::vector<double> default_q_grid();

/// For each q in the grid, predicts a partial order per test instance with
/// the chosen method and averages the two metrics. The per-instance
/// preference relation is computed once and thresholded per q.
TradeoffCurve sweep(const Dataset& train, const Dataset& test, Method method,
                    const LearnerConfig& cfg, const std::vector<double>& q_grid);

struct CrossValidationResult {
    TradeoffCurve mean;                         // pointwise mean across folds
    std::vector<double> completeness_std;       // pointwise, aligned with mean.points
    std::vector<std::optional<double>> correctness_std;
    std::vector<TradeoffCurve> per_fold;
};

/// Seeded fold assignment (a shuffle of the row indices derived from
/// cfg.rng_seed, dealt round-robin), one sweep per fold, then pointwise mean
/// and standard deviation across folds.
CrossValidationResult cross_validate(const Dataset& data, int folds, Method method,
                                     const LearnerConfig& cfg,
                                     const std::vector<double>& q_grid);

/// The fold assignment used by cross_validate: fold_of[i] in [0, folds).
std::vector<int> fold_assignment(int n, int folds, std::uint64_t seed);

} // namespace porank
