#pragma once

#include "porank/mallows.hpp"
#include "porank/plackett_luce.hpp"
#include "porank/relation.hpp"

namespace porank {

/// Abstention threshold q in [0.5, 1). A pair (i, j) is asserted only when
/// p(i, j) strictly exceeds q, so a marginal of exactly 0.5 always abstains.
class Threshold {
public:
    explicit Threshold(double q);
    double value() const { return q_; }

private:
    double q_;
};

/// A predicted partial order together with the threshold bookkeeping:
/// effective_q is the threshold actually applied (>= requested_q), and
/// repaired records whether a transitive-closure repair was needed.
struct AbstentionPrediction {
    PartialOrder order;
    Threshold requested_q;
    Threshold effective_q;
    bool repaired;
};

/// edges(i, j) = (p(i, j) > q). Marginals within 1e-12 of 0.5 are snapped to
/// 0.5 first so floating-point noise cannot manufacture an edge pair that
/// violates asymmetry.
StrictRelation threshold_relation(const ValuedPreferenceRelation& p, Threshold q);

/// Thresholds the model-induced marginals at q and validates the result as a
/// PartialOrder directly. For Mallows (Kendall distance) and Plackett-Luce
/// the thresholded relation is a partial order for every q in [0.5, 1);
/// a validation failure here signals a defect, not a recoverable condition.
AbstentionPrediction predict_probabilistic(const MallowsModel& model, Threshold q);
AbstentionPrediction predict_probabilistic(const PLModel& model, Threshold q);

/// Smallest feasible threshold: the least q in {0.5} plus the distinct
/// off-diagonal values of P in [0.5, 1) whose thresholded relation is acyclic.
/// Raising q only removes edges, so feasibility is monotone and a binary
/// search over the sorted candidate set applies.
Threshold find_q_min(const ValuedPreferenceRelation& p);

/// The ensemble/repair path: clamps q up to find_q_min(p), thresholds, and
/// repairs a non-transitive result by replacing it with its transitive
/// closure. O(M^3) plus the candidate search.
AbstentionPrediction predict_baseline(const ValuedPreferenceRelation& p, Threshold q);

} // namespace porank
