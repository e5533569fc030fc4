#include "porank/abstention.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace porank {

namespace {

constexpr double kSnapTolerance = 1e-12;

bool is_feasible(const ValuedPreferenceRelation& p, double q) {
    return !has_cycle(threshold_relation(p, Threshold(q)));
}

} // namespace

Threshold::Threshold(double q) : q_(q) {
    if (!(q >= 0.5 && q < 1.0)) {
        throw std::invalid_argument("Threshold: q must lie in [0.5, 1)");
    }
}

StrictRelation threshold_relation(const ValuedPreferenceRelation& p, Threshold q) {
    const int m = p.size();
    StrictRelation relation(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            double value = p.p(i, j);
            if (std::abs(value - 0.5) <= kSnapTolerance) value = 0.5;
            if (value > q.value()) relation.set_edge(i, j);
        }
    }
    return relation;
}

namespace {

AbstentionPrediction predict_from_relation(const ValuedPreferenceRelation& p, Threshold q) {
    StrictRelation thresholded = threshold_relation(p, q);
    // Theorem guarantee: the thresholded relation of a Mallows or PL marginal
    // matrix is already transitive and acyclic; PartialOrder revalidates.
    return AbstentionPrediction{PartialOrder(std::move(thresholded)), q, q, false};
}

} // namespace

AbstentionPrediction predict_probabilistic(const MallowsModel& model, Threshold q) {
    return predict_from_relation(build_preference_relation(model), q);
}

AbstentionPrediction predict_probabilistic(const PLModel& model, Threshold q) {
    return predict_from_relation(build_preference_relation(model), q);
}

Threshold find_q_min(const ValuedPreferenceRelation& p) {
    std::vector<double> candidates = p.candidate_thresholds();
    candidates.insert(candidates.begin(), 0.5);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    if (is_feasible(p, candidates.front())) return Threshold(candidates.front());
    if (!is_feasible(p, candidates.back())) {
        // Only reachable when a directed cycle of exact-1.0 entries exists,
        // which no ensemble of total orders can produce.
        throw std::invalid_argument("find_q_min: no feasible threshold below 1");
    }
    // Invariant: candidates[lo] infeasible, candidates[hi] feasible.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (is_feasible(p, candidates[mid])) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return Threshold(candidates[hi]);
}

AbstentionPrediction predict_baseline(const ValuedPreferenceRelation& p, Threshold q) {
    const Threshold q_min = find_q_min(p);
    const Threshold effective(std::max(q.value(), q_min.value()));
    StrictRelation thresholded = threshold_relation(p, effective);
    if (is_transitive(thresholded)) {
        return AbstentionPrediction{PartialOrder(std::move(thresholded)), q, effective, false};
    }
    return AbstentionPrediction{transitive_closure(thresholded), q, effective, true};
}

} // namespace porank
