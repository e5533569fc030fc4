#pragma once

namespace porank {

/// Diagnostics returned by the maximum-likelihood fitters.
struct FitReport {
    int iterations = 0;
    bool converged = false;
    double log_likelihood = 0.0;
    /// True if theta was capped at theta_max or a weight hit the positivity floor.
    bool boundary_hit = false;
};

} // namespace porank
