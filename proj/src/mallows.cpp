#include "porank/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace porank {

MallowsModel::MallowsModel(Ranking center_, double theta_)
    : center(std::move(center_)), theta(theta_) {
    if (!(theta >= 0.0) || theta > kThetaMax) {
        throw std::invalid_argument("MallowsModel: theta must lie in [0, theta_max]");
    }
}

double mallows_log_normalizer(double theta, int m) {
    if (theta < 0.0) throw std::invalid_argument("mallows_log_normalizer: theta must be >= 0");
    if (m < 1) throw std::invalid_argument("mallows_log_normalizer: M must be >= 1");
    if (theta == 0.0) return std::lgamma(static_cast<double>(m) + 1.0);
    // ln(1 - e^{-j theta}) via expm1 keeps small thetas stable.
    const double log_denom = std::log(-std::expm1(-theta));
    double sum = 0.0;
    for (int j = 2; j <= m; ++j) {
        sum += std::log(-std::expm1(-j * theta)) - log_denom;
    }
    return sum;
}

double mallows_expected_distance(double theta, int m) {
    if (theta == 0.0) return m * (m - 1) / 4.0;
    double sum = m * std::exp(-theta) / -std::expm1(-theta);
    for (int j = 1; j <= m; ++j) {
        sum -= j * std::exp(-j * theta) / -std::expm1(-j * theta);
    }
    return sum;
}

double mallows_log_pdf(const MallowsModel& model, const Ranking& pi) {
    if (pi.size() != model.size()) {
        throw std::invalid_argument("mallows_log_pdf: dimension mismatch");
    }
    return -model.theta * kendall_distance(pi, model.center) -
           mallows_log_normalizer(model.theta, model.size());
}

std::vector<double> mallows_gap_marginals(double theta, int m) {
    std::vector<double> marginals(std::max(m - 1, 0), 0.5);
    if (m < 2 || theta == 0.0) return marginals;
    // One pass over the symmetric group accumulates every gap at once:
    // P(a before b) for center positions (0, g) as a weight ratio.
    const Ranking ident = Ranking::identity(m);
    std::vector<double> favor(m - 1, 0.0);
    double total = 0.0;
    for_each_ranking(m, [&](const Ranking& pi) {
        const double w = std::exp(-theta * kendall_distance(pi, ident));
        total += w;
        for (int g = 1; g < m; ++g) {
            if (pi.prefers(0, g)) favor[g - 1] += w;
        }
    });
    for (int g = 1; g < m; ++g) marginals[g - 1] = favor[g - 1] / total;
    return marginals;
}

namespace {

double marginal_from_gaps(const std::vector<double>& gaps, const Ranking& center, int i, int j) {
    const int pi = center.position_of(i);
    const int pj = center.position_of(j);
    return pi < pj ? gaps[pj - pi - 1] : 1.0 - gaps[pi - pj - 1];
}

} // namespace

double pairwise_marginal(const MallowsModel& model, int i, int j) {
    if (i == j) throw std::invalid_argument("pairwise_marginal: i and j must differ");
    const std::vector<double> gaps = mallows_gap_marginals(model.theta, model.size());
    return marginal_from_gaps(gaps, model.center, i, j);
}

ValuedPreferenceRelation build_preference_relation(const MallowsModel& model) {
    const int m = model.size();
    const std::vector<double> gaps = mallows_gap_marginals(model.theta, m);
    ValuedPreferenceRelation relation(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            relation.set_pair(i, j, marginal_from_gaps(gaps, model.center, i, j));
        }
    }
    return relation;
}

std::vector<Ranking> sample_mallows(const MallowsModel& model, int n, std::uint64_t rng_seed) {
    const int m = model.size();
    Rng rng(rng_seed);
    std::vector<Ranking> samples;
    samples.reserve(n);
    std::vector<int> order;
    for (int s = 0; s < n; ++s) {
        order.clear();
        for (int j = 1; j <= m; ++j) {
            // Insertion position i in 1..j, weight exp(-theta (j - i)); inserting
            // at the bottom (i = j) adds no discordant pair with the center.
            double total = 0.0;
            for (int i = 1; i <= j; ++i) total += std::exp(-model.theta * (j - i));
            double u = rng.uniform01() * total;
            int pos = j;
            for (int i = 1; i <= j; ++i) {
                u -= std::exp(-model.theta * (j - i));
                if (u < 0.0) {
                    pos = i;
                    break;
                }
            }
            order.insert(order.begin() + (pos - 1), model.center.label_at(j - 1));
        }
        samples.emplace_back(order);
    }
    return samples;
}

Ranking borda_ranking(const std::vector<Ranking>& rankings) {
    if (rankings.empty()) throw std::invalid_argument("borda_ranking: empty input");
    const int m = rankings.front().size();
    std::vector<double> mean_position(m, 0.0);
    for (const Ranking& r : rankings) {
        if (r.size() != m) throw std::invalid_argument("borda_ranking: mixed dimensions");
        for (int label = 0; label < m; ++label) mean_position[label] += r.position_of(label);
    }
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return mean_position[a] < mean_position[b];  // tie: smaller label index first
    });
    return Ranking(std::move(order));
}

std::pair<MallowsModel, FitReport> fit_mallows(const std::vector<Ranking>& rankings) {
    const Ranking center = borda_ranking(rankings);
    const int m = center.size();

    double mean_distance = 0.0;
    for (const Ranking& r : rankings) mean_distance += kendall_distance(r, center);
    mean_distance /= static_cast<double>(rankings.size());

    FitReport report;
    double theta;
    if (mean_distance >= mallows_expected_distance(0.0, m)) {
        theta = 0.0;
    } else if (mean_distance <= mallows_expected_distance(kThetaMax, m)) {
        theta = kThetaMax;
        report.boundary_hit = true;
    } else {
        double lo = 0.0, hi = kThetaMax;
        for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            // expected distance decreases in theta
            if (mallows_expected_distance(mid, m) > mean_distance) {
                lo = mid;
            } else {
                hi = mid;
            }
            report.iterations = it + 1;
        }
        theta = 0.5 * (lo + hi);
    }

    MallowsModel model(center, theta);
    report.converged = true;
    report.log_likelihood =
        rankings.size() * (-theta * mean_distance - mallows_log_normalizer(theta, m));
    return {std::move(model), report};
}

} // namespace porank
