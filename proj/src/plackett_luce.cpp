#include "porank/plackett_luce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "porank/rng.hpp"

namespace porank {

namespace {

std::vector<double> normalized(std::vector<double> w) {
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w) x /= sum;
    return w;
}

void check_same_dimension(const std::vector<Ranking>& rankings) {
    if (rankings.empty()) throw std::invalid_argument("fit: empty input");
    const int m = rankings.front().size();
    for (const Ranking& r : rankings) {
        if (r.size() != m) throw std::invalid_argument("fit: mixed dimensions");
    }
}

} // namespace

PLModel::PLModel(std::vector<double> weights_) : weights(std::move(weights_)) {
    if (weights.empty()) throw std::invalid_argument("PLModel: empty weight vector");
    for (const double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("PLModel: weights must be positive and finite");
        }
    }
    weights = normalized(std::move(weights));
}

double pl_log_pdf(const PLModel& model, const Ranking& pi) {
    if (pi.size() != model.size()) throw std::invalid_argument("pl_log_pdf: dimension mismatch");
    const int m = model.size();
    double log_p = 0.0;
    double suffix = 0.0;
    // Walk from the bottom so each stage's denominator is a running suffix sum.
    for (int pos = m - 1; pos >= 0; --pos) {
        const double v = model.weights[pi.label_at(pos)];
        suffix += v;
        log_p += std::log(v) - std::log(suffix);
    }
    return log_p;
}

double pairwise_marginal(const PLModel& model, int i, int j) {
    if (i == j) throw std::invalid_argument("pairwise_marginal: i and j must differ");
    const double vi = model.weights[i];
    const double vj = model.weights[j];
    return vi / (vi + vj);
}

ValuedPreferenceRelation build_preference_relation(const PLModel& model) {
    const int m = model.size();
    ValuedPreferenceRelation relation(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            relation.set_pair(i, j, pairwise_marginal(model, i, j));
        }
    }
    return relation;
}

std::vector<Ranking> sample_pl(const PLModel& model, int n, std::uint64_t rng_seed) {
    const int m = model.size();
    Rng rng(rng_seed);
    std::vector<Ranking> samples;
    samples.reserve(n);
    std::vector<int> remaining, order;
    for (int s = 0; s < n; ++s) {
        remaining.resize(m);
        std::iota(remaining.begin(), remaining.end(), 0);
        order.clear();
        double total = std::accumulate(model.weights.begin(), model.weights.end(), 0.0);
        while (remaining.size() > 1) {
            double u = rng.uniform01() * total;
            std::size_t pick = remaining.size() - 1;
            for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
                u -= model.weights[remaining[idx]];
                if (u < 0.0) {
                    pick = idx;
                    break;
                }
            }
            order.push_back(remaining[pick]);
            total -= model.weights[remaining[pick]];
            remaining.erase(remaining.begin() + pick);
        }
        order.push_back(remaining.front());
        samples.emplace_back(order);
    }
    return samples;
}

std::vector<double> pl_mm_step(const std::vector<double>& weights,
                               const std::vector<Ranking>& rankings) {
    const int m = static_cast<int>(weights.size());
    if (m == 1) return {1.0};
    std::vector<double> wins(m, 0.0);
    std::vector<double> denominator(m, 0.0);
    std::vector<double> suffix(m + 1, 0.0);
    std::vector<double> inverse_prefix(m, 0.0);
    for (const Ranking& pi : rankings) {
        suffix[m] = 0.0;
        for (int pos = m - 1; pos >= 0; --pos) {
            suffix[pos] = suffix[pos + 1] + weights[pi.label_at(pos)];
        }
        // inverse_prefix[t] = sum_{s=0..t} 1 / suffix[s], stages 0..M-2 only
        double acc = 0.0;
        for (int pos = 0; pos < m - 1; ++pos) {
            acc += 1.0 / suffix[pos];
            inverse_prefix[pos] = acc;
        }
        for (int pos = 0; pos < m; ++pos) {
            const int label = pi.label_at(pos);
            if (pos < m - 1) wins[label] += 1.0;
            denominator[label] += inverse_prefix[std::min(pos, m - 2)];
        }
    }
    std::vector<double> updated(m);
    for (int label = 0; label < m; ++label) {
        updated[label] = wins[label] / denominator[label];
    }
    return normalized(std::move(updated));
}

std::pair<PLModel, FitReport> fit_pl(const std::vector<Ranking>& rankings) {
    check_same_dimension(rankings);
    const int m = rankings.front().size();

    std::vector<double> weights(m, 1.0 / m);
    FitReport report;
    for (int it = 0; it < kPlFitMaxIterations; ++it) {
        std::vector<double> next = pl_mm_step(weights, rankings);
        bool clamped = false;
        for (double& w : next) {
            if (w < kWeightFloor) {
                w = kWeightFloor;
                clamped = true;
            }
        }
        if (clamped) next = normalized(std::move(next));
        report.boundary_hit = clamped;

        double max_relative_change = 0.0;
        for (int label = 0; label < m; ++label) {
            max_relative_change =
                std::max(max_relative_change, std::abs(next[label] - weights[label]) / weights[label]);
        }
        weights = std::move(next);
        report.iterations = it + 1;
        if (max_relative_change < kPlFitTolerance) {
            report.converged = true;
            break;
        }
    }

    PLModel model(std::move(weights));
    report.log_likelihood = 0.0;
    for (const Ranking& r : rankings) report.log_likelihood += pl_log_pdf(model, r);
    return {std::move(model), report};
}

} // namespace porank
