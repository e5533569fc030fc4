#include "porank/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "porank/rng.hpp"

namespace porank {

std::string method_tag(Method method) {
    switch (method) {
        case Method::probabilistic_mallows: return "probabilistic-mallows";
        case Method::probabilistic_pl: return "probabilistic-pl";
        case Method::baseline_ensemble: return "baseline-ensemble";
    }
    throw std::logic_error("method_tag: unknown method");
}

std::optional<double> gamma_correctness(const Ranking& truth, const PartialOrder& pred) {
    if (truth.size() != pred.size()) {
        throw std::invalid_argument("gamma_correctness: dimension mismatch");
    }
    long concordant = 0, discordant = 0;
    for (int i = 0; i < pred.size(); ++i) {
        for (int j = i + 1; j < pred.size(); ++j) {
            int asserted;
            if (pred.edge(i, j)) {
                asserted = truth.prefers(i, j) ? 1 : -1;
            } else if (pred.edge(j, i)) {
                asserted = truth.prefers(j, i) ? 1 : -1;
            } else {
                continue;
            }
            (asserted > 0 ? concordant : discordant) += 1;
        }
    }
    if (concordant + discordant == 0) return std::nullopt;
    return static_cast<double>(concordant - discordant) / static_cast<double>(concordant + discordant);
}

double completeness(const PartialOrder& pred) {
    const int m = pred.size();
    if (m < 2) return 1.0;
    return static_cast<double>(pred.edge_count()) / (m * (m - 1) / 2.0);
}

std::vector<double> default_q_grid() {
    std::vector<double> grid;
    for (int step = 0; step <= 9; ++step) grid.push_back(0.5 + 0.05 * step);
    return grid;
}

namespace {

void check_grid(const std::vector<double>& q_grid) {
    if (q_grid.empty()) throw std::invalid_argument("sweep: empty q grid");
    for (std::size_t t = 0; t < q_grid.size(); ++t) {
        if (!(q_grid[t] >= 0.5 && q_grid[t] < 1.0)) {
            throw std::invalid_argument("sweep: q grid values must lie in [0.5, 1)");
        }
        if (t > 0 && q_grid[t] <= q_grid[t - 1]) {
            throw std::invalid_argument("sweep: q grid must be strictly increasing");
        }
    }
}

AbstentionPrediction predict_at(const ValuedPreferenceRelation& relation, Method method,
                                Threshold q) {
    if (method == Method::baseline_ensemble) return predict_baseline(relation, q);
    // Probabilistic path: model marginals threshold directly to a partial order.
    return AbstentionPrediction{PartialOrder(threshold_relation(relation, q)), q, q, false};
}

} // namespace

TradeoffCurve sweep(const Dataset& train, const Dataset& test, Method method,
                    const LearnerConfig& cfg, const std::vector<double>& q_grid) {
    check_grid(q_grid);
    cfg.validate();
    if (train.m() != test.m()) throw std::invalid_argument("sweep: label sets differ");

    LearnerConfig instance_cfg = cfg;
    if (method == Method::probabilistic_mallows) instance_cfg.model_kind = ModelKind::mallows;
    if (method == Method::probabilistic_pl) instance_cfg.model_kind = ModelKind::pl;

    // One relation per test instance; thresholding is cheap per grid point.
    std::vector<ValuedPreferenceRelation> relations;
    relations.reserve(test.n());
    for (int i = 0; i < test.n(); ++i) {
        const std::span<const double> x(test.row(i), test.d());
        if (method == Method::baseline_ensemble) {
            relations.push_back(ensemble_relation(train, x, instance_cfg));
        } else {
            relations.push_back(build_preference_relation(predict_model(train, x, instance_cfg)));
        }
    }

    TradeoffCurve curve;
    curve.method = method;
    for (const double q : q_grid) {
        TradeoffPoint point;
        point.q = q;
        double gamma_sum = 0.0;
        for (int i = 0; i < test.n(); ++i) {
            const AbstentionPrediction prediction = predict_at(relations[i], method, Threshold(q));
            point.completeness += completeness(prediction.order);
            if (const auto gamma = gamma_correctness(test.rankings[i], prediction.order)) {
                gamma_sum += *gamma;
                point.n_evaluated += 1;
            }
        }
        point.completeness /= test.n();
        if (point.n_evaluated > 0) point.correctness = gamma_sum / point.n_evaluated;
        curve.points.push_back(point);
    }
    return curve;
}

std::vector<int> fold_assignment(int n, int folds, std::uint64_t seed) {
    std::vector<int> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), 0);
    Rng rng(derive_seed(seed, 0xF01D5));
    rng.shuffle(shuffled);
    std::vector<int> fold_of(n);
    for (int t = 0; t < n; ++t) fold_of[shuffled[t]] = t % folds;
    return fold_of;
}

namespace {

Dataset subset(const Dataset& data, const std::vector<int>& rows) {
    Dataset out;
    out.label_names = data.label_names;
    out.feature_names = data.feature_names;
    for (const int i : rows) {
        out.features.insert(out.features.end(), data.row(i), data.row(i) + data.d());
        out.rankings.push_back(data.rankings[i]);
    }
    return out;
}

} // namespace

CrossValidationResult cross_validate(const Dataset& data, int folds, Method method,
                                     const LearnerConfig& cfg,
                                     const std::vector<double>& q_grid) {
    if (folds < 2) throw std::invalid_argument("cross_validate: folds must be >= 2");
    if (folds > data.n()) {
        throw std::invalid_argument("cross_validate: too few instances per fold");
    }
    const std::vector<int> fold_of = fold_assignment(data.n(), folds, cfg.rng_seed);

    CrossValidationResult result;
    for (int fold = 0; fold < folds; ++fold) {
        std::vector<int> train_rows, test_rows;
        for (int i = 0; i < data.n(); ++i) {
            (fold_of[i] == fold ? test_rows : train_rows).push_back(i);
        }
        LearnerConfig fold_cfg = cfg;
        fold_cfg.k = std::min(cfg.k, static_cast<int>(train_rows.size()));
        result.per_fold.push_back(
            sweep(subset(data, train_rows), subset(data, test_rows), method, fold_cfg, q_grid));
    }

    result.mean.method = method;
    for (std::size_t t = 0; t < q_grid.size(); ++t) {
        TradeoffPoint point;
        point.q = q_grid[t];
        std::vector<double> completeness_values, correctness_values;
        for (const TradeoffCurve& fold_curve : result.per_fold) {
            const TradeoffPoint& fp = fold_curve.points[t];
            completeness_values.push_back(fp.completeness);
            if (fp.correctness) correctness_values.push_back(*fp.correctness);
            point.n_evaluated += fp.n_evaluated;
        }
        const auto mean_of = [](const std::vector<double>& v) {
            return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
        };
        const auto std_of = [&](const std::vector<double>& v, double mean) {
            double sum = 0.0;
            for (const double x : v) sum += (x - mean) * (x - mean);
            return std::sqrt(sum / v.size());
        };
        point.completeness = mean_of(completeness_values);
        result.completeness_std.push_back(std_of(completeness_values, point.completeness));
        if (!correctness_values.empty()) {
            point.correctness = mean_of(correctness_values);
            result.correctness_std.push_back(std_of(correctness_values, *point.correctness));
        } else {
            result.correctness_std.push_back(std::nullopt);
        }
        result.mean.points.push_back(point);
    }
    return result;
}

} // namespace porank
