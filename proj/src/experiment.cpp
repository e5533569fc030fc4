#include "porank/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace porank {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

Method parse_method(const std::string& name) {
    if (name == "mallows") return Method::probabilistic_mallows;
    if (name == "pl") return Method::probabilistic_pl;
    if (name == "baseline") return Method::baseline_ensemble;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::vector<double> parse_q_grid(const std::string& spec) {
    double lo = 0.0, hi = 0.0, step = 0.0;
    char trailing = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &trailing) != 3) {
        throw std::invalid_argument("q grid must be 'lo:hi:step', got '" + spec + "'");
    }
    if (!(step > 0.0)) throw std::invalid_argument("q grid step must be positive");
    if (!(lo >= 0.5) || !(hi < 1.0)) {
        throw std::invalid_argument("q grid must stay within [0.5, 1)");
    }
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (int t = 0; t < count; ++t) grid.push_back(lo + t * step);
    return grid;
}

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::vector<CurveRow> rows_from_sweep(const TradeoffCurve& curve) {
    std::vector<CurveRow> rows;
    for (const TradeoffPoint& point : curve.points) {
        rows.push_back({method_tag(curve.method), -1, point.q, point.completeness,
                        point.correctness, point.n_evaluated});
    }
    return rows;
}

std::vector<CurveRow> rows_from_cross_validation(const CrossValidationResult& result) {
    std::vector<CurveRow> rows;
    for (std::size_t fold = 0; fold < result.per_fold.size(); ++fold) {
        const TradeoffCurve& curve = result.per_fold[fold];
        for (const TradeoffPoint& point : curve.points) {
            rows.push_back({method_tag(curve.method), static_cast<int>(fold), point.q,
                            point.completeness, point.correctness, point.n_evaluated});
        }
    }
    for (const TradeoffPoint& point : result.mean.points) {
        rows.push_back({method_tag(result.mean.method), -1, point.q, point.completeness,
                        point.correctness, point.n_evaluated});
    }
    return rows;
}

std::string render_rows(const std::vector<CurveRow>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "method,fold,q,completeness,correctness,n_evaluated\n";
        for (const CurveRow& row : rows) {
            out << row.method << "," << row.fold << "," << format_number(row.q) << ","
                << format_number(row.completeness) << ","
                << (row.correctness ? format_number(*row.correctness) : "") << ","
                << row.n_evaluated << "\n";
        }
        return out.str();
    }
    nlohmann::json array = nlohmann::json::array();
    // Round-trip through the 6-significant-digit text so both formats print
    // identical values.
    for (const CurveRow& row : rows) {
        nlohmann::json object;
        object["method"] = row.method;
        object["fold"] = row.fold;
        object["q"] = std::stod(format_number(row.q));
        object["completeness"] = std::stod(format_number(row.completeness));
        object["correctness"] =
            row.correctness ? nlohmann::json(std::stod(format_number(*row.correctness)))
                            : nlohmann::json(nullptr);
        object["n_evaluated"] = row.n_evaluated;
        array.push_back(object);
    }
    return array.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

std::vector<CurveRow> run_sweep_rows(const Dataset& train, const Dataset* test, int folds,
                                     Method method, const LearnerConfig& cfg,
                                     const std::vector<double>& q_grid) {
    if (folds > 0) {
        return rows_from_cross_validation(cross_validate(train, folds, method, cfg, q_grid));
    }
    if (test == nullptr) {
        throw std::invalid_argument("sweep needs either --folds or a --test dataset");
    }
    return rows_from_sweep(sweep(train, *test, method, cfg, q_grid));
}

std::vector<CurveRow> run_compare_rows(const Dataset& train, const Dataset* test, int folds,
                                       Method probabilistic_method, const LearnerConfig& cfg,
                                       const std::vector<double>& q_grid) {
    if (probabilistic_method == Method::baseline_ensemble) {
        throw std::invalid_argument("compare: --method must name the probabilistic arm (mallows or pl)");
    }
    // Identical cfg (and therefore identical fold assignment and seeds) for
    // both arms; only the method differs.
    std::vector<CurveRow> rows = run_sweep_rows(train, test, folds, probabilistic_method, cfg, q_grid);
    const std::vector<CurveRow> baseline =
        run_sweep_rows(train, test, folds, Method::baseline_ensemble, cfg, q_grid);
    rows.insert(rows.end(), baseline.begin(), baseline.end());
    return rows;
}

std::string run_predict(const Dataset& train, const std::vector<double>& x, Method method,
                        const LearnerConfig& cfg, double q) {
    if (static_cast<int>(x.size()) != train.d()) {
        throw std::invalid_argument("predict: expected " + std::to_string(train.d()) +
                                    " feature values, got " + std::to_string(x.size()));
    }
    LearnerConfig instance_cfg = cfg;
    AbstentionPrediction prediction = [&] {
        const Threshold threshold(q);
        if (method == Method::baseline_ensemble) {
            return predict_baseline(ensemble_relation(train, x, instance_cfg), threshold);
        }
        instance_cfg.model_kind =
            method == Method::probabilistic_mallows ? ModelKind::mallows : ModelKind::pl;
        const FittedModel model = predict_model(train, x, instance_cfg);
        return AbstentionPrediction{
            PartialOrder(threshold_relation(build_preference_relation(model), threshold)),
            threshold, threshold, false};
    }();

    std::ostringstream out;
    out << "effective_q: " << format_number(prediction.effective_q.value()) << "\n";
    out << "repaired: " << (prediction.repaired ? "true" : "false") << "\n";
    const auto pairs = prediction.order.edge_list();
    out << "pairs: " << pairs.size() << "\n";
    for (const auto& [i, j] : pairs) {
        out << train.label_names[i] << " > " << train.label_names[j] << "\n";
    }
    return out.str();
}

} // namespace porank
