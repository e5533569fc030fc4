#pragma once

#include <optional>
#include <string>
#include <vector>

#include "porank/dataset.hpp"
#include "porank/eval.hpp"

namespace porank {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& name);
Method parse_method(const std::string& name);

/// Parses "lo:hi:step" into a strictly increasing grid within [0.5, 1).
/// Rejects grids reaching 1.0 or beyond.
std::vector<double> parse_q_grid(const std::string& spec);

/// One output row of a trade-off experiment. fold = -1 marks the cross-fold
/// mean (and the only row set for plain train/test sweeps).
struct CurveRow {
    std::string method;
    int fold = -1;
    double q = 0.5;
    double completeness = 0.0;
    std::optional<double> correctness;
    long n_evaluated = 0;
};

std::vector<CurveRow> rows_from_sweep(const TradeoffCurve& curve);
std::vector<CurveRow> rows_from_cross_validation(const CrossValidationResult& result);

/// Renders rows as CSV (header method,fold,q,completeness,correctness,
/// n_evaluated) or as a JSON array with the same field names. Numbers carry
/// 6 significant digits; missing correctness becomes an empty cell / null.
std::string render_rows(const std::vector<CurveRow>& rows, OutputFormat format);

void write_text_file(const std::string& path, const std::string& content);

/// "%.6g" formatting used for every numeric value in curve output.
std::string format_number(double value);

/// Runs one method, either train/test (folds = 0, test required) or
/// cross-validated, and returns the output rows.
std::vector<CurveRow> run_sweep_rows(const Dataset& train, const Dataset* test, int folds,
                                     Method method, const LearnerConfig& cfg,
                                     const std::vector<double>& q_grid);

/// Runs the chosen probabilistic method and the ensemble baseline on
/// identical folds and seeds; the merged rows carry the method column.
std::vector<CurveRow> run_compare_rows(const Dataset& train, const Dataset* test, int folds,
                                       Method probabilistic_method, const LearnerConfig& cfg,
                                       const std::vector<double>& q_grid);

/// Single-instance prediction, formatted as the asserted pairs (label names)
/// plus the effective threshold.
std::string run_predict(const Dataset& train, const std::vector<double>& x, Method method,
                        const LearnerConfig& cfg, double q);

} // namespace porank
