// Command-line front end: dataset validation, synthetic data generation,
// trade-off sweeps, method comparison, and single-instance prediction.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "porank/experiment.hpp"
#include "porank/synth.hpp"

namespace {

struct CommonOptions {
    std::string method = "mallows";
    int k = 20;
    int ensemble_size = 10;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

porank::LearnerConfig learner_config(const CommonOptions& options) {
    porank::LearnerConfig cfg;
    cfg.k = options.k;
    cfg.ensemble_size = options.ensemble_size;
    cfg.rng_seed = options.seed;
    return cfg;
}

void add_learner_options(CLI::App* cmd, CommonOptions& options, bool with_method = true) {
    if (with_method) {
        cmd->add_option("--method", options.method, "Prediction method")
            ->check(CLI::IsMember({"mallows", "pl", "baseline"}));
    }
    cmd->add_option("--k", options.k, "Neighbor count for the instance-based learners");
    cmd->add_option("--ensemble-size", options.ensemble_size, "Ensemble size for the baseline");
    cmd->add_option("--seed", options.seed, "Random seed (required, runs are reproducible)")
        ->required();
}

std::vector<double> parse_features(const std::string& spec) {
    std::vector<double> values;
    std::istringstream in(spec);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument("bad feature value '" + cell + "'");
    }
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial-order label ranking: probabilistic thresholding vs ensemble baseline"};
    app.require_subcommand(1);

    // ingest --validate
    std::string ingest_path;
    bool ingest_validate = false;
    auto* ingest = app.add_subcommand("ingest", "Parse and validate a dataset file");
    ingest->add_option("path", ingest_path, "Dataset CSV")->required();
    ingest->add_flag("--validate", ingest_validate, "Validate only (default behavior)");

    // synth
    std::string synth_generator = "pl-linear";
    porank::SynthSpec synth_spec;
    std::uint64_t synth_seed = 0;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth_cmd->add_option("--generator", synth_generator, "pl-linear or mallows-regions")
        ->check(CLI::IsMember({"pl-linear", "mallows-regions"}));
    synth_cmd->add_option("--n", synth_spec.n, "Instances");
    synth_cmd->add_option("--m", synth_spec.m, "Labels");
    synth_cmd->add_option("--d", synth_spec.d, "Features");
    synth_cmd->add_option("--noise", synth_spec.noise,
                          "pl-linear: weight attenuation in [0,1]; mallows-regions: theta");
    synth_cmd->add_option("--seed", synth_seed, "Random seed")->required();
    synth_cmd->add_option("--out", synth_out, "Output CSV path")->required();

    // sweep
    std::string sweep_train, sweep_test, sweep_grid = "0.5:0.95:0.05", sweep_format = "csv";
    std::string sweep_out;
    int sweep_folds = 0;
    CommonOptions sweep_options;
    auto* sweep_cmd = app.add_subcommand("sweep", "Trade-off sweep for one method");
    sweep_cmd->add_option("--train", sweep_train, "Training dataset CSV")->required();
    sweep_cmd->add_option("--test", sweep_test, "Held-out test dataset CSV");
    sweep_cmd->add_option("--folds", sweep_folds, "Cross-validation folds (omit for train/test)");
    sweep_cmd->add_option("--q-grid", sweep_grid, "Threshold grid lo:hi:step");
    sweep_cmd->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_out, "Output path")->required();
    add_learner_options(sweep_cmd, sweep_options);

    // compare
    std::string compare_train, compare_test, compare_grid = "0.5:0.95:0.05", compare_format = "csv";
    std::string compare_out;
    int compare_folds = 0;
    CommonOptions compare_options;
    auto* compare_cmd =
        app.add_subcommand("compare", "Probabilistic method vs ensemble baseline on shared folds");
    compare_cmd->add_option("--train", compare_train, "Training dataset CSV")->required();
    compare_cmd->add_option("--test", compare_test, "Held-out test dataset CSV");
    compare_cmd->add_option("--folds", compare_folds, "Cross-validation folds");
    compare_cmd->add_option("--q-grid", compare_grid, "Threshold grid lo:hi:step");
    compare_cmd->add_option("--format", compare_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    compare_cmd->add_option("--out", compare_out, "Output path")->required();
    compare_cmd->add_option("--method", compare_options.method,
                            "Probabilistic arm of the comparison: mallows or pl")
        ->check(CLI::IsMember({"mallows", "pl"}));
    add_learner_options(compare_cmd, compare_options, /*with_method=*/false);

    // predict
    std::string predict_train, predict_features;
    double predict_q = 0.5;
    CommonOptions predict_options;
    auto* predict_cmd = app.add_subcommand("predict", "Predict a partial order for one instance");
    predict_cmd->add_option("--train", predict_train, "Training dataset CSV")->required();
    predict_cmd->add_option("--features", predict_features, "Comma-separated feature values")
        ->required();
    predict_cmd->add_option("--q", predict_q, "Abstention threshold in [0.5, 1)");
    add_learner_options(predict_cmd, predict_options);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) {
            const porank::Dataset data = porank::read_dataset_csv(ingest_path);
            std::cout << "ok: " << data.n() << " instances, " << data.d() << " features, "
                      << data.m() << " labels\n";
            return 0;
        }
        if (synth_cmd->parsed()) {
            synth_spec.kind = porank::parse_generator(synth_generator);
            porank::write_dataset_csv(porank::synth(synth_spec, synth_seed), synth_out);
            std::cout << "wrote " << synth_out << "\n";
            return 0;
        }
        if (sweep_cmd->parsed() || compare_cmd->parsed()) {
            const bool comparing = compare_cmd->parsed();
            const auto& train_path = comparing ? compare_train : sweep_train;
            const auto& test_path = comparing ? compare_test : sweep_test;
            const auto& grid_spec = comparing ? compare_grid : sweep_grid;
            const auto& format_name = comparing ? compare_format : sweep_format;
            const auto& out_path = comparing ? compare_out : sweep_out;
            const int folds = comparing ? compare_folds : sweep_folds;
            const auto& options = comparing ? compare_options : sweep_options;

            const porank::Dataset train = porank::read_dataset_csv(train_path);
            porank::Dataset test;
            const bool have_test = !test_path.empty();
            if (have_test) test = porank::read_dataset_csv(test_path);

            const std::vector<double> grid = porank::parse_q_grid(grid_spec);
            const porank::Method method = porank::parse_method(options.method);
            const porank::LearnerConfig cfg = learner_config(options);

            const std::vector<porank::CurveRow> rows =
                comparing ? porank::run_compare_rows(train, have_test ? &test : nullptr, folds,
                                                     method, cfg, grid)
                          : porank::run_sweep_rows(train, have_test ? &test : nullptr, folds,
                                                   method, cfg, grid);
            porank::write_text_file(
                out_path, porank::render_rows(rows, porank::parse_output_format(format_name)));
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
        if (predict_cmd->parsed()) {
            const porank::Dataset train = porank::read_dataset_csv(predict_train);
            const porank::Method method = porank::parse_method(predict_options.method);
            std::cout << porank::run_predict(train, parse_features(predict_features), method,
                                             learner_config(predict_options), predict_q);
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
