// garchfit: batch CLI wiring the library into the full workflow:
//   gen-data -> train -> eval  and  simulate -> fit [--oracle]
//
// Exit codes: 0 success, 1 usage, 2 data/format errors, 3 numeric/domain errors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garchfit/dataset.hpp"
#include "garchfit/errors.hpp"
#include "garchfit/fit.hpp"
#include "garchfit/io.hpp"
#include "garchfit/mlp.hpp"
#include "garchfit/param_space.hpp"
#include "garchfit/simulate.hpp"
#include "garchfit/types.hpp"

namespace gf = garchfit;
using nlohmann::ordered_json;

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw gf::FormatError(flag + ": bad integer list element '" + item + "'");
        }
    }
    if (values.empty()) throw gf::FormatError(flag + ": empty list");
    return values;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw gf::FormatError("cannot open '" + path.string() + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) throw gf::FormatError("write failed for '" + path.string() + "'");
}

// ---------------------------------------------------------------- gen-data

struct GenDataArgs {
    std::string kind;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string summary;
    std::string alpha0_scale = "linear";
};

int cmd_gen_data(const GenDataArgs& args) {
    const gf::FeatureSetKind kind = gf::parse_kind(args.kind);
    const gf::Alpha0Scale scale = args.alpha0_scale == "log" ? gf::Alpha0Scale::LogUniform
                                                             : gf::Alpha0Scale::Linear;
    const auto params = gf::sample_params(kind, args.count, args.seed, scale);
    const auto rows = gf::build_rows(params, kind);

    const std::string provenance = "garchfit gen-data kind=" + args.kind +
                                   " count=" + std::to_string(args.count) +
                                   " seed=" + std::to_string(args.seed) +
                                   " alpha0-scale=" + args.alpha0_scale;
    gf::write_dataset_csv(args.out, rows, kind, provenance);

    // Summary previews the split/scaler the train step will derive with the
    // same seed; informational only, nothing downstream reads it.
    const gf::DatasetSplit split = gf::split_40_40_20(rows, args.seed);
    const gf::ScalerParams scaler = gf::fit_scaler(split.train);
    ordered_json j;
    j["rows"] = rows.size();
    j["split"] = {{"train", split.train.size()},
                  {"test", split.test.size()},
                  {"validate", split.validate.size()}};
    const auto col = [](const gf::MinMaxColumn& c) {
        return ordered_json{{"min", c.min}, {"max", c.max}};
    };
    j["scaler"] = {{"f1", col(scaler.features[0])},
                   {"f2", col(scaler.features[1])},
                   {"f3", col(scaler.features[2])},
                   {"target", col(scaler.target)}};
    j["run_config"] = {{"command", "gen-data"}, {"kind", args.kind},   {"count", args.count},
                       {"seed", args.seed},     {"out", args.out},     {"alpha0_scale", args.alpha0_scale}};
    const std::string summary_path = args.summary.empty() ? args.out + ".summary.json" : args.summary;
    write_json_file(summary_path, j);
    std::cout << "wrote " << rows.size() << " rows to " << args.out << " (split "
              << split.train.size() << "/" << split.test.size() << "/" << split.validate.size()
              << "), summary " << summary_path << "\n";
    return 0;
}

// -------------------------------------------------------------------- train

struct TrainArgs {
    std::string dataset;
    std::string model_out;
    std::string trace_out;
    std::string hidden_dims = "128,2048,2048,128";
    double learning_rate = 0.01;
    int max_epochs = 5000;
    int patience = 100;
    int batch_size = 0;
    std::uint64_t seed = 0;
};

int cmd_train(const TrainArgs& args) {
    const gf::Dataset ds = gf::read_dataset_csv(args.dataset);
    const gf::DatasetSplit split = gf::split_40_40_20(ds.rows, args.seed);
    const gf::ScalerParams scaler = gf::fit_scaler(split.train);

    gf::MlpArchitecture arch;
    arch.hidden_dims = parse_int_list(args.hidden_dims, "--hidden-dims");
    gf::TrainConfig config;
    config.learning_rate = args.learning_rate;
    config.max_epochs = args.max_epochs;
    config.patience = args.patience;
    config.batch_size = args.batch_size;
    config.seed = args.seed;

    const gf::TrainResult result = gf::train(arch, config, split, scaler, ds.kind);
    gf::save_model(result.model, args.model_out);
    if (!args.trace_out.empty()) {
        const std::string provenance =
            "garchfit train dataset=" + args.dataset + " seed=" + std::to_string(args.seed) +
            " hidden-dims=" + args.hidden_dims + " learning-rate=" + gf::format_g17(args.learning_rate) +
            " max-epochs=" + std::to_string(args.max_epochs) +
            " patience=" + std::to_string(args.patience) +
            " batch-size=" + std::to_string(args.batch_size);
        gf::write_trace_csv(result.trace, args.trace_out, provenance);
    }
    std::cout << "trained " << result.trace.size() << " epochs";
    if (result.model.meta.best_epoch >= 1) {
        std::cout << "; best epoch " << result.model.meta.best_epoch
                  << " validation MSD (scaled) "
                  << gf::format_g17(result.trace[static_cast<std::size_t>(
                                                     result.model.meta.best_epoch - 1)]
                                        .validation_msd);
    } else {
        std::cout << "; validation never improved (diverged?)";
    }
    std::cout << "; model " << args.model_out << "\n";
    return 0;
}

// --------------------------------------------------------------------- eval

struct EvalArgs {
    std::string model;
    std::string dataset;
    std::string scatter_out;
    std::string metrics_out;
};

int cmd_eval(const EvalArgs& args) {
    const gf::MlpModel model = gf::load_model(args.model);
    const gf::Dataset ds = gf::read_dataset_csv(args.dataset);
    if (ds.kind != model.meta.kind) {
        throw gf::KindMismatch("model is " + gf::to_string(model.meta.kind) + ", dataset is " +
                               gf::to_string(ds.kind));
    }
    // Reproduce the training split from the seed stored in the model so the
    // evaluation runs on the same held-out test partition.
    const gf::DatasetSplit split = gf::split_40_40_20(ds.rows, model.meta.seed);

    std::vector<double> actual, predicted;
    actual.reserve(split.test.size());
    predicted.reserve(split.test.size());
    for (const gf::FeatureVector& row : split.test) {
        const double out = gf::forward(model, gf::apply_scaler(model.scaler, row.features));
        predicted.push_back(gf::invert_scaler(model.scaler.target, out));
        actual.push_back(row.target_alpha1);
    }

    double mean_a = 0.0, mean_p = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        mean_a += actual[i];
        mean_p += predicted[i];
    }
    mean_a /= static_cast<double>(actual.size());
    mean_p /= static_cast<double>(actual.size());
    double sxx = 0.0, sxy = 0.0, msd = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        sxx += (actual[i] - mean_a) * (actual[i] - mean_a);
        sxy += (actual[i] - mean_a) * (predicted[i] - mean_p);
        const double d = predicted[i] - actual[i];
        msd += d * d;
    }
    msd /= static_cast<double>(actual.size());
    const double slope = sxy / sxx;
    const double intercept = mean_p - slope * mean_a;

    const std::string provenance =
        "garchfit eval model=" + args.model + " dataset=" + args.dataset;
    {
        std::ofstream out(args.scatter_out);
        if (!out) throw gf::FormatError("cannot open '" + args.scatter_out + "' for writing");
        out << "# " << provenance << "\n";
        out << "actual,predicted\n";
        for (std::size_t i = 0; i < actual.size(); ++i) {
            out << gf::format_g17(actual[i]) << ',' << gf::format_g17(predicted[i]) << "\n";
        }
        if (!out) throw gf::FormatError("write failed for '" + args.scatter_out + "'");
    }
    ordered_json j;
    j["kind"] = gf::to_string(model.meta.kind);
    j["n_test"] = actual.size();
    j["slope"] = slope;
    j["intercept"] = intercept;
    j["test_msd"] = msd;
    j["best_epoch"] = model.meta.best_epoch;
    j["run_config"] = {{"command", "eval"}, {"model", args.model}, {"dataset", args.dataset}};
    write_json_file(args.metrics_out, j);
    std::cout << "eval " << gf::to_string(model.meta.kind) << ": slope " << slope
              << " intercept " << intercept << " test MSD " << msd << " over " << actual.size()
              << " rows\n";
    return 0;
}

// ----------------------------------------------------------------- simulate

struct SimulateArgs {
    double alpha0 = 0.0, alpha1 = 0.0, beta1 = 0.0;
    long long t_steps = 0;
    long long burn_in = gf::kDefaultBurnIn;
    std::uint64_t seed = 0;
    std::string lags = "1,2,6,10";
    std::string series_out;
    std::string stats_out;
};

int cmd_simulate(const SimulateArgs& args) {
    const gf::GarchParams p{args.alpha0, args.alpha1, args.beta1};
    const std::vector<int> lags = parse_int_list(args.lags, "--lags");
    const auto series = gf::simulate(p, args.t_steps, args.burn_in, args.seed);

    ordered_json run_config{{"command", "simulate"},
                            {"alpha0", args.alpha0},
                            {"alpha1", args.alpha1},
                            {"beta1", args.beta1},
                            {"t_steps", args.t_steps},
                            {"burn_in", args.burn_in},
                            {"seed", args.seed},
                            {"rng", "mt19937_64+box-muller"}};
    if (!args.series_out.empty()) {
        std::string provenance = "garchfit simulate alpha0=" + gf::format_g17(args.alpha0) +
                                 " alpha1=" + gf::format_g17(args.alpha1) +
                                 " beta1=" + gf::format_g17(args.beta1) +
                                 " t-steps=" + std::to_string(args.t_steps) +
                                 " burn-in=" + std::to_string(args.burn_in) +
                                 " seed=" + std::to_string(args.seed) +
                                 " rng=mt19937_64+box-muller";
        gf::write_series_csv(args.series_out, series, provenance);
    }
    if (!args.stats_out.empty()) {
        const gf::EmpiricalStats stats = gf::estimate_stats(series, lags);
        gf::write_stats_json(args.stats_out, stats, run_config.dump());
    }
    std::cout << "simulated " << series.size() << " steps\n";
    return 0;
}

// ---------------------------------------------------------------------- fit

struct FitArgs {
    std::string model;
    std::string stats;
    std::string series;
    std::string lags;
    std::string out;
    bool oracle = false;
};

int cmd_fit(const FitArgs& args) {
    const gf::MlpModel model = gf::load_model(args.model);

    gf::EmpiricalStats stats;
    if (!args.stats.empty()) {
        stats = gf::read_stats_json(args.stats);
    } else {
        const auto series = gf::read_series_csv(args.series);
        std::vector<int> lags{1, 2};
        if (model.meta.kind.kind == gf::StatKind::AutocovLag) {
            lags.push_back(model.meta.kind.lag);
        }
        if (!args.lags.empty()) lags = parse_int_list(args.lags, "--lags");
        std::sort(lags.begin(), lags.end());
        lags.erase(std::unique(lags.begin(), lags.end()), lags.end());
        stats = gf::estimate_stats(series, lags);
    }

    const gf::FitResult result = gf::fit(model, stats);
    ordered_json j;
    j["kind"] = gf::to_string(result.kind);
    j["alpha0"] = result.params.alpha0;
    j["alpha1"] = result.params.alpha1;
    j["beta1"] = result.params.beta1;
    j["alpha1_raw"] = result.alpha1_raw;
    j["clamped"] = result.clamped;
    j["radicand"] = result.radicand;
    if (args.oracle) {
        const gf::ExactSolution exact = gf::solve_exact(stats, model.meta.kind);
        ordered_json roots = ordered_json::array();
        for (const gf::GarchParams& r : exact.roots) {
            roots.push_back({{"alpha0", r.alpha0}, {"alpha1", r.alpha1}, {"beta1", r.beta1}});
        }
        j["oracle"] = {{"alpha0", exact.params.alpha0},
                       {"alpha1", exact.params.alpha1},
                       {"beta1", exact.params.beta1},
                       {"ambiguous", exact.ambiguous},
                       {"roots", roots}};
    }
    j["run_config"] = {{"command", "fit"},
                       {"model", args.model},
                       {"stats", args.stats},
                       {"series", args.series},
                       {"oracle", args.oracle}};
    write_json_file(args.out, j);
    std::cout << "fit " << gf::to_string(result.kind) << ": alpha0 " << result.params.alpha0
              << " alpha1 " << result.params.alpha1 << " beta1 " << result.params.beta1
              << (result.clamped ? " (alpha1 clamped)" : "") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GARCH-normal(1,1) parameter fitting from moment statistics"};
    app.require_subcommand(1);

    GenDataArgs gen;
    auto* gen_cmd = app.add_subcommand("gen-data", "Sample parameters and build a feature dataset");
    gen_cmd->add_option("--kind", gen.kind, "moments-g6|moments-g8|moments-g10|autocov-<n>")->required();
    gen_cmd->add_option("--count", gen.count, "number of rows")->required();
    gen_cmd->add_option("--seed", gen.seed, "sampler seed")->required();
    gen_cmd->add_option("--out", gen.out, "dataset CSV path")->required();
    gen_cmd->add_option("--summary", gen.summary, "summary JSON path (default <out>.summary.json)");
    gen_cmd->add_option("--alpha0-scale", gen.alpha0_scale, "linear|log (default linear)")
        ->check(CLI::IsMember({"linear", "log"}));

    TrainArgs train;
    auto* train_cmd = app.add_subcommand("train", "Train the alpha1 regressor on a dataset");
    train_cmd->add_option("--dataset", train.dataset, "dataset CSV from gen-data")->required();
    train_cmd->add_option("--model-out", train.model_out, "model file path")->required();
    train_cmd->add_option("--trace-out", train.trace_out, "per-epoch MSD trace CSV");
    train_cmd->add_option("--hidden-dims", train.hidden_dims, "comma list (default 128,2048,2048,128)");
    train_cmd->add_option("--learning-rate", train.learning_rate, "Adam learning rate (default 0.01)");
    train_cmd->add_option("--max-epochs", train.max_epochs, "epoch cap (default 5000)");
    train_cmd->add_option("--patience", train.patience, "early-stopping patience (default 100)");
    train_cmd->add_option("--batch-size", train.batch_size, "0 = full batch (default)");
    train_cmd->add_option("--seed", train.seed, "split/init/shuffle seed")->required();

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on its dataset's test partition");
    eval_cmd->add_option("--model", eval.model, "model file")->required();
    eval_cmd->add_option("--dataset", eval.dataset, "dataset CSV")->required();
    eval_cmd->add_option("--scatter-out", eval.scatter_out, "actual,predicted CSV")->required();
    eval_cmd->add_option("--metrics-out", eval.metrics_out, "metrics JSON")->required();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a GARCH path and its statistics");
    sim_cmd->add_option("--alpha0", sim.alpha0, "")->required();
    sim_cmd->add_option("--alpha1", sim.alpha1, "")->required();
    sim_cmd->add_option("--beta1", sim.beta1, "")->required();
    sim_cmd->add_option("--t-steps", sim.t_steps, "points kept after burn-in")->required();
    sim_cmd->add_option("--burn-in", sim.burn_in, "discarded leading points (default 1000)");
    sim_cmd->add_option("--seed", sim.seed, "rng seed")->required();
    sim_cmd->add_option("--lags", sim.lags, "autocovariance lags (default 1,2,6,10)");
    sim_cmd->add_option("--series-out", sim.series_out, "series CSV path");
    sim_cmd->add_option("--stats-out", sim.stats_out, "stats JSON path");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Recover GARCH parameters from statistics");
    fit_cmd->add_option("--model", fit.model, "trained model file")->required();
    auto* stats_opt = fit_cmd->add_option("--stats", fit.stats, "stats JSON (from simulate)");
    fit_cmd->add_option("--series", fit.series, "series CSV; statistics estimated first")
        ->excludes(stats_opt);
    fit_cmd->add_option("--lags", fit.lags, "lags when estimating from a series");
    fit_cmd->add_option("--out", fit.out, "fit result JSON")->required();
    fit_cmd->add_flag("--oracle", fit.oracle, "also run the exact nonlinear solver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen_data(gen);
        if (train_cmd->parsed()) return cmd_train(train);
        if (eval_cmd->parsed()) return cmd_eval(eval);
        if (sim_cmd->parsed()) return cmd_simulate(sim);
        if (fit_cmd->parsed()) {
            if (fit.stats.empty() && fit.series.empty()) {
                std::cerr << "fit: need --stats or --series\n";
                return 1;
            }
            return cmd_fit(fit);
        }
    } catch (const garchfit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
