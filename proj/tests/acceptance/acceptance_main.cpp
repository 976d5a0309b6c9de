// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure.  Criterion 9 drives the CLI binary (path via --cli or the
// GARCHFIT_CLI environment variable).

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "garchfit/dataset.hpp"
#include "garchfit/errors.hpp"
#include "garchfit/fit.hpp"
#include "garchfit/mlp.hpp"
#include "garchfit/moments.hpp"
#include "garchfit/param_space.hpp"
#include "garchfit/rng.hpp"
#include "garchfit/simulate.hpp"

using namespace garchfit;
namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------- harness

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw Failure{message};
}

std::string g_cli_path;
std::vector<std::string> g_notes;  // extra report lines printed per criterion

void note(const std::string& line) { g_notes.push_back(line); }

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// ------------------------------------------------------- shared fixtures

// Desk-scale configuration (criteria 5 and 6): thresholds pinned here.
constexpr std::size_t kDeskRows = 20000;
constexpr int kDeskMaxEpochs = 1000;
constexpr int kDeskPatience = 100;
constexpr int kDeskBatch = 256;
constexpr double kDeskLearningRate = 0.01;
constexpr double kSlopeLo = 0.85;
constexpr double kSlopeHi = 1.15;
constexpr double kInterceptMax = 0.05;
constexpr double kMsdMax = 1e-3;
constexpr double kDeskTimeLimit = 900.0;  // 15 min per kind
constexpr std::uint64_t kDataSeed = 101;  // shared across kinds
constexpr std::uint64_t kTrainSeed = 202;

struct DeskResult {
    double slope = 0.0;
    double intercept = 0.0;
    double test_msd = 0.0;
    double seconds = 0.0;
    int best_epoch = 0;
    int epochs = 0;
};

DeskResult desk_scale_run(const FeatureSetKind& kind) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto params = sample_params(kind, kDeskRows, kDataSeed);
    const auto rows = build_rows(params, kind);
    const DatasetSplit split = split_40_40_20(rows, kTrainSeed);
    const ScalerParams scaler = fit_scaler(split.train);

    MlpArchitecture arch;
    arch.hidden_dims = {64, 128, 128, 64};
    TrainConfig config;
    config.learning_rate = kDeskLearningRate;
    config.max_epochs = kDeskMaxEpochs;
    config.patience = kDeskPatience;
    config.batch_size = kDeskBatch;
    config.seed = kTrainSeed;
    const TrainResult trained = train(arch, config, split, scaler, kind);

    DeskResult out;
    out.epochs = static_cast<int>(trained.trace.size());
    out.best_epoch = trained.model.meta.best_epoch;

    double mean_a = 0.0, mean_p = 0.0;
    std::vector<double> actual, predicted;
    actual.reserve(split.test.size());
    predicted.reserve(split.test.size());
    for (const FeatureVector& row : split.test) {
        const double y = forward(trained.model, apply_scaler(scaler, row.features));
        predicted.push_back(invert_scaler(scaler.target, y));
        actual.push_back(row.target_alpha1);
        mean_a += actual.back();
        mean_p += predicted.back();
    }
    mean_a /= static_cast<double>(actual.size());
    mean_p /= static_cast<double>(predicted.size());
    double sxx = 0.0, sxy = 0.0, msd = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        sxx += (actual[i] - mean_a) * (actual[i] - mean_a);
        sxy += (actual[i] - mean_a) * (predicted[i] - mean_p);
        msd += (predicted[i] - actual[i]) * (predicted[i] - actual[i]);
    }
    msd /= static_cast<double>(actual.size());
    out.slope = sxy / sxx;
    out.intercept = mean_p - out.slope * mean_a;
    out.test_msd = msd;
    out.seconds = seconds_since(t0);
    return out;
}

void check_desk_bounds(const std::string& label, const DeskResult& r) {
    note(fmt("  %-11s slope %.4f  intercept %+.5f  test MSD %.3e  best epoch %d/%d  %.0f s",
             label.c_str(), r.slope, r.intercept, r.test_msd, r.best_epoch, r.epochs, r.seconds));
    require(r.slope >= kSlopeLo && r.slope <= kSlopeHi,
            label + ": slope " + std::to_string(r.slope) + " outside [0.85, 1.15]");
    require(std::abs(r.intercept) <= kInterceptMax,
            label + ": |intercept| " + std::to_string(std::abs(r.intercept)) + " > 0.05");
    require(r.test_msd <= kMsdMax,
            label + ": test MSD " + std::to_string(r.test_msd) + " > 1e-3");
    require(r.seconds <= kDeskTimeLimit, label + ": run exceeded 15 minutes");
}

EmpiricalStats analytic_stats(const GarchParams& p, const FeatureSetKind& kind) {
    EmpiricalStats stats;
    stats.second_moment = raw_even_moment(p, 1);
    stats.gamma4 = gamma4_closed(p.alpha1, p.beta1);
    if (kind.kind == StatKind::MomentsG6) {
        stats.gamma6 = gamma6_closed(p.alpha1, p.beta1);
    } else if (kind.kind == StatKind::AutocovLag) {
        stats.autocov_hat[kind.lag] = autocov_hat(p.alpha1, p.beta1, kind.lag);
    }
    return stats;
}

// ------------------------------------------------------------- criteria

// 1. Gamma4/Gamma6 via the even-moment recursion match the closed forms to
//    1e-12 relative over >= 1e4 random valid draws, in under 10 s.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(9001);
    const double a1_max = bounds_for(FeatureSetKind::moments_g6()).alpha1_max;
    int done = 0;
    double worst = 0.0;
    while (done < 10000) {
        const double a = rng.uniform(0.0, a1_max);
        const double b = rng.uniform(0.0, 1.0);
        if (a + b >= 1.0 || one_minus_mu(a, b, 3) <= kSingularityGuard) continue;
        ++done;
        const GarchParams p{rng.uniform(1e-6, 1e-3), a, b};
        const double g4r = standardized_moment(p, 2);
        const double g4c = gamma4_closed(a, b);
        const double g6r = standardized_moment(p, 3);
        const double g6c = gamma6_closed(a, b);
        worst = std::max(worst, std::abs(g4r - g4c) / g4c);
        worst = std::max(worst, std::abs(g6r - g6c) / g6c);
    }
    require(worst <= 1e-12, fmt("worst relative gap %.3e > 1e-12", worst));
    const double secs = seconds_since(t0);
    require(secs < 10.0, fmt("took %.1f s (limit 10 s)", secs));
    note(fmt("  recursion vs closed forms: worst relative gap %.3e over 10000 draws", worst));
}

// 2. Inversion round trip: beta1 to 1e-10 absolute, alpha0 to 1e-14
//    relative over >= 1e4 draws, in under 10 s.  alpha1 >= 0.01 keeps the
//    beta1 recovery out of the corner where a double-precision Gamma4
//    (= 3 + O(alpha1^2)) no longer carries the information (conditioning
//    ~ ulp(3)/(12 a1^2 (a1+b1))).
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(9002);
    const double a1_max = bounds_for(FeatureSetKind::moments_g6()).alpha1_max;
    int done = 0;
    double worst_beta = 0.0, worst_alpha0 = 0.0;
    while (done < 10000) {
        const double a = rng.uniform(0.01, a1_max);
        const double b = rng.uniform(0.0, 1.0);
        if (a + b >= 1.0 || one_minus_mu(a, b, 2) <= kSingularityGuard) continue;
        ++done;
        worst_beta = std::max(worst_beta, std::abs(invert_beta1(a, gamma4_closed(a, b)) - b));
        const GarchParams p{rng.uniform(1e-6, 1e-3), a, b};
        const double back = invert_alpha0(raw_even_moment(p, 1), a, b);
        worst_alpha0 = std::max(worst_alpha0, std::abs(back - p.alpha0) / p.alpha0);
    }
    require(worst_beta <= 1e-10, fmt("worst beta1 recovery %.3e > 1e-10", worst_beta));
    require(worst_alpha0 <= 1e-14, fmt("worst alpha0 recovery %.3e > 1e-14", worst_alpha0));
    const double secs = seconds_since(t0);
    require(secs < 10.0, fmt("took %.1f s (limit 10 s)", secs));
    note(fmt("  worst recovery: beta1 %.3e (abs), alpha0 %.3e (rel) over 10000 draws",
             worst_beta, worst_alpha0));
}

// 3. Oracle solver round trip on a 20x20 interior grid per kind.  The
//    (Gamma4, third statistic) inverse is genuinely multi-valued on parts of
//    the region, so the requirement is that the true triple appears among
//    the returned roots to 1e-9 absolute; multiplicity is reported.
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<FeatureSetKind> kinds{FeatureSetKind::moments_g6(),
                                            FeatureSetKind::autocov(2),
                                            FeatureSetKind::autocov(6),
                                            FeatureSetKind::autocov(10)};
    for (const FeatureSetKind& kind : kinds) {
        const double a1_max = bounds_for(kind).alpha1_max;
        const int required_m = required_moment_order(kind);
        int tested = 0, ambiguous = 0;
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
            for (int j = 1; j <= 20; ++j) {
                const GarchParams truth{1e-4, a1_max * i / 21.0, j / 21.0};
                if (truth.alpha1 + truth.beta1 >= 1.0) continue;
                // Interior means comfortably inside the existence region.
                if (one_minus_mu(truth.alpha1, truth.beta1, required_m) <= 1e-6) continue;
                ++tested;
                const ExactSolution sol = solve_exact(analytic_stats(truth, kind), kind);
                if (sol.ambiguous) ++ambiguous;
                double best = 1e300;
                for (const GarchParams& root : sol.roots) {
                    const double err = std::max({std::abs(root.alpha1 - truth.alpha1),
                                                 std::abs(root.beta1 - truth.beta1),
                                                 std::abs(root.alpha0 - truth.alpha0)});
                    best = std::min(best, err);
                }
                worst = std::max(worst, best);
                require(best <= 1e-9,
                        fmt("%s grid point (%.4f, %.4f): best root off by %.3e",
                            to_string(kind).c_str(), truth.alpha1, truth.beta1, best));
            }
        }
        require(tested >= 150, to_string(kind) + ": grid unexpectedly sparse");
        note(fmt("  %-11s %3d interior points, worst recovery %.3e, %d with multiple exact roots",
                 to_string(kind).c_str(), tested, worst, ambiguous));
    }
    const double secs = seconds_since(t0);
    require(secs < 60.0, fmt("took %.1f s (limit 60 s)", secs));
}

// 4. Monte Carlo validation of the autocovariance formula: one frozen-seed
//    1e6-step path must land within 5% (sigma2, Gamma4) / 10% (autocov,
//    decay ratio) of the analytic values, in under 30 s.
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    const GarchParams p{1e-4, 0.1, 0.8};
    const auto series = simulate(p, 1000000, 1000, 20260810);
    const EmpiricalStats stats = estimate_stats(series, {1, 2});

    const double s2_err = std::abs(stats.second_moment / raw_even_moment(p, 1) - 1.0);
    const double g4_err = std::abs(stats.gamma4 / gamma4_closed(0.1, 0.8) - 1.0);
    const double c1_err = std::abs(stats.autocov_hat.at(1) / autocov_hat(0.1, 0.8, 1) - 1.0);
    const double c2_err = std::abs(stats.autocov_hat.at(2) / autocov_hat(0.1, 0.8, 2) - 1.0);
    const double ratio = stats.autocov_hat.at(2) / stats.autocov_hat.at(1);
    const double ratio_err = std::abs(ratio / 0.9 - 1.0);

    require(s2_err < 0.05, fmt("sigma2 off by %.2f%%", 100 * s2_err));
    require(g4_err < 0.05, fmt("Gamma4 off by %.2f%%", 100 * g4_err));
    require(c1_err < 0.10, fmt("autocov lag 1 off by %.2f%%", 100 * c1_err));
    require(c2_err < 0.10, fmt("autocov lag 2 off by %.2f%%", 100 * c2_err));
    require(ratio_err < 0.10, fmt("decay ratio off by %.2f%%", 100 * ratio_err));
    const double secs = seconds_since(t0);
    require(secs < 30.0, fmt("took %.1f s (limit 30 s)", secs));
    note(fmt("  relative errors: sigma2 %.2f%%, Gamma4 %.2f%%, acov1 %.2f%%, acov2 %.2f%%, "
             "ratio %.2f%%",
             100 * s2_err, 100 * g4_err, 100 * c1_err, 100 * c2_err, 100 * ratio_err));
}

DeskResult g_desk_g6, g_desk_cov2, g_desk_cov6, g_desk_cov10;

// 5. Desk-scale ANN fit quality for moments-g6 and autocov-6.
void criterion_5() {
    note(fmt("  config: %zu rows, hidden (64,128,128,64), lr %g, minibatch %d, <=%d epochs, "
             "patience %d, data seed %llu, train seed %llu",
             kDeskRows, kDeskLearningRate, kDeskBatch, kDeskMaxEpochs, kDeskPatience,
             static_cast<unsigned long long>(kDataSeed),
             static_cast<unsigned long long>(kTrainSeed)));
    g_desk_g6 = desk_scale_run(FeatureSetKind::moments_g6());
    check_desk_bounds("moments-g6", g_desk_g6);
    g_desk_cov6 = desk_scale_run(FeatureSetKind::autocov(6));
    check_desk_bounds("autocov-6", g_desk_cov6);
}

// 6. The three autocov lags under shared seeds all meet criterion 5's
//    bounds; their test MSDs are reported side by side (the n=6 superiority
//    claim is recorded as an observation, not asserted).
void criterion_6() {
    g_desk_cov2 = desk_scale_run(FeatureSetKind::autocov(2));
    check_desk_bounds("autocov-2", g_desk_cov2);
    g_desk_cov10 = desk_scale_run(FeatureSetKind::autocov(10));
    check_desk_bounds("autocov-10", g_desk_cov10);

    note(fmt("  test MSD side by side: n=2 %.3e | n=6 %.3e | n=10 %.3e",
             g_desk_cov2.test_msd, g_desk_cov6.test_msd, g_desk_cov10.test_msd));
    const bool n6_best = g_desk_cov6.test_msd <= g_desk_cov2.test_msd &&
                         g_desk_cov6.test_msd <= g_desk_cov10.test_msd;
    note(fmt("  ordering observation: n=6 %s the best of the three at desk scale",
             n6_best ? "is" : "is NOT"));
}

// 7. Gradient check: backward vs central finite differences over >= 100
//    random small architectures, every weight within 1e-5 absolute, < 30 s.
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(9007);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        MlpArchitecture arch;
        arch.input_dim = 3;
        const int n_hidden = 1 + static_cast<int>(rng.below(3));
        arch.hidden_dims.clear();
        for (int i = 0; i < n_hidden; ++i) {
            arch.hidden_dims.push_back(1 + static_cast<int>(rng.below(8)));
        }
        MlpModel model = init_model(arch, 7000 + static_cast<std::uint64_t>(trial));

        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.below(16));
        Eigen::MatrixXd x(n, 3);
        Eigen::VectorXd y(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            x(i, 0) = rng.uniform01();
            x(i, 1) = rng.uniform01();
            x(i, 2) = rng.uniform01();
            y(i) = rng.uniform01();
        }
        const auto loss = [&]() {
            return (forward_batch(model, x) - y).squaredNorm() / static_cast<double>(n);
        };
        const auto grads = backward(model, x, y);
        constexpr double step = 1e-6;
        for (std::size_t h = 0; h < model.weights.size(); ++h) {
            for (Eigen::Index rr = 0; rr < model.weights[h].rows(); ++rr) {
                for (Eigen::Index cc = 0; cc < model.weights[h].cols(); ++cc) {
                    const double saved = model.weights[h](rr, cc);
                    model.weights[h](rr, cc) = saved + step;
                    const double up = loss();
                    model.weights[h](rr, cc) = saved - step;
                    const double down = loss();
                    model.weights[h](rr, cc) = saved;
                    const double fd = (up - down) / (2.0 * step);
                    worst = std::max(worst, std::abs(grads[h](rr, cc) - fd));
                }
            }
        }
    }
    require(worst <= 1e-5, fmt("worst |analytic - finite difference| %.3e > 1e-5", worst));
    const double secs = seconds_since(t0);
    require(secs < 30.0, fmt("took %.1f s (limit 30 s)", secs));
    note(fmt("  worst gradient deviation %.3e over 100 architectures", worst));
}

// 8. Early-stopping contract: with an injected worsening validation curve
//    the returned model reproduces the minimal recorded validation MSD
//    exactly.
void criterion_8() {
    Rng rng(9008);
    const auto make_rows = [&](std::size_t n) {
        std::vector<FeatureVector> rows(n);
        for (auto& row : rows) {
            row.features = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
            row.target_alpha1 = row.features[0];
        }
        return rows;
    };
    DatasetSplit split;
    split.train = make_rows(64);
    split.test = make_rows(8);
    split.validate = make_rows(32);
    // Train targets far above the fresh network's range, validation targets
    // far below: every useful training step worsens validation.
    for (auto& row : split.train) row.target_alpha1 += 100.0;
    for (auto& row : split.validate) row.target_alpha1 = -100.0;

    ScalerParams identity;
    for (auto& c : identity.features) c = {0.0, 1.0};
    identity.target = {0.0, 1.0};

    MlpArchitecture arch;
    arch.hidden_dims = {6};
    TrainConfig config;
    config.max_epochs = 200;
    config.patience = 5;
    config.seed = 4242;
    const TrainResult r = train(arch, config, split, identity, FeatureSetKind::moments_g6());

    double min_val = 1e300;
    int min_epoch = 0;
    for (const EpochRecord& rec : r.trace) {
        if (rec.validation_msd < min_val) {
            min_val = rec.validation_msd;
            min_epoch = rec.epoch;
        }
    }
    require(r.model.meta.best_epoch == min_epoch, "returned snapshot is not the trace minimum");
    require(r.trace.size() == static_cast<std::size_t>(min_epoch + config.patience),
            "training did not stop right after `patience` non-improving epochs");

    Eigen::MatrixXd xv(static_cast<Eigen::Index>(split.validate.size()), 3);
    Eigen::VectorXd yv(static_cast<Eigen::Index>(split.validate.size()));
    for (Eigen::Index i = 0; i < xv.rows(); ++i) {
        const auto& row = split.validate[static_cast<std::size_t>(i)];
        xv(i, 0) = row.features[0];
        xv(i, 1) = row.features[1];
        xv(i, 2) = row.features[2];
        yv(i) = row.target_alpha1;
    }
    const double recomputed =
        (forward_batch(r.model, xv) - yv).squaredNorm() / static_cast<double>(yv.size());
    require(recomputed == min_val, "snapshot validation MSD differs from the recorded minimum");
    note(fmt("  stopped after epoch %zu, kept epoch %d, snapshot MSD matches trace exactly",
             r.trace.size(), min_epoch));
}

// 9. gen-data / train / simulate re-runs with identical seeds produce
//    byte-identical outputs (driven through the CLI).
void criterion_9() {
    require(!g_cli_path.empty(), "CLI path not provided (--cli or GARCHFIT_CLI)");
    const fs::path dir = fs::temp_directory_path() / "garchfit_acceptance";
    fs::create_directories(dir);

    const auto run = [&](const std::string& args) {
        const std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "command failed: " + cmd);
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const auto rerun_identical = [&](const std::string& what, const std::string& args_template,
                                     const std::vector<std::string>& outputs) {
        for (const char* tag : {"a", "b"}) {
            std::string args = args_template;
            std::string::size_type pos;
            while ((pos = args.find("{}")) != std::string::npos) {
                args.replace(pos, 2, tag);
            }
            run(args);
        }
        for (const std::string& output : outputs) {
            std::string a = output, b = output;
            a.replace(a.find("{}"), 2, "a");
            b.replace(b.find("{}"), 2, "b");
            // Provenance lines embed the differing output paths; the payload
            // beneath them must match byte for byte.
            std::string ca = slurp(a), cb = slurp(b);
            if (ca.rfind("# ", 0) == 0) ca = ca.substr(ca.find('\n') + 1);
            if (cb.rfind("# ", 0) == 0) cb = cb.substr(cb.find('\n') + 1);
            require(!ca.empty() && ca == cb, what + ": " + a + " and " + b + " differ");
        }
    };

    const std::string d = dir.string();
    rerun_identical("gen-data",
                    "gen-data --kind autocov-6 --count 800 --seed 31 --out " + d +
                        "/det_{}.csv --summary " + d + "/det_{}.summary.json",
                    {d + "/det_{}.csv"});
    run("gen-data --kind moments-g6 --count 600 --seed 32 --out " + d + "/train_input.csv");
    rerun_identical("train",
                    "train --dataset " + d + "/train_input.csv --model-out " + d +
                        "/det_{}.model --trace-out " + d +
                        "/det_{}.trace.csv --hidden-dims 8,8 --max-epochs 25 --batch-size 32 "
                        "--seed 33",
                    {d + "/det_{}.model", d + "/det_{}.trace.csv"});
    rerun_identical("simulate",
                    "simulate --alpha0 1e-4 --alpha1 0.12 --beta1 0.75 --t-steps 20000 "
                    "--burn-in 500 --seed 34 --lags 1,2,6 --series-out " + d +
                        "/det_{}.series.csv --stats-out " + d + "/det_{}.stats.json",
                    {d + "/det_{}.series.csv", d + "/det_{}.stats.json"});
    note("  gen-data, train, simulate re-runs are byte-identical (CLI)");
}

struct Criterion {
    int id;
    std::string name;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    }
    if (g_cli_path.empty()) {
        if (const char* env = std::getenv("GARCHFIT_CLI")) g_cli_path = env;
    }

    const std::vector<Criterion> criteria{
        {1, "closed-form consistency (recursion vs Gamma4/Gamma6, 1e-12)", criterion_1},
        {2, "algebraic inversion round trip (beta1 1e-10, alpha0 1e-14)", criterion_2},
        {3, "oracle solver round trip on 20x20 grids (1e-9)", criterion_3},
        {4, "Monte Carlo validation of the autocovariance formula", criterion_4},
        {5, "desk-scale ANN fit quality (moments-g6, autocov-6)", criterion_5},
        {6, "autocov lag sweep (n=2,6,10) under shared seeds", criterion_6},
        {7, "gradient check vs central finite differences (1e-5)", criterion_7},
        {8, "early-stopping snapshot contract", criterion_8},
        {9, "seeded determinism of gen-data / train / simulate", criterion_9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        g_notes.clear();
        const auto t0 = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.body();
        } catch (const Failure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double secs = seconds_since(t0);
        if (failure.empty()) {
            std::printf("[PASS] criterion %d: %s (%.1f s)\n", c.id, c.name.c_str(), secs);
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%.1f s)\n       %s\n", c.id, c.name.c_str(),
                        secs, failure.c_str());
        }
        for (const std::string& line : g_notes) std::printf("%s\n", line.c_str());
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
