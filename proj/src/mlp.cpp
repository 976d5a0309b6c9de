#include "garchfit/mlp.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/rng.hpp"

namespace garchfit {

namespace {

std::vector<int> layer_dims(const MlpArchitecture& arch) {
    if (arch.input_dim < 1 || arch.output_dim < 1) {
        throw std::invalid_argument("architecture dims must be >= 1");
    }
    std::vector<int> dims;
    dims.reserve(arch.hidden_dims.size() + 2);
    dims.push_back(arch.input_dim);
    for (int h : arch.hidden_dims) {
        if (h < 1) throw std::invalid_argument("architecture dims must be >= 1");
        dims.push_back(h);
    }
    dims.push_back(arch.output_dim);
    return dims;
}

void check_weight_shapes(const MlpModel& model) {
    const auto dims = layer_dims(model.arch);
    if (model.weights.size() + 1 != dims.size()) {
        throw ShapeMismatch("expected " + std::to_string(dims.size() - 1) + " weight matrices, got " +
                            std::to_string(model.weights.size()));
    }
    for (std::size_t h = 0; h < model.weights.size(); ++h) {
        if (model.weights[h].rows() != dims[h] + 1 || model.weights[h].cols() != dims[h + 1]) {
            throw ShapeMismatch("layer " + std::to_string(h) + " weights are " +
                                std::to_string(model.weights[h].rows()) + "x" +
                                std::to_string(model.weights[h].cols()) + ", expected " +
                                std::to_string(dims[h] + 1) + "x" + std::to_string(dims[h + 1]));
        }
    }
}

// Z = bias row + A_prev * W_body for one layer.
Eigen::MatrixXd net_input(const Eigen::MatrixXd& a_prev, const Eigen::MatrixXd& w) {
    Eigen::MatrixXd z = a_prev * w.bottomRows(w.rows() - 1);
    z.rowwise() += w.row(0);
    return z;
}

struct ForwardPass {
    std::vector<Eigen::MatrixXd> z;  // net inputs per layer
    std::vector<Eigen::MatrixXd> a;  // activations; a[0] is the input batch
};

ForwardPass run_forward(const MlpModel& model, const Eigen::MatrixXd& inputs) {
    const std::size_t n_layers = model.weights.size();
    ForwardPass fp;
    fp.z.resize(n_layers);
    fp.a.resize(n_layers + 1);
    fp.a[0] = inputs;
    for (std::size_t h = 0; h < n_layers; ++h) {
        fp.z[h] = net_input(fp.a[h], model.weights[h]);
        fp.a[h + 1] = (h + 1 < n_layers) ? fp.z[h].cwiseMax(0.0)  // ReLU hidden layers
                                         : fp.z[h];               // linear output
    }
    return fp;
}

double batch_msd(const MlpModel& model, const Eigen::MatrixXd& inputs,
                 const Eigen::VectorXd& targets) {
    const Eigen::VectorXd pred = forward_batch(model, inputs);
    return (pred - targets).squaredNorm() / static_cast<double>(targets.size());
}

}  // namespace

MlpModel init_model(const MlpArchitecture& arch, std::uint64_t seed) {
    const auto dims = layer_dims(arch);
    Rng rng(seed);
    MlpModel model;
    model.arch = arch;
    model.meta.seed = seed;
    model.weights.reserve(dims.size() - 1);
    for (std::size_t h = 0; h + 1 < dims.size(); ++h) {
        const Eigen::Index rows = dims[h] + 1;
        const Eigen::Index cols = dims[h + 1];
        const double limit = std::sqrt(6.0 / static_cast<double>(rows));
        Eigen::MatrixXd w(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            for (Eigen::Index c = 0; c < cols; ++c) {
                w(r, c) = rng.uniform(-limit, limit);
            }
        }
        model.weights.push_back(std::move(w));
    }
    return model;
}

double forward(const MlpModel& model, std::span<const double> scaled_features) {
    if (static_cast<int>(scaled_features.size()) != model.arch.input_dim) {
        throw ShapeMismatch("forward expects " + std::to_string(model.arch.input_dim) +
                            " features, got " + std::to_string(scaled_features.size()));
    }
    Eigen::MatrixXd x(1, model.arch.input_dim);
    for (int i = 0; i < model.arch.input_dim; ++i) x(0, i) = scaled_features[i];
    return forward_batch(model, x)(0);
}

Eigen::VectorXd forward_batch(const MlpModel& model, const Eigen::MatrixXd& scaled_inputs) {
    check_weight_shapes(model);
    if (scaled_inputs.cols() != model.arch.input_dim) {
        throw ShapeMismatch("input batch has " + std::to_string(scaled_inputs.cols()) +
                            " columns, expected " + std::to_string(model.arch.input_dim));
    }
    Eigen::MatrixXd a = scaled_inputs;
    for (std::size_t h = 0; h < model.weights.size(); ++h) {
        Eigen::MatrixXd z = net_input(a, model.weights[h]);
        a = (h + 1 < model.weights.size()) ? z.cwiseMax(0.0) : std::move(z);
    }
    return a.col(0);
}

double msd_loss(std::span<const double> predictions, std::span<const double> targets) {
    if (predictions.size() != targets.size()) {
        throw LengthMismatch("predictions " + std::to_string(predictions.size()) + " vs targets " +
                             std::to_string(targets.size()));
    }
    if (predictions.empty()) throw std::invalid_argument("msd_loss: empty input");
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double d = predictions[i] - targets[i];
        acc += d * d;
    }
    return acc / static_cast<double>(predictions.size());
}

std::vector<Eigen::MatrixXd> backward(const MlpModel& model, const Eigen::MatrixXd& inputs,
                                      const Eigen::VectorXd& targets) {
    check_weight_shapes(model);
    if (inputs.rows() != targets.size() || inputs.rows() == 0) {
        throw ShapeMismatch("backward batch: " + std::to_string(inputs.rows()) + " inputs vs " +
                            std::to_string(targets.size()) + " targets");
    }
    const std::size_t n_layers = model.weights.size();
    const ForwardPass fp = run_forward(model, inputs);
    const double n = static_cast<double>(inputs.rows());

    std::vector<Eigen::MatrixXd> grads(n_layers);
    Eigen::MatrixXd d_a = (2.0 / n) * (fp.a[n_layers] - targets);
    for (std::size_t h = n_layers; h-- > 0;) {
        // Linear output layer; ReLU elsewhere with subgradient 0 at z == 0.
        Eigen::MatrixXd d_z =
            (h + 1 == n_layers)
                ? std::move(d_a)
                : Eigen::MatrixXd(d_a.cwiseProduct(
                      (fp.z[h].array() > 0.0).cast<double>().matrix()));
        grads[h].resize(model.weights[h].rows(), model.weights[h].cols());
        grads[h].row(0) = d_z.colwise().sum();
        grads[h].bottomRows(grads[h].rows() - 1).noalias() = fp.a[h].transpose() * d_z;
        if (h > 0) {
            d_a.noalias() =
                d_z * model.weights[h].bottomRows(model.weights[h].rows() - 1).transpose();
        }
    }
    return grads;
}

namespace {

struct AdamState {
    std::vector<Eigen::MatrixXd> m;
    std::vector<Eigen::MatrixXd> v;
    long step = 0;

    explicit AdamState(const std::vector<Eigen::MatrixXd>& weights) {
        m.reserve(weights.size());
        v.reserve(weights.size());
        for (const auto& w : weights) {
            m.emplace_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
            v.emplace_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
        }
    }

    void update(std::vector<Eigen::MatrixXd>& weights, const std::vector<Eigen::MatrixXd>& grads,
                const TrainConfig& cfg) {
        ++step;
        const double bc1 = 1.0 - std::pow(cfg.adam_beta1, static_cast<double>(step));
        const double bc2 = 1.0 - std::pow(cfg.adam_beta2, static_cast<double>(step));
        for (std::size_t h = 0; h < weights.size(); ++h) {
            m[h] = cfg.adam_beta1 * m[h] + (1.0 - cfg.adam_beta1) * grads[h];
            v[h] = cfg.adam_beta2 * v[h] + (1.0 - cfg.adam_beta2) * grads[h].cwiseProduct(grads[h]);
            weights[h].array() -= cfg.learning_rate * (m[h].array() / bc1) /
                                  ((v[h].array() / bc2).sqrt() + cfg.adam_eps);
        }
    }
};

void to_scaled_matrices(const std::vector<FeatureVector>& rows, const ScalerParams& scaler,
                        Eigen::MatrixXd& x, Eigen::VectorXd& y) {
    x.resize(static_cast<Eigen::Index>(rows.size()), 3);
    y.resize(static_cast<Eigen::Index>(rows.size()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const auto f = apply_scaler(scaler, rows[static_cast<std::size_t>(i)].features);
        x(i, 0) = f[0];
        x(i, 1) = f[1];
        x(i, 2) = f[2];
        y(i) = apply_scaler(scaler.target, rows[static_cast<std::size_t>(i)].target_alpha1);
    }
}

}  // namespace

TrainResult train(const MlpArchitecture& arch, const TrainConfig& config,
                  const DatasetSplit& split, const ScalerParams& scaler,
                  const FeatureSetKind& kind) {
    if (arch.input_dim != 3) {
        throw ShapeMismatch("training datasets carry 3 features, architecture wants " +
                            std::to_string(arch.input_dim));
    }
    if (split.train.empty()) throw TooFewRows("training partition is empty");
    if (split.validate.empty()) throw NoValidationRows("early stopping needs validation rows");
    if (config.learning_rate <= 0.0 || config.max_epochs < 1 || config.patience < 1) {
        throw std::invalid_argument("train: bad config");
    }

    Eigen::MatrixXd x_train, x_val;
    Eigen::VectorXd y_train, y_val;
    to_scaled_matrices(split.train, scaler, x_train, y_train);
    to_scaled_matrices(split.validate, scaler, x_val, y_val);

    MlpModel model = init_model(arch, config.seed);
    model.scaler = scaler;
    model.meta.kind = kind;

    // The init draws and the per-epoch shuffles share one seeded stream.
    Rng shuffle_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    AdamState adam(model.weights);

    TrainResult result;
    result.trace.reserve(static_cast<std::size_t>(config.max_epochs));
    std::vector<Eigen::MatrixXd> best_weights = model.weights;
    double best_val = std::numeric_limits<double>::infinity();
    int best_epoch = 0;
    int epochs_since_improvement = 0;

    std::vector<Eigen::Index> order(static_cast<std::size_t>(x_train.rows()));
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
        if (config.batch_size <= 0) {
            adam.update(model.weights, backward(model, x_train, y_train), config);
        } else {
            shuffle_rng.shuffle(order);
            const Eigen::Index n = x_train.rows();
            const Eigen::Index bs = std::min<Eigen::Index>(config.batch_size, n);
            for (Eigen::Index start = 0; start < n; start += bs) {
                const Eigen::Index len = std::min(bs, n - start);
                Eigen::MatrixXd xb(len, x_train.cols());
                Eigen::VectorXd yb(len);
                for (Eigen::Index i = 0; i < len; ++i) {
                    xb.row(i) = x_train.row(order[static_cast<std::size_t>(start + i)]);
                    yb(i) = y_train(order[static_cast<std::size_t>(start + i)]);
                }
                adam.update(model.weights, backward(model, xb, yb), config);
            }
        }

        EpochRecord rec;
        rec.epoch = epoch;
        rec.train_msd = batch_msd(model, x_train, y_train);
        rec.validation_msd = batch_msd(model, x_val, y_val);
        result.trace.push_back(rec);

        if (rec.validation_msd < best_val) {
            best_val = rec.validation_msd;
            best_weights = model.weights;
            best_epoch = epoch;
            epochs_since_improvement = 0;
        } else {
            ++epochs_since_improvement;
        }
        if (epochs_since_improvement >= config.patience) break;
    }

    model.weights = std::move(best_weights);
    model.meta.best_epoch = best_epoch;
    result.model = std::move(model);
    return result;
}

}  // namespace garchfit
