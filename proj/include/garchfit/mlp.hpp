#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "garchfit/dataset.hpp"
#include "garchfit/types.hpp"

namespace garchfit {

struct MlpArchitecture {
    int input_dim = 3;
    std::vector<int> hidden_dims{128, 2048, 2048, 128};
    int output_dim = 1;
};

/// Training hyperparameters.  batch_size 0 means one full-batch step per
/// epoch; a positive value means seeded-shuffled mini-batches of that size.
struct TrainConfig {
    double learning_rate = 0.01;
    int max_epochs = 5000;
    int patience = 100;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    int batch_size = 0;
    std::uint64_t seed = 0;
};

struct ModelMeta {
    FeatureSetKind kind;
    std::uint64_t seed = 0;
    int best_epoch = 0;
};

/// Feedforward network with ReLU hidden layers and a linear output unit.
/// weights[h] has shape (dims[h-1] + 1) x dims[h]; row 0 holds the bias
/// weights of the constant unit a0 == 1, rows 1.. the source units.
struct MlpModel {
    MlpArchitecture arch;
    std::vector<Eigen::MatrixXd> weights;
    ScalerParams scaler;
    ModelMeta meta;
};

struct EpochRecord {
    int epoch = 0;  // 1-based
    double train_msd = 0.0;
    double validation_msd = 0.0;
};

using TrainingTrace = std::vector<EpochRecord>;

struct TrainResult {
    MlpModel model;
    TrainingTrace trace;
};

/// Fresh model with seeded uniform He-style weights (+-sqrt(6/fan_in),
/// fan_in counting the bias row), zero training history.
[[nodiscard]] MlpModel init_model(const MlpArchitecture& arch, std::uint64_t seed);

/// Single-sample forward pass over already-scaled features.
/// Throws ShapeMismatch when the arity differs from arch.input_dim.
[[nodiscard]] double forward(const MlpModel& model, std::span<const double> scaled_features);

/// Batched forward pass; inputs are rows of `scaled_inputs`.
[[nodiscard]] Eigen::VectorXd forward_batch(const MlpModel& model,
                                            const Eigen::MatrixXd& scaled_inputs);

/// Mean squared difference.  Throws LengthMismatch on unequal lengths.
[[nodiscard]] double msd_loss(std::span<const double> predictions,
                              std::span<const double> targets);

/// Exact reverse-mode gradients of the batch MSD with respect to every
/// weight (bias rows included).  ReLU subgradient at 0 is taken as 0.
[[nodiscard]] std::vector<Eigen::MatrixXd> backward(const MlpModel& model,
                                                    const Eigen::MatrixXd& inputs,
                                                    const Eigen::VectorXd& targets);

/// Adam on the scaled training partition with per-epoch train/validation MSD
/// tracking and best-validation-snapshot early stopping.  Deterministic
/// given config.seed.  Throws NoValidationRows when split.validate is empty.
[[nodiscard]] TrainResult train(const MlpArchitecture& arch, const TrainConfig& config,
                                const DatasetSplit& split, const ScalerParams& scaler,
                                const FeatureSetKind& kind);

/// Text model file, round-trips forward outputs bit-exactly.
void save_model(const MlpModel& model, const std::filesystem::path& path);
[[nodiscard]] MlpModel load_model(const std::filesystem::path& path);

/// Trace CSV with header epoch,train_msd,validation_msd.
void write_trace_csv(const TrainingTrace& trace, const std::filesystem::path& path,
                     const std::string& provenance);

}  // namespace garchfit
