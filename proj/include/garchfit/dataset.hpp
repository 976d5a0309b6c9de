#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "garchfit/types.hpp"

namespace garchfit {

/// One training row: feature triple in, alpha1 target out.
/// features = (E(x^2), Gamma4, third statistic per kind).
struct FeatureVector {
    std::array<double, 3> features{};
    double target_alpha1 = 0.0;
    GarchParams source;
};

struct DatasetSplit {
    std::vector<FeatureVector> train;
    std::vector<FeatureVector> test;
    std::vector<FeatureVector> validate;
};

struct MinMaxColumn {
    double min = 0.0;
    double max = 0.0;
};

/// Per-column min/max of the training partition, features and target.
struct ScalerParams {
    std::array<MinMaxColumn, 3> features{};
    MinMaxColumn target{};
};

/// Evaluate the analytic statistics for each parameter triple.  Row order
/// follows params.  Propagates NonFiniteMoment (unreachable for params that
/// came out of sample_params for the same kind).
[[nodiscard]] std::vector<FeatureVector> build_rows(const std::vector<GarchParams>& params,
                                                    const FeatureSetKind& kind);

/// Seeded uniform permutation, then a contiguous 40/40/20 cut.  Sizes follow
/// the largest-remainder rule with ties resolved toward train, then test.
/// Throws TooFewRows below 5 rows.
[[nodiscard]] DatasetSplit split_40_40_20(std::vector<FeatureVector> rows, std::uint64_t seed);

/// Column-wise min/max of the TRAINING rows only.  Throws DegenerateColumn
/// when any scaled column has max == min, TooFewRows below 2 rows.
[[nodiscard]] ScalerParams fit_scaler(const std::vector<FeatureVector>& train_rows);

/// x -> (x - min) / (max - min); out-of-range inputs pass through linearly.
[[nodiscard]] inline double apply_scaler(const MinMaxColumn& c, double x) {
    return (x - c.min) / (c.max - c.min);
}

/// Exact algebraic inverse of apply_scaler.
[[nodiscard]] inline double invert_scaler(const MinMaxColumn& c, double y) {
    return c.min + y * (c.max - c.min);
}

[[nodiscard]] std::array<double, 3> apply_scaler(const ScalerParams& s,
                                                 const std::array<double, 3>& features);

}  // namespace garchfit
