#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "garchfit/types.hpp"

namespace garchfit {

/// GARCH(1,1) sample path: sigma2_t = alpha0 + alpha1 x_{t-1}^2 + beta1 sigma2_{t-1},
/// x_t = sigma_t Z_t with standard normal Z_t.  sigma2_0 starts at the
/// unconditional variance; the first burn_in points are discarded.
/// Deterministic given seed (mt19937_64 + Box-Muller normals).
/// Throws NonStationary when alpha1 + beta1 >= 1.
[[nodiscard]] std::vector<double> simulate(const GarchParams& p, long long t_steps,
                                           long long burn_in, std::uint64_t seed);

inline constexpr long long kDefaultBurnIn = 1000;

/// Sample moments and normalized autocovariances of the squared series.
/// Plain averages, no bias corrections; the lag-n autocovariance of x^2 is
/// divided by (mean of x^2)^2.  Throws SeriesTooShort when the series has
/// fewer than max(lags) + 2 points.
[[nodiscard]] EmpiricalStats estimate_stats(std::span<const double> series,
                                            const std::vector<int>& lags);

}  // namespace garchfit
