#pragma once

#include <cstdint>
#include <vector>

#include "garchfit/types.hpp"

namespace garchfit {

/// Sampling rectangle for one feature-set kind.  alpha1_max is the
/// finiteness bound of the kind's highest statistic at beta1 = 0.
struct ParamBounds {
    double alpha1_max = 0.0;
    double alpha0_min = 1e-6;
    double alpha0_max = 1e-3;
    double beta1_max = 1.0;
};

enum class Alpha0Scale { Linear, LogUniform };

/// Bounds table: (1/15)^(1/3) for Gamma6, (1/105)^(1/4) for Gamma8,
/// (1/945)^(1/5) for Gamma10, (1/3)^(1/2) for autocovariance kinds.
[[nodiscard]] ParamBounds bounds_for(const FeatureSetKind& kind);

/// Uniform rejection sampling over bounds: alpha0 on [alpha0_min, alpha0_max]
/// (linear by default), (alpha1, beta1) on [0, alpha1_max] x [0, beta1_max);
/// draws failing the kind's moment-existence requirement or alpha1+beta1 < 1
/// are rejected.  Deterministic given seed.  Throws RejectionStall when the
/// acceptance rate drops below 1e-3.
[[nodiscard]] std::vector<GarchParams> sample_params(const FeatureSetKind& kind,
                                                     std::size_t count, std::uint64_t seed,
                                                     Alpha0Scale scale = Alpha0Scale::Linear);

/// Same sampler against explicit bounds and required moment half-order;
/// lets callers (and tests) drive misconfigured regions directly.
[[nodiscard]] std::vector<GarchParams> sample_params(const ParamBounds& bounds, int required_m,
                                                     std::size_t count, std::uint64_t seed,
                                                     Alpha0Scale scale = Alpha0Scale::Linear);

}  // namespace garchfit
