#include "garchfit/param_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/moments.hpp"
#include "garchfit/rng.hpp"

namespace garchfit {

ParamBounds bounds_for(const FeatureSetKind& kind) {
    ParamBounds b;
    switch (kind.kind) {
        case StatKind::MomentsG6: b.alpha1_max = std::cbrt(1.0 / 15.0); break;
        case StatKind::MomentsG8: b.alpha1_max = std::pow(1.0 / 105.0, 0.25); break;
        case StatKind::MomentsG10: b.alpha1_max = std::pow(1.0 / 945.0, 0.2); break;
        case StatKind::AutocovLag: b.alpha1_max = std::sqrt(1.0 / 3.0); break;
    }
    return b;
}

std::vector<GarchParams> sample_params(const FeatureSetKind& kind, std::size_t count,
                                       std::uint64_t seed, Alpha0Scale scale) {
    return sample_params(bounds_for(kind), required_moment_order(kind), count, seed, scale);
}

std::vector<GarchParams> sample_params(const ParamBounds& bounds, int required_m,
                                       std::size_t count, std::uint64_t seed, Alpha0Scale scale) {
    if (count == 0) throw std::invalid_argument("sample_params: count must be >= 1");
    if (!(bounds.alpha0_min > 0.0) || !(bounds.alpha0_max > bounds.alpha0_min) ||
        !(bounds.alpha1_max > 0.0) || !(bounds.beta1_max > 0.0)) {
        throw std::invalid_argument("sample_params: malformed bounds");
    }

    Rng rng(seed);
    const double log_a0_min = std::log(bounds.alpha0_min);
    const double log_a0_max = std::log(bounds.alpha0_max);

    std::vector<GarchParams> out;
    out.reserve(count);
    std::uint64_t attempts = 0;
    while (out.size() < count) {
        GarchParams p;
        p.alpha0 = scale == Alpha0Scale::Linear
                       ? rng.uniform(bounds.alpha0_min, bounds.alpha0_max)
                       : std::exp(rng.uniform(log_a0_min, log_a0_max));
        p.alpha1 = rng.uniform(0.0, bounds.alpha1_max);
        p.beta1 = rng.uniform(0.0, bounds.beta1_max);
        ++attempts;

        // Accept only draws the downstream moment evaluation can handle:
        // strict existence plus the same singularity margin moments-core uses.
        const bool ok = p.alpha1 + p.beta1 < 1.0 &&
                        one_minus_mu(p.alpha1, p.beta1, required_m) > kSingularityGuard;
        if (ok) out.push_back(p);

        if (attempts >= 10000 && attempts % 1000 == 0) {
            const double rate = static_cast<double>(out.size()) / static_cast<double>(attempts);
            if (rate < 1e-3) {
                throw RejectionStall("acceptance rate " + std::to_string(rate) + " after " +
                                     std::to_string(attempts) + " attempts; region misconfigured");
            }
        }
    }
    return out;
}

}  // namespace garchfit
