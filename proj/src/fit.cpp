#include "garchfit/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/moments.hpp"
#include "garchfit/param_space.hpp"

namespace garchfit {

namespace {

struct Beta1Inversion {
    double beta1 = 0.0;
    double radicand = 0.0;
};

Beta1Inversion beta1_inversion(double alpha1, double gamma4_emp) {
    if (!(alpha1 > 0.0)) throw std::invalid_argument("invert_beta1: alpha1 must be positive");
    if (!(gamma4_emp > 3.0)) {
        throw KurtosisTooLow("Gamma4 = " + std::to_string(gamma4_emp) +
                             " <= 3; GARCH with alpha1 > 0 cannot produce it");
    }
    Beta1Inversion inv;
    inv.radicand = 1.0 - 2.0 * alpha1 * alpha1 - 6.0 * alpha1 * alpha1 / (gamma4_emp - 3.0);
    if (inv.radicand < 0.0) {
        throw NegativeRadicand("alpha1 = " + std::to_string(alpha1) +
                               " too large for Gamma4 = " + std::to_string(gamma4_emp) +
                               " (radicand " + std::to_string(inv.radicand) + ")");
    }
    inv.beta1 = std::sqrt(inv.radicand) - alpha1;
    if (inv.beta1 < 0.0 || inv.beta1 >= 1.0 - alpha1) {
        throw BetaOutOfRange("beta1 = " + std::to_string(inv.beta1) + " outside [0, 1 - alpha1)");
    }
    return inv;
}

double third_statistic(const EmpiricalStats& stats, const FeatureSetKind& kind) {
    switch (kind.kind) {
        case StatKind::MomentsG6: return stats.gamma6;
        case StatKind::MomentsG8: return stats.gamma8;
        case StatKind::MomentsG10: return stats.gamma10;
        case StatKind::AutocovLag: {
            const auto it = stats.autocov_hat.find(kind.lag);
            if (it == stats.autocov_hat.end()) {
                throw MissingStatistic("stats carry no autocovariance at lag " +
                                       std::to_string(kind.lag));
            }
            return it->second;
        }
    }
    throw MissingStatistic("unknown feature-set kind");
}

}  // namespace

double invert_beta1(double alpha1, double gamma4_emp) {
    return beta1_inversion(alpha1, gamma4_emp).beta1;
}

double invert_alpha0(double sigma2_emp, double alpha1, double beta1) {
    if (!(sigma2_emp > 0.0)) throw std::invalid_argument("invert_alpha0: sigma2 must be positive");
    if (alpha1 + beta1 >= 1.0) {
        throw NonStationaryPair("alpha1 + beta1 = " + std::to_string(alpha1 + beta1) + " >= 1");
    }
    // 1 - alpha1 - beta1 through the same helper the forward moment uses, so
    // the round trip through the second moment cancels bit-for-bit.
    return sigma2_emp * one_minus_mu(alpha1, beta1, 1);
}

FitResult fit(const MlpModel& model, const EmpiricalStats& stats) {
    const FeatureSetKind kind = model.meta.kind;
    const std::array<double, 3> features{stats.second_moment, stats.gamma4,
                                         third_statistic(stats, kind)};
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(features[static_cast<std::size_t>(i)])) {
            throw MissingStatistic("feature " + std::to_string(i + 1) + " for kind " +
                                   to_string(kind) + " is missing or non-finite");
        }
    }

    FitResult result;
    result.kind = kind;
    const double scaled_out = forward(model, apply_scaler(model.scaler, features));
    result.alpha1_raw = invert_scaler(model.scaler.target, scaled_out);

    const double alpha1_max = bounds_for(kind).alpha1_max;
    double alpha1 = result.alpha1_raw;
    if (alpha1 < kAlpha1ClampFloor || alpha1 > alpha1_max) {
        alpha1 = std::clamp(alpha1, kAlpha1ClampFloor, alpha1_max);
        result.clamped = true;
    }

    const Beta1Inversion inv = beta1_inversion(alpha1, stats.gamma4);
    result.radicand = inv.radicand;
    result.params.alpha1 = alpha1;
    result.params.beta1 = inv.beta1;
    result.params.alpha0 = invert_alpha0(stats.second_moment, alpha1, inv.beta1);

    // The inversion guarantees these up to rounding; a violation means the
    // statistics were inconsistent, which must surface as an error.
    if (!params_valid(result.params) || !moment_exists(result.params, 2)) {
        throw NonFiniteMoment("fitted parameters violate moment existence");
    }
    return result;
}

std::vector<double> find_alpha1_roots(const EmpiricalStats& stats, const FeatureSetKind& kind) {
    if (kind.kind == StatKind::MomentsG8 || kind.kind == StatKind::MomentsG10) {
        throw std::invalid_argument("solve_exact supports moments-g6 and autocov kinds only");
    }
    if (!(stats.gamma4 > 3.0)) {
        throw KurtosisTooLow("Gamma4 = " + std::to_string(stats.gamma4) + " <= 3");
    }
    const double target = third_statistic(stats, kind);
    if (!std::isfinite(target)) {
        throw MissingStatistic("third statistic for kind " + to_string(kind) + " is non-finite");
    }

    // Feasible alpha1 interval: beta1 >= 0 caps alpha1 at 1/sqrt(3 + 6/(g4-3)),
    // the kind's finiteness bound caps it as well.
    const double beta_cap = 1.0 / std::sqrt(3.0 + 6.0 / (stats.gamma4 - 3.0));
    const double hi = std::min(bounds_for(kind).alpha1_max, beta_cap);

    const auto residual = [&](double alpha1) -> double {
        const Beta1Inversion inv = beta1_inversion(alpha1, stats.gamma4);
        if (kind.kind == StatKind::MomentsG6) {
            // Treat a divergent Gamma6 as +infinity so brackets stay ordered.
            if (one_minus_mu(alpha1, inv.beta1, 3) <= kSingularityGuard) {
                return std::numeric_limits<double>::infinity();
            }
            return gamma6_closed(alpha1, inv.beta1) - target;
        }
        return autocov_hat(alpha1, inv.beta1, kind.lag) - target;
    };

    // Root pairs can sit ~5e-4 apart (near-tangent residuals), so the scan
    // needs cells well below that to bracket both.
    constexpr int kGridCells = 20000;
    constexpr double kBisectTol = 1e-12;
    std::vector<double> roots;
    double prev_a = std::numeric_limits<double>::quiet_NaN();
    double prev_r = std::numeric_limits<double>::quiet_NaN();
    for (int i = 1; i < kGridCells; ++i) {
        const double a = hi * static_cast<double>(i) / kGridCells;
        const double r = residual(a);
        if (r == 0.0) {
            roots.push_back(a);  // exact hit; skip the bracket on either side
        } else if (!std::isnan(prev_r) && prev_r != 0.0) {
            if ((r > 0.0) != (prev_r > 0.0)) {
                double lo_a = prev_a, hi_a = a, lo_r = prev_r;
                while (hi_a - lo_a > kBisectTol) {
                    const double mid = 0.5 * (lo_a + hi_a);
                    const double mr = residual(mid);
                    if ((mr > 0.0) == (lo_r > 0.0)) {
                        lo_a = mid;
                        lo_r = mr;
                    } else {
                        hi_a = mid;
                    }
                }
                roots.push_back(0.5 * (lo_a + hi_a));
            }
        }
        prev_a = a;
        prev_r = r;
    }
    return roots;
}

ExactSolution solve_exact(const EmpiricalStats& stats, const FeatureSetKind& kind) {
    if (!(stats.second_moment > 0.0)) {
        throw MissingStatistic("second moment must be positive for solve_exact");
    }
    const std::vector<double> roots = find_alpha1_roots(stats, kind);
    if (roots.empty()) {
        throw NoRootInRange("statistics are inconsistent with any GARCH(1,1) of kind " +
                            to_string(kind));
    }
    ExactSolution solution;
    for (double alpha1 : roots) {
        GarchParams p;
        p.alpha1 = alpha1;
        p.beta1 = invert_beta1(alpha1, stats.gamma4);
        p.alpha0 = invert_alpha0(stats.second_moment, alpha1, p.beta1);
        solution.roots.push_back(p);
    }
    solution.params = solution.roots.front();
    solution.ambiguous = solution.roots.size() > 1;
    return solution;
}

}  // namespace garchfit
