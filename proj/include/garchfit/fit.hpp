#pragma once

#include <vector>

#include "garchfit/mlp.hpp"
#include "garchfit/types.hpp"

namespace garchfit {

/// Outcome of the inverse map: full parameter triple plus diagnostics.
struct FitResult {
    GarchParams params;
    double alpha1_raw = 0.0;  // network output before clamping
    bool clamped = false;
    FeatureSetKind kind;
    double radicand = 0.0;  // argument of the square root in the beta1 inversion
};

/// Network outputs outside (0, alpha1_max] are clamped to this floor / the
/// kind's bound, with FitResult::clamped set.
inline constexpr double kAlpha1ClampFloor = 1e-6;

/// beta1 = sqrt(1 - 2 alpha1^2 - 6 alpha1^2 / (gamma4_emp - 3)) - alpha1.
/// Exact inverse of the closed-form kurtosis.  Throws KurtosisTooLow when
/// gamma4_emp <= 3, NegativeRadicand when alpha1 is too large for the
/// observed kurtosis, BetaOutOfRange when the result leaves [0, 1 - alpha1).
[[nodiscard]] double invert_beta1(double alpha1, double gamma4_emp);

/// alpha0 = sigma2_emp (1 - alpha1 - beta1).  Throws NonStationaryPair when
/// alpha1 + beta1 >= 1.
[[nodiscard]] double invert_alpha0(double sigma2_emp, double alpha1, double beta1);

/// The headline inverse map: statistics in, parameter triple out.  The
/// network predicts alpha1 only; beta1 and alpha0 follow algebraically from
/// the empirical kurtosis and second moment.  Throws MissingStatistic when
/// the model's kind needs a statistic that is absent or non-finite.
[[nodiscard]] FitResult fit(const MlpModel& model, const EmpiricalStats& stats);

/// Feasible alpha1 roots of the third-statistic residual (Gamma6 for the
/// moments-g6 kind, the lag-n autocovariance for autocov kinds), found by
/// grid bracketing plus bisection to |interval| < 1e-12.
[[nodiscard]] std::vector<double> find_alpha1_roots(const EmpiricalStats& stats,
                                                    const FeatureSetKind& kind);

/// Root set of the exact inversion.  The pair (Gamma4, autocov) does not
/// always pin (alpha1, beta1) uniquely: two distinct parameter points can
/// produce identical statistics, so every bracketed root is reported and
/// `ambiguous` is set when there is more than one.  `params` is the root
/// with the smallest alpha1.
struct ExactSolution {
    GarchParams params;
    std::vector<GarchParams> roots;  // ascending alpha1
    bool ambiguous = false;
};

/// Oracle baseline: exact inversion of (sigma2, Gamma4, third statistic) by
/// one-dimensional bracketed root search (alpha1 bisected to 1e-12, beta1
/// and alpha0 recovered algebraically).  Supports moments-g6 and autocov
/// kinds.  Throws NoRootInRange when the statistics are inconsistent with
/// any GARCH(1,1) of the kind.
[[nodiscard]] ExactSolution solve_exact(const EmpiricalStats& stats, const FeatureSetKind& kind);

}  // namespace garchfit
