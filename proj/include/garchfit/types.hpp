#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace garchfit {

/// GARCH(1,1) parameter triple.  Valid when alpha0 > 0, alpha1 >= 0,
/// beta1 >= 0 and alpha1 + beta1 < 1 (second-moment stationarity).
struct GarchParams {
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    double beta1 = 0.0;
};

[[nodiscard]] inline bool params_valid(const GarchParams& p) noexcept {
    return std::isfinite(p.alpha0) && std::isfinite(p.alpha1) && std::isfinite(p.beta1) &&
           p.alpha0 > 0.0 && p.alpha1 >= 0.0 && p.beta1 >= 0.0 && p.alpha1 + p.beta1 < 1.0;
}

/// Which statistic triple feeds the network: (sigma^2, Gamma4, X) where X is
/// Gamma6 / Gamma8 / Gamma10 or the normalized autocovariance at some lag.
enum class StatKind { MomentsG6, MomentsG8, MomentsG10, AutocovLag };

struct FeatureSetKind {
    StatKind kind = StatKind::MomentsG6;
    int lag = 0;  // meaningful only for AutocovLag, n >= 1

    static FeatureSetKind moments_g6() { return {StatKind::MomentsG6, 0}; }
    static FeatureSetKind moments_g8() { return {StatKind::MomentsG8, 0}; }
    static FeatureSetKind moments_g10() { return {StatKind::MomentsG10, 0}; }
    static FeatureSetKind autocov(int n) { return {StatKind::AutocovLag, n}; }

    friend bool operator==(const FeatureSetKind& a, const FeatureSetKind& b) {
        return a.kind == b.kind && (a.kind != StatKind::AutocovLag || a.lag == b.lag);
    }
    friend bool operator!=(const FeatureSetKind& a, const FeatureSetKind& b) { return !(a == b); }
};

/// Stable textual form used in CSV, model files and CLI flags:
/// "moments-g6" | "moments-g8" | "moments-g10" | "autocov-<n>".
[[nodiscard]] std::string to_string(const FeatureSetKind& kind);

/// Inverse of to_string; throws FormatError on anything else.
[[nodiscard]] FeatureSetKind parse_kind(const std::string& text);

/// Half-order m of the highest moment the kind needs to exist:
/// Gamma6 -> 3, Gamma8 -> 4, Gamma10 -> 5, autocovariance -> 2.
[[nodiscard]] int required_moment_order(const FeatureSetKind& kind) noexcept;

/// Moment/autocovariance estimates from a return series (or loaded from a
/// stats file).  Fields a given pipeline does not need may be NaN.
struct EmpiricalStats {
    double second_moment = std::numeric_limits<double>::quiet_NaN();
    double gamma4 = std::numeric_limits<double>::quiet_NaN();
    double gamma6 = std::numeric_limits<double>::quiet_NaN();
    double gamma8 = std::numeric_limits<double>::quiet_NaN();
    double gamma10 = std::numeric_limits<double>::quiet_NaN();
    std::map<int, double> autocov_hat;  // lag -> normalized autocovariance
    long long n_obs = 0;
};

}  // namespace garchfit
