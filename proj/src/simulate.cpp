#include "garchfit/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "garchfit/errors.hpp"
#include "garchfit/moments.hpp"
#include "garchfit/rng.hpp"

namespace garchfit {

std::vector<double> simulate(const GarchParams& p, long long t_steps, long long burn_in,
                             std::uint64_t seed) {
    if (t_steps < 1) throw std::invalid_argument("simulate: t_steps must be >= 1");
    if (burn_in < 0) throw std::invalid_argument("simulate: burn_in must be >= 0");
    if (!(p.alpha0 > 0.0) || p.alpha1 < 0.0 || p.beta1 < 0.0) {
        throw std::invalid_argument("simulate: alpha0 must be positive, alpha1/beta1 non-negative");
    }
    if (p.alpha1 + p.beta1 >= 1.0) {
        throw NonStationary("alpha1 + beta1 = " + std::to_string(p.alpha1 + p.beta1) + " >= 1");
    }

    Rng rng(seed);
    std::vector<double> series(static_cast<std::size_t>(t_steps));
    double sigma2 = p.alpha0 / (1.0 - p.alpha1 - p.beta1);  // unconditional variance
    double x_prev_sq = sigma2;  // E[x^2] = sigma2 at the stationary start
    for (long long t = -burn_in; t < t_steps; ++t) {
        sigma2 = p.alpha0 + p.alpha1 * x_prev_sq + p.beta1 * sigma2;
        const double x = std::sqrt(sigma2) * rng.normal();
        x_prev_sq = x * x;
        if (t >= 0) series[static_cast<std::size_t>(t)] = x;
    }
    return series;
}

EmpiricalStats estimate_stats(std::span<const double> series, const std::vector<int>& lags) {
    int max_lag = 0;
    for (int lag : lags) {
        if (lag < 1) throw std::invalid_argument("estimate_stats: lags must be >= 1");
        max_lag = std::max(max_lag, lag);
    }
    const std::size_t n = series.size();
    if (n < static_cast<std::size_t>(max_lag) + 2) {
        throw SeriesTooShort("series of length " + std::to_string(n) +
                             " cannot support lag " + std::to_string(max_lag));
    }

    double m2 = 0.0, m4 = 0.0, m6 = 0.0, m8 = 0.0, m10 = 0.0;
    for (double x : series) {
        const double x2 = x * x;
        const double x4 = x2 * x2;
        m2 += x2;
        m4 += x4;
        m6 += x4 * x2;
        m8 += x4 * x4;
        m10 += x4 * x4 * x2;
    }
    const double dn = static_cast<double>(n);
    m2 /= dn;
    m4 /= dn;
    m6 /= dn;
    m8 /= dn;
    m10 /= dn;

    EmpiricalStats stats;
    stats.n_obs = static_cast<long long>(n);
    stats.second_moment = m2;
    stats.gamma4 = m4 / (m2 * m2);
    stats.gamma6 = m6 / (m2 * m2 * m2);
    stats.gamma8 = m8 / (m2 * m2 * m2 * m2);
    stats.gamma10 = m10 / (m2 * m2 * m2 * m2 * m2);

    for (int lag : lags) {
        double cov = 0.0;
        const std::size_t pairs = n - static_cast<std::size_t>(lag);
        for (std::size_t t = 0; t < pairs; ++t) {
            const double a = series[t] * series[t] - m2;
            const double b = series[t + static_cast<std::size_t>(lag)] *
                                 series[t + static_cast<std::size_t>(lag)] -
                             m2;
            cov += a * b;
        }
        cov /= static_cast<double>(pairs);
        stats.autocov_hat[lag] = cov / (m2 * m2);
    }
    return stats;
}

}  // namespace garchfit
