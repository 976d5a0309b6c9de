#include "garchfit/moments.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "garchfit/errors.hpp"

namespace garchfit {

namespace {

void require_order(int m, int lo, int hi, const char* where) {
    if (m < lo || m > hi) {
        throw std::invalid_argument(std::string(where) + ": moment half-order " +
                                    std::to_string(m) + " outside [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
    }
}

// C(m, j) for the tiny m used here.
double binom(int m, int j) {
    double c = 1.0;
    for (int i = 1; i <= j; ++i) c = c * static_cast<double>(m - i + 1) / static_cast<double>(i);
    return c;
}

}  // namespace

std::uint64_t double_factorial_gauss(int j) {
    if (j < 0) throw std::invalid_argument("double_factorial_gauss: negative index");
    std::uint64_t v = 1;
    for (int i = 1; i <= j; ++i) v *= static_cast<std::uint64_t>(2 * i - 1);
    return v;
}

double mu(double alpha1, double beta1, int m) {
    if (m < 0) throw std::invalid_argument("mu: negative order");
    double acc = 0.0;
    double a1pow = 1.0;
    for (int j = 0; j <= m; ++j) {
        acc += binom(m, j) * static_cast<double>(double_factorial_gauss(j)) * a1pow *
               std::pow(beta1, m - j);
        a1pow *= alpha1;
    }
    return acc;
}

double one_minus_mu(double alpha1, double beta1, int m) {
    return 1.0 - mu(alpha1, beta1, m);
}

bool moment_exists(double alpha1, double beta1, int m) {
    require_order(m, 1, 5, "moment_exists");
    return mu(alpha1, beta1, m) < 1.0;
}

bool moment_exists(const GarchParams& p, int m) {
    return moment_exists(p.alpha1, p.beta1, m);
}

double raw_even_moment(const GarchParams& p, int m) {
    require_order(m, 1, 5, "raw_even_moment");
    // E(x^{2i}) = a_i * [sum_{n<i} E(x^{2n})/a_n * alpha0^{i-n} C(i, i-n) mu_n]
    //                 / (1 - mu_i), with E(x^0) = 1.
    std::array<double, 6> E{};
    E[0] = 1.0;
    for (int i = 1; i <= m; ++i) {
        const double denom = one_minus_mu(p.alpha1, p.beta1, i);
        if (denom <= kSingularityGuard) {
            throw NonFiniteMoment("E(x^" + std::to_string(2 * i) + ") diverges at alpha1=" +
                                  std::to_string(p.alpha1) + ", beta1=" + std::to_string(p.beta1));
        }
        double sum = 0.0;
        for (int n = 0; n < i; ++n) {
            sum += E[n] / static_cast<double>(double_factorial_gauss(n)) *
                   std::pow(p.alpha0, i - n) * binom(i, i - n) * mu(p.alpha1, p.beta1, n);
        }
        E[i] = static_cast<double>(double_factorial_gauss(i)) * sum / denom;
    }
    return E[m];
}

double standardized_moment(const GarchParams& p, int m) {
    require_order(m, 1, 5, "standardized_moment");
    const double e2 = raw_even_moment(p, 1);
    double e2m = 1.0;
    for (int i = 0; i < m; ++i) e2m *= e2;
    return raw_even_moment(p, m) / e2m;
}

double gamma4_closed(double alpha1, double beta1) {
    const double denom = one_minus_mu(alpha1, beta1, 2);
    if (denom <= kSingularityGuard) {
        throw NonFiniteMoment("Gamma4 diverges: 1 - 3a1^2 - 2a1b1 - b1^2 <= 0");
    }
    return 3.0 + 6.0 * alpha1 * alpha1 / denom;
}

double gamma6_closed(double alpha1, double beta1) {
    const double denom = one_minus_mu(alpha1, beta1, 3);
    if (denom <= kSingularityGuard) {
        throw NonFiniteMoment("Gamma6 diverges: 1 - mu(a1,b1,3) <= 0");
    }
    if (alpha1 == 0.0) return 15.0;  // the expression telescopes exactly
    const double d1 = one_minus_mu(alpha1, beta1, 1);  // 1 - a1 - b1
    const double d2 = one_minus_mu(alpha1, beta1, 2);  // 1 - 3a1^2 - 2a1b1 - b1^2
    if (d1 <= kSingularityGuard || d2 <= kSingularityGuard) {
        throw NonFiniteMoment("Gamma6 diverges: lower-order moment singular");
    }
    const double s = alpha1 + beta1;
    const double m2 = beta1 * beta1 + 2.0 * alpha1 * beta1 + 3.0 * alpha1 * alpha1;
    const double inner = 1.0 + 3.0 * s / d1 + 3.0 * (1.0 + 2.0 * s / d1) * m2 / d2;
    return 15.0 * d1 * d1 * d1 * inner / denom;
}

double autocov_hat(double alpha1, double beta1, int n) {
    if (n < 1) throw std::invalid_argument("autocov_hat: lag must be >= 1");
    const double denom = one_minus_mu(alpha1, beta1, 2);
    if (denom <= kSingularityGuard) {
        throw NonFiniteMoment("autocovariance undefined: fourth moment diverges");
    }
    const double prefactor = 2.0 * alpha1 * (1.0 - alpha1 * beta1 - beta1 * beta1) / denom;
    return prefactor * std::pow(alpha1 + beta1, n - 1);
}

}  // namespace garchfit
