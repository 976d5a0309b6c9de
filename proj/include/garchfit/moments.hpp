#pragma once

#include <cstdint>

#include "garchfit/types.hpp"

namespace garchfit {

/// a_j = prod_{i=1..j} (2i - 1), the Gaussian even-moment coefficients
/// (E[Z^{2j}] for standard normal Z).  Empty product: a_0 = 1.
[[nodiscard]] std::uint64_t double_factorial_gauss(int j);

/// mu(alpha1, beta1, m) = sum_{j=0..m} C(m,j) a_j alpha1^j beta1^{m-j},
/// i.e. E[(beta1 + alpha1 Z^2)^m].  The 2m-th moment exists iff mu < 1.
[[nodiscard]] double mu(double alpha1, double beta1, int m);

/// 1 - mu(alpha1, beta1, m).  Every moment denominator in this module is
/// computed through this one function so that the recursion and the closed
/// forms share bit-identical denominators near the existence boundary.
[[nodiscard]] double one_minus_mu(double alpha1, double beta1, int m);

/// true iff mu(alpha1, beta1, m) < 1 (the 2m-th moment is finite).
[[nodiscard]] bool moment_exists(double alpha1, double beta1, int m);
[[nodiscard]] bool moment_exists(const GarchParams& p, int m);

/// E(x^{2m}) via the even-moment recursion with base E(x^0) = 1.
/// m in [1, 5].  Throws NonFiniteMoment when any required denominator
/// 1 - mu(.., i) for i <= m is below the singularity guard.
[[nodiscard]] double raw_even_moment(const GarchParams& p, int m);

/// Gamma_{2m} = E(x^{2m}) / E(x^2)^m.  Independent of alpha0.
[[nodiscard]] double standardized_moment(const GarchParams& p, int m);

/// Closed-form kurtosis: 3 + 6 alpha1^2 / (1 - 3 alpha1^2 - 2 alpha1 beta1 - beta1^2).
[[nodiscard]] double gamma4_closed(double alpha1, double beta1);

/// Closed-form sixth standardized moment; exactly 15 at alpha1 = 0.
[[nodiscard]] double gamma6_closed(double alpha1, double beta1);

/// Normalized autocovariance of the squared process at lag n >= 1:
/// [2 alpha1 (1 - alpha1 beta1 - beta1^2) / (1 - 3 alpha1^2 - 2 alpha1 beta1 - beta1^2)]
///   * (alpha1 + beta1)^{n-1}.
[[nodiscard]] double autocov_hat(double alpha1, double beta1, int n);

/// Denominators closer to zero than this throw NonFiniteMoment instead of
/// producing huge, meaningless values.
inline constexpr double kSingularityGuard = 1e-12;

}  // namespace garchfit
