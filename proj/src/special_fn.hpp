#ifndef MEMKICK_SPECIAL_FN_HPP
#define MEMKICK_SPECIAL_FN_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace memkick {

/// Gamma function on the real line, excluding the poles at 0, -1, -2, ...
/// Lanczos approximation with reflection for x < 0.5; relative error is
/// below 1e-12 on [0.05, 50] (validated against high-precision tables).
/// Throws Error(domain) at the poles and Error(overflow) past x ~ 171.62.
double gamma_fn(double x);

/// Parameters of the two-parameter Mittag-Leffler series
///   E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha*k + beta).
/// Summation stops once the next term drops below tol relative to the
/// partial sum; exceeding max_terms is a convergence error.
struct MlParams {
    double alpha;
    double beta;
    double tol = 1e-14;
    int max_terms = 2000;

    void validate() const;
};

// Validated argument envelope for the series evaluation. Larger |z| (or
// smaller alpha) pushes the series into regimes this implementation does
// not promise to handle.
inline constexpr double kMlMaxAbsZ = 30.0;
inline constexpr double kMlMinAlpha = 0.1;

double mittag_leffler(const MlParams& p, double z);
double mittag_leffler(double alpha, double beta, double z);

/// Memory kernel V_alpha(z) = (z+1)^(alpha-1) - z^(alpha-1), z >= 1.
/// Identically zero at alpha = 1 (memoryless case).
double kernel_v(double alpha, std::int64_t z);

/// Precomputed V_alpha(z) for z = 1..n_max; operator()(z) is 1-based.
struct KernelTable {
    double alpha = 1.0;
    std::vector<double> values;

    double operator()(std::int64_t z) const { return values[static_cast<std::size_t>(z - 1)]; }
    std::int64_t n_max() const { return static_cast<std::int64_t>(values.size()); }
};

KernelTable kernel_table(double alpha, std::int64_t n_max);

}  // namespace memkick

#endif
