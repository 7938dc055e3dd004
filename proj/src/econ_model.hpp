#ifndef MEMKICK_ECON_MODEL_HPP
#define MEMKICK_ECON_MODEL_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <variant>

#include "error.hpp"

namespace memkick {

/// Fractional order alpha > 0 with its integer bracket N, N-1 < alpha <= N.
/// The bracket fixes the state dimension of every map of that order.
struct FractionalOrder {
    double value = 1.0;
    int bracket_n = 1;

    static FractionalOrder of(double alpha);
    bool is_integer() const { return value == static_cast<double>(bracket_n); }
};

/// Growth-model parameters: net-investment norm m in (0,1), accelerator
/// coefficient v > 0, kick period T > 0 (dimensionless time), order alpha.
struct GrowthParams {
    double m;
    double v;
    double T;
    FractionalOrder alpha;

    static GrowthParams make(double m, double v, double T, double alpha);
};

/// Linear output-price term F(Y) = a*Y - b.
struct LinearPrice {
    double a = 0.0;
    double b = 0.0;
    double operator()(double y) const { return a * y - b; }
};

/// Burst amplitude as a function of output: linear form or arbitrary
/// pointwise map (must be continuous at kick instants).
class OutputFunction {
public:
    OutputFunction() : linear_(LinearPrice{}), has_linear_(true) {}

    static OutputFunction linear(double a, double b) {
        OutputFunction f;
        f.linear_ = LinearPrice{a, b};
        f.has_linear_ = true;
        return f;
    }
    static OutputFunction custom(std::function<double(double)> fn) {
        OutputFunction f;
        f.custom_ = std::move(fn);
        f.has_linear_ = false;
        return f;
    }

    double operator()(double y) const { return has_linear_ ? linear_(y) : custom_(y); }
    bool is_linear() const { return has_linear_; }
    const LinearPrice& as_linear() const {
        if (!has_linear_) fail(errc::invalid_argument, "F: linear price form required");
        return linear_;
    }

private:
    LinearPrice linear_;
    std::function<double(double)> custom_;
    bool has_linear_ = true;
};

// --- inter-burst price shape G(Y) -------------------------------------

struct ConstantG {
    double P0;  // > 0
};
struct PowerG {
    double rho;  // != 0
    double j;    // != 0; j = 1 recovers direct proportionality
};
using GCase = std::variant<ConstantG, PowerG>;

void validate(const GCase& g);
double g_value(const GCase& g, double y);
/// The constant C associated with the case (P0, or rho for power laws).
double g_constant(const GCase& g);

/// R(y): the change of variable that linearizes the inter-burst growth,
/// with the multiplicative constant absorbed so that the forcing constant
/// is exactly g_constant(). ConstantG: R = ln y. PowerG: R = -(1/j) y^-j.
double r_transform(const GCase& g, double y);
/// Inverse transform; throws Error(undefined) outside the range of R.
double r_inverse(const GCase& g, double r);
bool r_inverse_defined(const GCase& g, double r);

/// Effective kick amplitude entering the R-space maps:
/// g_constant * F(y) / G(y). For ConstantG this is just F(y); for
/// PowerG(rho, j) it is F(y) * y^-j.
double effective_kick(const GCase& g, const OutputFunction& f, double y);

// --- price specifications --------------------------------------------

/// Price consisting solely of periodic bursts: P(Y) = -F(Y) sum_k delta(t/T - k).
struct BurstOnly {
    OutputFunction F;
};

/// Mixed price: P(Y) = p*G(Y) - q*F(Y) sum_k delta(t/T - k), with q = 1 - p.
struct MixedPrice {
    double p;
    double q;
    GCase G;
    OutputFunction F;

    static MixedPrice make(double p, GCase g, OutputFunction f);
};

using PriceSpec = std::variant<BurstOnly, MixedPrice>;

// --- inter-burst forcing C(t) ------------------------------------------

struct ConstantC {
    double C;
};
struct PowerC {
    double C;
    double beta;  // > -1
};
struct MittagLefflerC {
    double C;
    double beta;
    double mu;
    double gamma;
};
using ForcingSpec = std::variant<ConstantC, PowerC, MittagLefflerC>;

void validate(const ForcingSpec& f);

// --- logistic normalizations -------------------------------------------

/// Parameters of the normalized logistic forms. lambda/scale are the
/// memoryless (alpha = 1) quantities; the _a group carries the
/// alpha-dependent quantities. Identities: lambda_a = 1 + mu_a and
/// eta_a = lambda_a / mu_a (when b != 0).
struct LogisticNormalization {
    double alpha = 1.0;
    double lambda = 0.0;
    double scale = 0.0;
    double lambda_a = 0.0;
    double mu_a = 0.0;
    double eta_a = std::numeric_limits<double>::quiet_NaN();
    double scale_a = 0.0;
};

/// Memoryless normalization: lambda = 1 + m b T / v, scale = m a T / (v + m b T).
LogisticNormalization normalize_standard(const GrowthParams& g, const LinearPrice& f);

/// Memory normalization for 0 < alpha <= 1; requires a != 0 and b != 0
/// (eta is undefined at b = 0 -- iterate the raw map in that case).
LogisticNormalization normalize_memory(const GrowthParams& g, const LinearPrice& f);

}  // namespace memkick

#endif
