#include "econ_model.hpp"

#include <cmath>
#include <limits>

#include "special_fn.hpp"

namespace memkick {

FractionalOrder FractionalOrder::of(double alpha) {
    require(std::isfinite(alpha) && alpha > 0.0, "alpha", "> 0");
    const double fl = std::floor(alpha);
    const int n = (alpha == fl) ? static_cast<int>(fl) : static_cast<int>(fl) + 1;
    return FractionalOrder{alpha, n};
}

GrowthParams GrowthParams::make(double m, double v, double T, double alpha) {
    require(m > 0.0 && m < 1.0, "m", "0 < m < 1");
    require(v > 0.0 && std::isfinite(v), "v", "> 0");
    require(T > 0.0 && std::isfinite(T), "T", "> 0");
    return GrowthParams{m, v, T, FractionalOrder::of(alpha)};
}

void validate(const GCase& g) {
    if (const auto* c = std::get_if<ConstantG>(&g)) {
        require(c->P0 > 0.0 && std::isfinite(c->P0), "P0", "> 0");
    } else {
        const auto& pg = std::get<PowerG>(g);
        require(pg.rho != 0.0 && std::isfinite(pg.rho), "rho", "!= 0");
        require(pg.j != 0.0 && std::isfinite(pg.j), "j", "!= 0");
    }
}

double g_value(const GCase& g, double y) {
    if (const auto* c = std::get_if<ConstantG>(&g)) return c->P0;
    const auto& pg = std::get<PowerG>(g);
    return pg.rho * std::pow(y, pg.j);
}

double g_constant(const GCase& g) {
    if (const auto* c = std::get_if<ConstantG>(&g)) return c->P0;
    return std::get<PowerG>(g).rho;
}

double r_transform(const GCase& g, double y) {
    if (!(y > 0.0)) fail(errc::domain, "r_transform: y must be > 0");
    if (std::holds_alternative<ConstantG>(g)) return std::log(y);
    const auto& pg = std::get<PowerG>(g);
    return -std::pow(y, -pg.j) / pg.j;
}

bool r_inverse_defined(const GCase& g, double r) {
    if (!std::isfinite(r)) return false;
    if (std::holds_alternative<ConstantG>(g)) return true;
    return -std::get<PowerG>(g).j * r > 0.0;
}

double r_inverse(const GCase& g, double r) {
    if (std::holds_alternative<ConstantG>(g)) return std::exp(r);
    const auto& pg = std::get<PowerG>(g);
    const double arg = -pg.j * r;
    if (!(arg > 0.0)) fail(errc::undefined, "r_inverse: argument outside the range of R");
    return std::pow(arg, -1.0 / pg.j);
}

double effective_kick(const GCase& g, const OutputFunction& f, double y) {
    if (std::holds_alternative<ConstantG>(g)) return f(y);
    return f(y) * std::pow(y, -std::get<PowerG>(g).j);
}

MixedPrice MixedPrice::make(double p, GCase g, OutputFunction f) {
    require(p >= 0.0 && p <= 1.0, "p", "0 <= p <= 1");
    validate(g);
    return MixedPrice{p, 1.0 - p, std::move(g), std::move(f)};
}

void validate(const ForcingSpec& f) {
    if (const auto* pc = std::get_if<PowerC>(&f)) {
        require(pc->beta > -1.0, "beta", "> -1");
    } else if (const auto* mc = std::get_if<MittagLefflerC>(&f)) {
        require(std::isfinite(mc->beta), "beta", "finite");
        require(mc->mu >= kMlMinAlpha, "mu", ">= 0.1");
    }
}

LogisticNormalization normalize_standard(const GrowthParams& g, const LinearPrice& f) {
    require(f.a != 0.0, "a", "!= 0");
    const double mbT = g.m * f.b * g.T;
    const double denom = g.v + mbT;
    if (denom == 0.0) fail(errc::domain, "normalize_standard: v + m*b*T = 0");
    LogisticNormalization n;
    n.alpha = 1.0;
    n.lambda = 1.0 + mbT / g.v;
    n.scale = g.m * f.a * g.T / denom;
    n.lambda_a = n.lambda;
    n.mu_a = mbT / g.v;
    n.eta_a = f.b != 0.0 ? n.lambda_a / n.mu_a : std::numeric_limits<double>::quiet_NaN();
    n.scale_a = n.scale;
    return n;
}

LogisticNormalization normalize_memory(const GrowthParams& g, const LinearPrice& f) {
    require(f.a != 0.0, "a", "!= 0");
    require(f.b != 0.0, "b", "!= 0 (normalized memory form undefined; iterate the raw map)");
    require(g.alpha.value > 0.0 && g.alpha.value <= 1.0, "alpha", "0 < alpha <= 1");
    const double ga = gamma_fn(g.alpha.value);
    const double talpha = std::pow(g.T, g.alpha.value);
    const double mbTa = g.m * f.b * talpha;
    LogisticNormalization n;
    n.alpha = g.alpha.value;
    n.lambda = 1.0 + g.m * f.b * g.T / g.v;
    n.scale = g.m * f.a * g.T / (g.v + g.m * f.b * g.T);
    n.mu_a = mbTa / (g.v * ga);
    n.lambda_a = 1.0 + n.mu_a;
    n.eta_a = (g.v * ga + mbTa) / mbTa;
    n.scale_a = g.m * f.a * talpha / (g.v * ga + mbTa);
    return n;
}

}  // namespace memkick
