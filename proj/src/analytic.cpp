#include "analytic.hpp"

#include <cmath>

#include "special_fn.hpp"

namespace memkick {

NaturalGrowthProblem NaturalGrowthProblem::make(GrowthParams g, double P,
                                                std::vector<double> init_derivs) {
    require(P > 0.0 && std::isfinite(P), "P", "> 0");
    require(static_cast<int>(init_derivs.size()) == g.alpha.bracket_n, "y0",
            "one initial derivative per state component (bracket N)");
    return NaturalGrowthProblem{g, P, std::move(init_derivs)};
}

double natural_growth_solution(double alpha, double rate, std::span<const double> init_derivs,
                               double t) {
    require(t >= 0.0, "t", ">= 0");
    const FractionalOrder order = FractionalOrder::of(alpha);
    require(static_cast<int>(init_derivs.size()) == order.bracket_n, "y0",
            "one initial derivative per state component (bracket N)");
    const double z = rate * std::pow(t, alpha);
    double acc = 0.0;
    double tk = 1.0;  // t^k; k = 0 term survives at t = 0
    for (int k = 0; k < order.bracket_n; ++k) {
        acc += init_derivs[k] * tk * mittag_leffler(alpha, k + 1.0, z);
        tk *= t;
    }
    return acc;
}

double natural_growth_solution(const NaturalGrowthProblem& prob, double t) {
    return natural_growth_solution(prob.g.alpha.value, prob.rate(), prob.init_derivs, t);
}

}  // namespace memkick
