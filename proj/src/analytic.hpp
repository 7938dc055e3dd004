#ifndef MEMKICK_ANALYTIC_HPP
#define MEMKICK_ANALYTIC_HPP

#include <span>
#include <vector>

#include "econ_model.hpp"

namespace memkick {

/// Natural growth with memory at constant price P: the continuous-time
/// problem whose closed-form solution anchors the map engines.
struct NaturalGrowthProblem {
    GrowthParams g;
    double P;                         // constant price, > 0
    std::vector<double> init_derivs;  // Y(0), Y'(0), ..., length = bracket_n

    static NaturalGrowthProblem make(GrowthParams g, double P, std::vector<double> init_derivs);
    double rate() const { return g.m * P / g.v; }
};

/// Closed-form solution
///   Y(t) = sum_{k=0}^{n-1} Y^(k)(0) t^k E_{alpha,k+1}(rate * t^alpha),
/// evaluated with the series Mittag-Leffler. rate = m P / v.
double natural_growth_solution(const NaturalGrowthProblem& prob, double t);
double natural_growth_solution(double alpha, double rate, std::span<const double> init_derivs,
                               double t);

}  // namespace memkick

#endif
