#include <cmath>
#include <vector>

#include "analytic.hpp"
#include "doctest.h"

using namespace memkick;

namespace {
double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("natural growth at t = 0 returns the initial value") {
    CHECK(natural_growth_solution(0.5, 1.0, std::vector<double>{1.7}, 0.0) == 1.7);
    CHECK(natural_growth_solution(1.5, 0.3, std::vector<double>{2.0, -0.4}, 0.0) == 2.0);
}

TEST_CASE("natural growth at alpha = 1 is exponential growth") {
    // rate = m P / v = 0.5, t = 2 gives e^1.
    CHECK(rel(natural_growth_solution(1.0, 0.5, std::vector<double>{1.0}, 2.0),
              2.7182818284590452) < 1e-12);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
        CHECK(rel(natural_growth_solution(1.0, 0.5, std::vector<double>{1.0}, t),
                  std::exp(0.5 * t)) < 1e-10);
    }
}

TEST_CASE("natural growth landmark at alpha = 0.5") {
    // E_{1/2,1}(1) = e (1 + erf 1), independent series value.
    CHECK(rel(natural_growth_solution(0.5, 1.0, std::vector<double>{1.0}, 1.0),
              5.0089800807622835) < 1e-12);
}

TEST_CASE("natural growth with a second-order bracket") {
    // alpha=1.5, Y(0)=1, Y'(0)=0.5, rate=0.3, t=2; 40-digit reference.
    CHECK(rel(natural_growth_solution(1.5, 0.3, std::vector<double>{1.0, 0.5}, 2.0),
              3.0582838333318128) < 1e-12);
}

TEST_CASE("natural growth is monotone for positive data") {
    double prev = 0.0;
    for (double t = 0.0; t <= 8.0; t += 0.25) {
        const double y = natural_growth_solution(0.7, 0.8, std::vector<double>{1.0}, t);
        CHECK(y > prev);
        prev = y;
    }
}

TEST_CASE("natural growth problem validation") {
    const GrowthParams g = GrowthParams::make(0.5, 2.0, 1.0, 0.5);
    const auto prob = NaturalGrowthProblem::make(g, 2.0, {1.0});
    CHECK(prob.rate() == 0.5);
    CHECK(rel(natural_growth_solution(prob, 1.0),
              natural_growth_solution(0.5, 0.5, std::vector<double>{1.0}, 1.0)) < 1e-15);
    CHECK_THROWS_AS(NaturalGrowthProblem::make(g, -1.0, {1.0}), Error);
    CHECK_THROWS_AS(NaturalGrowthProblem::make(g, 1.0, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(natural_growth_solution(0.5, 1.0, std::vector<double>{1.0}, -1.0), Error);
}
