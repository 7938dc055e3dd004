#include <cmath>

#include "doctest.h"
#include "econ_model.hpp"
#include "special_fn.hpp"

using namespace memkick;

namespace {
double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("fractional order bracket") {
    CHECK(FractionalOrder::of(0.5).bracket_n == 1);
    CHECK(FractionalOrder::of(1.0).bracket_n == 1);
    CHECK(FractionalOrder::of(1.0).is_integer());
    CHECK(FractionalOrder::of(1.5).bracket_n == 2);
    CHECK(FractionalOrder::of(2.0).bracket_n == 2);
    CHECK(FractionalOrder::of(2.25).bracket_n == 3);
    CHECK_THROWS_AS(FractionalOrder::of(0.0), Error);
    CHECK_THROWS_AS(FractionalOrder::of(-1.0), Error);
}

TEST_CASE("growth parameter validation") {
    CHECK_THROWS_AS(GrowthParams::make(0.0, 1.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(GrowthParams::make(1.0, 1.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(GrowthParams::make(0.5, 0.0, 1.0, 0.5), Error);
    CHECK_THROWS_AS(GrowthParams::make(0.5, 1.0, 0.0, 0.5), Error);
    const GrowthParams g = GrowthParams::make(0.5, 1.0, 2.0, 0.7);
    CHECK(g.alpha.bracket_n == 1);
}

TEST_CASE("mixed price keeps p + q = 1") {
    const MixedPrice p = MixedPrice::make(0.3, ConstantG{1.0}, OutputFunction::linear(1, 0));
    CHECK(p.p + p.q == 1.0);
    CHECK_THROWS_AS(MixedPrice::make(-0.1, ConstantG{1.0}, OutputFunction::linear(1, 0)), Error);
    CHECK_THROWS_AS(MixedPrice::make(1.1, ConstantG{1.0}, OutputFunction::linear(1, 0)), Error);
    CHECK_THROWS_AS(MixedPrice::make(0.5, ConstantG{-1.0}, OutputFunction::linear(1, 0)), Error);
    CHECK_THROWS_AS(MixedPrice::make(0.5, PowerG{1.0, 0.0}, OutputFunction::linear(1, 0)), Error);
}

TEST_CASE("output function forms") {
    const OutputFunction lin = OutputFunction::linear(2.0, 3.0);
    CHECK(lin(1.5) == 2.0 * 1.5 - 3.0);
    CHECK(lin.is_linear());
    const OutputFunction cus = OutputFunction::custom([](double y) { return y * y; });
    CHECK(cus(3.0) == 9.0);
    CHECK(!cus.is_linear());
    CHECK_THROWS_AS(cus.as_linear(), Error);
}

TEST_CASE("r-transform cases") {
    const GCase cg = ConstantG{2.0};
    CHECK(r_transform(cg, 1.0) == 0.0);  // ln 1
    CHECK(rel(r_inverse(cg, 1.0), std::exp(1.0)) < 1e-15);
    CHECK(g_constant(cg) == 2.0);

    // j = -1 makes R the identity (up to the absorbed constant).
    const GCase gid = PowerG{0.7, -1.0};
    CHECK(r_transform(gid, 3.0) == 3.0);
    CHECK(r_inverse(gid, 3.0) == 3.0);
    CHECK(g_constant(gid) == 0.7);

    const GCase g1 = PowerG{1.0, 1.0};
    CHECK(r_transform(g1, 2.0) == -0.5);
    CHECK(r_inverse(g1, -0.5) == 2.0);
}

TEST_CASE("r-transform round trip across cases and scales") {
    const GCase cases[] = {ConstantG{1.0}, ConstantG{3.2}, PowerG{1.0, 1.0}, PowerG{2.5, -1.0},
                           PowerG{0.8, 2.0}, PowerG{1.1, -0.5}};
    for (const GCase& g : cases) {
        for (double y = 1e-6; y <= 1e6; y *= 10.0) {
            const double r = r_transform(g, y);
            CHECK(rel(r_inverse(g, r), y) < 1e-12);
        }
    }
}

TEST_CASE("r-transform domain errors") {
    CHECK_THROWS_AS(r_transform(GCase{ConstantG{1.0}}, 0.0), Error);
    CHECK_THROWS_AS(r_transform(GCase{ConstantG{1.0}}, -2.0), Error);
    const GCase g1 = PowerG{1.0, 1.0};  // R range is (-inf, 0)
    CHECK_THROWS_AS(r_inverse(g1, 0.5), Error);
    CHECK(!r_inverse_defined(g1, 0.5));
    CHECK(r_inverse_defined(g1, -0.5));
}

TEST_CASE("effective kick amplitudes") {
    const OutputFunction f = OutputFunction::linear(1.0, 0.5);
    // ConstantG: amplitude is F itself.
    CHECK(effective_kick(GCase{ConstantG{2.0}}, f, 0.8) == f(0.8));
    // PowerG: amplitude is F(y) y^-j.
    CHECK(rel(effective_kick(GCase{PowerG{1.3, 2.0}}, f, 0.8), f(0.8) * std::pow(0.8, -2.0)) <
          1e-15);
    // j = -1: amplitude is F(y) y, the burst-map kick.
    CHECK(rel(effective_kick(GCase{PowerG{1.3, -1.0}}, f, 0.8), f(0.8) * 0.8) < 1e-15);
}

TEST_CASE("standard normalization worked examples") {
    // b = 0 kills the additive term.
    const auto n1 = normalize_standard(GrowthParams::make(0.5, 1, 1, 1), LinearPrice{1, 0});
    CHECK(n1.lambda == 1.0);
    CHECK(n1.scale == 0.5);
    // Direct substitution.
    const auto n2 = normalize_standard(GrowthParams::make(0.5, 1, 2, 1), LinearPrice{2, 3});
    CHECK(n2.lambda == 4.0);
    CHECK(n2.scale == 0.5);
    const auto n3 = normalize_standard(GrowthParams::make(0.2, 2, 1, 1), LinearPrice{1, 1});
    CHECK(rel(n3.lambda, 1.1) < 1e-15);
    CHECK(rel(n3.scale, 0.090909090909090909) < 1e-14);
    CHECK_THROWS_AS(normalize_standard(GrowthParams::make(0.5, 1, 1, 1), LinearPrice{0, 1}),
                    Error);
}

TEST_CASE("memory normalization worked example and identities") {
    const auto n = normalize_memory(GrowthParams::make(0.5, 1, 1, 0.5), LinearPrice{1, 1});
    CHECK(rel(n.lambda_a, 1.2820947917738781) < 1e-14);
    CHECK(rel(n.mu_a, 0.28209479177387814) < 1e-14);
    CHECK(rel(n.eta_a, 4.5449077018110321) < 1e-14);
    CHECK(rel(n.scale_a, 0.22002647041688548) < 1e-14);
    CHECK(rel(n.eta_a, n.lambda_a / n.mu_a) < 1e-14);

    // lambda_a - mu_a = 1 exactly by construction, across parameters.
    for (double alpha : {0.2, 0.5, 0.9, 1.0}) {
        for (double b : {0.5, 1.0, 4.0}) {
            const auto k =
                normalize_memory(GrowthParams::make(0.3, 1.5, 2.0, alpha), LinearPrice{1.2, b});
            CHECK(std::abs(k.lambda_a - k.mu_a - 1.0) < 1e-14);
            CHECK(rel(k.eta_a, k.lambda_a / k.mu_a) < 1e-14);
        }
    }
}

TEST_CASE("memory normalization collapses to standard at alpha = 1") {
    const GrowthParams g = GrowthParams::make(0.5, 1, 2, 1.0);
    const LinearPrice f{2, 3};
    const auto std_n = normalize_standard(g, f);
    const auto mem_n = normalize_memory(g, f);
    CHECK(rel(mem_n.lambda_a, std_n.lambda) < 1e-14);
    CHECK(rel(mem_n.scale_a, std_n.scale) < 1e-14);
}

TEST_CASE("memory normalization rejects b = 0 and alpha > 1") {
    CHECK_THROWS_AS(normalize_memory(GrowthParams::make(0.5, 1, 1, 0.5), LinearPrice{1, 0}),
                    Error);
    CHECK_THROWS_AS(normalize_memory(GrowthParams::make(0.5, 1, 1, 1.5), LinearPrice{1, 1}),
                    Error);
}

TEST_CASE("forcing validation") {
    CHECK_THROWS_AS(validate(ForcingSpec{PowerC{1.0, -1.0}}), Error);
    CHECK_NOTHROW(validate(ForcingSpec{PowerC{1.0, -0.5}}));
    CHECK_THROWS_AS(validate(ForcingSpec{MittagLefflerC{1.0, 1.0, 0.05, 0.0}}), Error);
    CHECK_NOTHROW(validate(ForcingSpec{MittagLefflerC{1.0, 1.0, 0.8, 0.1}}));
}
