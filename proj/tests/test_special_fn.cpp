#include <cmath>
#include <limits>

#include "doctest.h"
#include "special_fn.hpp"

using namespace memkick;

namespace {

double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Reference values computed with 40-digit arithmetic.
struct GammaRef {
    double x;
    double value;
};
constexpr GammaRef kGammaRefs[] = {
    {0.05, 19.470085311255512},  {0.1, 9.5135076986687313},  {0.3, 2.9915689876875907},
    {0.5, 1.772453850905516},    {0.7, 1.2980553326475579},  {1.0, 1.0},
    {1.3, 0.89747069630627718},  {1.5, 0.88622692545275801}, {2.5, 1.329340388179137},
    {3.7, 4.170651783796604},    {5.0, 24.0},                {7.5, 1871.2543057977883},
    {10.0, 362880.0},            {12.3, 83385367.899970001}, {20.0, 1.21645100408832e+17},
    {33.3, 7.4875775965226323e+35}, {50.0, 6.0828186403426756e+62},
};

}  // namespace

TEST_CASE("gamma matches high-precision references to 1e-12") {
    for (const auto& ref : kGammaRefs) {
        CHECK(rel(gamma_fn(ref.x), ref.value) < 1e-12);
    }
    // Dense sweep against the library's own contract interval.
    for (double x = 0.05; x <= 50.0; x += 0.07) {
        const double lg = std::lgamma(x);
        if (lg < 700.0) {
            CHECK(rel(gamma_fn(x), std::exp(lg)) < 1e-11);
        }
    }
}

TEST_CASE("gamma factorial anchors") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(rel(gamma_fn(0.5), 1.7724538509055160273) < 1e-13);  // sqrt(pi)
}

TEST_CASE("gamma stays finite up to the representability edge") {
    // Values in the range where a naive Lanczos product overflows.
    CHECK(rel(gamma_fn(100.0), 9.3326215443944153e+155) < 1e-12);
    CHECK(rel(gamma_fn(120.5), 6.1002949740240059e+197) < 1e-12);
    CHECK(rel(gamma_fn(150.0), 3.8089226376305697e+260) < 1e-12);
    CHECK(rel(gamma_fn(160.3), 1.3498550284787312e+283) < 1e-12);
    CHECK(rel(gamma_fn(171.0), 7.257415615307999e+306) < 1e-12);
    CHECK(std::isfinite(gamma_fn(171.5)));
}

TEST_CASE("gamma reflection for negative arguments") {
    CHECK(rel(gamma_fn(-0.5), -3.5449077018110321) < 1e-12);
    CHECK(rel(gamma_fn(-1.5), 2.3632718012073547) < 1e-12);
    CHECK(rel(gamma_fn(-2.5), -0.94530872048294188) < 1e-12);
}

TEST_CASE("gamma pole and overflow errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
    CHECK_THROWS_AS(gamma_fn(-1.0), Error);
    CHECK_THROWS_AS(gamma_fn(-7.0), Error);
    CHECK_THROWS_AS(gamma_fn(200.0), Error);
    try {
        gamma_fn(-3.0);
        FAIL("expected a pole error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::domain);
    }
    try {
        gamma_fn(400.0);
        FAIL("expected an overflow error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::overflow);
    }
}

TEST_CASE("mittag-leffler landmark values") {
    // E_{1,1}(1) = e
    CHECK(rel(mittag_leffler(1.0, 1.0, 1.0), 2.7182818284590452) < 1e-13);
    // Only the k = 0 term survives at z = 0.
    CHECK(rel(mittag_leffler(0.7, 1.3, 0.0), 1.1142425085473019) < 1e-13);
    // E_{2,1}(1) = cosh(1)
    CHECK(rel(mittag_leffler(2.0, 1.0, 1.0), 1.5430806348152438) < 1e-13);
    // E_{1,2}(1) = e - 1
    CHECK(rel(mittag_leffler(1.0, 2.0, 1.0), 1.7182818284590452) < 1e-13);
    // Independent series references.
    CHECK(rel(mittag_leffler(0.5, 1.0, 1.0), 5.0089800807622835) < 1e-12);
    CHECK(rel(mittag_leffler(0.5, 1.0, -1.0), 0.427583576155807) < 1e-12);
    CHECK(rel(mittag_leffler(2.0, 2.0, 1.0), 1.1752011936438015) < 1e-12);
    CHECK(rel(mittag_leffler(1.0, 1.0, -3.0), 0.049787068367863943) < 1e-11);
    CHECK(rel(mittag_leffler(0.3, 1.0, 0.5), 2.0620157899559995) < 1e-12);
    CHECK(rel(mittag_leffler(1.5, 0.5, 2.0), 4.1636279886572214) < 1e-12);
    CHECK(rel(mittag_leffler(0.8, 1.0, 2.5), 28.92417802093489) < 1e-12);
}

TEST_CASE("mittag-leffler agrees with exp along the diagonal") {
    for (double x = -5.0; x <= 5.0; x += 0.25) {
        CHECK(rel(mittag_leffler(1.0, 1.0, x), std::exp(x)) < 1e-10);
    }
}

TEST_CASE("mittag-leffler recurrence property") {
    // E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z), index shift of the series.
    for (double a : {0.3, 0.5, 1.0, 1.7, 2.0}) {
        for (double b : {0.4, 1.0, 2.2}) {
            for (double z : {-1.5, -0.2, 0.7, 2.0}) {
                const double lhs = mittag_leffler(a, b, z);
                const double rhs = 1.0 / gamma_fn(b) + z * mittag_leffler(a, a + b, z);
                CHECK(rel(lhs, rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("mittag-leffler validation and convergence errors") {
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0, 1.0), Error);     // alpha > 0
    CHECK_THROWS_AS(mittag_leffler(0.05, 1.0, 1.0), Error);    // below validated alpha
    CHECK_THROWS_AS(mittag_leffler(1.0, 0.0, 1.0), Error);     // beta > 0
    CHECK_THROWS_AS(mittag_leffler(1.0, 1.0, 31.0), Error);    // |z| beyond envelope
    CHECK_THROWS_AS(mittag_leffler(MlParams{1.0, 1.0, 1e-14, 0}, 1.0), Error);
    try {
        mittag_leffler(MlParams{1.0, 1.0, 1e-14, 3}, 10.0);  // 3 terms cannot settle e^10
        FAIL("expected a convergence error");
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_convergence);
    }
}

TEST_CASE("kernel values by direct substitution") {
    CHECK(kernel_v(1.0, 7) == 0.0);  // bitwise zero at alpha = 1
    CHECK(rel(kernel_v(0.5, 1), -0.29289321881345248) < 1e-14);
    CHECK(rel(kernel_v(0.5, 3), -0.077350269189625765) < 1e-14);
    CHECK(rel(kernel_v(1.5, 1), 0.41421356237309505) < 1e-14);
    CHECK(rel(kernel_v(1.5, 2), 0.31783724519578224) < 1e-14);
}

TEST_CASE("kernel table matches elementwise kernel calls") {
    const KernelTable t05 = kernel_table(0.5, 3);
    REQUIRE(t05.n_max() == 3);
    CHECK(t05(1) == kernel_v(0.5, 1));
    CHECK(t05(2) == kernel_v(0.5, 2));
    CHECK(t05(3) == kernel_v(0.5, 3));
    CHECK(rel(t05(2), -0.12975651199692176) < 1e-14);

    const KernelTable t1 = kernel_table(1.0, 10);
    for (std::int64_t z = 1; z <= 10; ++z) CHECK(t1(z) == 0.0);

    const KernelTable t15 = kernel_table(1.5, 2);
    CHECK(rel(t15(1), 0.41421356237309505) < 1e-14);
    CHECK(rel(t15(2), 0.31783724519578224) < 1e-14);
}

TEST_CASE("kernel telescoping property") {
    // sum_{z=1}^{m} V_alpha(z) = (m+1)^(alpha-1) - 1 by pure cancellation.
    for (double alpha : {0.2, 0.5, 0.8, 1.0, 1.5, 2.0}) {
        const KernelTable table = kernel_table(alpha, 4096);
        double sum = 0.0;
        for (std::int64_t z = 1; z <= table.n_max(); ++z) {
            sum += table(z);
            if ((z & (z - 1)) == 0) {  // powers of two
                const double rhs = std::pow(static_cast<double>(z + 1), alpha - 1.0) - 1.0;
                CHECK(std::abs(sum - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("kernel sign and fading for 0 < alpha < 1") {
    for (double alpha : {0.1, 0.4, 0.9}) {
        double prev = -std::numeric_limits<double>::infinity();
        for (std::int64_t z = 1; z <= 200; ++z) {
            const double v = kernel_v(alpha, z);
            CHECK(v < 0.0);
            CHECK(v > prev);  // |V| strictly decreasing, V negative
            prev = v;
        }
    }
}
