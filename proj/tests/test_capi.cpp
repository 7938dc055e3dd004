#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "memkick/memkick.h"

namespace {
double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_CASE("capi: version and error text") {
    CHECK(std::strcmp(memkick_version(), "0.1.0") == 0);
    double out = 0.0;
    CHECK(memkick_gamma(-2.0, &out) == MEMKICK_ERR_DOMAIN);
    CHECK(std::strlen(memkick_last_error()) > 0);
}

TEST_CASE("capi: special functions") {
    double out = 0.0;
    REQUIRE(memkick_gamma(5.0, &out) == MEMKICK_OK);
    CHECK(rel(out, 24.0) < 1e-14);
    REQUIRE(memkick_mittag_leffler(1.0, 1.0, 1.0, 0.0, 0, &out) == MEMKICK_OK);
    CHECK(rel(out, 2.7182818284590452) < 1e-13);
    CHECK(memkick_mittag_leffler(-1.0, 1.0, 1.0, 0.0, 0, &out) ==
          MEMKICK_ERR_INVALID_ARGUMENT);
    CHECK(memkick_mittag_leffler(1.0, 1.0, 2.0, 1e-14, 2, &out) ==
          MEMKICK_ERR_NO_CONVERGENCE);
    REQUIRE(memkick_kernel_v(0.5, 1, &out) == MEMKICK_OK);
    CHECK(rel(out, -0.29289321881345248) < 1e-14);
    double table[3];
    REQUIRE(memkick_kernel_table(0.5, 3, table) == MEMKICK_OK);
    CHECK(rel(table[2], -0.077350269189625765) < 1e-14);
}

TEST_CASE("capi: burst simulation round trip") {
    memkick_spec* spec = nullptr;
    REQUIRE(memkick_spec_new_burst(0.5, 1.0, 1.0, 0.5, 1.0, 0.0, &spec) == MEMKICK_OK);
    int dim = 0;
    REQUIRE(memkick_spec_dim(spec, &dim) == MEMKICK_OK);
    CHECK(dim == 1);

    const double init[] = {0.5};
    memkick_trajectory* traj = nullptr;
    REQUIRE(memkick_simulate(spec, init, 1, 3, MEMKICK_ENGINE_DIRECT, MEMKICK_SEED_VOLTERRA,
                             &traj) == MEMKICK_OK);
    CHECK(memkick_trajectory_size(traj) == 4);
    CHECK(memkick_trajectory_dim(traj) == 1);
    CHECK(memkick_trajectory_escaped_at(traj) == -1);
    double v = 0.0;
    REQUIRE(memkick_trajectory_value(traj, 2, 0, &v) == MEMKICK_OK);
    CHECK(rel(v, 0.42947630205653046) < 1e-14);
    REQUIRE(memkick_trajectory_output(traj, 2, &v) == MEMKICK_OK);
    CHECK(rel(v, 0.42947630205653046) < 1e-14);
    CHECK(memkick_trajectory_value(traj, 9, 0, &v) == MEMKICK_ERR_INVALID_ARGUMENT);
    memkick_trajectory_free(traj);
    memkick_spec_free(spec);
}

TEST_CASE("capi: invalid burst parameters are rejected with a named key") {
    memkick_spec* spec = nullptr;
    CHECK(memkick_spec_new_burst(0.5, 1.0, 1.0, 0.0, 1.0, 0.0, &spec) ==
          MEMKICK_ERR_INVALID_ARGUMENT);
    CHECK(std::strstr(memkick_last_error(), "alpha") != nullptr);
    CHECK(memkick_spec_new_burst(1.5, 1.0, 1.0, 0.5, 1.0, 0.0, &spec) ==
          MEMKICK_ERR_INVALID_ARGUMENT);
    CHECK(std::strstr(memkick_last_error(), "m") != nullptr);
}

TEST_CASE("capi: generalized spec, transform and oracle") {
    memkick_generalized_params gp{};
    gp.m = 0.1;
    gp.v = 1.0;
    gp.T = 1.0;
    gp.alpha = 1.0;
    gp.p = 0.4;
    gp.gcase = MEMKICK_G_CONSTANT;
    gp.P0 = 1.0;
    gp.a = 1.0;
    gp.b = 0.5;
    gp.forcing = MEMKICK_FORCING_CONSTANT;
    gp.C = 0.3;
    memkick_spec* spec = nullptr;
    REQUIRE(memkick_spec_new_generalized(&gp, &spec) == MEMKICK_OK);

    double r0 = 0.0;
    REQUIRE(memkick_spec_r_transform(spec, 0.9, &r0) == MEMKICK_OK);
    CHECK(rel(r0, std::log(0.9)) < 1e-15);
    double y = 0.0;
    REQUIRE(memkick_spec_r_inverse(spec, r0, &y) == MEMKICK_OK);
    CHECK(rel(y, 0.9) < 1e-14);

    memkick_trajectory* oracle = nullptr;
    memkick_trajectory* map = nullptr;
    REQUIRE(memkick_kicked_flow_oracle(spec, &r0, 1, 200, &oracle) == MEMKICK_OK);
    REQUIRE(memkick_simulate(spec, &r0, 1, 200, MEMKICK_ENGINE_INCREMENTAL,
                             MEMKICK_SEED_VOLTERRA, &map) == MEMKICK_OK);
    REQUIRE(memkick_trajectory_size(oracle) == memkick_trajectory_size(map));
    for (std::size_t n = 0; n < memkick_trajectory_size(oracle); ++n) {
        double a = 0.0, b = 0.0;
        REQUIRE(memkick_trajectory_value(oracle, n, 0, &a) == MEMKICK_OK);
        REQUIRE(memkick_trajectory_value(map, n, 0, &b) == MEMKICK_OK);
        CHECK(rel(a, b) < 1e-11);
    }
    memkick_trajectory_free(oracle);
    memkick_trajectory_free(map);
    memkick_spec_free(spec);
}

TEST_CASE("capi: logistic-with-memory run") {
    memkick_trajectory* traj = nullptr;
    REQUIRE(memkick_simulate_logistic_memory(0.5, 1.0, 1.0, 0.5, 1.0, 1.0, 0.3, 50, &traj) ==
            MEMKICK_OK);
    CHECK(memkick_trajectory_size(traj) == 51);
    double z1 = 0.0;
    REQUIRE(memkick_trajectory_value(traj, 1, 0, &z1) == MEMKICK_OK);
    CHECK(z1 == 0.3);  // seed step
    memkick_trajectory_free(traj);
    CHECK(memkick_simulate_logistic_memory(0.5, 1.0, 1.0, 0.5, 1.0, 0.0, 0.3, 50, &traj) ==
          MEMKICK_ERR_INVALID_ARGUMENT);  // b = 0 has no normalized form
}

TEST_CASE("capi: natural growth") {
    const double init[] = {1.0};
    double out = 0.0;
    REQUIRE(memkick_natural_growth(1.0, 0.5, init, 1, 2.0, &out) == MEMKICK_OK);
    CHECK(rel(out, 2.7182818284590452) < 1e-12);
    CHECK(memkick_natural_growth(1.5, 0.5, init, 1, 2.0, &out) ==
          MEMKICK_ERR_INVALID_ARGUMENT);  // needs two initial derivatives
}

TEST_CASE("capi: diagnostics") {
    memkick_spec* spec = nullptr;
    REQUIRE(memkick_spec_new_logistic(4.0, &spec) == MEMKICK_OK);
    const double init[] = {0.2};
    double lam = 0.0;
    REQUIRE(memkick_divergence_exponent(spec, init, 1, 60000, 1e-8, 10, &lam) == MEMKICK_OK);
    CHECK(std::abs(lam - std::log(2.0)) < 0.02);

    memkick_bif_data* data = nullptr;
    REQUIRE(memkick_bifurcation_scan(spec, "lambda", 2.5, 2.9, 5, 20000, 130, init, 1, 2,
                                     &data) == MEMKICK_OK);
    REQUIRE(memkick_bif_rows(data) == 5u * 130u);
    std::vector<double> block(130);
    for (std::size_t k = 0; k < 130; ++k) {
        double pv = 0.0;
        long idx = 0;
        int escaped = 1;
        REQUIRE(memkick_bif_row(data, k, &pv, &idx, &block[k], &escaped) == MEMKICK_OK);
        CHECK(pv == 2.5);
        CHECK(idx == static_cast<long>(k));
        CHECK(escaped == 0);
    }
    int period = -1;
    REQUIRE(memkick_detect_period(block.data(), block.size(), 0.0, &period) == MEMKICK_OK);
    CHECK(period == 1);
    memkick_bif_free(data);
    memkick_spec_free(spec);
}

TEST_CASE("capi: null-pointer discipline") {
    CHECK(memkick_gamma(1.0, nullptr) == MEMKICK_ERR_INVALID_ARGUMENT);
    CHECK(memkick_simulate(nullptr, nullptr, 0, 1, 0, 0, nullptr) ==
          MEMKICK_ERR_INVALID_ARGUMENT);
    CHECK(memkick_trajectory_size(nullptr) == 0);
    CHECK(memkick_trajectory_escaped_at(nullptr) == -1);
    memkick_spec_free(nullptr);
    memkick_trajectory_free(nullptr);
    memkick_bif_free(nullptr);
    memkick_verify_free(nullptr);
}
