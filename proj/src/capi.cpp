#include "memkick/memkick.h"

#include <cmath>
#include <cstring>
#include <string>

#include "analysis.hpp"
#include "analytic.hpp"
#include "error.hpp"
#include "maps.hpp"
#include "special_fn.hpp"
#include "verify.hpp"

using namespace memkick;

struct memkick_spec {
    MapSpec spec;
};

struct memkick_trajectory {
    Trajectory t;
};

struct memkick_bif_data {
    BifurcationData data;
};

struct memkick_verify_report {
    VerifyReport report;
    std::string formatted;
};

namespace {

thread_local std::string g_last_error = "";

memkick_status to_status(errc code) {
    switch (code) {
        case errc::invalid_argument: return MEMKICK_ERR_INVALID_ARGUMENT;
        case errc::domain: return MEMKICK_ERR_DOMAIN;
        case errc::no_convergence: return MEMKICK_ERR_NO_CONVERGENCE;
        case errc::overflow: return MEMKICK_ERR_OVERFLOW;
        case errc::undefined: return MEMKICK_ERR_UNDEFINED;
    }
    return MEMKICK_ERR_INVALID_ARGUMENT;
}

// Run fn, translating exceptions into status codes + last-error text.
template <typename Fn>
memkick_status guarded(Fn&& fn) {
    try {
        fn();
        return MEMKICK_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MEMKICK_ERR_INVALID_ARGUMENT;
    }
}

memkick_status require_c(bool ok, const char* msg) {
    if (ok) return MEMKICK_OK;
    g_last_error = msg;
    return MEMKICK_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* memkick_last_error(void) { return g_last_error.c_str(); }

const char* memkick_version(void) { return "0.1.0"; }

memkick_status memkick_gamma(double x, double* out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] { *out = gamma_fn(x); });
}

memkick_status memkick_mittag_leffler(double alpha, double beta, double z, double tol,
                                      int max_terms, double* out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] {
        MlParams p{alpha, beta};
        if (tol > 0.0) p.tol = tol;
        if (max_terms > 0) p.max_terms = max_terms;
        *out = mittag_leffler(p, z);
    });
}

memkick_status memkick_kernel_v(double alpha, long z, double* out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] { *out = kernel_v(alpha, z); });
}

memkick_status memkick_kernel_table(double alpha, long n_max, double* out_values) {
    if (auto s = require_c(out_values != nullptr, "out_values: must not be NULL")) return s;
    return guarded([&] {
        const KernelTable table = kernel_table(alpha, n_max);
        std::memcpy(out_values, table.values.data(), table.values.size() * sizeof(double));
    });
}

memkick_status memkick_spec_new_logistic(double lambda, memkick_spec** out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] {
        MapSpec spec = StandardLogistic{lambda};
        validate(spec);
        *out = new memkick_spec{std::move(spec)};
    });
}

memkick_status memkick_spec_new_burst(double m, double v, double T, double alpha, double a,
                                      double b, memkick_spec** out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] {
        BurstGrowth spec{GrowthParams::make(m, v, T, alpha), OutputFunction::linear(a, b)};
        *out = new memkick_spec{MapSpec{std::move(spec)}};
    });
}

memkick_status memkick_spec_new_generalized(const memkick_generalized_params* params,
                                            memkick_spec** out) {
    if (auto s = require_c(out != nullptr && params != nullptr,
                           "params/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        GCase g;
        if (params->gcase == MEMKICK_G_CONSTANT) {
            g = ConstantG{params->P0};
        } else if (params->gcase == MEMKICK_G_POWER) {
            g = PowerG{params->rho, params->j};
        } else {
            fail(errc::invalid_argument, "g_case: must be constant or power");
        }
        ForcingSpec f;
        if (params->forcing == MEMKICK_FORCING_CONSTANT) {
            f = ConstantC{params->C};
        } else if (params->forcing == MEMKICK_FORCING_POWER) {
            f = PowerC{params->C, params->beta};
        } else if (params->forcing == MEMKICK_FORCING_MITTAG_LEFFLER) {
            f = MittagLefflerC{params->C, params->beta, params->mu, params->gamma};
        } else {
            fail(errc::invalid_argument, "forcing: must be constant, power or mittag-leffler");
        }
        GeneralizedGrowth spec{
            GrowthParams::make(params->m, params->v, params->T, params->alpha),
            MixedPrice::make(params->p, std::move(g),
                             OutputFunction::linear(params->a, params->b)),
            std::move(f)};
        MapSpec m2{std::move(spec)};
        validate(m2);
        *out = new memkick_spec{std::move(m2)};
    });
}

void memkick_spec_free(memkick_spec* spec) { delete spec; }

memkick_status memkick_spec_dim(const memkick_spec* spec, int* out) {
    if (auto s = require_c(spec != nullptr && out != nullptr, "spec/out: must not be NULL")) {
        return s;
    }
    return guarded([&] { *out = state_dim(spec->spec); });
}

memkick_status memkick_spec_r_transform(const memkick_spec* spec, double y, double* out) {
    if (auto s = require_c(spec != nullptr && out != nullptr, "spec/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        const auto* g = std::get_if<GeneralizedGrowth>(&spec->spec);
        if (!g) fail(errc::invalid_argument, "spec: r_transform applies to generalized maps");
        *out = r_transform(g->price.G, y);
    });
}

memkick_status memkick_spec_r_inverse(const memkick_spec* spec, double r, double* out) {
    if (auto s = require_c(spec != nullptr && out != nullptr, "spec/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        const auto* g = std::get_if<GeneralizedGrowth>(&spec->spec);
        if (!g) fail(errc::invalid_argument, "spec: r_inverse applies to generalized maps");
        *out = r_inverse(g->price.G, r);
    });
}

memkick_status memkick_simulate(const memkick_spec* spec, const double* init, size_t init_len,
                                long n_steps, int engine, int seed_step,
                                memkick_trajectory** out) {
    if (auto s = require_c(spec != nullptr && init != nullptr && out != nullptr,
                           "spec/init/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        if (engine != MEMKICK_ENGINE_DIRECT && engine != MEMKICK_ENGINE_INCREMENTAL) {
            fail(errc::invalid_argument, "engine: must be direct or incremental");
        }
        if (seed_step != MEMKICK_SEED_VOLTERRA && seed_step != MEMKICK_SEED_INCREMENTAL) {
            fail(errc::invalid_argument, "seed_step: must be volterra or incremental");
        }
        Trajectory t = simulate(spec->spec, std::span<const double>{init, init_len}, n_steps,
                                engine == MEMKICK_ENGINE_DIRECT ? Engine::direct
                                                                : Engine::incremental,
                                seed_step == MEMKICK_SEED_VOLTERRA ? SeedStep::volterra
                                                                   : SeedStep::incremental);
        *out = new memkick_trajectory{std::move(t)};
    });
}

memkick_status memkick_simulate_logistic_memory(double m, double v, double T, double alpha,
                                                double a, double b, double z0, long n_steps,
                                                memkick_trajectory** out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] {
        const GrowthParams g = GrowthParams::make(m, v, T, alpha);
        const LogisticNormalization norm = normalize_memory(g, LinearPrice{a, b});
        Trajectory t = simulate_logistic_memory_normalized(norm, z0, n_steps);
        *out = new memkick_trajectory{std::move(t)};
    });
}

memkick_status memkick_kicked_flow_oracle(const memkick_spec* spec, const double* init,
                                          size_t init_len, long n_steps,
                                          memkick_trajectory** out) {
    if (auto s = require_c(spec != nullptr && init != nullptr && out != nullptr,
                           "spec/init/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        const auto* g = std::get_if<GeneralizedGrowth>(&spec->spec);
        if (!g) fail(errc::invalid_argument, "spec: oracle applies to generalized maps");
        Trajectory t =
            kicked_flow_oracle_alpha1(*g, std::span<const double>{init, init_len}, n_steps);
        *out = new memkick_trajectory{std::move(t)};
    });
}

size_t memkick_trajectory_size(const memkick_trajectory* t) {
    return t ? static_cast<size_t>(t->t.size()) : 0;
}

int memkick_trajectory_dim(const memkick_trajectory* t) { return t ? t->t.dim : 0; }

long memkick_trajectory_escaped_at(const memkick_trajectory* t) {
    if (!t || !t->t.escaped_at) return -1;
    return static_cast<long>(*t->t.escaped_at);
}

memkick_status memkick_trajectory_value(const memkick_trajectory* t, size_t n, int s,
                                        double* out) {
    if (auto st = require_c(t != nullptr && out != nullptr, "t/out: must not be NULL")) return st;
    if (auto st = require_c(n < static_cast<size_t>(t->t.size()) && s >= 0 && s < t->t.dim,
                            "n/s: out of range")) {
        return st;
    }
    *out = t->t.value(static_cast<std::int64_t>(n), s);
    return MEMKICK_OK;
}

memkick_status memkick_trajectory_output(const memkick_trajectory* t, size_t n, double* out) {
    if (auto st = require_c(t != nullptr && out != nullptr, "t/out: must not be NULL")) return st;
    if (auto st = require_c(n < static_cast<size_t>(t->t.size()), "n: out of range")) return st;
    *out = t->t.output(static_cast<std::int64_t>(n));
    return MEMKICK_OK;
}

void memkick_trajectory_free(memkick_trajectory* t) { delete t; }

memkick_status memkick_natural_growth(double alpha, double rate, const double* init_derivs,
                                      size_t n_derivs, double t, double* out) {
    if (auto s = require_c(init_derivs != nullptr && out != nullptr,
                           "init_derivs/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        *out = natural_growth_solution(alpha, rate,
                                       std::span<const double>{init_derivs, n_derivs}, t);
    });
}

memkick_status memkick_detect_period(const double* samples, size_t len, double tol,
                                     int* out_period) {
    if (auto s = require_c(samples != nullptr && out_period != nullptr,
                           "samples/out_period: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        const std::span<const double> window{samples, len};
        const double t = tol > 0.0 ? tol : default_period_tol(window);
        *out_period = detect_period(window, t);
    });
}

memkick_status memkick_divergence_exponent(const memkick_spec* spec, const double* init,
                                           size_t init_len, long n_steps, double delta0,
                                           long renorm_every, double* out) {
    if (auto s = require_c(spec != nullptr && init != nullptr && out != nullptr,
                           "spec/init/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        *out = divergence_exponent(spec->spec, std::span<const double>{init, init_len}, n_steps,
                                   delta0, renorm_every);
    });
}

memkick_status memkick_bifurcation_scan(const memkick_spec* spec, const char* param_name,
                                        double lo, double hi, long grid_points,
                                        long n_transient, long n_sample, const double* init,
                                        size_t init_len, int n_threads, memkick_bif_data** out) {
    if (auto s = require_c(spec != nullptr && param_name != nullptr && init != nullptr &&
                               out != nullptr,
                           "spec/param_name/init/out: must not be NULL")) {
        return s;
    }
    return guarded([&] {
        ScanConfig cfg;
        cfg.param_name = param_name;
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.grid_points = grid_points;
        cfg.n_transient = n_transient;
        cfg.n_sample = n_sample;
        cfg.init.assign(init, init + init_len);
        cfg.n_threads = n_threads;
        BifurcationData data = bifurcation_scan(cfg, spec->spec);
        *out = new memkick_bif_data{std::move(data)};
    });
}

size_t memkick_bif_rows(const memkick_bif_data* d) { return d ? d->data.rows.size() : 0; }

memkick_status memkick_bif_row(const memkick_bif_data* d, size_t i, double* param_value,
                               long* sample_index, double* state_value, int* escaped) {
    if (auto s = require_c(d != nullptr, "d: must not be NULL")) return s;
    if (auto s = require_c(i < d->data.rows.size(), "i: out of range")) return s;
    const BifRow& row = d->data.rows[i];
    if (param_value) *param_value = row.param_value;
    if (sample_index) *sample_index = static_cast<long>(row.sample_index);
    if (state_value) *state_value = row.state_value;
    if (escaped) *escaped = row.escaped ? 1 : 0;
    return MEMKICK_OK;
}

void memkick_bif_free(memkick_bif_data* d) { delete d; }

memkick_status memkick_verify_run(memkick_verify_report** out) {
    if (auto s = require_c(out != nullptr, "out: must not be NULL")) return s;
    return guarded([&] {
        auto* r = new memkick_verify_report;
        r->report = run_verification();
        r->formatted = format_report(r->report);
        *out = r;
    });
}

size_t memkick_verify_rows(const memkick_verify_report* r) {
    return r ? r->report.checks.size() : 0;
}

memkick_status memkick_verify_row(const memkick_verify_report* r, size_t i, const char** name,
                                  double* max_error, double* tolerance, int* passed) {
    if (auto s = require_c(r != nullptr, "r: must not be NULL")) return s;
    if (auto s = require_c(i < r->report.checks.size(), "i: out of range")) return s;
    const VerifyCheck& c = r->report.checks[i];
    if (name) *name = c.name.c_str();
    if (max_error) *max_error = c.max_error;
    if (tolerance) *tolerance = c.tolerance;
    if (passed) *passed = c.passed ? 1 : 0;
    return MEMKICK_OK;
}

int memkick_verify_all_passed(const memkick_verify_report* r) {
    return r && r->report.all_passed() ? 1 : 0;
}

const char* memkick_verify_format(const memkick_verify_report* r) {
    return r ? r->formatted.c_str() : "";
}

void memkick_verify_free(memkick_verify_report* r) { delete r; }

}  // extern "C"
