#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace memkick {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void bad_param(std::string_view name, const char* variant) {
    std::ostringstream os;
    os << "param: '" << name << "' does not apply to a " << variant << " map";
    fail(errc::invalid_argument, os.str());
}

GrowthParams rebind_growth(const GrowthParams& g, std::string_view name, double value,
                           bool* handled) {
    *handled = true;
    if (name == "alpha") return GrowthParams::make(g.m, g.v, g.T, value);
    if (name == "m") return GrowthParams::make(value, g.v, g.T, g.alpha.value);
    if (name == "v") return GrowthParams::make(g.m, value, g.T, g.alpha.value);
    if (name == "T") return GrowthParams::make(g.m, g.v, value, g.alpha.value);
    *handled = false;
    return g;
}

OutputFunction rebind_linear(const OutputFunction& f, std::string_view name, double value,
                             bool* handled) {
    *handled = true;
    const LinearPrice& lp = f.as_linear();
    if (name == "a") return OutputFunction::linear(value, lp.b);
    if (name == "b") return OutputFunction::linear(lp.a, value);
    *handled = false;
    return f;
}

}  // namespace

MapSpec with_param(const MapSpec& spec, std::string_view name, double value) {
    if (std::holds_alternative<StandardLogistic>(spec)) {
        if (name == "lambda") return StandardLogistic{value};
        bad_param(name, "logistic");
    }
    bool handled = false;
    if (const auto* b = std::get_if<BurstGrowth>(&spec)) {
        BurstGrowth out = *b;
        out.g = rebind_growth(b->g, name, value, &handled);
        if (handled) return out;
        out.f = rebind_linear(b->f, name, value, &handled);
        if (handled) return out;
        bad_param(name, "burst");
    }
    const auto& g = std::get<GeneralizedGrowth>(spec);
    GeneralizedGrowth out = g;
    out.g = rebind_growth(g.g, name, value, &handled);
    if (handled) return out;
    out.price.F = rebind_linear(g.price.F, name, value, &handled);
    if (handled) return out;
    if (name == "p") {
        out.price = MixedPrice::make(value, g.price.G, g.price.F);
        return out;
    }
    if (name == "P0") {
        if (!std::holds_alternative<ConstantG>(g.price.G)) bad_param(name, "power-law G");
        out.price.G = ConstantG{value};
        validate(out.price.G);
        return out;
    }
    if (name == "rho" || name == "j") {
        if (!std::holds_alternative<PowerG>(g.price.G)) bad_param(name, "constant G");
        PowerG pg = std::get<PowerG>(g.price.G);
        (name == "rho" ? pg.rho : pg.j) = value;
        out.price.G = pg;
        validate(out.price.G);
        return out;
    }
    if (name == "C") {
        if (auto* c = std::get_if<ConstantC>(&out.forcing)) {
            c->C = value;
        } else if (auto* pc = std::get_if<PowerC>(&out.forcing)) {
            pc->C = value;
        } else {
            std::get<MittagLefflerC>(out.forcing).C = value;
        }
        return out;
    }
    bad_param(name, "generalized");
}

TrajectoryTail run_trajectory(const MapSpec& spec, std::span<const double> init,
                              std::int64_t n_steps, std::int64_t n_record_tail, Engine engine) {
    require(n_record_tail >= 0 && n_record_tail <= n_steps + 1, "n_record_tail",
            "0 <= tail <= n_steps + 1");
    const Trajectory t = simulate(spec, init, n_steps, engine);
    TrajectoryTail tail;
    tail.escaped = t.escaped_at.has_value();
    const std::int64_t count = t.size();
    const std::int64_t first = std::max<std::int64_t>(0, count - n_record_tail);
    tail.values.reserve(static_cast<std::size_t>(count - first));
    for (std::int64_t n = first; n < count; ++n) tail.values.push_back(t.output(n));
    return tail;
}

double default_period_tol(std::span<const double> samples) {
    double mag = 1.0;
    for (double x : samples) mag = std::max(mag, std::abs(x));
    return 1e-8 * mag;
}

int detect_period(std::span<const double> samples, double tol) {
    const std::int64_t len = static_cast<std::int64_t>(samples.size());
    require(len >= 2 * kMaxPeriod, "samples", ">= 2 * max tested period (128)");
    require(tol > 0.0, "tol", "> 0");
    for (int p = 1; p <= kMaxPeriod; ++p) {
        bool ok = true;
        for (std::int64_t i = 0; i + p < len; ++i) {
            if (!(std::abs(samples[i + p] - samples[i]) < tol)) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return kAperiodic;
}

BifurcationData bifurcation_scan(const ScanConfig& cfg, const MapSpec& spec_template) {
    require(cfg.grid_points >= 2, "grid", ">= 2");
    require(cfg.lo < cfg.hi, "from/to", "lo < hi");
    require(cfg.n_transient >= 0, "transient", ">= 0");
    require(cfg.n_sample >= 1, "sample", ">= 1");

    // Validate the parameter binding before any workers start.
    (void)with_param(spec_template, cfg.param_name, cfg.lo);

    const std::int64_t points = cfg.grid_points;
    std::vector<std::vector<BifRow>> slots(static_cast<std::size_t>(points));

    auto run_point = [&](std::int64_t i) {
        const double pv = cfg.lo + (cfg.hi - cfg.lo) * static_cast<double>(i) /
                                       static_cast<double>(points - 1);
        std::vector<BifRow>& rows = slots[static_cast<std::size_t>(i)];
        TrajectoryTail tail;
        bool failed = false;
        try {
            const MapSpec spec = with_param(spec_template, cfg.param_name, pv);
            tail = run_trajectory(spec, cfg.init, cfg.n_transient + cfg.n_sample, cfg.n_sample);
        } catch (const Error&) {
            failed = true;  // parameter value outside the spec's domain
        }
        if (failed || tail.values.empty()) {
            rows.push_back(BifRow{pv, 0, kNaN, true});
            return;
        }
        for (std::size_t k = 0; k < tail.values.size(); ++k) {
            rows.push_back(
                BifRow{pv, static_cast<std::int64_t>(k), tail.values[k], tail.escaped});
        }
    };

    int workers = cfg.n_threads > 0 ? cfg.n_threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(points)));
    if (workers == 1) {
        for (std::int64_t i = 0; i < points; ++i) run_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::int64_t i = w; i < points; i += workers) run_point(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Merge in grid order regardless of how the points were scheduled.
    BifurcationData data;
    for (auto& rows : slots) {
        data.rows.insert(data.rows.end(), rows.begin(), rows.end());
    }
    return data;
}

double divergence_exponent(const MapSpec& spec, std::span<const double> init,
                           std::int64_t n_steps, double delta0, std::int64_t renorm_every) {
    require(delta0 > 0.0, "delta0", "> 0");
    require(renorm_every >= 1, "renorm_every", ">= 1");
    require(n_steps >= renorm_every, "n_steps", ">= renorm_every");

    std::vector<double> pert(init.begin(), init.end());
    pert[0] += delta0;

    auto ref = make_stepper(spec, init, n_steps, Engine::direct);
    auto two = make_stepper(spec, pert, n_steps, Engine::direct);

    double log_sum = 0.0;
    std::int64_t steps_done = 0;
    for (std::int64_t n = 0; n < n_steps; ++n) {
        const bool ok_ref = ref->step();
        const bool ok_two = two->step();
        if (!ok_ref || !ok_two) {
            if (!ok_ref && !ok_two) {
                fail(errc::undefined, "divergence_exponent: both trajectories escaped");
            }
            break;  // one side escaped; the estimate covers the surviving window
        }
        ++steps_done;
        if (steps_done % renorm_every != 0) continue;
        const std::int64_t last = ref->size() - 1;
        double d2 = 0.0;
        for (int s = 0; s < ref->dim(); ++s) {
            const double diff = two->value(last, s) - ref->value(last, s);
            d2 += diff * diff;
        }
        const double d = std::sqrt(d2);
        if (d == 0.0) continue;  // collapsed onto the reference; nothing to rescale
        log_sum += std::log(d / delta0);
        two->rescale_difference_from(*ref, delta0 / d);
    }
    if (steps_done == 0) fail(errc::undefined, "divergence_exponent: no steps completed");
    return log_sum / static_cast<double>(steps_done);
}

}  // namespace memkick
