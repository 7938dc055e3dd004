#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "analysis.hpp"
#include "analytic.hpp"
#include "maps.hpp"
#include "special_fn.hpp"

namespace memkick {

namespace {

double rel_dev(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

// Worst relative deviation over the s = 0 components of two trajectories.
double max_traj_dev(const Trajectory& a, const Trajectory& b, int s = 0) {
    if (a.size() != b.size()) return 1.0;  // one escaped early: gross mismatch
    double worst = 0.0;
    for (std::int64_t n = 0; n < a.size(); ++n) {
        worst = std::max(worst, rel_dev(a.value(n, s), b.value(n, s)));
    }
    return worst;
}

BurstGrowth burst_spec(double m, double v, double T, double alpha, double a, double b) {
    return BurstGrowth{GrowthParams::make(m, v, T, alpha), OutputFunction::linear(a, b)};
}

// --- criterion 1: direct vs step-difference engines ---------------------

VerifyCheck check_direct_incremental(detail::MapMutations mut = {}, const char* name = nullptr) {
    VerifyCheck c;
    c.name = name ? name : "direct vs incremental engines (alpha in (0,1))";
    c.tolerance = 1e-9;
    const std::int64_t n_steps = 2000;
    double worst = 0.0;
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double y0 : {0.1, 0.5, 0.9}) {
            const BurstGrowth spec = burst_spec(0.5, 1.0, 1.0, alpha, 1.0, 0.5);
            const std::vector<double> init{y0};
            auto dir = make_stepper(MapSpec{spec}, init, n_steps, Engine::direct);
            auto inc = make_stepper(MapSpec{spec}, init, n_steps, Engine::incremental,
                                    SeedStep::volterra, mut);
            for (std::int64_t n = 0; n < n_steps; ++n) {
                if (!dir->step() || !inc->step()) {
                    worst = std::max(worst, 1.0);
                    break;
                }
            }
            for (std::int64_t n = 0; n < dir->size() && n < inc->size(); ++n) {
                worst = std::max(worst, rel_dev(dir->value(n, 0), inc->value(n, 0)));
            }
        }
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 2: alpha = 1 collapse to the standard logistic map -------

VerifyCheck check_logistic_collapse() {
    VerifyCheck c;
    c.name = "alpha=1 collapse to standard logistic map";
    c.tolerance = 1e-12;
    const std::int64_t n_steps = 10000;
    double worst = 0.0;
    for (double lambda : {2.5, 3.2, 3.9}) {
        const double m = 0.5, v = 1.0, T = 1.0, a = 1.0;
        const double b = (lambda - 1.0) * v / (m * T);
        const BurstGrowth spec = burst_spec(m, v, T, 1.0, a, b);
        const LogisticNormalization norm =
            normalize_standard(spec.g, LinearPrice{a, b});
        const double y0 = 0.3 / norm.scale;
        const Trajectory t =
            simulate_incremental(spec, std::vector<double>{y0}, n_steps);
        // Seed step: Y_1 = Y_0 exactly (no kick occurs before t = T).
        worst = std::max(worst, std::abs(t.value(1) - t.value(0)));
        for (std::int64_t n = 1; n + 1 < t.size(); ++n) {
            const double zn = norm.scale * t.value(n);
            const double zn1 = norm.scale * t.value(n + 1);
            worst = std::max(worst, std::abs(zn1 - step_standard_logistic(norm.lambda, zn)));
        }
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 3: raw memory map vs normalized form ---------------------

VerifyCheck check_normalization_equivalence(detail::MapMutations mut = {},
                                            const char* name = nullptr) {
    VerifyCheck c;
    c.name = name ? name : "raw memory map vs normalized logistic form";
    c.tolerance = 1e-10;
    const std::int64_t n_steps = 500;
    double worst = 0.0;
    for (double alpha : {0.3, 0.5, 0.8}) {
        const double m = 0.5, v = 1.0, T = 1.0, a = 1.0, b = 1.0;
        const BurstGrowth spec = burst_spec(m, v, T, alpha, a, b);
        const LogisticNormalization norm = normalize_memory(spec.g, LinearPrice{a, b});
        const double z0 = 0.3;
        const double y0 = z0 / norm.scale_a;
        auto raw = make_stepper(MapSpec{spec}, std::vector<double>{y0}, n_steps,
                                Engine::incremental, SeedStep::volterra, mut);
        for (std::int64_t n = 0; n < n_steps; ++n) {
            if (!raw->step()) break;
        }
        const Trajectory zt = simulate_logistic_memory_normalized(norm, z0, n_steps);
        if (zt.size() != raw->size()) {
            worst = std::max(worst, 1.0);
            continue;
        }
        for (std::int64_t n = 0; n < zt.size(); ++n) {
            worst = std::max(worst, rel_dev(norm.scale_a * raw->value(n, 0), zt.value(n, 0)));
        }
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 4: reduction lattice of the generalized maps -------------

GeneralizedGrowth generalized_spec(double m, double alpha, double p, GCase g, ForcingSpec f,
                                   double a = 1.0, double b = 0.5) {
    return GeneralizedGrowth{GrowthParams::make(m, 1.0, 1.0, alpha),
                             MixedPrice::make(p, std::move(g), OutputFunction::linear(a, b)),
                             std::move(f)};
}

VerifyCheck check_reduction_to_burst() {
    VerifyCheck c;
    c.name = "generalized (p=0, j=-1) reduces to burst map";
    c.tolerance = 1e-12;
    const std::int64_t n_steps = 500;
    const double alpha = 0.5;
    const GeneralizedGrowth gen =
        generalized_spec(0.5, alpha, 0.0, PowerG{1.3, -1.0}, ConstantC{0.7});
    const BurstGrowth burst = burst_spec(0.5, 1.0, 1.0, alpha, 1.0, 0.5);
    const double y0 = 0.4;  // j = -1 makes R identical to Y
    const Trajectory rg = simulate_generalized(gen, std::vector<double>{y0}, n_steps);
    const Trajectory yb = simulate_direct(burst, std::vector<double>{y0}, n_steps);
    c.max_error = max_traj_dev(rg, yb);
    c.passed = c.max_error < c.tolerance;
    return c;
}

VerifyCheck check_power_forcing_reduction() {
    VerifyCheck c;
    c.name = "power forcing at beta=0 equals constant forcing";
    c.tolerance = 1e-12;
    const std::int64_t n_steps = 500;
    const GeneralizedGrowth g1 =
        generalized_spec(0.5, 0.5, 0.5, ConstantG{1.0}, ConstantC{0.3});
    const GeneralizedGrowth g2 =
        generalized_spec(0.5, 0.5, 0.5, ConstantG{1.0}, PowerC{0.3, 0.0});
    const std::vector<double> init{std::log(0.8)};
    c.max_error = max_traj_dev(simulate_generalized(g1, init, n_steps),
                               simulate_generalized(g2, init, n_steps));
    c.passed = c.max_error < c.tolerance;
    return c;
}

VerifyCheck check_ml_forcing_reduction() {
    VerifyCheck c;
    c.name = "Mittag-Leffler forcing at gamma=0 equals power forcing";
    c.tolerance = 1e-10;
    const std::int64_t n_steps = 500;
    const double C = 0.2, beta = 1.5;
    const GeneralizedGrowth g1 =
        generalized_spec(0.5, 0.5, 0.5, ConstantG{1.0}, MittagLefflerC{C, beta, 0.8, 0.0});
    const GeneralizedGrowth g2 = generalized_spec(
        0.5, 0.5, 0.5, ConstantG{1.0}, PowerC{C / gamma_fn(beta), beta - 1.0});
    const std::vector<double> init{std::log(0.8)};
    c.max_error = max_traj_dev(simulate_generalized(g1, init, n_steps),
                               simulate_generalized(g2, init, n_steps));
    c.passed = c.max_error < c.tolerance;
    return c;
}

// --- criterion 5: alpha = 1 kicked-flow oracle ---------------------------

VerifyCheck check_kicked_flow_oracle() {
    VerifyCheck c;
    c.name = "alpha=1 kicked-flow oracle vs incremental map";
    c.tolerance = 1e-10;
    const std::int64_t n_steps = 1000;
    double worst = 0.0;
    struct Case {
        GCase g;
        double r0;
    };
    const double y0 = 0.9;
    const Case cases[] = {
        {ConstantG{1.0}, std::log(y0)},
        {PowerG{0.8, 1.0}, -1.0 / y0},
        {PowerG{1.2, 2.0}, -0.5 / (y0 * y0)},
    };
    for (const Case& k : cases) {
        const GeneralizedGrowth spec = generalized_spec(0.1, 1.0, 0.4, k.g, ConstantC{0.3});
        const std::vector<double> init{k.r0};
        const Trajectory oracle = kicked_flow_oracle_alpha1(spec, init, n_steps);
        const Trajectory map = simulate_generalized_incremental(spec, init, n_steps);
        worst = std::max(worst, max_traj_dev(oracle, map));
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 6: Mittag-Leffler identities ------------------------------

VerifyCheck check_ml_exponential() {
    VerifyCheck c;
    c.name = "E_{1,1} agrees with exp on [-5,5]";
    c.tolerance = 1e-10;
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = -5.0 + 0.1 * i;
        const double e = std::exp(x);
        worst = std::max(worst, std::abs(mittag_leffler(1.0, 1.0, x) - e) / e);
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

VerifyCheck check_ml_cosh() {
    VerifyCheck c;
    c.name = "E_{2,1}(x) agrees with cosh(sqrt x) on [0,9]";
    c.tolerance = 1e-10;
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.09 * i;
        const double ref = std::cosh(std::sqrt(x));
        worst = std::max(worst, std::abs(mittag_leffler(2.0, 1.0, x) - ref) / ref);
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

VerifyCheck check_ml_recurrence() {
    VerifyCheck c;
    c.name = "E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z) on 5x5x5 grid";
    c.tolerance = 1e-10;
    double worst = 0.0;
    for (double a : {0.3, 0.7, 1.0, 1.5, 2.0}) {
        for (double b : {0.5, 1.0, 1.5, 2.0, 3.0}) {
            for (double z : {-2.0, -0.5, 0.5, 1.0, 3.0}) {
                const double lhs = mittag_leffler(a, b, z);
                const double rhs = 1.0 / gamma_fn(b) + z * mittag_leffler(a, a + b, z);
                worst = std::max(worst, rel_dev(lhs, rhs));
            }
        }
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 7: kernel telescoping -------------------------------------

VerifyCheck check_kernel_telescoping() {
    VerifyCheck c;
    c.name = "kernel telescoping sum up to 1e5 terms";
    c.tolerance = 1e-11;
    double worst = 0.0;
    for (double alpha : {0.2, 0.5, 0.8, 1.5}) {
        const KernelTable table = kernel_table(alpha, 100000);
        double sum = 0.0;
        std::int64_t next_check = 10;
        for (std::int64_t z = 1; z <= table.n_max(); ++z) {
            sum += table(z);
            if (z == next_check || z == table.n_max()) {
                const double rhs = std::pow(static_cast<double>(z + 1), alpha - 1.0) - 1.0;
                worst = std::max(worst, std::abs(sum - rhs) / std::abs(rhs));
                next_check *= 10;
            }
        }
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

// --- criterion 8: natural-growth closed form -----------------------------

VerifyCheck check_natural_growth_exp() {
    VerifyCheck c;
    c.name = "natural growth at alpha=1 matches exponential";
    c.tolerance = 1e-10;
    const double rate = 0.5;
    const std::vector<double> init{1.0};
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double t = 0.1 * i;
        const double ref = std::exp(rate * t);
        worst = std::max(worst,
                         std::abs(natural_growth_solution(1.0, rate, init, t) - ref) / ref);
    }
    c.max_error = worst;
    c.passed = worst < c.tolerance;
    return c;
}

VerifyCheck check_natural_growth_landmark() {
    VerifyCheck c;
    c.name = "natural growth at alpha=0.5, t=1 hits series landmark";
    c.tolerance = 1e-4;
    const std::vector<double> init{1.0};
    c.max_error = std::abs(natural_growth_solution(0.5, 1.0, init, 1.0) - 5.00898);
    c.passed = c.max_error < c.tolerance;
    return c;
}

// --- criterion 9: dynamical landmarks of the standard logistic map -------

struct LogisticLandmarks {
    double period2_onset = 0.0;
    double period4_onset = 0.0;
    double chaos_onset = 0.0;
};

LogisticLandmarks scan_logistic_landmarks() {
    ScanConfig cfg;
    cfg.param_name = "lambda";
    cfg.lo = 2.5;
    cfg.hi = 4.0;
    cfg.grid_points = 1501;  // step 0.001
    cfg.n_transient = 400000;
    cfg.n_sample = 256;
    cfg.init = {0.3};
    const BifurcationData data = bifurcation_scan(cfg, StandardLogistic{3.0});

    LogisticLandmarks lm;
    std::size_t i = 0;
    while (i < data.rows.size()) {
        const double pv = data.rows[i].param_value;
        std::vector<double> block;
        while (i < data.rows.size() && data.rows[i].param_value == pv) {
            block.push_back(data.rows[i].state_value);
            ++i;
        }
        if (block.size() < 2 * kMaxPeriod) continue;
        const int p = detect_period(block, default_period_tol(block));
        if (lm.period2_onset == 0.0 && p >= 2) lm.period2_onset = pv;
        if (lm.period4_onset == 0.0 && p >= 4) lm.period4_onset = pv;
        if (lm.chaos_onset == 0.0 && p == kAperiodic) lm.chaos_onset = pv;
    }
    return lm;
}

// Wall-clock budget row: the measured seconds must stay under the budget.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

VerifyCheck runtime_check(const char* name, double seconds, double budget) {
    VerifyCheck c;
    c.name = name;
    c.max_error = seconds;
    c.tolerance = budget;
    c.passed = seconds < budget;
    return c;
}

VerifyCheck landmark_check(const char* name, double measured, double expected, double tol) {
    VerifyCheck c;
    c.name = name;
    c.tolerance = tol;
    c.max_error = std::abs(measured - expected);
    c.passed = measured != 0.0 && c.max_error < tol;
    return c;
}

VerifyCheck check_lyapunov_lambda4() {
    VerifyCheck c;
    c.name = "divergence exponent at lambda=4 equals ln 2";
    c.tolerance = 0.02;
    const double lam = divergence_exponent(StandardLogistic{4.0}, std::vector<double>{0.2},
                                           200000, 1e-8, 10);
    c.max_error = std::abs(lam - std::log(2.0));
    c.passed = c.max_error < c.tolerance;
    return c;
}

// --- criterion 10: second-order bracket (1 < alpha < 2) ------------------

VerifyCheck check_second_order_seed() {
    VerifyCheck c;
    c.name = "1<alpha<2 map: exact first step and bounded run";
    c.tolerance = 0.0;
    const BurstGrowth spec = burst_spec(0.1, 1.0, 1.0, 1.5, 1.0, 0.1);
    const double y0 = 0.3, y0d = 0.05;
    const std::vector<double> init{y0, y0d};
    const Trajectory t1 = simulate_direct(spec, init, 500);
    const Trajectory t2 = simulate_direct(spec, init, 500);
    double err = 0.0;
    // First step is the pure polynomial part, exactly.
    err = std::max(err, std::abs(t1.value(1, 0) - (y0 + y0d * spec.g.T)));
    err = std::max(err, std::abs(t1.value(1, 1) - y0d));
    // Determinism: bitwise identical repeat.
    if (t1.data != t2.data || t1.escaped_at != t2.escaped_at) err = std::max(err, 1.0);
    // Bounded or flagged.
    for (double x : t1.data) {
        if (!(std::abs(x) <= kEscapeThreshold)) err = std::max(err, 1.0);
    }
    if (!t1.escaped_at.has_value() && t1.size() != 501) err = std::max(err, 1.0);
    c.max_error = err;
    c.passed = err <= c.tolerance;
    return c;
}

// --- mutation sanity ------------------------------------------------------

VerifyCheck check_mutation_kernel_sign() {
    detail::MapMutations mut;
    mut.flip_kernel_sign = true;
    VerifyCheck c = check_direct_incremental(
        mut, "mutation sanity: flipped kernel sign breaks engine equivalence");
    c.detection = true;
    c.passed = c.max_error > c.tolerance;
    return c;
}

VerifyCheck check_mutation_gamma_shift() {
    detail::MapMutations mut;
    mut.gamma_shift = true;
    VerifyCheck c = check_normalization_equivalence(
        mut, "mutation sanity: gamma(alpha+1) coefficient breaks logistic collapse");
    c.detection = true;
    c.passed = c.max_error > c.tolerance;
    return c;
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

VerifyReport run_verification() {
    VerifyReport report;
    auto add = [&report](VerifyCheck c, int criterion) {
        c.criterion = criterion;
        report.checks.push_back(std::move(c));
    };
    {
        const Stopwatch clock;
        add(check_direct_incremental(), 1);
        add(runtime_check("engine-equivalence runtime budget (seconds)", clock.seconds(), 5.0),
            1);
    }
    add(check_logistic_collapse(), 2);
    add(check_normalization_equivalence(), 3);
    add(check_reduction_to_burst(), 4);
    add(check_power_forcing_reduction(), 4);
    add(check_ml_forcing_reduction(), 4);
    add(check_kicked_flow_oracle(), 5);
    add(check_ml_exponential(), 6);
    add(check_ml_cosh(), 6);
    add(check_ml_recurrence(), 6);
    add(check_kernel_telescoping(), 7);
    add(check_natural_growth_exp(), 8);
    add(check_natural_growth_landmark(), 8);
    {
        const Stopwatch clock;
        const LogisticLandmarks lm = scan_logistic_landmarks();
        add(landmark_check("logistic period-2 onset at 3.00", lm.period2_onset, 3.0, 0.01), 9);
        add(landmark_check("logistic period-4 onset at 3.449", lm.period4_onset,
                           3.4494897427831781, 0.01),
            9);
        add(landmark_check("logistic chaos onset at 3.570", lm.chaos_onset,
                           3.5699456718709450, 0.005),
            9);
        add(check_lyapunov_lambda4(), 9);
        add(runtime_check("landmark-scan runtime budget (seconds)", clock.seconds(), 60.0), 9);
    }
    add(check_second_order_seed(), 10);
    add(check_mutation_kernel_sign(), 0);
    add(check_mutation_gamma_shift(), 0);
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%-68s %13s %10s  %s\n", "check", "max error",
                  "tolerance", "verdict");
    os << line;
    for (const VerifyCheck& c : report.checks) {
        std::snprintf(line, sizeof(line), "%-68s %13.4e %10.1e  %s\n", c.name.c_str(),
                      c.max_error, c.tolerance,
                      c.passed ? "PASS" : (c.detection ? "FAIL (fault not detected)" : "FAIL"));
        os << line;
    }
    os << (report.all_passed() ? "all checks passed\n" : "FAILURES present\n");
    return os.str();
}

}  // namespace memkick
