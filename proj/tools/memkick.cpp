// memkick command-line interface. Links the shared C API only.
//
// Exit codes: 0 success, 1 parameter/validation error, 2 numeric failure
// (non-convergence, overflow, undefined quantity).
//
// Every run merges three parameter layers, lowest precedence first:
// a config file named by $MEMKICK_CONFIG, a config file named by
// --config, and command-line flags. Config files are flat key=value
// lines with '#' comments; keys match flag names with '-' replaced by
// '_' (e.g. --n-steps <-> n_steps). Unknown keys are hard errors.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "memkick/memkick.h"

namespace {

struct CliError {
    int code;
    std::string msg;
};

int status_exit_code(memkick_status s) {
    return (s == MEMKICK_ERR_INVALID_ARGUMENT || s == MEMKICK_ERR_DOMAIN) ? 1 : 2;
}

void check(memkick_status s) {
    if (s != MEMKICK_OK) throw CliError{status_exit_code(s), memkick_last_error()};
}

// ---- config layers -----------------------------------------------------

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "map",   "engine", "seed_step", "out",   "n_steps", "m",     "v",       "T",
        "alpha", "a",      "b",         "lambda", "z0",     "y0",    "y0_d1",   "p",
        "q",     "g_case", "rho",       "j",     "P0",      "forcing", "C",     "beta",
        "mu",    "gamma",  "param",     "from",  "to",      "grid",  "transient", "sample",
        "tol",   "max_terms", "z",      "t",     "rate",    "t_max", "delta0",
        "renorm_every", "threads", "nmax",
    };
    return keys;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void load_config_file(const std::string& path, std::map<std::string, std::string>& into) {
    std::ifstream in(path);
    if (!in) throw CliError{1, "config: cannot open '" + path + "'"};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw CliError{1, "config: " + path + ":" + std::to_string(lineno) +
                                  ": expected key=value"};
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (!known_keys().count(key)) {
            throw CliError{1, "config: unknown key '" + key + "' in " + path};
        }
        into[key] = value;  // later layers overwrite earlier ones
    }
}

std::map<std::string, std::string> load_config_layers(int argc, char** argv) {
    std::map<std::string, std::string> cfg;
    if (const char* env = std::getenv("MEMKICK_CONFIG"); env && *env) {
        load_config_file(env, cfg);
    }
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            if (i + 1 >= argc) throw CliError{1, "config: --config requires a path"};
            load_config_file(argv[i + 1], cfg);
        } else if (arg.rfind("--config=", 0) == 0) {
            load_config_file(arg.substr(9), cfg);
        }
    }
    return cfg;
}

// ---- flag/config/default resolution -------------------------------------

class Params {
public:
    Params(CLI::App* sub, const std::map<std::string, std::string>* cfg)
        : sub_(sub), cfg_(cfg) {}

    bool has(const std::string& flag) const {
        return sub_->count(flag) > 0 || cfg_->count(key_of(flag)) > 0;
    }

    double num(const std::string& flag, double flag_value,
               std::optional<double> fallback = std::nullopt) const {
        if (sub_->count(flag) > 0) return flag_value;
        const std::string key = key_of(flag);
        if (const auto it = cfg_->find(key); it != cfg_->end()) return parse_num(key, it->second);
        if (fallback) return *fallback;
        throw CliError{1, key + ": required (flag " + flag + " or config key)"};
    }

    long integer(const std::string& flag, long flag_value,
                 std::optional<long> fallback = std::nullopt) const {
        const double v = num(flag, static_cast<double>(flag_value),
                             fallback ? std::optional<double>(static_cast<double>(*fallback))
                                      : std::nullopt);
        const long n = static_cast<long>(v);
        if (static_cast<double>(n) != v) {
            throw CliError{1, key_of(flag) + ": must be an integer"};
        }
        return n;
    }

    std::string str(const std::string& flag, const std::string& flag_value,
                    std::optional<std::string> fallback = std::nullopt) const {
        if (sub_->count(flag) > 0) return flag_value;
        const std::string key = key_of(flag);
        if (const auto it = cfg_->find(key); it != cfg_->end()) return it->second;
        if (fallback) return *fallback;
        throw CliError{1, key + ": required (flag " + flag + " or config key)"};
    }

    static std::string key_of(const std::string& flag) {
        std::string key = flag.substr(flag.find_first_not_of('-'));
        for (char& c : key) {
            if (c == '-') c = '_';
        }
        return key;
    }

private:
    static double parse_num(const std::string& key, const std::string& text) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw CliError{1, key + ": not a number: '" + text + "'"};
        }
    }

    CLI::App* sub_;
    const std::map<std::string, std::string>* cfg_;
};

// ---- output helpers ------------------------------------------------------

class Out {
public:
    explicit Out(const std::string& path) {
        if (path.empty()) {
            f_ = stdout;
            owned_ = false;
        } else {
            f_ = std::fopen(path.c_str(), "w");
            if (!f_) throw CliError{1, "out: cannot open '" + path + "' for writing"};
            owned_ = true;
        }
    }
    ~Out() {
        if (owned_ && f_) std::fclose(f_);
    }
    Out(const Out&) = delete;
    Out& operator=(const Out&) = delete;

    void line(const std::string& s) { std::fprintf(f_, "%s\n", s.c_str()); }
    std::FILE* file() { return f_; }

private:
    std::FILE* f_ = nullptr;
    bool owned_ = false;
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---- spec construction shared by simulate/bifurcate/lyapunov/period ------

struct SpecDeleter {
    void operator()(memkick_spec* s) const { memkick_spec_free(s); }
};
using SpecPtr = std::unique_ptr<memkick_spec, SpecDeleter>;

struct TrajDeleter {
    void operator()(memkick_trajectory* t) const { memkick_trajectory_free(t); }
};
using TrajPtr = std::unique_ptr<memkick_trajectory, TrajDeleter>;

struct MapFlags {
    std::string map;
    double m = 0, v = 0, T = 0, alpha = 0, a = 0, b = 0;
    double lambda = 0, z0 = 0, y0 = 0, y0_d1 = 0;
    double p = 0, q = 0, P0 = 0, rho = 0, j = 0;
    double C = 0, beta = 0, mu = 0, gamma = 0;
    std::string g_case, forcing;
};

// Registers the map-building flags on a subcommand.
void add_map_flags(CLI::App* sub, MapFlags& f, bool with_map_choice = true) {
    if (with_map_choice) {
        sub->add_option("--map", f.map, "map family: burst | generalized | logistic");
    }
    sub->add_option("--m", f.m, "net-investment norm, 0 < m < 1");
    sub->add_option("--v", f.v, "accelerator coefficient, > 0");
    sub->add_option("--T", f.T, "kick period, > 0");
    sub->add_option("--alpha", f.alpha, "memory order, > 0");
    sub->add_option("--a", f.a, "kick amplitude slope: F(Y) = a Y - b");
    sub->add_option("--b", f.b, "kick amplitude offset");
    sub->add_option("--lambda", f.lambda, "logistic parameter");
    sub->add_option("--z0", f.z0, "logistic initial value");
    sub->add_option("--y0", f.y0, "initial output Y(0)");
    sub->add_option("--y0-d1", f.y0_d1, "initial derivative (second-order brackets)");
    sub->add_option("--p", f.p, "inter-burst price weight, q = 1 - p");
    sub->add_option("--q", f.q, "crisis weight (must equal 1 - p when both given)");
    sub->add_option("--g-case", f.g_case, "inter-burst price shape: constant | power");
    sub->add_option("--P0", f.P0, "constant price level (g-case constant)");
    sub->add_option("--rho", f.rho, "power-law price coefficient");
    sub->add_option("--j", f.j, "power-law price exponent, != 0");
    sub->add_option("--forcing", f.forcing, "forcing: constant | power | mittag-leffler");
    sub->add_option("--C", f.C, "forcing coefficient");
    sub->add_option("--beta", f.beta, "forcing exponent parameter");
    sub->add_option("--mu", f.mu, "forcing Mittag-Leffler order");
    sub->add_option("--gamma", f.gamma, "forcing Mittag-Leffler argument coefficient");
}

struct BuiltSpec {
    SpecPtr spec;
    std::vector<double> init;
    bool generalized = false;
};

BuiltSpec build_spec(CLI::App* sub, const MapFlags& f,
                     const std::map<std::string, std::string>& cfg) {
    const Params p(sub, &cfg);
    const std::string map = p.str("--map", f.map);
    BuiltSpec built;
    memkick_spec* raw = nullptr;

    if (map == "logistic") {
        check(memkick_spec_new_logistic(p.num("--lambda", f.lambda), &raw));
        built.spec.reset(raw);
        built.init = {p.num("--z0", f.z0)};
        return built;
    }

    const double m = p.num("--m", f.m);
    const double v = p.num("--v", f.v);
    const double T = p.num("--T", f.T);
    const double alpha = p.num("--alpha", f.alpha);

    if (map == "burst") {
        check(memkick_spec_new_burst(m, v, T, alpha, p.num("--a", f.a), p.num("--b", f.b),
                                     &raw));
        built.spec.reset(raw);
        int dim = 0;
        check(memkick_spec_dim(built.spec.get(), &dim));
        built.init = {p.num("--y0", f.y0)};
        if (dim == 2) built.init.push_back(p.num("--y0-d1", f.y0_d1));
        if (dim > 2) throw CliError{1, "alpha: CLI runs support brackets 1 and 2 (alpha <= 2)"};
        return built;
    }

    if (map != "generalized") {
        throw CliError{1, "map: must be one of burst | generalized | logistic"};
    }

    memkick_generalized_params gp{};
    gp.m = m;
    gp.v = v;
    gp.T = T;
    gp.alpha = alpha;
    if (p.has("--p")) {
        gp.p = p.num("--p", f.p);
        if (p.has("--q") && std::abs(p.num("--q", f.q) + gp.p - 1.0) > 1e-12) {
            throw CliError{1, "q: p + q must equal 1"};
        }
    } else if (p.has("--q")) {
        gp.p = 1.0 - p.num("--q", f.q);
    } else {
        throw CliError{1, "p: required for generalized maps (or q = 1 - p)"};
    }
    const std::string gcase = p.str("--g-case", f.g_case, std::string("constant"));
    if (gcase == "constant") {
        gp.gcase = MEMKICK_G_CONSTANT;
        gp.P0 = p.num("--P0", f.P0);
    } else if (gcase == "power") {
        gp.gcase = MEMKICK_G_POWER;
        gp.rho = p.num("--rho", f.rho);
        gp.j = p.num("--j", f.j);
    } else {
        throw CliError{1, "g_case: must be constant | power"};
    }
    gp.a = p.num("--a", f.a);
    gp.b = p.num("--b", f.b);
    const std::string forcing = p.str("--forcing", f.forcing, std::string("constant"));
    if (forcing == "constant") {
        gp.forcing = MEMKICK_FORCING_CONSTANT;
        gp.C = p.num("--C", f.C);
    } else if (forcing == "power") {
        gp.forcing = MEMKICK_FORCING_POWER;
        gp.C = p.num("--C", f.C);
        gp.beta = p.num("--beta", f.beta);
    } else if (forcing == "mittag-leffler") {
        gp.forcing = MEMKICK_FORCING_MITTAG_LEFFLER;
        gp.C = p.num("--C", f.C);
        gp.beta = p.num("--beta", f.beta);
        gp.mu = p.num("--mu", f.mu);
        gp.gamma = p.num("--gamma", f.gamma);
    } else {
        throw CliError{1, "forcing: must be constant | power | mittag-leffler"};
    }
    check(memkick_spec_new_generalized(&gp, &raw));
    built.spec.reset(raw);
    built.generalized = true;

    // Initial data: Y(0) in output units, mapped through the R transform;
    // the optional derivative applies to the transformed variable.
    const double y0 = p.num("--y0", f.y0);
    double r0 = 0.0;
    check(memkick_spec_r_transform(built.spec.get(), y0, &r0));
    built.init = {r0};
    int dim = 0;
    check(memkick_spec_dim(built.spec.get(), &dim));
    if (dim == 2) built.init.push_back(p.num("--y0-d1", f.y0_d1));
    if (dim > 2) throw CliError{1, "alpha: CLI runs support brackets 1 and 2 (alpha <= 2)"};
    return built;
}

// ---- CSV writers -----------------------------------------------------------

void write_trajectory_csv(Out& out, const memkick_trajectory* t, bool generalized) {
    const int dim = memkick_trajectory_dim(t);
    std::string header = "n";
    if (generalized) {
        header += ",R";
        if (dim == 2) header += ",R_d1";
        header += ",Y";
    } else {
        header += ",Y";
        if (dim == 2) header += ",Y_d1";
    }
    out.line(header);
    const std::size_t count = memkick_trajectory_size(t);
    const int value_cols = generalized ? dim + 1 : dim;
    for (std::size_t n = 0; n < count; ++n) {
        std::string row = std::to_string(n);
        for (int s = 0; s < dim; ++s) {
            double v = 0.0;
            check(memkick_trajectory_value(t, n, s, &v));
            row += "," + fmt17(v);
        }
        if (generalized) {
            double y = 0.0;
            check(memkick_trajectory_output(t, n, &y));
            row += "," + fmt17(y);
        }
        out.line(row);
    }
    const long escaped_at = memkick_trajectory_escaped_at(t);
    if (escaped_at >= 0) {
        std::string row = std::to_string(escaped_at);
        for (int c = 0; c < value_cols; ++c) row += ",escaped";
        out.line(row);
    }
}

// ---- subcommand runners -----------------------------------------------------

int run_mlf(CLI::App* sub, const std::map<std::string, std::string>& cfg, double alpha,
            double beta, double z, double tol, long max_terms) {
    const Params p(sub, &cfg);
    double value = 0.0;
    check(memkick_mittag_leffler(p.num("--alpha", alpha), p.num("--beta", beta),
                                 p.num("--z", z), p.num("--tol", tol, 0.0),
                                 static_cast<int>(p.integer("--max-terms", max_terms, 0L)),
                                 &value));
    std::printf("%s\n", fmt17(value).c_str());
    return 0;
}

int run_kernel(CLI::App* sub, const std::map<std::string, std::string>& cfg, double alpha,
               long nmax, const std::string& out_path) {
    const Params p(sub, &cfg);
    const double a = p.num("--alpha", alpha);
    const long n = p.integer("--nmax", nmax);
    if (n < 1) throw CliError{1, "nmax: must satisfy >= 1"};
    std::vector<double> values(static_cast<std::size_t>(n));
    check(memkick_kernel_table(a, n, values.data()));
    Out out(p.str("--out", out_path, std::string("")));
    out.line("z,value");
    for (long z = 1; z <= n; ++z) {
        out.line(std::to_string(z) + "," + fmt17(values[static_cast<std::size_t>(z - 1)]));
    }
    return 0;
}

int run_simulate(CLI::App* sub, const std::map<std::string, std::string>& cfg,
                 const MapFlags& flags, long n_steps, const std::string& engine,
                 const std::string& seed_step, const std::string& out_path) {
    const Params p(sub, &cfg);
    BuiltSpec built = build_spec(sub, flags, cfg);
    const std::string eng = p.str("--engine", engine, std::string("direct"));
    const std::string seed = p.str("--seed-step", seed_step, std::string("volterra"));
    if (eng != "direct" && eng != "incremental") {
        throw CliError{1, "engine: must be direct | incremental"};
    }
    if (seed != "volterra" && seed != "incremental") {
        throw CliError{1, "seed_step: must be volterra | incremental"};
    }
    memkick_trajectory* raw = nullptr;
    check(memkick_simulate(
        built.spec.get(), built.init.data(), built.init.size(), p.integer("--n-steps", n_steps),
        eng == "direct" ? MEMKICK_ENGINE_DIRECT : MEMKICK_ENGINE_INCREMENTAL,
        seed == "volterra" ? MEMKICK_SEED_VOLTERRA : MEMKICK_SEED_INCREMENTAL, &raw));
    const TrajPtr traj(raw);
    Out out(p.str("--out", out_path, std::string("")));
    write_trajectory_csv(out, traj.get(), built.generalized);
    return 0;
}

int run_solve_growth(CLI::App* sub, const std::map<std::string, std::string>& cfg, double alpha,
                     double rate, double y0, double y0_d1, double t, long sample, double t_max,
                     const std::string& out_path) {
    const Params p(sub, &cfg);
    const double a = p.num("--alpha", alpha);
    const double r = p.num("--rate", rate);
    std::vector<double> init{p.num("--y0", y0)};
    if (a > 1.0) init.push_back(p.num("--y0-d1", y0_d1));
    if (a > 2.0) throw CliError{1, "alpha: CLI runs support brackets 1 and 2 (alpha <= 2)"};

    if (p.has("--sample")) {
        const long n = p.integer("--sample", sample);
        if (n < 2) throw CliError{1, "sample: must satisfy >= 2"};
        const double tmax = p.num("--t-max", t_max);
        Out out(p.str("--out", out_path, std::string("")));
        out.line("t,Y");
        for (long i = 0; i < n; ++i) {
            const double ti = tmax * static_cast<double>(i) / static_cast<double>(n - 1);
            double value = 0.0;
            check(memkick_natural_growth(a, r, init.data(), init.size(), ti, &value));
            out.line(fmt17(ti) + "," + fmt17(value));
        }
        return 0;
    }
    double value = 0.0;
    check(memkick_natural_growth(a, r, init.data(), init.size(), p.num("--t", t), &value));
    std::printf("%s\n", fmt17(value).c_str());
    return 0;
}

int run_bifurcate(CLI::App* sub, const std::map<std::string, std::string>& cfg,
                  const MapFlags& flags, const std::string& param, double from, double to,
                  long grid, long transient, long sample, long threads,
                  const std::string& out_path) {
    const Params p(sub, &cfg);
    // The swept parameter needs no template value: seed it with the sweep
    // start unless the user pinned one anyway.
    std::map<std::string, std::string> cfg_local = cfg;
    const std::string param_name = p.str("--param", param);
    if (known_keys().count(param_name) && sub->count("--" + param_name) == 0 &&
        !cfg_local.count(param_name)) {
        cfg_local[param_name] = fmt17(p.num("--from", from));
    }
    BuiltSpec built = build_spec(sub, flags, cfg_local);
    memkick_bif_data* raw = nullptr;
    check(memkick_bifurcation_scan(
        built.spec.get(), p.str("--param", param).c_str(), p.num("--from", from),
        p.num("--to", to), p.integer("--grid", grid), p.integer("--transient", transient, 1000L),
        p.integer("--sample", sample, 128L), built.init.data(), built.init.size(),
        static_cast<int>(p.integer("--threads", threads, 0L)), &raw));
    std::unique_ptr<memkick_bif_data, void (*)(memkick_bif_data*)> data(raw, memkick_bif_free);
    Out out(p.str("--out", out_path, std::string("")));
    out.line("param,sample_index,value,escaped");
    const std::size_t rows = memkick_bif_rows(data.get());
    for (std::size_t i = 0; i < rows; ++i) {
        double pv = 0.0, sv = 0.0;
        long idx = 0;
        int escaped = 0;
        check(memkick_bif_row(data.get(), i, &pv, &idx, &sv, &escaped));
        out.line(fmt17(pv) + "," + std::to_string(idx) + "," + fmt17(sv) + "," +
                 std::to_string(escaped));
    }
    return 0;
}

int run_lyapunov(CLI::App* sub, const std::map<std::string, std::string>& cfg,
                 const MapFlags& flags, long n_steps, double delta0, long renorm_every) {
    const Params p(sub, &cfg);
    BuiltSpec built = build_spec(sub, flags, cfg);
    double value = 0.0;
    check(memkick_divergence_exponent(built.spec.get(), built.init.data(), built.init.size(),
                                      p.integer("--n-steps", n_steps, 100000L),
                                      p.num("--delta0", delta0, 1e-8),
                                      p.integer("--renorm-every", renorm_every, 10L), &value));
    std::printf("%s\n", fmt17(value).c_str());
    return 0;
}

int run_period(CLI::App* sub, const std::map<std::string, std::string>& cfg,
               const MapFlags& flags, long transient, long sample, double tol) {
    const Params p(sub, &cfg);
    BuiltSpec built = build_spec(sub, flags, cfg);
    const long n_transient = p.integer("--transient", transient, 10000L);
    const long n_sample = p.integer("--sample", sample, 256L);
    memkick_trajectory* raw = nullptr;
    check(memkick_simulate(built.spec.get(), built.init.data(), built.init.size(),
                           n_transient + n_sample, MEMKICK_ENGINE_DIRECT,
                           MEMKICK_SEED_VOLTERRA, &raw));
    const TrajPtr traj(raw);
    const std::size_t count = memkick_trajectory_size(traj.get());
    if (count < static_cast<std::size_t>(n_sample)) {
        throw CliError{2, "period: trajectory escaped before the sample window"};
    }
    std::vector<double> tail(static_cast<std::size_t>(n_sample));
    for (long k = 0; k < n_sample; ++k) {
        check(memkick_trajectory_output(traj.get(), count - n_sample + k,
                                        &tail[static_cast<std::size_t>(k)]));
    }
    int period = 0;
    check(memkick_detect_period(tail.data(), tail.size(), p.num("--tol", tol, 0.0), &period));
    if (period == 0) {
        std::printf("aperiodic\n");
    } else {
        std::printf("%d\n", period);
    }
    return 0;
}

int run_verify() {
    memkick_verify_report* raw = nullptr;
    check(memkick_verify_run(&raw));
    std::unique_ptr<memkick_verify_report, void (*)(memkick_verify_report*)> report(
        raw, memkick_verify_free);
    std::printf("%s", memkick_verify_format(report.get()));
    return memkick_verify_all_passed(report.get()) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        const auto cfg = load_config_layers(argc, argv);

        CLI::App app{"memkick: discrete maps with power-law memory"};
        app.require_subcommand(1);
        std::string config_path;
        app.add_option("--config", config_path,
                       "flat key=value parameter file (flags take precedence)");

        // mlf
        double ml_alpha = 0, ml_beta = 0, ml_z = 0, ml_tol = 0;
        long ml_terms = 0;
        CLI::App* mlf = app.add_subcommand("mlf", "two-parameter Mittag-Leffler value");
        mlf->add_option("--alpha", ml_alpha, "series order, > 0");
        mlf->add_option("--beta", ml_beta, "series shift, > 0");
        mlf->add_option("--z", ml_z, "argument");
        mlf->add_option("--tol", ml_tol, "relative truncation tolerance");
        mlf->add_option("--max-terms", ml_terms, "series term budget");

        // kernel
        double k_alpha = 0;
        long k_nmax = 0;
        std::string k_out;
        CLI::App* kernel = app.add_subcommand("kernel", "memory-kernel table as CSV");
        kernel->add_option("--alpha", k_alpha, "kernel order, > 0");
        kernel->add_option("--nmax", k_nmax, "table length");
        kernel->add_option("--out", k_out, "output file (default stdout)");

        // simulate
        MapFlags sim_flags;
        long sim_steps = 0;
        std::string sim_engine, sim_seed, sim_out;
        CLI::App* simulate = app.add_subcommand("simulate", "iterate a map and emit CSV");
        add_map_flags(simulate, sim_flags);
        simulate->add_option("--n-steps", sim_steps, "number of steps");
        simulate->add_option("--engine", sim_engine, "direct | incremental");
        simulate->add_option("--seed-step", sim_seed, "volterra | incremental");
        simulate->add_option("--out", sim_out, "output file (default stdout)");

        // solve-growth
        double sg_alpha = 0, sg_rate = 0, sg_y0 = 0, sg_y0d = 0, sg_t = 0, sg_tmax = 0;
        long sg_sample = 0;
        std::string sg_out;
        CLI::App* solve = app.add_subcommand("solve-growth",
                                             "closed-form natural-growth solution");
        solve->add_option("--alpha", sg_alpha, "memory order, > 0");
        solve->add_option("--rate", sg_rate, "growth rate m P / v");
        solve->add_option("--y0", sg_y0, "Y(0)");
        solve->add_option("--y0-d1", sg_y0d, "Y'(0) for 1 < alpha <= 2");
        solve->add_option("--t", sg_t, "evaluation time");
        solve->add_option("--sample", sg_sample, "emit CSV with this many points");
        solve->add_option("--t-max", sg_tmax, "CSV horizon");
        solve->add_option("--out", sg_out, "output file (default stdout)");

        // bifurcate
        MapFlags bif_flags;
        std::string bif_param, bif_out;
        double bif_from = 0, bif_to = 0;
        long bif_grid = 0, bif_transient = 0, bif_sample = 0, bif_threads = 0;
        CLI::App* bifurcate = app.add_subcommand("bifurcate", "parameter sweep as CSV");
        add_map_flags(bifurcate, bif_flags);
        bifurcate->add_option("--param", bif_param, "parameter to sweep (e.g. lambda, alpha, b)");
        bifurcate->add_option("--from", bif_from, "sweep start");
        bifurcate->add_option("--to", bif_to, "sweep end");
        bifurcate->add_option("--grid", bif_grid, "grid points, >= 2");
        bifurcate->add_option("--transient", bif_transient, "steps before sampling");
        bifurcate->add_option("--sample", bif_sample, "samples per grid point");
        bifurcate->add_option("--threads", bif_threads, "worker threads (0 = auto)");
        bifurcate->add_option("--out", bif_out, "output file (default stdout)");

        // lyapunov
        MapFlags ly_flags;
        long ly_steps = 0, ly_renorm = 0;
        double ly_delta0 = 0;
        CLI::App* lyapunov = app.add_subcommand("lyapunov",
                                                "two-trajectory divergence exponent");
        add_map_flags(lyapunov, ly_flags);
        lyapunov->add_option("--n-steps", ly_steps, "steps to evolve");
        lyapunov->add_option("--delta0", ly_delta0, "initial separation");
        lyapunov->add_option("--renorm-every", ly_renorm, "renormalization cadence");

        // period
        MapFlags pd_flags;
        long pd_transient = 0, pd_sample = 0;
        double pd_tol = 0;
        CLI::App* period = app.add_subcommand("period", "detect the orbit period");
        add_map_flags(period, pd_flags);
        period->add_option("--transient", pd_transient, "steps before sampling");
        period->add_option("--sample", pd_sample, "samples tested (>= 128)");
        period->add_option("--tol", pd_tol, "match tolerance (0 = auto)");

        // verify
        CLI::App* verify = app.add_subcommand(
            "verify", "run the oracle/reduction suite and report pass/fail");

        // Let the global --config flag appear after the subcommand name.
        for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
        }

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 1;
        }

        if (mlf->parsed()) return run_mlf(mlf, cfg, ml_alpha, ml_beta, ml_z, ml_tol, ml_terms);
        if (kernel->parsed()) return run_kernel(kernel, cfg, k_alpha, k_nmax, k_out);
        if (simulate->parsed()) {
            return run_simulate(simulate, cfg, sim_flags, sim_steps, sim_engine, sim_seed,
                                sim_out);
        }
        if (solve->parsed()) {
            return run_solve_growth(solve, cfg, sg_alpha, sg_rate, sg_y0, sg_y0d, sg_t,
                                    sg_sample, sg_tmax, sg_out);
        }
        if (bifurcate->parsed()) {
            return run_bifurcate(bifurcate, cfg, bif_flags, bif_param, bif_from, bif_to,
                                 bif_grid, bif_transient, bif_sample, bif_threads, bif_out);
        }
        if (lyapunov->parsed()) {
            return run_lyapunov(lyapunov, cfg, ly_flags, ly_steps, ly_delta0, ly_renorm);
        }
        if (period->parsed()) return run_period(period, cfg, pd_flags, pd_transient, pd_sample,
                                                pd_tol);
        if (verify->parsed()) return run_verify();
        return 1;
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.msg.c_str());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
