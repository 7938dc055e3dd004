#ifndef MEMKICK_ANALYSIS_HPP
#define MEMKICK_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maps.hpp"

namespace memkick {

/// Largest cycle length the period detector tests for.
inline constexpr int kMaxPeriod = 64;
/// Marker returned by detect_period for orbits with no cycle <= kMaxPeriod.
inline constexpr int kAperiodic = 0;

/// Run a full simulation and return the trailing n_record_tail output
/// values (s = 0 component). Transient suppression only affects what is
/// returned: memory maps keep their entire history while running.
struct TrajectoryTail {
    std::vector<double> values;
    bool escaped = false;
};

TrajectoryTail run_trajectory(const MapSpec& spec, std::span<const double> init,
                              std::int64_t n_steps, std::int64_t n_record_tail,
                              Engine engine = Engine::direct);

/// Smallest p <= kMaxPeriod with |x[i+p] - x[i]| < tol over the whole
/// window; kAperiodic when none qualifies. Requires len >= 2 * kMaxPeriod.
int detect_period(std::span<const double> samples, double tol);

/// Default detection tolerance: 1e-8 scaled by the sample magnitude.
double default_period_tol(std::span<const double> samples);

struct ScanConfig {
    std::string param_name;  // MapSpec field to sweep: lambda, alpha, m, v, T, a, b, p, C, ...
    double lo = 0.0;
    double hi = 1.0;
    std::int64_t grid_points = 2;  // >= 2
    std::int64_t n_transient = 0;
    std::int64_t n_sample = 1;
    std::vector<double> init;
    int n_threads = 0;  // 0 = hardware concurrency
};

struct BifRow {
    double param_value;
    std::int64_t sample_index;
    double state_value;
    bool escaped;
};

struct BifurcationData {
    std::vector<BifRow> rows;  // ordered by (param_value, sample_index)
};

/// Rebind one named parameter of a map spec; throws on names that do not
/// apply to the spec's variant. Setting p keeps q = 1 - p.
MapSpec with_param(const MapSpec& spec, std::string_view name, double value);

/// Sweep one parameter over a uniform grid; each grid point runs
/// n_transient + n_sample steps from cfg.init and reports the trailing
/// n_sample output values. Points are independent and may run on worker
/// threads; rows always come back in grid order.
BifurcationData bifurcation_scan(const ScanConfig& cfg, const MapSpec& spec_template);

/// Two-trajectory separation exponent (Benettin-style): perturb the
/// leading component of init by delta0, evolve both full-memory
/// trajectories, rescale the separation back to delta0 every renorm_every
/// steps and average the log expansion rates. For maps with memory the
/// whole difference history is rescaled; this estimates orbital
/// divergence, not the exact tangent-space Lyapunov spectrum.
double divergence_exponent(const MapSpec& spec, std::span<const double> init,
                           std::int64_t n_steps, double delta0 = 1e-8,
                           std::int64_t renorm_every = 10);

}  // namespace memkick

#endif
