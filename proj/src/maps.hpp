#ifndef MEMKICK_MAPS_HPP
#define MEMKICK_MAPS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "econ_model.hpp"
#include "special_fn.hpp"

namespace memkick {

// --- map specifications -------------------------------------------------

/// Growth with burst-only price: the universal map family. State is
/// (Y, Y', ..., Y^(N-1)) with N = alpha.bracket_n.
struct BurstGrowth {
    GrowthParams g;
    OutputFunction f;
};

/// Growth with mixed price (non-zero between bursts). State lives in
/// R-space: (R, R', ..., R^(N-1)); the output view is Y = R^-1(R).
struct GeneralizedGrowth {
    GrowthParams g;
    MixedPrice price;
    ForcingSpec forcing;
};

/// Z_{n+1} = lambda Z_n (1 - Z_n). Bounded orbits guaranteed only for
/// lambda in (0, 4]; outside, escapes are flagged rather than rejected.
struct StandardLogistic {
    double lambda;
};

using MapSpec = std::variant<BurstGrowth, GeneralizedGrowth, StandardLogistic>;

int state_dim(const MapSpec& spec);
void validate(const MapSpec& spec);

enum class Engine { direct, incremental };

/// Convention for the n = 0 step of the step-difference engines. The
/// Volterra form gives Y_1 = Y_0 (empty memory sum) and is the default;
/// the incremental convention applies the difference equation at n = 0
/// as well, which treats Y_0 as already kicked.
enum class SeedStep { volterra, incremental };

/// States whose magnitude passes this mark the trajectory as escaped.
inline constexpr double kEscapeThreshold = 1e10;

using StateVector = std::vector<double>;

/// Ordered state history of a single run. States are flattened row-major
/// with stride dim; states[0] is the supplied initial condition and no
/// state is recorded at or after the escape index.
struct Trajectory {
    std::optional<MapSpec> spec;
    int dim = 1;
    std::vector<double> data;
    std::optional<std::int64_t> escaped_at;

    std::int64_t size() const { return static_cast<std::int64_t>(data.size()) / dim; }
    double value(std::int64_t n, int s = 0) const {
        return data[static_cast<std::size_t>(n) * dim + s];
    }
    /// The output variable Y at step n: the state itself for burst and
    /// logistic maps, r_inverse(R_n) for generalized maps (NaN where the
    /// inverse is undefined).
    double output(std::int64_t n) const;
};

namespace detail {

/// Fault-injection knobs for the verification suite's mutation checks.
/// Production entry points never set these.
struct MapMutations {
    bool flip_kernel_sign = false;  // V_alpha -> -V_alpha in step-difference engines
    bool gamma_shift = false;       // Gamma(alpha-s) -> Gamma(alpha-s+1) in kick coefficients
};

}  // namespace detail

/// Incremental-stepping view of a running simulation, used by the
/// diagnostics layer (separation exponents need to rescale a running
/// history). All engines record their full state history; memory maps
/// require it, and desk-scale runs make it cheap.
class Stepper {
public:
    virtual ~Stepper() = default;

    virtual int dim() const = 0;
    /// Number of recorded states (initial condition included).
    virtual std::int64_t size() const = 0;
    virtual double value(std::int64_t n, int s) const = 0;
    /// Output view of state n (Y for burst/logistic, r_inverse(R) for
    /// generalized; NaN where undefined).
    virtual double output(std::int64_t n) const = 0;
    /// Advance one step. Returns false when the trajectory escapes (the
    /// escaping state is not recorded); further calls keep returning false.
    virtual bool step() = 0;
    virtual bool escaped() const = 0;

    /// Replace every recorded state by ref + factor * (this - ref) and
    /// refresh derived caches. Both histories must have equal length.
    /// Memoryless maps may restrict the rescale to the latest state.
    virtual void rescale_difference_from(const Stepper& ref, double factor) = 0;
};

std::unique_ptr<Stepper> make_stepper(const MapSpec& spec, std::span<const double> init,
                                      std::int64_t n_steps_hint, Engine engine,
                                      SeedStep seed = SeedStep::volterra,
                                      detail::MapMutations mutations = {});

// --- whole-run entry points ----------------------------------------------

Trajectory simulate(const MapSpec& spec, std::span<const double> init, std::int64_t n_steps,
                    Engine engine = Engine::direct, SeedStep seed = SeedStep::volterra);

/// Universal-map evaluation straight from the stored history: for each
/// s the next state is the degree-(N-s-1) polynomial in (n+1) minus the
/// weighted memory sum over all recorded kicks.
Trajectory simulate_direct(const BurstGrowth& spec, std::span<const double> init,
                           std::int64_t n_steps);

/// Step-difference form for 0 < alpha <= 1 using the kernel table; the
/// trajectory matches simulate_direct to floating tolerance.
Trajectory simulate_incremental(const BurstGrowth& spec, std::span<const double> init,
                                std::int64_t n_steps, SeedStep seed = SeedStep::volterra);

double step_standard_logistic(double lambda, double z);

/// Normalized logistic map with memory: Z_{n+1} = lambda_a Z_n (1 - Z_n)
/// minus mu_a times the kernel-weighted history of Z_k (eta_a Z_k - 1).
/// Seeding follows the same convention as simulate_incremental.
Trajectory simulate_logistic_memory_normalized(const LogisticNormalization& norm, double z0,
                                               std::int64_t n_steps,
                                               SeedStep seed = SeedStep::volterra);

Trajectory simulate_generalized(const GeneralizedGrowth& spec, std::span<const double> init,
                                std::int64_t n_steps);

/// Step-difference form of the generalized map; constant forcing only.
Trajectory simulate_generalized_incremental(const GeneralizedGrowth& spec,
                                            std::span<const double> init, std::int64_t n_steps,
                                            SeedStep seed = SeedStep::volterra);

/// Exact integration of the memoryless (alpha = 1) kicked flow with
/// constant forcing: linear growth of slope p (m/v) C between kicks and a
/// jump of -q (m/v) T F_G(Y(kT-0)) at each kick, sampled at t = kT-0.
/// Serves as the convention-independent anchor for the generalized maps.
Trajectory kicked_flow_oracle_alpha1(const GeneralizedGrowth& spec, std::span<const double> init,
                                     std::int64_t n_steps);

}  // namespace memkick

#endif
