#include "maps.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace memkick {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool within_bounds(double x) { return std::isfinite(x) && std::abs(x) <= kEscapeThreshold; }

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Shared storage and bookkeeping for all engines.
class StepperBase : public Stepper {
public:
    StepperBase(int dim, std::span<const double> init) : dim_(dim) {
        if (static_cast<int>(init.size()) != dim) {
            std::ostringstream os;
            os << "init: must have " << dim << " component(s), got " << init.size();
            fail(errc::invalid_argument, os.str());
        }
        for (double x : init) {
            if (!std::isfinite(x)) fail(errc::invalid_argument, "init: components must be finite");
        }
        states_.assign(init.begin(), init.end());
    }

    int dim() const override { return dim_; }
    std::int64_t size() const override { return static_cast<std::int64_t>(states_.size()) / dim_; }
    double value(std::int64_t n, int s) const override {
        return states_[static_cast<std::size_t>(n) * dim_ + s];
    }
    double output(std::int64_t n) const override { return value(n, 0); }
    bool escaped() const override { return escaped_; }

    void rescale_difference_from(const Stepper& ref, double factor) override {
        const std::int64_t count = size();
        for (std::int64_t n = 0; n < count; ++n) {
            for (int s = 0; s < dim_; ++s) {
                const double r = ref.value(n, s);
                states_[static_cast<std::size_t>(n) * dim_ + s] =
                    r + factor * (value(n, s) - r);
            }
        }
        refresh_after_rescale();
    }

protected:
    // Append the candidate state if it is in bounds; otherwise flag escape.
    bool record(std::span<const double> next) {
        for (double x : next) {
            if (!within_bounds(x)) {
                escaped_ = true;
                return false;
            }
        }
        states_.insert(states_.end(), next.begin(), next.end());
        return true;
    }

    virtual void refresh_after_rescale() {}

    int dim_;
    std::vector<double> states_;
    bool escaped_ = false;
};

// ---------------------------------------------------------------------
// Standard logistic map
// ---------------------------------------------------------------------

class LogisticStepper final : public StepperBase {
public:
    LogisticStepper(double lambda, std::span<const double> init)
        : StepperBase(1, init), lambda_(lambda) {}

    bool step() override {
        if (escaped_) return false;
        const double z = states_.back();
        const double next = step_standard_logistic(lambda_, z);
        return record({&next, 1});
    }

    void rescale_difference_from(const Stepper& ref, double factor) override {
        // Memoryless: only the latest state feeds the future.
        const std::int64_t n = size() - 1;
        const double r = ref.value(n, 0);
        states_.back() = r + factor * (states_.back() - r);
    }

private:
    double lambda_;
};

// ---------------------------------------------------------------------
// Power tables shared by the Volterra-form engines
// ---------------------------------------------------------------------

// d^(exponent) for d = 1..n, grown on demand.
class PowTable {
public:
    explicit PowTable(double exponent) : exponent_(exponent) {}

    double operator()(std::int64_t d) {
        while (static_cast<std::int64_t>(values_.size()) < d) {
            values_.push_back(std::pow(static_cast<double>(values_.size() + 1), exponent_));
        }
        return values_[static_cast<std::size_t>(d - 1)];
    }
    void reserve(std::int64_t n) { values_.reserve(static_cast<std::size_t>(n)); }

private:
    double exponent_;
    std::vector<double> values_;
};

// V_alpha(z) for z = 1.., grown on demand; optionally sign-flipped for
// the verification suite's mutation checks.
class KernelCache {
public:
    KernelCache(double alpha, bool flip_sign) : alpha_(alpha), sign_(flip_sign ? -1.0 : 1.0) {}

    double operator()(std::int64_t z) {
        while (static_cast<std::int64_t>(values_.size()) < z) {
            values_.push_back(sign_ *
                              kernel_v(alpha_, static_cast<std::int64_t>(values_.size()) + 1));
        }
        return values_[static_cast<std::size_t>(z - 1)];
    }

private:
    double alpha_;
    double sign_;
    std::vector<double> values_;
};

// ---------------------------------------------------------------------
// Burst-only maps (universal map family)
// ---------------------------------------------------------------------

class BurstDirectStepper final : public StepperBase {
public:
    BurstDirectStepper(const BurstGrowth& spec, std::span<const double> init,
                       std::int64_t n_steps_hint, detail::MapMutations mut)
        : StepperBase(spec.g.alpha.bracket_n, init), spec_(spec) {
        const double alpha = spec.g.alpha.value;
        const int N = dim_;
        for (int s = 0; s < N; ++s) {
            const double shift = mut.gamma_shift ? 1.0 : 0.0;
            coef_.push_back(spec.g.m * std::pow(spec.g.T, alpha - s) /
                            (spec.g.v * gamma_fn(alpha - s + shift)));
            pow_.emplace_back(alpha - 1.0 - s);
            if (n_steps_hint > 0) pow_.back().reserve(n_steps_hint);
            // Polynomial coefficients (T^k/k!) Y_0^(k+s) for k = 0..N-s-1.
            std::vector<double> pc;
            for (int k = 0; k + s < N; ++k) {
                pc.push_back(std::pow(spec.g.T, k) / factorial(k) * init[k + s]);
            }
            poly_.push_back(std::move(pc));
        }
        kick_.push_back(0.0);  // k = 0 never enters the memory sum
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        std::vector<double> next(dim_);
        for (int s = 0; s < dim_; ++s) {
            double acc = polynomial(s, n + 1);
            double mem = 0.0;
            for (std::int64_t k = 1; k <= n; ++k) mem += pow_[s](n + 1 - k) * kick_[k];
            acc -= coef_[s] * mem;
            next[s] = acc;
        }
        if (!record(next)) return false;
        kick_.push_back(spec_.f(next[0]) * next[0]);
        return true;
    }

protected:
    void refresh_after_rescale() override {
        for (std::int64_t k = 1; k < size(); ++k) {
            const double y = value(k, 0);
            kick_[static_cast<std::size_t>(k)] = spec_.f(y) * y;
        }
        // The polynomial part is anchored at the initial state.
        for (int s = 0; s < dim_; ++s) {
            for (int k = 0; k + s < dim_; ++k) {
                poly_[s][k] = std::pow(spec_.g.T, k) / factorial(k) * value(0, k + s);
            }
        }
    }

private:
    double polynomial(int s, std::int64_t np1) const {
        double acc = 0.0;
        double x = 1.0;
        for (std::size_t k = 0; k < poly_[s].size(); ++k) {
            acc += poly_[s][k] * x;
            x *= static_cast<double>(np1);
        }
        return acc;
    }

    BurstGrowth spec_;
    std::vector<double> coef_;
    std::vector<PowTable> pow_;
    std::vector<std::vector<double>> poly_;
    std::vector<double> kick_;  // F(Y_k) Y_k
};

class BurstIncrementalStepper final : public StepperBase {
public:
    BurstIncrementalStepper(const BurstGrowth& spec, std::span<const double> init, SeedStep seed,
                            detail::MapMutations mut)
        : StepperBase(1, init),
          spec_(spec),
          seed_(seed),
          kernel_(spec.g.alpha.value, mut.flip_kernel_sign) {
        const double alpha = spec.g.alpha.value;
        if (spec.g.alpha.bracket_n != 1) {
            fail(errc::invalid_argument,
                 "engine: incremental burst form requires 0 < alpha <= 1 (bracket 1)");
        }
        const double shift = mut.gamma_shift ? 1.0 : 0.0;
        coef_ = spec.g.m * std::pow(spec.g.T, alpha) / (spec.g.v * gamma_fn(alpha + shift));
        kick_.push_back(spec.f(init[0]) * init[0]);
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        double next;
        if (n == 0) {
            next = seed_ == SeedStep::volterra ? states_[0] : states_[0] - coef_ * kick_[0];
        } else {
            double mem = 0.0;
            for (std::int64_t k = 1; k <= n - 1; ++k) mem += kernel_(n - k) * kick_[k];
            next = states_.back() - coef_ * kick_[static_cast<std::size_t>(n)] - coef_ * mem;
        }
        if (!record({&next, 1})) return false;
        kick_.push_back(spec_.f(next) * next);
        return true;
    }

protected:
    void refresh_after_rescale() override {
        for (std::int64_t k = 0; k < size(); ++k) {
            const double y = value(k, 0);
            kick_[static_cast<std::size_t>(k)] = spec_.f(y) * y;
        }
    }

private:
    BurstGrowth spec_;
    SeedStep seed_;
    double coef_;
    KernelCache kernel_;
    std::vector<double> kick_;  // F(Y_k) Y_k, k >= 0 (k = 0 used only by incremental seeding)
};

// ---------------------------------------------------------------------
// Generalized maps (R-space)
// ---------------------------------------------------------------------

// Kick amplitudes F_G(Y_k) shared by the generalized engines. Y_k is the
// inverse transform of the leading state component; a domain violation is
// fatal only when the kick term is active (q != 0).
class GeneralizedKicks {
public:
    GeneralizedKicks(const GeneralizedGrowth& spec) : spec_(spec) {
        values_.push_back(kNaN);  // k = 0 never enters the memory sum
    }

    // Returns false if the amplitude for state index k cannot be formed.
    bool append_for(double r_state) {
        if (spec_.price.q == 0.0) {
            values_.push_back(0.0);  // kick term absent
            return true;
        }
        if (!r_inverse_defined(spec_.price.G, r_state)) return false;
        const double y = r_inverse(spec_.price.G, r_state);
        const double w = effective_kick(spec_.price.G, spec_.price.F, y);
        if (!std::isfinite(w)) return false;
        values_.push_back(w);
        return true;
    }

    bool recompute(const Stepper& st) {
        if (spec_.price.q == 0.0) return true;
        for (std::size_t k = 1; k < values_.size(); ++k) {
            const double r = st.value(static_cast<std::int64_t>(k), 0);
            if (!r_inverse_defined(spec_.price.G, r)) return false;
            values_[k] = effective_kick(spec_.price.G, spec_.price.F, r_inverse(spec_.price.G, r));
        }
        return true;
    }

    double operator[](std::int64_t k) const { return values_[static_cast<std::size_t>(k)]; }

private:
    const GeneralizedGrowth& spec_;
    std::vector<double> values_;
};

// (I^(alpha-s) C)((n+1) T) in closed form per forcing variant, scaled by
// p m / v. The Mittag-Leffler variant evaluates the series each step.
class ForcingTerm {
public:
    ForcingTerm(const GeneralizedGrowth& spec, int s) {
        const double alpha = spec.g.alpha.value;
        const double pmv = spec.price.p * spec.g.m / spec.g.v;
        T_ = spec.g.T;
        if (const auto* c = std::get_if<ConstantC>(&spec.forcing)) {
            exponent_ = alpha - s;
            amplitude_ = pmv * c->C / gamma_fn(alpha - s + 1.0);
        } else if (const auto* pc = std::get_if<PowerC>(&spec.forcing)) {
            exponent_ = alpha - s + pc->beta;
            amplitude_ = pmv * pc->C * gamma_fn(pc->beta + 1.0) / gamma_fn(exponent_ + 1.0);
        } else {
            const auto& mc = std::get<MittagLefflerC>(spec.forcing);
            exponent_ = alpha - s + mc.beta - 1.0;
            amplitude_ = pmv * mc.C;
            ml_beta_ = alpha - s + mc.beta;
            if (!(ml_beta_ > 0.0)) {
                fail(errc::invalid_argument,
                     "beta: alpha - s + beta must be > 0 for Mittag-Leffler forcing");
            }
            ml_mu_ = mc.mu;
            ml_gamma_ = mc.gamma;
            is_ml_ = true;
        }
    }

    double operator()(std::int64_t np1) const {
        if (amplitude_ == 0.0) return 0.0;
        const double t = static_cast<double>(np1) * T_;
        double val = amplitude_ * std::pow(t, exponent_);
        if (is_ml_) val *= mittag_leffler(ml_mu_, ml_beta_, ml_gamma_ * std::pow(t, ml_mu_));
        return val;
    }

private:
    double T_ = 1.0;
    double exponent_ = 0.0;
    double amplitude_ = 0.0;
    bool is_ml_ = false;
    double ml_beta_ = 1.0;
    double ml_mu_ = 1.0;
    double ml_gamma_ = 0.0;
};

class GeneralizedDirectStepper final : public StepperBase {
public:
    GeneralizedDirectStepper(const GeneralizedGrowth& spec, std::span<const double> init,
                             std::int64_t n_steps_hint, detail::MapMutations mut)
        : StepperBase(spec.g.alpha.bracket_n, init), spec_(spec), kicks_(spec_) {
        const double alpha = spec.g.alpha.value;
        const int N = dim_;
        for (int s = 0; s < N; ++s) {
            const double shift = mut.gamma_shift ? 1.0 : 0.0;
            coef_.push_back(spec_.price.q * spec.g.m * std::pow(spec.g.T, alpha - s) /
                            (spec.g.v * gamma_fn(alpha - s + shift)));
            pow_.emplace_back(alpha - 1.0 - s);
            if (n_steps_hint > 0) pow_.back().reserve(n_steps_hint);
            forcing_.emplace_back(spec_, s);
            std::vector<double> pc;
            for (int k = 0; k + s < N; ++k) {
                pc.push_back(std::pow(spec.g.T, k) / factorial(k) * init[k + s]);
            }
            poly_.push_back(std::move(pc));
        }
    }

    double output(std::int64_t n) const override {
        const double r = value(n, 0);
        return r_inverse_defined(spec_.price.G, r) ? r_inverse(spec_.price.G, r) : kNaN;
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        if (n >= 1 && static_cast<std::int64_t>(size()) > kick_count_) {
            // Amplitude for the newest recorded state, needed from this step on.
            if (!kicks_.append_for(value(n, 0))) {
                escaped_ = true;
                return false;
            }
            ++kick_count_;
        }
        std::vector<double> next(dim_);
        for (int s = 0; s < dim_; ++s) {
            double acc = polynomial(s, n + 1) + forcing_[s](n + 1);
            double mem = 0.0;
            for (std::int64_t k = 1; k <= n; ++k) mem += pow_[s](n + 1 - k) * kicks_[k];
            next[s] = acc - coef_[s] * mem;
        }
        return record(next);
    }

protected:
    void refresh_after_rescale() override {
        if (!kicks_.recompute(*this)) escaped_ = true;
        for (int s = 0; s < dim_; ++s) {
            for (int k = 0; k + s < dim_; ++k) {
                poly_[s][k] = std::pow(spec_.g.T, k) / factorial(k) * value(0, k + s);
            }
        }
    }

private:
    double polynomial(int s, std::int64_t np1) const {
        double acc = 0.0;
        double x = 1.0;
        for (std::size_t k = 0; k < poly_[s].size(); ++k) {
            acc += poly_[s][k] * x;
            x *= static_cast<double>(np1);
        }
        return acc;
    }

    GeneralizedGrowth spec_;
    GeneralizedKicks kicks_;
    std::int64_t kick_count_ = 1;  // states whose kick amplitude is cached
    std::vector<double> coef_;
    std::vector<PowTable> pow_;
    std::vector<ForcingTerm> forcing_;
    std::vector<std::vector<double>> poly_;
};

class GeneralizedIncrementalStepper final : public StepperBase {
public:
    GeneralizedIncrementalStepper(const GeneralizedGrowth& spec, std::span<const double> init,
                                  SeedStep seed, detail::MapMutations mut)
        : StepperBase(spec.g.alpha.bracket_n, init), spec_(spec), seed_(seed), kicks_(spec_) {
        const auto* cc = std::get_if<ConstantC>(&spec.forcing);
        if (!cc) {
            fail(errc::invalid_argument,
                 "forcing: step-difference generalized form requires constant forcing");
        }
        const double alpha = spec.g.alpha.value;
        const int N = dim_;
        for (int s = 0; s < N; ++s) {
            const double shift = mut.gamma_shift ? 1.0 : 0.0;
            coef_.push_back(spec_.price.q * spec.g.m * std::pow(spec.g.T, alpha - s) /
                            (spec.g.v * gamma_fn(alpha - s + shift)));
            pterm_.push_back(spec_.price.p * (spec.g.m / spec.g.v) * cc->C *
                             std::pow(spec.g.T, alpha - s) / gamma_fn(alpha - s + 1.0));
            kernels_.emplace_back(alpha - s, mut.flip_kernel_sign);
            std::vector<double> pc;
            for (int k = 0; k + s < N; ++k) {
                pc.push_back(std::pow(spec.g.T, k) / factorial(k) * init[k + s]);
            }
            poly_.push_back(std::move(pc));
        }
    }

    double output(std::int64_t n) const override {
        const double r = value(n, 0);
        return r_inverse_defined(spec_.price.G, r) ? r_inverse(spec_.price.G, r) : kNaN;
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        std::vector<double> next(dim_);
        if (n == 0 && seed_ == SeedStep::volterra) {
            for (int s = 0; s < dim_; ++s) {
                double acc = 0.0;
                for (double pc : poly_[s]) acc += pc;  // polynomial at n+1 = 1
                next[s] = acc + pterm_[s];
            }
            return record(next);
        }
        // Difference form. Needs the kick amplitude of the current state;
        // the incremental seeding uses the initial state's amplitude too.
        if (!kicks_ready_for(n)) {
            escaped_ = true;
            return false;
        }
        const double nd = static_cast<double>(n);
        for (int s = 0; s < dim_; ++s) {
            const double aexp = spec_.g.alpha.value - s;
            double acc = value(n, s);
            // Polynomial difference: (T^k/k!) R_0^(k+s) ((n+1)^k - n^k).
            for (std::size_t k = 1; k < poly_[s].size(); ++k) {
                const double kd = static_cast<double>(k);
                acc += poly_[s][k] * (std::pow(nd + 1.0, kd) - std::pow(nd, kd));
            }
            acc += pterm_[s] * (std::pow(nd + 1.0, aexp) - std::pow(nd, aexp));
            acc -= coef_[s] * kick_at(n);
            double mem = 0.0;
            for (std::int64_t k = 1; k <= n - 1; ++k) mem += kernels_[s](n - k) * kick_at(k);
            acc -= coef_[s] * mem;
            next[s] = acc;
        }
        return record(next);
    }

protected:
    void refresh_after_rescale() override {
        if (!kicks_.recompute(*this)) escaped_ = true;
        if (seed_kick_set_) seed_kick_ = seed_kick_value();
        for (int s = 0; s < dim_; ++s) {
            for (int k = 0; k + s < dim_; ++k) {
                poly_[s][k] = std::pow(spec_.g.T, k) / factorial(k) * value(0, k + s);
            }
        }
    }

private:
    double kick_at(std::int64_t k) const { return k == 0 ? seed_kick_ : kicks_[k]; }

    double seed_kick_value() const {
        if (spec_.price.q == 0.0) return 0.0;
        const double r0 = value(0, 0);
        if (!r_inverse_defined(spec_.price.G, r0)) return kNaN;
        return effective_kick(spec_.price.G, spec_.price.F, r_inverse(spec_.price.G, r0));
    }

    bool kicks_ready_for(std::int64_t n) {
        if (n == 0) {
            // Incremental seeding treats the initial state as kicked.
            seed_kick_ = seed_kick_value();
            seed_kick_set_ = true;
            return spec_.price.q == 0.0 || std::isfinite(seed_kick_);
        }
        while (kick_count_ < size()) {
            if (!kicks_.append_for(value(kick_count_, 0))) return false;
            ++kick_count_;
        }
        return true;
    }

    GeneralizedGrowth spec_;
    SeedStep seed_;
    GeneralizedKicks kicks_;
    std::int64_t kick_count_ = 1;
    double seed_kick_ = kNaN;
    bool seed_kick_set_ = false;
    std::vector<double> coef_;
    std::vector<double> pterm_;
    std::vector<KernelCache> kernels_;
    std::vector<std::vector<double>> poly_;
};

// Exact alpha = 1 kicked flow with constant forcing (verification oracle).
class KickedFlowStepper final : public StepperBase {
public:
    KickedFlowStepper(const GeneralizedGrowth& spec, std::span<const double> init)
        : StepperBase(1, init), spec_(spec) {
        if (spec.g.alpha.value != 1.0) {
            fail(errc::invalid_argument, "alpha: kicked-flow oracle requires alpha = 1 exactly");
        }
        const auto* cc = std::get_if<ConstantC>(&spec.forcing);
        if (!cc) fail(errc::invalid_argument, "forcing: kicked-flow oracle requires constant forcing");
        growth_ = spec_.price.p * (spec_.g.m / spec_.g.v) * cc->C * spec_.g.T;
    }

    double output(std::int64_t n) const override {
        const double r = value(n, 0);
        return r_inverse_defined(spec_.price.G, r) ? r_inverse(spec_.price.G, r) : kNaN;
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        double r = states_.back();
        if (n >= 1 && spec_.price.q != 0.0) {
            // Kick at t = nT uses the left limit Y(nT - 0), i.e. state n.
            if (!r_inverse_defined(spec_.price.G, r)) {
                escaped_ = true;
                return false;
            }
            const double y = r_inverse(spec_.price.G, r);
            const double w = effective_kick(spec_.price.G, spec_.price.F, y);
            if (!std::isfinite(w)) {
                escaped_ = true;
                return false;
            }
            r -= spec_.price.q * (spec_.g.m / spec_.g.v) * spec_.g.T * w;
        }
        const double next = r + growth_;
        return record({&next, 1});
    }

private:
    GeneralizedGrowth spec_;
    double growth_ = 0.0;
};

// ---------------------------------------------------------------------
// Normalized logistic map with memory
// ---------------------------------------------------------------------

class LogisticMemoryStepper final : public StepperBase {
public:
    LogisticMemoryStepper(const LogisticNormalization& norm, std::span<const double> init,
                          SeedStep seed)
        : StepperBase(1, init), norm_(norm), seed_(seed), kernel_(norm.alpha, false) {
        require(norm.alpha > 0.0 && norm.alpha <= 1.0, "alpha", "0 < alpha <= 1");
        require(std::isfinite(norm.eta_a), "eta_a", "finite (b != 0)");
    }

    bool step() override {
        if (escaped_) return false;
        const std::int64_t n = size() - 1;
        double next;
        if (n == 0 && seed_ == SeedStep::volterra) {
            next = states_[0];
        } else {
            const double z = states_.back();
            double mem = 0.0;
            for (std::int64_t k = 1; k <= n - 1; ++k) {
                const double zk = value(k, 0);
                mem += kernel_(n - k) * zk * (norm_.eta_a * zk - 1.0);
            }
            next = norm_.lambda_a * z * (1.0 - z) - norm_.mu_a * mem;
        }
        return record({&next, 1});
    }

private:
    LogisticNormalization norm_;
    SeedStep seed_;
    KernelCache kernel_;
};

Trajectory collect(std::unique_ptr<Stepper> st, std::optional<MapSpec> spec,
                   std::int64_t n_steps) {
    for (std::int64_t n = 0; n < n_steps; ++n) {
        if (!st->step()) break;
    }
    Trajectory t;
    t.spec = std::move(spec);
    t.dim = st->dim();
    const std::int64_t count = st->size();
    t.data.reserve(static_cast<std::size_t>(count * t.dim));
    for (std::int64_t n = 0; n < count; ++n) {
        for (int s = 0; s < t.dim; ++s) t.data.push_back(st->value(n, s));
    }
    if (st->escaped()) t.escaped_at = count;
    return t;
}

}  // namespace

// ---------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------

int state_dim(const MapSpec& spec) {
    if (const auto* b = std::get_if<BurstGrowth>(&spec)) return b->g.alpha.bracket_n;
    if (const auto* g = std::get_if<GeneralizedGrowth>(&spec)) return g->g.alpha.bracket_n;
    return 1;
}

void validate(const MapSpec& spec) {
    if (const auto* g = std::get_if<GeneralizedGrowth>(&spec)) {
        validate(g->price.G);
        validate(g->forcing);
        require(g->price.p >= 0.0 && g->price.p <= 1.0, "p", "0 <= p <= 1");
        require(g->price.p + g->price.q == 1.0, "q", "p + q = 1");
    } else if (const auto* l = std::get_if<StandardLogistic>(&spec)) {
        require(std::isfinite(l->lambda), "lambda", "finite");
    }
}

double Trajectory::output(std::int64_t n) const {
    if (spec) {
        if (const auto* g = std::get_if<GeneralizedGrowth>(&*spec)) {
            const double r = value(n, 0);
            return r_inverse_defined(g->price.G, r) ? r_inverse(g->price.G, r) : kNaN;
        }
    }
    return value(n, 0);
}

std::unique_ptr<Stepper> make_stepper(const MapSpec& spec, std::span<const double> init,
                                      std::int64_t n_steps_hint, Engine engine, SeedStep seed,
                                      detail::MapMutations mutations) {
    validate(spec);
    if (const auto* b = std::get_if<BurstGrowth>(&spec)) {
        if (engine == Engine::direct) {
            return std::make_unique<BurstDirectStepper>(*b, init, n_steps_hint, mutations);
        }
        return std::make_unique<BurstIncrementalStepper>(*b, init, seed, mutations);
    }
    if (const auto* g = std::get_if<GeneralizedGrowth>(&spec)) {
        if (engine == Engine::direct) {
            return std::make_unique<GeneralizedDirectStepper>(*g, init, n_steps_hint, mutations);
        }
        return std::make_unique<GeneralizedIncrementalStepper>(*g, init, seed, mutations);
    }
    return std::make_unique<LogisticStepper>(std::get<StandardLogistic>(spec).lambda, init);
}

Trajectory simulate(const MapSpec& spec, std::span<const double> init, std::int64_t n_steps,
                    Engine engine, SeedStep seed) {
    require(n_steps >= 0, "n_steps", ">= 0");
    return collect(make_stepper(spec, init, n_steps, engine, seed), spec, n_steps);
}

Trajectory simulate_direct(const BurstGrowth& spec, std::span<const double> init,
                           std::int64_t n_steps) {
    return simulate(MapSpec{spec}, init, n_steps, Engine::direct);
}

Trajectory simulate_incremental(const BurstGrowth& spec, std::span<const double> init,
                                std::int64_t n_steps, SeedStep seed) {
    return simulate(MapSpec{spec}, init, n_steps, Engine::incremental, seed);
}

double step_standard_logistic(double lambda, double z) { return lambda * z * (1.0 - z); }

Trajectory simulate_logistic_memory_normalized(const LogisticNormalization& norm, double z0,
                                               std::int64_t n_steps, SeedStep seed) {
    require(n_steps >= 0, "n_steps", ">= 0");
    auto st = std::make_unique<LogisticMemoryStepper>(norm, std::span<const double>{&z0, 1}, seed);
    return collect(std::move(st), std::nullopt, n_steps);
}

Trajectory simulate_generalized(const GeneralizedGrowth& spec, std::span<const double> init,
                                std::int64_t n_steps) {
    return simulate(MapSpec{spec}, init, n_steps, Engine::direct);
}

Trajectory simulate_generalized_incremental(const GeneralizedGrowth& spec,
                                            std::span<const double> init, std::int64_t n_steps,
                                            SeedStep seed) {
    return simulate(MapSpec{spec}, init, n_steps, Engine::incremental, seed);
}

Trajectory kicked_flow_oracle_alpha1(const GeneralizedGrowth& spec, std::span<const double> init,
                                     std::int64_t n_steps) {
    require(n_steps >= 0, "n_steps", ">= 0");
    validate(MapSpec{spec});
    auto st = std::make_unique<KickedFlowStepper>(spec, init);
    return collect(std::move(st), MapSpec{spec}, n_steps);
}

}  // namespace memkick
