#ifndef MEMKICK_VERIFY_HPP
#define MEMKICK_VERIFY_HPP

#include <string>
#include <vector>

namespace memkick {

/// One verification check: a named comparison with its worst observed
/// error and the tolerance it must meet. Mutation-sanity checks invert
/// the sense: they pass when the seeded fault pushes the error PAST the
/// tolerance (recorded in `detection`).
struct VerifyCheck {
    std::string name;
    int criterion = 0;  // acceptance-criterion number; 0 for mutation sanity
    double max_error = 0.0;
    double tolerance = 0.0;
    bool detection = false;  // pass condition is error > tolerance
    bool passed = false;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// Run the full oracle/reduction suite: engine equivalences, collapse and
/// reduction identities, special-function identities, the analytic
/// landmarks of the standard logistic map, and two fault-injection sanity
/// checks. Deterministic; desk-scale runtime.
VerifyReport run_verification();

/// Fixed-width table with one row per check and a PASS/FAIL verdict.
std::string format_report(const VerifyReport& report);

}  // namespace memkick

#endif
