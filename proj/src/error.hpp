#ifndef MEMKICK_ERROR_HPP
#define MEMKICK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace memkick {

// Failure classes surfaced across the C boundary as status codes.
enum class errc {
    invalid_argument,  // parameter violates its domain constraint
    domain,            // evaluation at a pole / outside a function's domain
    no_convergence,    // series did not converge within its term budget
    overflow,          // result not representable in double
    undefined,         // quantity undefined at the requested point (e.g. inverse out of range)
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

// Validation helper: message names the offending key and its constraint.
inline void require(bool cond, const std::string& key, const std::string& constraint) {
    if (!cond) fail(errc::invalid_argument, key + ": must satisfy " + constraint);
}

}  // namespace memkick

#endif
