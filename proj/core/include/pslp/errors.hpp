#pragma once

#include <stdexcept>
#include <string>

namespace pslp {

/// A caller-supplied value violates a documented precondition.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The request exceeds a built-in size/cost guard (sieve limit, triple-sum cost, ...).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quadrature failed to reach its target tolerance; carries what was achieved.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& msg, double achieved_tolerance)
        : std::runtime_error(msg), achieved(achieved_tolerance) {}
    double achieved;
};

} // namespace pslp
