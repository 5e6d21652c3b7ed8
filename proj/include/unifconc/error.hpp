#pragma once

#include <stdexcept>
#include <string>

namespace unifconc {

// Raised when a lattice/bound parameter is outside its admissible range.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised for arguments outside a function's domain (negative sqrt argument,
// kernel evaluated outside [0, pi/2], division by an interval containing 0).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class expression_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature did not reach the requested tolerance within its budget.
// The best estimate obtained so far is kept so callers can still inspect it.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

} // namespace unifconc
