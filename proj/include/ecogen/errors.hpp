#pragma once

#include <stdexcept>
#include <string>

namespace ecogen {

// Analysis hit a parameter combination where the closed forms are singular
// (V = 0, Q = 0, ...).
class degenerate_error : public std::domain_error {
public:
    explicit degenerate_error(const std::string& msg) : std::domain_error(msg) {}
};

// A computation that requires a feasible coexistence equilibrium was asked
// to run where F2 is infeasible.
class infeasible_error : public std::domain_error {
public:
    explicit infeasible_error(const std::string& msg) : std::domain_error(msg) {}
};

// Adaptive step size underflowed.
class step_failure_error : public std::runtime_error {
public:
    explicit step_failure_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Trajectory too short to classify.
class insufficient_span_error : public std::runtime_error {
public:
    explicit insufficient_span_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bisection bracket endpoints have the same sign.
class no_sign_change_error : public std::runtime_error {
public:
    explicit no_sign_change_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration file.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ecogen
