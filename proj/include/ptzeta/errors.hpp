#pragma once

#include <stdexcept>
#include <string>

namespace ptzeta {

// Base for all library errors. Subtypes distinguish invalid input
// (domain_error, caller bug) from numerical failures discovered at
// run time (pole, divergence, non-convergence, overflow cap).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside the documented domain of an operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Evaluation requested at a pole of the function.
class pole_error : public error {
public:
    explicit pole_error(const std::string& what) : error(what) {}
};

// A quantity that genuinely diverges at the requested point.
class divergence_error : public error {
public:
    explicit divergence_error(const std::string& what) : error(what) {}
};

// Iteration or quadrature failed to reach the requested accuracy.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& what) : error(what) {}
};

// Result would exceed the representable range; raised instead of
// returning infinity.
class overflow_error : public error {
public:
    explicit overflow_error(const std::string& what) : error(what) {}
};

// Parameter combinations the library deliberately does not support.
class unsupported_error : public error {
public:
    explicit unsupported_error(const std::string& what) : error(what) {}
};

} // namespace ptzeta
