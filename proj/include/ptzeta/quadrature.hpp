#pragma once

// Adaptive quadrature front end. Finite intervals go through tanh-sinh
// (double-exponential; robust against integrable endpoint singularities),
// half-lines [a, inf) through exp-sinh. Returns the estimate together
// with a conservative absolute error estimate; the contract is
// |value - true| <= max(err, abs_tol) for integrable inputs.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "ptzeta/errors.hpp"

namespace ptzeta {

struct QuadResult {
    double value;
    double err; // conservative absolute error estimate
};

template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol = 1e-12) {
    if (std::isnan(a) || std::isnan(b)) throw domain_error("integrate: NaN endpoint");
    if (!(abs_tol > 0.0)) throw domain_error("integrate: abs_tol must be positive");
    if (a == b) return {0.0, 0.0};
    if (std::isinf(a)) throw domain_error("integrate: lower endpoint must be finite");
    if (b < a) throw domain_error("integrate: requires a <= b");

    // Termination tolerance is relative inside boost; drive it near machine
    // precision and report the level-difference error estimate instead.
    const double term_tol = 1e-13;
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    double value = 0.0;
    try {
        if (std::isinf(b)) {
            static thread_local boost::math::quadrature::exp_sinh<double> es(12);
            value = es.integrate(std::forward<F>(f), a, b, term_tol, &err, &l1, &levels);
        } else {
            static thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
            value = ts.integrate(std::forward<F>(f), a, b, term_tol, &err, &l1, &levels);
        }
    } catch (const std::exception& e) {
        throw convergence_error(std::string("integrate: ") + e.what());
    }
    if (!std::isfinite(value))
        throw convergence_error("integrate: non-finite estimate");
    // err from boost is relative to L1 on some paths; make it absolute and
    // never report below the roundoff floor of the accumulated mass.
    double abs_err = err * std::max(1.0, l1);
    abs_err = std::max(abs_err, 4.0 * std::numeric_limits<double>::epsilon() * l1);
    return {value, abs_err};
}

} // namespace ptzeta
