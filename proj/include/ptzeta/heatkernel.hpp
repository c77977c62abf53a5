#pragma once

// Closed-form heat-kernel traces for the reflectionless wells.
//
//   gamma0(t)  = sum_{nu=1..n} exp(nu^2 b^2 t) erf(nu b sqrt(t)),
//
// the trace of exp(-t(-dxx + u)) - exp(-t(-dxx)), and its d-dimensional
// descendant for the shifted operator D = -dxx - Lap_y + lambda + u:
//
//   gamma(t)   = (4 pi t)^{(1-d)/2} exp(-lambda t) gamma0(t).
//
// gamma_full evaluates the latter in the fused form
// sum exp(-(lambda - nu^2 b^2) t) erf(nu b sqrt(t)), whose exponents are
// all <= 0 for admissible specs, so it never overflows even when gamma0
// itself would.

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ptzeta/errors.hpp"
#include "ptzeta/model.hpp"
#include "ptzeta/specfun.hpp"

namespace ptzeta {

// Subtracted 1-D heat trace. Caps at nu^2 b^2 t > 700: past that exp
// overflows double range and the policy is a typed error, not infinity.
inline double gamma0(double t, const ReflectionlessPotential& pot) {
    if (!(t > 0.0)) throw domain_error("gamma0: t must be positive");
    if (double(pot.n) * double(pot.n) * pot.b * pot.b * t > 700.0)
        throw overflow_error("gamma0: n^2 b^2 t > 700 exceeds the exp overflow cap");
    const double rt = std::sqrt(t);
    double sum = 0.0;
    for (int nu = 1; nu <= pot.n; ++nu)
        sum += exp_erf_scaled(double(nu) * pot.b * rt);
    return sum;
}

// Diagonal of the subtracted heat kernel, bound-state part:
// e(x,t) = sum_nu psi_nu(x)^2 exp(nu^2 b^2 t) erf(nu b sqrt(t)).
// Closed-form psi_nu exist only for n <= 2.
inline double e_diag(double x, double t, const ReflectionlessPotential& pot) {
    if (!(t > 0.0)) throw domain_error("e_diag: t must be positive");
    if (pot.n > 2) throw unsupported_error("e_diag: closed-form psi_nu available only for n <= 2");
    if (double(pot.n) * double(pot.n) * pot.b * pot.b * t > 700.0)
        throw overflow_error("e_diag: n^2 b^2 t > 700 exceeds the exp overflow cap");
    const double rt = std::sqrt(t);
    double sum = 0.0;
    for (const auto& st : bound_states(pot)) {
        const double p = st.psi(x);
        sum += p * p * exp_erf_scaled(double(st.nu) * pot.b * rt);
    }
    return sum;
}

// Free heat-kernel density (4 pi t)^{-d/2}; d = 0 gives 1 and is allowed
// so the dimensional factorization below can be written uniformly.
inline double free_gamma_density(double t, int d) {
    if (!(t > 0.0)) throw domain_error("free_gamma_density: t must be positive");
    if (d < 0) throw domain_error("free_gamma_density: d must be >= 0");
    return std::pow(4.0 * pi * t, -0.5 * double(d));
}

// Full subtracted trace density gamma(t) for the d-dimensional operator.
// Fused exponents lambda - nu^2 b^2 >= 0 (OperatorSpec invariant), so this
// is overflow-free; summation ascending in nu for determinism.
inline double gamma_full(double t, const OperatorSpec& spec) {
    if (!(t > 0.0)) throw domain_error("gamma_full: t must be positive");
    const double rt = std::sqrt(t);
    double sum = 0.0;
    for (int nu = 1; nu <= spec.n; ++nu)
        sum += std::exp(-spec.gap(nu) * t) * erf(double(nu) * spec.b * rt);
    return std::pow(4.0 * pi * t, 0.5 * (1.0 - double(spec.d))) * sum;
}

enum class TraceKind { gamma0, gamma_full, free_density };

struct TraceCurve {
    TraceKind kind;
    std::optional<ReflectionlessPotential> pot; // gamma0 curves
    std::optional<OperatorSpec> spec;           // gamma_full curves
    int free_d = 0;                             // free_density curves
    std::vector<std::pair<double, double>> samples; // (t, value), t increasing
};

namespace detail {

inline std::vector<double> log_spaced(double t_min, double t_max, int points) {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw domain_error("trace curve: requires 0 < t_min < t_max");
    if (points < 2) throw domain_error("trace curve: points must be >= 2");
    std::vector<double> t(static_cast<std::size_t>(points));
    const double r = std::log(t_max / t_min);
    for (int i = 0; i < points; ++i)
        t[std::size_t(i)] = t_min * std::exp(r * double(i) / double(points - 1));
    t.back() = t_max;
    return t;
}

} // namespace detail

inline TraceCurve make_trace_curve(const ReflectionlessPotential& pot,
                                   double t_min, double t_max, int points) {
    TraceCurve c{TraceKind::gamma0, pot, std::nullopt, 0, {}};
    for (double t : detail::log_spaced(t_min, t_max, points))
        c.samples.emplace_back(t, gamma0(t, pot));
    return c;
}

inline TraceCurve make_trace_curve(const OperatorSpec& spec,
                                   double t_min, double t_max, int points) {
    TraceCurve c{TraceKind::gamma_full, std::nullopt, spec, 0, {}};
    for (double t : detail::log_spaced(t_min, t_max, points))
        c.samples.emplace_back(t, gamma_full(t, spec));
    return c;
}

inline TraceCurve make_free_trace_curve(int d, double t_min, double t_max, int points) {
    if (d < 0) throw domain_error("make_free_trace_curve: d must be >= 0");
    TraceCurve c{TraceKind::free_density, std::nullopt, std::nullopt, d, {}};
    for (double t : detail::log_spaced(t_min, t_max, points))
        c.samples.emplace_back(t, free_gamma_density(t, d));
    return c;
}

// CSV: header + one row per sample, 17 significant digits, LF endings.
inline void to_csv(const TraceCurve& curve, std::ostream& out) {
    out << "t,value\n";
    char buf[64];
    for (const auto& [t, v] : curve.samples) {
        std::snprintf(buf, sizeof buf, "%.16e,", t);
        out << buf;
        std::snprintf(buf, sizeof buf, "%.16e\n", v);
        out << buf;
    }
}

} // namespace ptzeta
