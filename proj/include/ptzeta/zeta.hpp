#pragma once

// The generalized zeta function of D = -dxx - Lap_y + lambda + u(x),
//
//   zeta_D(s) = M^{2s} / Gamma(s) * int_0^inf t^{s-1} gamma(t) dt,
//
// in three independent representations plus closed forms for zeta_D(0)
// and zeta'_D(0) in d = 1..12. The normative analytic continuation is
//
//   zeta_D(s) = [4 Gamma(s+1-d/2) / ((4pi)^{d/2} Gamma(s))]
//               * sum_{nu=1..n} (nu b)^{d-1} (M/(nu b))^{2s} I_nu(s),
//   I_nu(s)   = int_0^1 (tau^2 - 1 + z_nu)^{d/2-1-s} dtau,  z_nu = lambda/(nu^2 b^2),
//
// whose numeric s-derivative is the oracle every closed form is tested
// against. At the continuum edge lambda = n^2 b^2 the nu = n integral is
// exactly 1/(d-1-2s); for d = 1 its s = 0 pole cancels the 1/Gamma(s)
// zero, fused below via 1/((-2s)Gamma(s)) = -rgamma(s+1)/2.
//
// The one-loop correction to the classical energy is
// delta_epsilon = -zeta'_D(0)/2 (hbar = 1). M enters only as M^{2s}, so
// d zeta'(0) / d ln M = 2 zeta(0) exactly; odd d with lambda > n^2 b^2 is
// M-independent.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ptzeta/errors.hpp"
#include "ptzeta/model.hpp"
#include "ptzeta/quadrature.hpp"
#include "ptzeta/specfun.hpp"

namespace ptzeta {

enum class Representation { integral, hypergeometric, mellin_numeric, closed_form };

inline const char* to_string(Representation r) {
    switch (r) {
        case Representation::integral: return "integral";
        case Representation::hypergeometric: return "hypergeometric";
        case Representation::mellin_numeric: return "mellin_numeric";
        case Representation::closed_form: return "closed_form";
    }
    return "?";
}

struct ZetaValue {
    double s;
    double value;
    Representation representation;
    double abs_error_estimate;
};

// Auxiliary tau-integrals assembling the closed forms:
//   R_N(z) = int_0^1 (tau^2-1+z)^{N-3/2} dtau
//   P_N(z) = int_0^1 (tau^2-1+z)^{N} dtau
//   J_N(z) = int_0^1 (tau^2-1+z)^{N} ln(tau^2-1+z) dtau
// computed by the recurrences (upward in N, by parts):
//   R_{N+1} = ((2N-1)(z-1) R_N + z^{N-1/2}) / (2N),    R_1 = (1/2) ln((sqrt z+1)/(sqrt z-1))
//   P_{N+1} = (2(N+1)(z-1) P_N + z^{N+1}) / (2N+3),    P_0 = 1
//   J_{N+1} = (z^{N+1} ln z + 2(N+1)(z-1) J_N
//              - 2(P_{N+1} - (z-1) P_N)) / (2N+3),     J_0 = ln z - 2 + 2 sqrt(z-1) asin(1/sqrt z)
// At z = 1: P_N = 1/(2N+1) and J_N = -2/(2N+1)^2 come out of the same
// formulas exactly; R_1 diverges, so R is undefined there (the odd-d
// closed form uses the convergent-integral value R_N(1) = 1/(2N-2),
// N >= 2, through detail::aux_R instead).
struct AuxIntegrals {
    int N;
    double z;
    double P;
    double J;
    bool R_defined;
    double R_value;
    double R() const {
        if (!R_defined) throw divergence_error("aux_integrals: R diverges at z = 1");
        return R_value;
    }
};

namespace detail {

inline void aux_PJ(int N, double z, double& P, double& J) {
    double Pk = 1.0;
    // z = 1 gives ln z = 0 and sqrt(z-1) = 0, so J_0 = -2 falls out exactly
    double Jk = std::log(z) - 2.0 + 2.0 * std::sqrt(z - 1.0) * std::asin(1.0 / std::sqrt(z));
    for (int k = 0; k < N; ++k) {
        const double zk1 = std::pow(z, double(k + 1));
        const double Pn = (2.0 * double(k + 1) * (z - 1.0) * Pk + zk1) / (2.0 * double(k) + 3.0);
        const double Jn = (zk1 * std::log(z) + 2.0 * double(k + 1) * (z - 1.0) * Jk
                           - 2.0 * (Pn - (z - 1.0) * Pk))
                          / (2.0 * double(k) + 3.0);
        Pk = Pn;
        Jk = Jn;
    }
    P = Pk;
    J = Jk;
}

// R_N for N >= 1; at z = 1 returns the convergent-integral value for
// N >= 2 and throws for N = 1.
inline double aux_R(int N, double z) {
    if (z == 1.0) {
        if (N >= 2) return 1.0 / (2.0 * double(N) - 2.0);
        throw divergence_error("aux_R: R_1 diverges at z = 1");
    }
    const double sz = std::sqrt(z);
    double Rk = 0.5 * std::log((sz + 1.0) / (sz - 1.0));
    for (int k = 1; k < N; ++k)
        Rk = ((2.0 * double(k) - 1.0) * (z - 1.0) * Rk + std::pow(z, double(k) - 0.5))
             / (2.0 * double(k));
    return Rk;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= double(k);
    return f;
}

} // namespace detail

inline AuxIntegrals aux_integrals(int N, double z) {
    if (N < 0) throw domain_error("aux_integrals: N must be >= 0");
    if (N > 12) throw domain_error("aux_integrals: N > 12 out of supported range");
    if (!(z >= 1.0)) throw domain_error("aux_integrals: z must be >= 1");
    // R_0 and R_1 genuinely diverge at z = 1; R_N for N >= 2 converges
    // there (value 1/(2N-2)), which the odd-d threshold closed form uses.
    AuxIntegrals a{N, z, 0.0, 0.0, z != 1.0 || N >= 2, 0.0};
    detail::aux_PJ(N, z, a.P, a.J);
    if (a.R_defined) {
        // N = 0 sits below the recurrence chain; its antiderivative is elementary
        a.R_value = (N == 0) ? 1.0 / ((z - 1.0) * std::sqrt(z)) : detail::aux_R(N, z);
    }
    return a;
}

namespace detail {

// K(s) = 4 Gamma(s+1-d/2) / ((4pi)^{d/2} Gamma(s)). For even d = 2N the
// Gamma ratio is exactly prod_{j=1}^{N-1} 1/(s-j), which keeps s = 0
// regular and exposes the genuine poles at s = 1..N-1. For odd d the
// ratio is evaluated with rgamma so 1/Gamma(s) stays entire.
inline double K_factor(int d, double s) {
    if (d % 2 == 0) {
        const int N = d / 2;
        double r = 4.0 * std::pow(4.0 * pi, -double(N));
        for (int j = 1; j < N; ++j) {
            const double den = s - double(j);
            if (std::abs(den) < 1e-12 * std::max(1.0, std::abs(s)))
                throw pole_error("zeta: s coincides with a pole of the Gamma-ratio prefactor");
            r /= den;
        }
        return r;
    }
    return 4.0 * std::pow(4.0 * pi, -0.5 * double(d)) * gamma(s + 1.0 - 0.5 * double(d))
           * rgamma(s);
}

// The nu = n term at lambda = n^2 b^2: I_n(s) = 1/(d-1-2s) exactly.
inline double threshold_term(const OperatorSpec& spec, double s) {
    const double nb = double(spec.n) * spec.b;
    const double scale = std::pow(spec.M / nb, 2.0 * s);
    if (spec.d == 1) // fuse the s=0 pole of I_n with the zero of 1/Gamma(s)
        return -(1.0 / sqrt_pi) * gamma(s + 0.5) * rgamma(s + 1.0) * scale;
    const double den = double(spec.d) - 1.0 - 2.0 * s;
    if (std::abs(den) < 1e-10)
        throw pole_error("zeta: s sits on the continuum-edge pole at (d-1)/2");
    return K_factor(spec.d, s) * std::pow(nb, double(spec.d) - 1.0) * scale / den;
}

} // namespace detail

// Normative representation: term-by-term quadrature of the tau-integrals.
inline ZetaValue zeta_integral_rep(double s, const OperatorSpec& spec) {
    const double mu = 0.5 * double(spec.d) - 1.0 - s;
    const double K = detail::K_factor(spec.d, s);
    double sum = 0.0, err = 0.0;
    for (int nu = 1; nu <= spec.n; ++nu) {
        if (spec.threshold && nu == spec.n) {
            const double tt = detail::threshold_term(spec, s);
            sum += tt;
            err += 4.0 * std::numeric_limits<double>::epsilon() * std::abs(tt);
            continue;
        }
        const double z = spec.z(nu);
        const auto q = integrate([mu, z](double tau) { return std::pow(tau * tau - 1.0 + z, mu); },
                                 0.0, 1.0, 1e-11);
        const double nb = double(nu) * spec.b;
        const double w = K * std::pow(nb, double(spec.d) - 1.0) * std::pow(spec.M / nb, 2.0 * s);
        sum += w * q.value;
        err += std::abs(w) * std::max(q.err, 1e-15 * std::abs(q.value));
    }
    return {s, sum, Representation::integral, err};
}

// Hypergeometric transform of the same sum (t = tau^2 turns I_nu into an
// Euler integral):
//   zeta_D(s) = b (lambda/4pi)^{d/2-1} (M^2/lambda)^s Gamma(s+1-d/2)/(pi Gamma(s))
//               * sum_nu nu * 2F1(s+1-d/2, 1; 3/2; nu^2 b^2/lambda).
// The nu = n edge term (series argument 1) is the same analytic
// 1/(d-1-2s) piece as in the integral representation. Cross-check route:
// the series evaluation is independent of the quadrature above.
inline ZetaValue zeta_hyp_rep(double s, const OperatorSpec& spec) {
    const double a = s + 1.0 - 0.5 * double(spec.d);
    const double K = detail::K_factor(spec.d, s);
    const double pref = K * std::pow(spec.lambda, 0.5 * double(spec.d) - 1.0 - s)
                        * std::pow(spec.M, 2.0 * s) * spec.b;
    double series = 0.0, edge = 0.0;
    for (int nu = 1; nu <= spec.n; ++nu) {
        if (spec.threshold && nu == spec.n) {
            edge = detail::threshold_term(spec, s);
            continue;
        }
        series += double(nu) * hyp2f1(a, 1.0, 1.5, 1.0 / spec.z(nu));
    }
    const double value = pref * series + edge;
    const double err = 1e-13 * (std::abs(pref) * std::abs(series) + std::abs(edge));
    return {s, value, Representation::hypergeometric, err};
}

// Convergence strip of the defining Mellin integral: gamma(t) ~ t^{1-d/2}
// as t -> 0 forces s > d/2 - 1; at the continuum edge the large-t tail is
// only algebraic, t^{(1-d)/2}, forcing s < (d-1)/2 (otherwise any s).
struct MellinStrip {
    double lo;
    double hi;
};

inline MellinStrip mellin_strip(const OperatorSpec& spec) {
    return {0.5 * double(spec.d) - 1.0,
            spec.threshold ? 0.5 * (double(spec.d) - 1.0)
                           : std::numeric_limits<double>::infinity()};
}

// From-first-principles route: direct quadrature of the Mellin integral
// of the fused trace density. Split at t = 1 with t -> 1/t on the tail so
// both halves are finite intervals with integrable endpoint behavior.
inline ZetaValue zeta_mellin_numeric(double s, const OperatorSpec& spec) {
    const MellinStrip strip = mellin_strip(spec);
    if (!(s > strip.lo) || !(s < strip.hi)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "zeta_mellin_numeric: s = %g outside the Mellin strip (%g, %g)", s,
                      strip.lo, strip.hi);
        throw domain_error(msg);
    }
    // log of t^{s-1} gamma(t), -inf when the trace sum underflows to 0
    auto log_integrand = [&](double t) -> double {
        const double rt = std::sqrt(t);
        double fused = 0.0;
        for (int nu = 1; nu <= spec.n; ++nu)
            fused += std::exp(-spec.gap(nu) * t) * erf(double(nu) * spec.b * rt);
        if (!(fused > 0.0)) return -std::numeric_limits<double>::infinity();
        return (s - 1.0) * std::log(t) + 0.5 * (1.0 - double(spec.d)) * std::log(4.0 * pi * t)
               + std::log(fused);
    };
    const auto q_low = integrate(
        [&](double t) {
            if (t < 1e-290) return 0.0;
            const double lg = log_integrand(t);
            return lg < -700.0 ? 0.0 : std::exp(lg);
        },
        0.0, 1.0, 1e-12);
    const auto q_high = integrate(
        [&](double w) {
            if (w < 1e-290) return 0.0;
            const double t = 1.0 / w;
            double lg = log_integrand(t);
            if (lg == -std::numeric_limits<double>::infinity()) return 0.0;
            lg += 2.0 * std::log(t); // Jacobian of t = 1/w
            return lg < -700.0 ? 0.0 : std::exp(lg);
        },
        0.0, 1.0, 1e-12);
    const double pref = std::pow(spec.M, 2.0 * s) * rgamma(s);
    const double value = pref * (q_low.value + q_high.value);
    const double err = std::abs(pref) * (q_low.err + q_high.err)
                       + 1e-14 * std::abs(value);
    return {s, value, Representation::mellin_numeric, err};
}

// zeta_D(0) in closed form. Nonzero only for even d and for the d = 1
// continuum-edge case (where the fused nu = n term tends to -1).
inline double zeta_at_zero(const OperatorSpec& spec) {
    const int d = spec.d;
    if (d < 1 || d > 12) throw unsupported_error("zeta_at_zero: closed forms cover d in 1..12");
    if (d % 2 == 1) return (d == 1 && spec.threshold) ? -1.0 : 0.0;
    const int N = d / 2;
    const double c = 4.0 * ((N - 1) % 2 ? -1.0 : 1.0) * std::pow(4.0 * pi, -double(N))
                     / detail::factorial(N - 1);
    double sum = 0.0;
    for (int nu = 1; nu <= spec.n; ++nu) {
        double P, J;
        detail::aux_PJ(N - 1, spec.z(nu), P, J);
        sum += std::pow(double(nu) * spec.b, 2.0 * double(N) - 1.0) * P;
    }
    return c * sum;
}

struct Correction {
    OperatorSpec spec;
    double zeta_prime_zero;
    double delta_epsilon; // -zeta_prime_zero / 2
    double scale_M;       // the M the derivative was evaluated at
};

// zeta'_D(0) in closed form, dispatching on dimension parity and the
// continuum-edge branch:
//   d = 1:        sum_nu ln((sqrt(lambda)+nu b)/(sqrt(lambda)-nu b));
//                 the edge nu = n term becomes ln(4 n^2 b^2 / M^2)
//                 (total at the edge: ln(4 C(2n-1,n) n^2 b^2 / M^2))
//   odd d = 2N-1: 4 (4pi)^{1/2-N} Gamma(3/2-N) sum_nu (nu b)^{2N-2} R_N(z_nu)
//   even d = 2N:  c_N sum_nu (nu b)^{2N-1} [(H_{N-1} + 2 ln(M/(nu b))) P_{N-1}(z_nu)
//                                            - J_{N-1}(z_nu)],
//                 c_N = 4 (-1)^{N-1} / ((4pi)^N (N-1)!), H_k = sum_{j<=k} 1/j
inline Correction zeta_prime_zero(const OperatorSpec& spec) {
    const int d = spec.d;
    if (d < 1 || d > 12)
        throw unsupported_error("zeta_prime_zero: closed forms cover d in 1..12");
    double v = 0.0;
    if (d == 1) {
        const double sl = std::sqrt(spec.lambda);
        for (int nu = 1; nu <= spec.n; ++nu) {
            if (spec.threshold && nu == spec.n) {
                v += std::log(4.0 * spec.edge() / (spec.M * spec.M));
                continue;
            }
            const double nb = double(nu) * spec.b;
            v += std::log((sl + nb) / (sl - nb));
        }
    } else if (d % 2 == 1) {
        const int N = (d + 1) / 2;
        const double pref = 4.0 * std::pow(4.0 * pi, 0.5 - double(N)) * gamma(1.5 - double(N));
        double sum = 0.0;
        for (int nu = 1; nu <= spec.n; ++nu)
            sum += std::pow(double(nu) * spec.b, 2.0 * double(N) - 2.0)
                   * detail::aux_R(N, spec.z(nu));
        v = pref * sum;
    } else {
        const int N = d / 2;
        const double c = 4.0 * ((N - 1) % 2 ? -1.0 : 1.0) * std::pow(4.0 * pi, -double(N))
                         / detail::factorial(N - 1);
        double H = 0.0;
        for (int j = 1; j < N; ++j) H += 1.0 / double(j);
        double sum = 0.0;
        for (int nu = 1; nu <= spec.n; ++nu) {
            double P, J;
            detail::aux_PJ(N - 1, spec.z(nu), P, J);
            const double nb = double(nu) * spec.b;
            sum += std::pow(nb, 2.0 * double(N) - 1.0)
                   * ((H + 2.0 * std::log(spec.M / nb)) * P - J);
        }
        v = c * sum;
    }
    return {spec, v, -0.5 * v, spec.M};
}

inline Correction mass_correction(const OperatorSpec& spec) { return zeta_prime_zero(spec); }

inline Correction kink_correction(double m, double g, int d, double M) {
    return mass_correction(spec_from_kink(Phi4Params(m, g), d, M));
}

} // namespace ptzeta
