#pragma once

// Double-precision special functions used by the spectral machinery:
// Gamma (Lanczos), digamma, erf, the scaled product e^{y^2} erf(y),
// Gauss hypergeometric 2F1 on [0,1), and exact binomial coefficients.
// All functions are pure; domain violations raise typed errors from
// errors.hpp instead of returning NaN.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "ptzeta/errors.hpp"

namespace ptzeta {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;

namespace detail {

inline bool near_nonpositive_integer(double x, double tol = 1e-13) {
    if (x > 0.5) return false;
    return std::abs(x - std::nearbyint(x)) < tol;
}

// Lanczos approximation, g = 7, 9 terms. Relative accuracy ~1e-14 for
// x >= 0.5; reflection extends it to the negative axis.
inline double gamma_lanczos_positive(double x) {
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace detail

// Gamma(x). Poles at x = 0, -1, -2, ... raise pole_error.
inline double gamma(double x) {
    if (!std::isfinite(x)) throw domain_error("gamma: non-finite argument");
    if (detail::near_nonpositive_integer(x))
        throw pole_error("gamma: pole at non-positive integer x = " + std::to_string(x));
    if (x >= 0.5) return detail::gamma_lanczos_positive(x);
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return pi / (std::sin(pi * x) * detail::gamma_lanczos_positive(1.0 - x));
}

// 1/Gamma(x), entire: zero at non-positive integers, no poles.
inline double rgamma(double x) {
    if (detail::near_nonpositive_integer(x)) return 0.0;
    if (x >= 0.5) return 1.0 / detail::gamma_lanczos_positive(x);
    return std::sin(pi * x) * detail::gamma_lanczos_positive(1.0 - x) / pi;
}

// Digamma psi(x) = Gamma'(x)/Gamma(x). Poles as in gamma.
inline double digamma(double x) {
    if (!std::isfinite(x)) throw domain_error("digamma: non-finite argument");
    if (detail::near_nonpositive_integer(x))
        throw pole_error("digamma: pole at non-positive integer x = " + std::to_string(x));
    double result = 0.0;
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        result -= pi / std::tan(pi * x);
        x = 1.0 - x;
    }
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic tail, B_{2n} terms through x^{-14}; |next| < 2e-14 at x = 8.
    const double w = 1.0 / (x * x);
    result += std::log(x) - 0.5 / x
            - w * (1.0 / 12.0
            - w * (1.0 / 120.0
            - w * (1.0 / 252.0
            - w * (1.0 / 240.0
            - w * (1.0 / 132.0
            - w * (691.0 / 32760.0
            - w * (1.0 / 12.0)))))));
    return result;
}

inline double erf(double x) { return std::erf(x); }
inline double erfc(double x) { return std::erfc(x); }

// Scaled complementary error function e^{x^2} erfc(x) for x >= 0.
// Direct product below x = 6; asymptotic series beyond, where the
// direct product would multiply a huge and a tiny factor.
inline double erfcx(double x) {
    if (x < 0.0) throw domain_error("erfcx: requires x >= 0");
    if (x <= 6.0) return std::exp(x * x) * std::erfc(x);
    // erfcx(x) ~ (1/(x sqrt(pi))) sum_k (-1)^k (2k-1)!!/(2x^2)^k
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
        if (std::abs(term) < 1e-17 * sum) break;
    }
    return sum / (x * sqrt_pi);
}

// e^{y^2} erf(y) for y >= 0 with y^2 <= ~709 (caller enforces any cap).
// The pairing e^{y^2} (1 - erfc(y)) loses everything once erfc underflows;
// past y = 6 the erfc part is carried as erfcx.
inline double exp_erf_scaled(double y) {
    if (y < 0.0) throw domain_error("exp_erf_scaled: requires y >= 0");
    if (y <= 6.0) return std::exp(y * y) * std::erf(y);
    return std::exp(y * y) - erfcx(y);
}

namespace detail {

// Plain Gauss series sum_k (a)_k (b)_k / ((c)_k k!) z^k. Caller
// guarantees convergence (|z| < 1, away from the c-pole chain).
inline double hyp2f1_series(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 4000; ++k) {
        const double ck = c + k;
        if (std::abs(ck) < 1e-290)
            throw pole_error("hyp2f1: series hit a pole of (c)_k");
        term *= (a + k) * (b + k) / (ck * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 0.25 * std::numeric_limits<double>::epsilon() * std::abs(sum)
            && k > 2)
            return sum;
    }
    throw convergence_error("hyp2f1: series did not reach the requested accuracy");
}

inline bool is_nonpositive_int(double x) {
    return x <= 0.25 && std::abs(x - std::nearbyint(x)) < 1e-12;
}

} // namespace detail

// Gauss hypergeometric 2F1(a,b;c;z) for real parameters and z in [0,1).
// Terminating cases are summed exactly; otherwise the Gauss series is
// used directly for z <= 0.7 and through the 1-z connection formula
// above that. The connection formula degenerates when c-a-b is an
// integer; that corner raises convergence_error.
inline double hyp2f1(double a, double b, double c, double z) {
    if (!(z >= 0.0 && z < 1.0))
        throw domain_error("hyp2f1: z must lie in [0,1)");
    if (detail::is_nonpositive_int(c) &&
        !(detail::is_nonpositive_int(a) && a >= c) &&
        !(detail::is_nonpositive_int(b) && b >= c))
        throw pole_error("hyp2f1: c is a non-positive integer");
    // Terminating series (a or b a non-positive integer): a polynomial in z.
    if (detail::is_nonpositive_int(a) || detail::is_nonpositive_int(b)) {
        if (detail::is_nonpositive_int(b) && !detail::is_nonpositive_int(a)) std::swap(a, b);
        const int kmax = static_cast<int>(-std::nearbyint(a));
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < kmax; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
            sum += term;
        }
        return sum;
    }
    if (z <= 0.7) return detail::hyp2f1_series(a, b, c, z);

    const double m = c - a - b;
    if (std::abs(m - std::nearbyint(m)) < 0.02)
        throw convergence_error(
            "hyp2f1: z near 1 with near-integer c-a-b is outside the supported range");
    // 2F1(a,b;c;z) = A 2F1(a,b;1-m;w) + B w^m 2F1(c-a,c-b;1+m;w), w = 1-z.
    const double w = 1.0 - z;
    const double A = gamma(c) * gamma(m) * rgamma(c - a) * rgamma(c - b);
    const double B = gamma(c) * gamma(-m) * rgamma(a) * rgamma(b);
    double sum = 0.0;
    if (A != 0.0) sum += A * detail::hyp2f1_series(a, b, 1.0 - m, w);
    if (B != 0.0) sum += B * std::pow(w, m) * detail::hyp2f1_series(c - a, c - b, 1.0 + m, w);
    return sum;
}

// Exact binomial coefficient C(p, q). Raises overflow_error once the
// exact value no longer fits in 64 bits.
inline std::uint64_t binom(int p, int q) {
    if (p < 0 || q < 0 || q > p) throw domain_error("binom: requires 0 <= q <= p");
    if (q > p - q) q = p - q;
    // After step i the accumulator holds C(p-q+i, i), so every division
    // below is exact and intermediates stay within 128 bits whenever the
    // result fits in 64.
    unsigned __int128 r = 1;
    for (int i = 1; i <= q; ++i) {
        r = r * static_cast<unsigned>(p - q + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw overflow_error("binom: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace ptzeta
