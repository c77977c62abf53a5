#pragma once

// The classical model layer: the quartic scalar potential, its kink, and
// the reflectionless fluctuation wells -n(n+1) b^2 sech^2(b x) whose
// spectrum is known in closed form (bound levels at -nu^2 b^2, nu = 1..n).
// Everything downstream identifies a fluctuation problem by the tuple
// (n, b, lambda, d, M) collected in OperatorSpec.

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "ptzeta/errors.hpp"
#include "ptzeta/fdgrid.hpp"

namespace ptzeta {

struct Phi4Params {
    double m; // mass parameter, V = g phi^4/4 - m^2 phi^2/2
    double g; // quartic coupling

    Phi4Params(double m_, double g_) : m(m_), g(g_) {
        if (!(m > 0.0)) throw domain_error("Phi4Params: m must be positive");
        if (!(g > 0.0)) throw domain_error("Phi4Params: g must be positive");
    }
    double potential(double phi) const {
        return g * phi * phi * phi * phi / 4.0 - m * m * phi * phi / 2.0;
    }
    double potential_dd(double phi) const { return 3.0 * g * phi * phi - m * m; }
    double vacuum() const { return m / std::sqrt(g); }
};

inline double kink_profile(const Phi4Params& p, double x) {
    return p.m / std::sqrt(p.g) * std::tanh(p.m * x / std::sqrt(2.0));
}

// First integral of the static equation of motion:
// phi'^2/2 - V(phi) - m^4/(4g) = 0 along the kink (the constant is
// -V at the vacua). The derivative is taken with a 5-point stencil, so
// the residual of the exact profile sits at the stencil truncation level.
inline double first_integral_residual(const Phi4Params& p, double x) {
    const double h = 1e-3;
    const double d1 = (-kink_profile(p, x + 2.0 * h) + 8.0 * kink_profile(p, x + h)
                       - 8.0 * kink_profile(p, x - h) + kink_profile(p, x - 2.0 * h))
                      / (12.0 * h);
    const double phi = kink_profile(p, x);
    return 0.5 * d1 * d1 - p.potential(phi) - p.m * p.m * p.m * p.m / (4.0 * p.g);
}

struct ReflectionlessPotential {
    int n;    // number of bound levels
    double b; // inverse width

    ReflectionlessPotential(int n_, double b_) : n(n_), b(b_) {
        if (n < 1) throw domain_error("ReflectionlessPotential: n must be >= 1");
        if (!(b > 0.0)) throw domain_error("ReflectionlessPotential: b must be positive");
    }
    double u(double x) const {
        const double s = 1.0 / std::cosh(b * x);
        return -double(n) * double(n + 1) * b * b * s * s;
    }
};

struct BoundState {
    int nu;            // level index, 1..n
    double eigenvalue; // -nu^2 b^2, exact
    std::function<double(double)> psi;
};

namespace detail {

inline std::function<double(double)> interpolant(const Grid& g,
                                                 std::shared_ptr<std::vector<double>> v) {
    return [g, v = std::move(v)](double x) {
        if (x <= -g.L || x >= g.L) return 0.0;
        const double t = (x + g.L) / g.h();
        const std::size_t i = std::size_t(t);
        if (i + 1 >= v->size()) return (*v)[v->size() - 1];
        const double f = t - double(i);
        return (1.0 - f) * (*v)[i] + f * (*v)[i + 1];
    };
}

} // namespace detail

// Discrete spectrum of -d^2/dx^2 + u. Levels are returned with exact
// eigenvalues; for n <= 2 the wave functions are closed forms, above that
// they come from inverse iteration on a wide Dirichlet grid.
inline std::vector<BoundState> bound_states(const ReflectionlessPotential& w) {
    const int n = w.n;
    const double b = w.b;
    std::vector<BoundState> out;
    out.reserve(std::size_t(n));

    if (n == 1) {
        out.push_back({1, -b * b, [b](double x) {
                           return std::sqrt(b / 2.0) / std::cosh(b * x);
                       }});
        return out;
    }
    if (n == 2) {
        out.push_back({1, -b * b, [b](double x) {
                           return std::sqrt(1.5 * b) * std::tanh(b * x) / std::cosh(b * x);
                       }});
        out.push_back({2, -4.0 * b * b, [b](double x) {
                           const double s = 1.0 / std::cosh(b * x);
                           return 0.5 * std::sqrt(3.0 * b) * s * s;
                       }});
        return out;
    }

    const Grid g(30.0 / b, 24001);
    std::vector<double> u(g.N);
    for (std::size_t i = 0; i < g.N; ++i) u[i] = w.u(g.x(i));
    for (int nu = 1; nu <= n; ++nu) {
        std::vector<double> start(g.N);
        for (std::size_t i = 0; i < g.N; ++i) {
            const double xi = g.x(i);
            start[i] = std::pow(std::tanh(b * xi), double(n - nu)) / std::cosh(b * xi);
        }
        auto v = std::make_shared<std::vector<double>>(
            fd_eigenvector(g, u, -double(nu) * double(nu) * b * b, start));
        out.push_back({nu, -double(nu) * double(nu) * b * b, detail::interpolant(g, v)});
    }
    return out;
}

// Identification of the second-variation operator around a static solution
// with a reflectionless well: V''(phi(x)) = lambda + u(x). lambda is the
// asymptotic mass squared of the fluctuations, d the spacetime dimension,
// M the renormalization scale entering through M^{2s}.
struct OperatorSpec {
    int n;
    double b;
    double lambda;
    int d;
    double M;
    bool threshold; // lambda == n^2 b^2 to relative 1e-12 (continuum edge)

    OperatorSpec(int n_, double b_, double lambda_, int d_, double M_)
        : n(n_), b(b_), lambda(lambda_), d(d_), M(M_) {
        if (n < 1) throw domain_error("OperatorSpec: n must be >= 1");
        if (!(b > 0.0)) throw domain_error("OperatorSpec: b must be positive");
        if (d < 1) throw domain_error("OperatorSpec: d must be >= 1");
        if (!(M > 0.0)) throw domain_error("OperatorSpec: M must be positive");
        const double edge = double(n) * double(n) * b * b;
        threshold = std::abs(lambda - edge) <= 1e-12 * std::max(std::abs(lambda), edge);
        if (!threshold && !(lambda > edge))
            throw domain_error("OperatorSpec: lambda must be >= n^2 b^2 "
                               "(otherwise the vacuum is unstable)");
    }
    double edge() const { return double(n) * double(n) * b * b; }
    // z_nu = lambda/(nu^2 b^2) >= 1; equals 1 only for nu = n at threshold.
    // lambda itself is kept as given; the threshold branch is taken through
    // these exact accessors so the nu = n cancellations are not left to
    // floating-point luck.
    double z(int nu) const {
        if (threshold && nu == n) return 1.0;
        return lambda / (double(nu) * double(nu) * b * b);
    }
    double gap(int nu) const { // lambda - nu^2 b^2
        if (threshold && nu == n) return 0.0;
        return lambda - double(nu) * double(nu) * b * b;
    }
    ReflectionlessPotential well() const { return {n, b}; }
};

// The kink fluctuation operator: V''(phi_K) - 2 m^2 = -3 m^2 sech^2(m x/sqrt 2),
// a two-level well with b = m/sqrt(2), lambda = 2 m^2 (threshold case).
inline OperatorSpec spec_from_kink(const Phi4Params& p, int d, double M) {
    return OperatorSpec(2, p.m / std::sqrt(2.0), 2.0 * p.m * p.m, d, M);
}

} // namespace ptzeta
