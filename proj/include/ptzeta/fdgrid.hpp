#pragma once

// Uniform Dirichlet grid on [-L, L] and a second-order finite-difference
// discretization of -d^2/dx^2 + u(x). The operator is the symmetric
// tridiagonal matrix diag(2/h^2 + u(x_i)) with off-diagonal -1/h^2 over
// the N interior-inclusive nodes x_i = -L + i h, h = 2L/(N-1); the wave
// function is pinned to zero just outside the stored range.

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ptzeta/errors.hpp"

namespace ptzeta {

struct Grid {
    double L;
    std::size_t N;

    Grid(double L_, std::size_t N_) : L(L_), N(N_) {
        if (!(L > 0.0)) throw domain_error("Grid: L must be positive");
        if (N < 16) throw domain_error("Grid: N must be at least 16");
    }
    double h() const { return 2.0 * L / double(N - 1); }
    double x(std::size_t i) const { return -L + double(i) * h(); }
};

namespace detail {

// Solve (T - shift I) y = r for symmetric tridiagonal T given by
// (diag, off). Partial-pivoting LU specialized to the tridiagonal band;
// near-singular pivots are nudged, which is exactly what inverse
// iteration wants when the shift sits on an eigenvalue.
inline void shifted_tridiag_solve(const std::vector<double>& diag,
                                  double off, double shift,
                                  std::vector<double>& y) {
    const std::size_t n = diag.size();
    std::vector<double> a(n), b(n, 0.0), c(n, 0.0); // main, super, supersuper
    for (std::size_t i = 0; i < n; ++i) a[i] = diag[i] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) b[i] = off;
    std::vector<double> sub(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) sub[i] = off;

    double tiny = 0.0;
    for (std::size_t i = 0; i < n; ++i) tiny = std::max(tiny, std::abs(diag[i]));
    tiny = (tiny + std::abs(off)) * 1e-20;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(a[i])) {
            std::swap(a[i], sub[i + 1]);
            std::swap(b[i], a[i + 1]);
            std::swap(c[i], b[i + 1]);
            std::swap(y[i], y[i + 1]);
        }
        if (std::abs(a[i]) < tiny) a[i] = (a[i] < 0.0 ? -tiny : tiny);
        const double m = sub[i + 1] / a[i];
        a[i + 1] -= m * b[i];
        b[i + 1] -= m * c[i];
        y[i + 1] -= m * y[i];
    }
    if (std::abs(a[n - 1]) < tiny) a[n - 1] = (a[n - 1] < 0.0 ? -tiny : tiny);

    y[n - 1] /= a[n - 1];
    if (n >= 2) y[n - 2] = (y[n - 2] - b[n - 2] * y[n - 1]) / a[n - 2];
    for (std::size_t k = n - 2; k-- > 0;)
        y[k] = (y[k] - b[k] * y[k + 1] - c[k] * y[k + 2]) / a[k];
}

} // namespace detail

// All eigenvalues of the FD operator for potential samples u_i, ascending.
inline std::vector<double> fd_eigenvalues(const Grid& g, const std::vector<double>& u) {
    if (u.size() != g.N) throw domain_error("fd_eigenvalues: potential size mismatch");
    const double h = g.h();
    const double off = -1.0 / (h * h);
    Eigen::VectorXd diag(Eigen::Index(g.N)), sub(Eigen::Index(g.N) - 1);
    for (std::size_t i = 0; i < g.N; ++i) diag[Eigen::Index(i)] = 2.0 / (h * h) + u[i];
    sub.setConstant(off);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw convergence_error("fd_eigenvalues: tridiagonal QL failed");
    std::vector<double> out(g.N);
    for (std::size_t i = 0; i < g.N; ++i) out[i] = es.eigenvalues()[Eigen::Index(i)];
    return out;
}

// Eigenvector near a known target eigenvalue, by inverse iteration with a
// fixed shift. Returns grid samples normalized so that the piecewise-linear
// interpolant has unit L2 norm. start provides the initial direction and
// must not be orthogonal to the target mode.
inline std::vector<double> fd_eigenvector(const Grid& g, const std::vector<double>& u,
                                          double target,
                                          const std::vector<double>& start) {
    if (u.size() != g.N || start.size() != g.N)
        throw domain_error("fd_eigenvector: size mismatch");
    const double h = g.h();
    const double off = -1.0 / (h * h);
    std::vector<double> diag(g.N);
    for (std::size_t i = 0; i < g.N; ++i) diag[i] = 2.0 / (h * h) + u[i];

    std::vector<double> y = start;
    auto norm2 = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (double t : v) s += t * t;
        return std::sqrt(s);
    };
    double nd = norm2(y);
    if (!(nd > 0.0)) throw domain_error("fd_eigenvector: zero start vector");
    for (double& t : y) t /= nd;

    double prev_growth = 0.0;
    for (int it = 0; it < 50; ++it) {
        detail::shifted_tridiag_solve(diag, off, target, y);
        const double growth = norm2(y);
        if (!std::isfinite(growth) || growth == 0.0)
            throw convergence_error("fd_eigenvector: inverse iteration broke down");
        for (double& t : y) t /= growth;
        // growth ~ 1/|mu - target| stabilizes once the mode dominates
        if (it > 1 && std::abs(growth - prev_growth) < 1e-6 * growth) break;
        prev_growth = growth;
    }

    // sign convention: largest-magnitude sample positive
    std::size_t imax = 0;
    for (std::size_t i = 1; i < g.N; ++i)
        if (std::abs(y[i]) > std::abs(y[imax])) imax = i;
    if (y[imax] < 0.0)
        for (double& t : y) t = -t;

    // exact L2 norm of the piecewise-linear interpolant:
    // int = h/3 * sum_i (y_i^2 + y_i y_{i+1} + y_{i+1}^2)
    double q = 0.0;
    for (std::size_t i = 0; i + 1 < g.N; ++i)
        q += y[i] * y[i] + y[i] * y[i + 1] + y[i + 1] * y[i + 1];
    q *= h / 3.0;
    const double scale = 1.0 / std::sqrt(q);
    for (double& t : y) t *= scale;
    return y;
}

} // namespace ptzeta
