#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "ptzeta/heatkernel.hpp"
#include "ptzeta/oracle.hpp"

using namespace ptzeta;
using Catch::Approx;

namespace {
const double inf = std::numeric_limits<double>::infinity();

void check_integral(double value, double err, double exact) {
    // err must bound the true error (conservative estimate contract)
    REQUIRE(std::abs(value - exact) <= std::max(err, 5e-13));
}
} // namespace

TEST_CASE("quadrature battery: finite, singular and semi-infinite") {
    auto q = quadrature([](double x) { return x * x; }, 0.0, 1.0);
    check_integral(q.value, q.err, 1.0 / 3.0);
    q = quadrature([](double x) { return std::sin(x); }, 0.0, pi);
    check_integral(q.value, q.err, 2.0);
    q = quadrature([](double x) { return std::log(x); }, 0.0, 1.0);
    check_integral(q.value, q.err, -1.0);
    q = quadrature([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    check_integral(q.value, q.err, 2.0);
    q = quadrature([](double x) { return std::pow(x, -0.3); }, 0.0, 1.0);
    check_integral(q.value, q.err, 1.0 / 0.7);
    q = quadrature([](double x) { return std::exp(-x); }, 0.0, inf);
    check_integral(q.value, q.err, 1.0);
    q = quadrature([](double x) { return std::exp(-x * x); }, 0.0, inf);
    check_integral(q.value, q.err, 0.5 * sqrt_pi);
    q = quadrature([](double x) { return x * std::exp(-x); }, 0.0, inf);
    check_integral(q.value, q.err, 1.0);
    q = quadrature([](double x) { return std::exp(-x) * std::cos(x); }, 0.0, inf);
    check_integral(q.value, q.err, 0.5);
    q = quadrature([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, inf);
    check_integral(q.value, q.err, 0.5 * pi);
}

TEST_CASE("quadrature edge cases") {
    const auto zero = quadrature([](double) { return 1.0; }, 2.0, 2.0);
    REQUIRE(zero.value == 0.0);
    REQUIRE(zero.err == 0.0);
    REQUIRE_THROWS_AS(quadrature([](double x) { return x; }, 0.0, 1.0, 0.0), domain_error);
    REQUIRE_THROWS_AS(quadrature([](double x) { return x; }, 1.0, 0.0), domain_error);
    REQUIRE_THROWS_AS(quadrature([](double x) { return x; }, -inf, 1.0), domain_error);
    REQUIRE_THROWS_AS(
        quadrature([](double x) { return std::exp(x); }, 0.0, inf), convergence_error);
}

TEST_CASE("grid invariants") {
    const Grid g(20.0, 4000);
    REQUIRE(g.h() == Approx(40.0 / 3999.0).epsilon(1e-15));
    REQUIRE(g.x(0) == -20.0);
    REQUIRE(g.x(3999) == Approx(20.0).margin(1e-12));
    REQUIRE_THROWS_AS(Grid(0.0, 100), domain_error);
    REQUIRE_THROWS_AS(Grid(10.0, 15), domain_error);
}

TEST_CASE("fd spectrum: free box eigenvalues") {
    const Grid g(10.0, 2000);
    const auto sp = fd_spectrum(g, ReflectionlessPotential(1, 1e-8));
    // u is numerically zero, so the low spectrum is the Dirichlet box;
    // every node is an unknown, so the implied walls sit one spacing
    // outside the extreme nodes and the box width is 2L + 2h
    const double width = 20.0 + 2.0 * g.h();
    for (std::size_t k = 0; k < 3; ++k) {
        const double exact = std::pow(double(k + 1) * pi / width, 2.0);
        REQUIRE(sp.free_eigenvalues[k] == Approx(exact).epsilon(1e-5));
        REQUIRE(sp.eigenvalues[k] == Approx(exact).epsilon(1e-3));
    }
    REQUIRE(sp.eigenvalues.size() == g.N);
    REQUIRE(std::is_sorted(sp.eigenvalues.begin(), sp.eigenvalues.end()));
}

TEST_CASE("fd spectrum reproduces the two-level well") {
    const Grid g(20.0, 2000);
    const auto sp = fd_spectrum(g, ReflectionlessPotential(2, 1.0));
    int negatives = 0;
    for (double mu : sp.eigenvalues) negatives += mu < 0.0 ? 1 : 0;
    REQUIRE(negatives == 2);
    REQUIRE(sp.eigenvalues[0] == Approx(-4.0).epsilon(5e-4));
    REQUIRE(sp.eigenvalues[1] == Approx(-1.0).epsilon(5e-4));
}

TEST_CASE("spectrum cache returns the identical object") {
    const Grid g(12.0, 800);
    const ReflectionlessPotential pot(1, 1.0);
    const auto a = ptzeta::detail::spectrum_cached(g, pot);
    const auto b = ptzeta::detail::spectrum_cached(g, pot);
    REQUIRE(a.get() == b.get());
}

TEST_CASE("fd heat trace tracks the closed form at moderate t") {
    const Grid g(15.0, 1600);
    const ReflectionlessPotential pot(1, 1.0);
    for (double t : {0.1, 0.5, 1.0})
        REQUIRE(fd_heat_trace_diff(g, pot, t) == Approx(gamma0(t, pot)).margin(2e-3));
}

TEST_CASE("numeric zeta derivative agrees with the d=1 anchor") {
    const OperatorSpec spec(1, 1.0, 4.0, 1, 1.0);
    REQUIRE(numeric_dzeta(spec) == Approx(std::log(3.0)).epsilon(1e-8));
    REQUIRE_THROWS_AS(numeric_dzeta(spec, -1.0), domain_error);
}
