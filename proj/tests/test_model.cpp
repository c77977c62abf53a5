#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ptzeta/model.hpp"
#include "ptzeta/quadrature.hpp"

using namespace ptzeta;
using Catch::Approx;

TEST_CASE("kink profile solves the first-order equation") {
    const Phi4Params p(1.3, 0.7);
    REQUIRE(kink_profile(p, 0.0) == 0.0);
    REQUIRE(kink_profile(p, 60.0) == Approx(p.vacuum()).epsilon(1e-12));
    REQUIRE(kink_profile(p, -60.0) == Approx(-p.vacuum()).epsilon(1e-12));
    for (double x : {-1.8, -0.2, 0.0, 0.9, 3.0})
        REQUIRE(std::abs(first_integral_residual(p, x)) < 1e-8);
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(Phi4Params(0.0, 1.0), domain_error);
    REQUIRE_THROWS_AS(Phi4Params(1.0, -2.0), domain_error);
    REQUIRE_THROWS_AS(ReflectionlessPotential(0, 1.0), domain_error);
    REQUIRE_THROWS_AS(ReflectionlessPotential(2, 0.0), domain_error);
    REQUIRE_THROWS_AS(OperatorSpec(0, 1.0, 4.0, 1, 1.0), domain_error);
    REQUIRE_THROWS_AS(OperatorSpec(2, -1.0, 4.0, 1, 1.0), domain_error);
    REQUIRE_THROWS_AS(OperatorSpec(2, 1.0, 3.0, 1, 1.0), domain_error); // below the edge
    REQUIRE_THROWS_AS(OperatorSpec(2, 1.0, 4.0, 0, 1.0), domain_error);
    REQUIRE_THROWS_AS(OperatorSpec(2, 1.0, 4.0, 1, 0.0), domain_error);
}

TEST_CASE("continuum-edge detection and exact accessors") {
    const OperatorSpec edge(2, 1.0, 4.0, 3, 1.0);
    REQUIRE(edge.threshold);
    REQUIRE(edge.z(2) == 1.0);
    REQUIRE(edge.gap(2) == 0.0);
    REQUIRE(edge.z(1) == 4.0);
    REQUIRE(edge.gap(1) == 3.0);
    // a hair above the edge is not the edge
    const OperatorSpec above(2, 1.0, 4.0 * (1.0 + 1e-6), 3, 1.0);
    REQUIRE_FALSE(above.threshold);
    REQUIRE(above.gap(2) > 0.0);
    // the relative-1e-12 snap region is the edge
    REQUIRE(OperatorSpec(2, 1.0, 4.0 * (1.0 + 1e-13), 3, 1.0).threshold);
    REQUIRE(edge.edge() == 4.0);
}

TEST_CASE("kink maps to the two-level edge well") {
    const Phi4Params p(1.0, 1.0);
    const OperatorSpec spec = spec_from_kink(p, 1, 1.0);
    REQUIRE(spec.n == 2);
    REQUIRE(spec.b == Approx(std::sqrt(0.5)).epsilon(1e-15));
    REQUIRE(spec.lambda == Approx(2.0).epsilon(1e-15));
    REQUIRE(spec.threshold);
    // V''(phi_K(x)) - lambda reproduces the well
    for (double x : {-1.1, 0.0, 0.4, 2.2}) {
        const double lhs = p.potential_dd(kink_profile(p, x)) - spec.lambda;
        REQUIRE(lhs == Approx(spec.well().u(x)).epsilon(1e-12));
    }
}

TEST_CASE("bound states n=1 and n=2 are the closed forms") {
    const auto one = bound_states(ReflectionlessPotential(1, 1.5));
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].nu == 1);
    REQUIRE(one[0].eigenvalue == -2.25);
    REQUIRE(one[0].psi(0.7) == Approx(std::sqrt(0.75) / std::cosh(1.05)).epsilon(1e-14));

    const auto two = bound_states(ReflectionlessPotential(2, 1.0));
    REQUIRE(two.size() == 2);
    REQUIRE(two[0].eigenvalue == -1.0);
    REQUIRE(two[1].eigenvalue == -4.0);
    // psi_1 odd, psi_2 even
    REQUIRE(two[0].psi(0.4) == Approx(-two[0].psi(-0.4)).epsilon(1e-13));
    REQUIRE(two[1].psi(0.4) == Approx(two[1].psi(-0.4)).epsilon(1e-13));
}

TEST_CASE("bound states are orthonormal") {
    // split at the origin: an endpoint there anchors the integrator's node
    // clustering inside the support of the states (odd states vanish at 0,
    // which starves a single wide symmetric pass of signal)
    auto whole_line = [](auto f) {
        return integrate(f, -35.0, 0.0, 1e-11).value + integrate(f, 0.0, 35.0, 1e-11).value;
    };
    for (int n : {1, 2, 3}) {
        const auto states = bound_states(ReflectionlessPotential(n, 1.0));
        REQUIRE(int(states.size()) == n);
        for (int i = 0; i < n; ++i) {
            const double norm =
                whole_line([&](double x) { return states[i].psi(x) * states[i].psi(x); });
            // grid-interpolated states (n >= 3) carry O(h^2) error
            REQUIRE(norm == Approx(1.0).margin(n <= 2 ? 1e-9 : 1e-4));
            for (int j = 0; j < i; ++j) {
                const double ortho =
                    whole_line([&](double x) { return states[i].psi(x) * states[j].psi(x); });
                REQUIRE(std::abs(ortho) < (n <= 2 ? 1e-10 : 1e-5));
            }
        }
    }
}

TEST_CASE("n=3 eigenvalues are exact by construction") {
    const auto states = bound_states(ReflectionlessPotential(3, 0.6));
    REQUIRE(states[0].eigenvalue == Approx(-0.36).epsilon(1e-15));
    REQUIRE(states[1].eigenvalue == Approx(-4.0 * 0.36).epsilon(1e-15));
    REQUIRE(states[2].eigenvalue == Approx(-9.0 * 0.36).epsilon(1e-15));
}
