#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ptzeta/quadrature.hpp"
#include "ptzeta/specfun.hpp"

using namespace ptzeta;
using Catch::Approx;

TEST_CASE("gamma at reference points") {
    REQUIRE(ptzeta::gamma(0.5) == Approx(1.7724538509055160273).epsilon(1e-15));
    REQUIRE(ptzeta::gamma(1.0) == Approx(1.0).epsilon(1e-15));
    REQUIRE(ptzeta::gamma(6.0) == Approx(120.0).epsilon(1e-14));
    REQUIRE(ptzeta::gamma(4.5) == Approx(11.631728396567448929).epsilon(1e-14));
    REQUIRE(ptzeta::gamma(-0.5) == Approx(-2.0 * sqrt_pi).epsilon(1e-14));
}

TEST_CASE("gamma functional equations") {
    for (double x : {0.23, 1.7, 3.2, 7.9})
        REQUIRE(ptzeta::gamma(x + 1.0) == Approx(x * ptzeta::gamma(x)).epsilon(1e-14));
    // reflection, including a negative argument
    REQUIRE(ptzeta::gamma(0.22) * ptzeta::gamma(0.78) == Approx(pi / std::sin(0.22 * pi)).epsilon(1e-14));
    REQUIRE(ptzeta::gamma(-1.3) * ptzeta::gamma(2.3) == Approx(pi / std::sin(-1.3 * pi)).epsilon(1e-13));
}

TEST_CASE("gamma and digamma poles are typed errors") {
    REQUIRE_THROWS_AS(ptzeta::gamma(0.0), pole_error);
    REQUIRE_THROWS_AS(ptzeta::gamma(-3.0), pole_error);
    REQUIRE_THROWS_AS(digamma(-1.0), pole_error);
    REQUIRE_THROWS_AS(ptzeta::gamma(std::numeric_limits<double>::quiet_NaN()), domain_error);
}

TEST_CASE("rgamma is entire") {
    REQUIRE(rgamma(0.0) == 0.0);
    REQUIRE(rgamma(-2.0) == 0.0);
    REQUIRE(rgamma(-7.0) == 0.0);
    for (double x : {0.5, 2.5, 9.0})
        REQUIRE(rgamma(x) * ptzeta::gamma(x) == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("digamma reference values and recurrence") {
    const double euler = 0.57721566490153286554;
    REQUIRE(digamma(1.0) == Approx(-euler).epsilon(1e-13));
    REQUIRE(digamma(0.5) == Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-13));
    REQUIRE(digamma(3.7) == Approx(digamma(2.7) + 1.0 / 2.7).epsilon(1e-13));
}

TEST_CASE("erf wrappers and scaled variants") {
    REQUIRE(ptzeta::erf(1.0) == Approx(0.84270079294971486934).epsilon(1e-15));
    REQUIRE(ptzeta::erfc(2.0) == Approx(1.0 - ptzeta::erf(2.0)).epsilon(1e-13));
    // direct-regime identity erfcx(x) = exp(x^2) ptzeta::erfc(x)
    REQUIRE(erfcx(2.0) == Approx(std::exp(4.0) * ptzeta::erfc(2.0)).epsilon(1e-13));
    // asymptotic regime joins smoothly
    REQUIRE(erfcx(6.0 - 1e-9) == Approx(erfcx(6.0 + 1e-9)).epsilon(1e-9));
    REQUIRE(exp_erf_scaled(1.0) == Approx(std::exp(1.0) * ptzeta::erf(1.0)).epsilon(1e-14));
    // large y: exp(y^2) - erfcx(y), dominated by the first term
    REQUIRE(exp_erf_scaled(7.0) * std::exp(-49.0) == Approx(1.0).epsilon(1e-13));
    REQUIRE_THROWS_AS(erfcx(-1.0), domain_error);
    REQUIRE_THROWS_AS(exp_erf_scaled(-0.1), domain_error);
}

TEST_CASE("hyp2f1 closed-form comparators") {
    // 2F1(1,1;2;z) = -ln(1-z)/z
    REQUIRE(hyp2f1(1.0, 1.0, 2.0, 0.5) == Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    // 2F1(1/2,1;3/2;x^2) = atanh(x)/x
    REQUIRE(hyp2f1(0.5, 1.0, 1.5, 0.25) == Approx(std::log(3.0)).epsilon(1e-14));
    REQUIRE(hyp2f1(0.3, 0.8, 1.9, 0.0) == 1.0);
    // terminating series (a a negative integer), exact rational value
    REQUIRE(hyp2f1(-3.0, 2.0, 1.5, 0.4) == Approx(0.05097142857142857).epsilon(1e-14));
}

TEST_CASE("hyp2f1 connection-formula region") {
    // z past the direct-series switch, c-a-b away from an integer
    const double direct = hyp2f1(0.5, 1.0, 1.5, 0.64); // atanh(0.8)/0.8
    REQUIRE(direct == Approx(std::atanh(0.8) / 0.8).epsilon(1e-13));
    // past the switch, checked against the Euler integral
    // Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a} dt
    {
        const double a = 0.3, b = 0.7, c = 2.1, z = 0.81;
        const auto q = integrate(
            [&](double t) {
                return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0)
                       * std::pow(1.0 - z * t, -a);
            },
            0.0, 1.0, 1e-13);
        const double euler =
            ptzeta::gamma(c) * rgamma(b) * rgamma(c - b) * q.value;
        REQUIRE(hyp2f1(a, b, c, z) == Approx(euler).epsilon(1e-11));
    }
    // near-integer c-a-b in the z > 0.7 region is a typed failure
    REQUIRE_THROWS_AS(hyp2f1(0.5, 1.0, 2.51, 0.9), convergence_error);
    REQUIRE_THROWS_AS(hyp2f1(0.5, 1.0, 1.5, 1.0), domain_error);
    REQUIRE_THROWS_AS(hyp2f1(0.5, 1.0, -2.0, 0.3), pole_error);
}

TEST_CASE("binom exact values") {
    REQUIRE(binom(0, 0) == 1ULL);
    REQUIRE(binom(5, 2) == 10ULL);
    REQUIRE(binom(3, 2) == 3ULL);
    REQUIRE(binom(23, 12) == 1352078ULL);
    REQUIRE(binom(61, 30) == 232714176627630544ULL);
    REQUIRE_THROWS_AS(binom(4, 7), domain_error);
}
