#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ngq/errors.hpp"
#include "ngq/quadrature.hpp"
#include "ngq/special_functions.hpp"

using namespace ngq;

TEST_CASE("digamma at small integers")
{
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-15));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-15));
    // psi(n) = H_{n-1} - gamma
    double harmonic = 0.0;
    for (int k = 1; k <= 50; ++k)
        harmonic += 1.0 / k;
    CHECK(digamma(51.0) == doctest::Approx(harmonic - euler_gamma).epsilon(1e-14));
}

TEST_CASE("digamma agrees with the lgamma derivative")
{
    // Richardson-extrapolated central difference of lgamma as an oracle
    const auto lgamma_derivative = [](double x) {
        const double h = 1e-4;
        const double d1 = (std::lgamma(x + h) - std::lgamma(x - h)) / (2.0 * h);
        const double d2 = (std::lgamma(x + 2 * h) - std::lgamma(x - 2 * h)) / (4.0 * h);
        return (4.0 * d1 - d2) / 3.0;
    };
    for (double x : {0.37, 1.31, 2.75, 5.9, 11.4, 47.2})
        CHECK(digamma(x) == doctest::Approx(lgamma_derivative(x)).epsilon(1e-9));
}

TEST_CASE("digamma rejects the non-positive domain")
{
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-2.5), DomainError);
}

TEST_CASE("log_factorial basics")
{
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
    KahanSum direct;
    for (int k = 2; k <= 40; ++k)
        direct.add(std::log(static_cast<double>(k)));
    CHECK(log_factorial(40) == doctest::Approx(direct.value()).epsilon(1e-14));
    CHECK_THROWS_AS(log_factorial(-1), DomainError);
}

TEST_CASE("log_binomial basics")
{
    CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(log_binomial(7, 0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(log_binomial(3, 4), DomainError);
}

TEST_CASE("bessel_i0_scaled against its integral representation")
{
    // I0(x) = (1/pi) int_0^pi e^{x cos t} dt, so e^{-x} I0(x) integrates
    // e^{-x(1 - cos t)}
    const auto oracle = [](double x) {
        const GaussRule rule = gauss_legendre(200, 0.0, std::numbers::pi);
        KahanSum sum;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum.add(rule.weights[i] * std::exp(-x * (1.0 - std::cos(rule.nodes[i]))));
        return sum.value() / std::numbers::pi;
    };

    CHECK(bessel_i0_scaled(0.0) == 1.0);
    for (double x : {0.3, 1.0, 5.0, 12.0, 29.5, 30.5, 80.0, 700.0, 5000.0})
        CHECK(bessel_i0_scaled(x) == doctest::Approx(oracle(x)).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_i0_scaled(-1.0), DomainError);
}

TEST_CASE("bessel_i0_scaled matches the standard library where it is usable")
{
    for (double x : {0.1, 0.7, 2.0, 8.0, 20.0})
        CHECK(bessel_i0_scaled(x)
              == doctest::Approx(std::exp(-x) * std::cyl_bessel_i(0.0, x)).epsilon(1e-12));
}

TEST_CASE("bessel_i0_scaled decreases monotonically")
{
    double prev = bessel_i0_scaled(0.0);
    for (double x = 0.25; x <= 60.0; x += 0.25) {
        const double cur = bessel_i0_scaled(x);
        CHECK(cur < prev);
        prev = cur;
    }
}
