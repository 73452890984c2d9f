#include "ngq/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "ngq/errors.hpp"

namespace ngq {

double digamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("digamma: argument must be positive");

    const double n = std::floor(x);
    if (x == n && n <= 1e6) {
        double s = -euler_gamma;
        for (long k = 1; k < static_cast<long>(n); ++k)
            s += 1.0 / static_cast<double>(k);
        return s;
    }

    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2k} / (2k x^{2k})
    const double tail = inv2 * (1.0 / 12.0
                      - inv2 * (1.0 / 120.0
                      - inv2 * (1.0 / 252.0
                      - inv2 * (1.0 / 240.0
                      - inv2 * (1.0 / 132.0
                      - inv2 * (691.0 / 32760.0))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

double log_factorial(int m)
{
    if (m < 0)
        throw DomainError("log_factorial: argument must be non-negative");
    return std::lgamma(static_cast<double>(m) + 1.0);
}

double log_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("log_binomial: require 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double bessel_i0_scaled(double x)
{
    if (x < 0.0)
        throw DomainError("bessel_i0_scaled: argument must be non-negative");

    if (x <= 30.0) {
        // power series, all terms positive
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 400; ++k) {
            term *= q / (static_cast<double>(k) * k);
            sum += term;
            if (term < sum * 1e-17)
                break;
        }
        return sum * std::exp(-x);
    }

    // asymptotic expansion of e^{-x} I0(x)
    double sum = 1.0;
    double a = 1.0;
    for (int k = 1; k <= 12; ++k) {
        a *= static_cast<double>(2 * k - 1) * (2 * k - 1) / (8.0 * k * x);
        sum += a;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

} // namespace ngq
