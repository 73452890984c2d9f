#pragma once

namespace ngq {

inline constexpr double euler_gamma = 0.57721566490153286060;

// psi(x) for x > 0. Integer arguments use the exact harmonic sum
// psi(n) = sum_{k=1}^{n-1} 1/k - gamma; otherwise upward recurrence into
// the asymptotic Bernoulli series.
double digamma(double x);

// ln(m!)
double log_factorial(int m);

// ln C(n, k)
double log_binomial(int n, int k);

// exp(-x) * I0(x) for x >= 0; safe against overflow for large x.
double bessel_i0_scaled(double x);

} // namespace ngq
