#include "ngq/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ngq/errors.hpp"

namespace ngq {

GaussRule gauss_legendre(int n, double a, double b)
{
    if (n < 1)
        throw DomainError("gauss_legendre: need at least one node");

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const int half = (n + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);

    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the usual Chebyshev-like initial guess
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15)
                break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        rule.weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter)
{
    const std::uint64_t z = mix64(seed ^ mix64(counter));
    return static_cast<double>(z >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

void counter_normal_pair(std::uint64_t seed, std::uint64_t counter, double& n1, double& n2)
{
    const double u1 = counter_uniform(seed, 2 * counter);
    const double u2 = counter_uniform(seed, 2 * counter + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    n1 = r * std::cos(t);
    n2 = r * std::sin(t);
}

double integrate_graded(const std::function<double(double)>& f, double upper,
                        int nodes, int panels, double ratio)
{
    if (!(upper > 0.0))
        throw DomainError("integrate_graded: upper limit must be positive");
    if (nodes < 2 || panels < 1 || !(ratio > 1.0))
        throw DomainError("integrate_graded: bad rule parameters");

    const GaussRule base = gauss_legendre(nodes, -1.0, 1.0);

    KahanSum total;
    double hi = upper;
    for (int p = 0; p < panels; ++p) {
        const double lo = (p == panels - 1) ? 0.0 : hi / ratio;
        const double mid = 0.5 * (hi + lo);
        const double halfw = 0.5 * (hi - lo);
        for (int i = 0; i < nodes; ++i)
            total.add(halfw * base.weights[i] * f(mid + halfw * base.nodes[i]));
        hi = lo;
    }
    return total.value();
}

} // namespace ngq
