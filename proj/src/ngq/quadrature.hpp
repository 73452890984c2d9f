#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace ngq {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [a, b].
GaussRule gauss_legendre(int n, double a, double b);

// Compensated accumulator; keeps sums reproducible to ~1e-15 regardless of
// evaluation order of the contributions handed to it.
class KahanSum {
public:
    void add(double x)
    {
        const double y = x - c_;
        const double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

// t ln t with the limit value 0 at t = 0.
inline double xlogx(double t)
{
    return t > 1e-300 ? t * std::log(t) : 0.0;
}

// SplitMix64 finalizer; the basis of the counter-based sample streams.
std::uint64_t mix64(std::uint64_t z);

// Uniform deviate in (0,1) from (seed, counter); pure function of its inputs,
// so parallel or resumed sampling is deterministic.
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

// Box-Muller pair from counters (2*counter, 2*counter + 1).
void counter_normal_pair(std::uint64_t seed, std::uint64_t counter, double& n1, double& n2);

// Composite Gauss-Legendre on [0, upper]: `panels` subintervals graded
// geometrically toward 0 (absorbs the t ln t endpoint), `nodes` points each.
double integrate_graded(const std::function<double(double)>& f, double upper,
                        int nodes, int panels = 6, double ratio = 6.0);

} // namespace ngq
