#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ngq/entropy.hpp"
#include "ngq/fock.hpp"
#include "ngq/qfunc.hpp"
#include "ngq/quadrature.hpp"

namespace ngqtest {

// Deterministic pseudo-random complex points in a centered box.
inline std::vector<ngq::Complex> random_points(std::size_t count, double half_width,
                                               std::uint64_t seed,
                                               ngq::Complex center = {0.0, 0.0})
{
    std::vector<ngq::Complex> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double re = (2.0 * ngq::counter_uniform(seed, 2 * i) - 1.0) * half_width;
        const double im = (2.0 * ngq::counter_uniform(seed, 2 * i + 1) - 1.0) * half_width;
        pts.push_back(center + ngq::Complex(re, im));
    }
    return pts;
}

struct NamedModel {
    std::string name;
    ngq::QFunctionModel model;
};

// The single-mode state catalog used across the invariance tests.
inline std::vector<NamedModel> single_mode_catalog()
{
    using M = ngq::QFunctionModel;
    std::vector<NamedModel> out;
    out.push_back({"vacuum", M::vacuum()});
    out.push_back({"fock(1)", M::analytic_fock(1)});
    out.push_back({"fock(3)", M::analytic_fock(3)});
    out.push_back({"thermal(nbar=1)", M::analytic_thermal(1.0)});
    out.push_back({"pats(1,0.3)", M::analytic_pats(1, 0.3)});
    out.push_back({"pats(2,0.5)", M::analytic_pats(2, 0.5)});
    out.push_back({"phase_averaged(1)", M::analytic_phase_averaged(1.0)});
    out.push_back({"coherent(0.8-0.3i)", ngq::displace(M::vacuum(), ngq::Complex(0.8, -0.3))});
    return out;
}

struct NamedState {
    std::string name;
    ngq::FockDensityMatrix state;
};

// Matrix-backed catalog at a tight tail tolerance (moment tests are
// sensitive to the discarded tail).
inline std::vector<NamedState> state_catalog(double tail_tol = 1e-14)
{
    using S = ngq::StateFamilySpec;
    const auto mk = [&](S spec) { return ngq::make_state(spec, ngq::default_cutoff(spec, tail_tol)); };
    std::vector<NamedState> out;
    out.push_back({"vacuum", mk(S::fock(0))});
    out.push_back({"fock(1)", mk(S::fock(1))});
    out.push_back({"fock(3)", mk(S::fock(3))});
    out.push_back({"thermal(0.5)", mk(S::thermal(0.5))});
    out.push_back({"pats(1,0.3)", mk(S::pats(1, 0.3))});
    out.push_back({"pats(2,0.5)", mk(S::pats(2, 0.5))});
    out.push_back({"phase_averaged(1)", mk(S::phase_averaged(1.0))});
    out.push_back({"coherent(0.8-0.3i)", mk(S::coherent({0.8, -0.3}))});
    return out;
}

inline ngq::QuadratureSpec default_quad()
{
    return ngq::QuadratureSpec{};
}

inline ngq::QuadratureSpec mc_quad(std::int64_t samples, std::uint64_t seed,
                                   double target = 5e-3)
{
    ngq::QuadratureSpec q;
    q.mc_samples = samples;
    q.mc_seed = seed;
    q.target_abs_err = target;
    return q;
}

} // namespace ngqtest
