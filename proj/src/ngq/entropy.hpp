#pragma once

#include <cstdint>
#include <string>

#include "ngq/qfunc.hpp"

namespace ngq {

// Integration configuration shared by the deterministic and Monte Carlo
// engines. All counts must be >= 16 and target_abs_err >= 1e-12.
struct QuadratureSpec {
    int radial_nodes = 96;           // Gauss-Legendre nodes per radial panel
    double radial_cut = 0.0;         // upper radius; 0 derives it from the moment fit
    int grid_nodes_per_axis = 96;    // radial nodes / half the angular count of the 2D rule
    std::int64_t mc_samples = 1'000'000;
    std::uint64_t mc_seed = 0x00c0ffee5eedull;
    double target_abs_err = 1e-8;

    void validate() const;
};

enum class Method {
    ClosedForm,
    Radial,
    Grid2D,
    Mc4D,
};

const char* method_name(Method method);

struct MeasureReport {
    double value = 0.0;
    Method method = Method::ClosedForm;
    double est_error = 0.0;
    std::string metadata;
    double raw_value = 0.0; // pre-clamp value; equals value unless clamped
};

// Wehrl entropy -1/pi^n int Q ln Q, in nats. Dispatches on the model:
// phase-symmetric single mode -> radial rule, general single mode -> polar
// 2D rule, two modes -> importance-sampled Monte Carlo with the
// moment-matched Gaussian as proposal.
MeasureReport wehrl(const QFunctionModel& model, const QuadratureSpec& quad);

// Engine-forcing entry points (the dispatcher above picks among these).
MeasureReport wehrl_radial(const QFunctionModel& model, const QuadratureSpec& quad);
MeasureReport wehrl_grid2d(const QFunctionModel& model, const QuadratureSpec& quad);
MeasureReport wehrl_mc(const QFunctionModel& model, const QuadratureSpec& quad);

// Closed form for a Gaussian Q distribution: n(1 + ln 2) + ln(det Sigma)/2.
// The mean does not enter.
MeasureReport wehrl_gaussian(const GaussianMomentSummary& fit);

// 1 + m + ln m! - m psi(m+1)
double wehrl_fock_closed(int m);

// (1/pi^n) int Q, through the same engines; equals 1 for a valid model.
double q_normalization(const QFunctionModel& model, const QuadratureSpec& quad);

// <conj(alpha)^p alpha^q> of a single-mode Q function by quadrature;
// cross-checks anti_normal_moment.
Complex q_moment_quad(const QFunctionModel& model, int p, int q, const QuadratureSpec& quad);

} // namespace ngq
