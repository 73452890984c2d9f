#pragma once

#include <optional>

#include "ngq/entropy.hpp"

namespace ngq {

// The Gaussian state sharing the model's first and second moments. The
// truncated thermal matrix is attached exactly when the state is zero-mean
// and phase-symmetric, which covers the whole state catalog here.
struct GaussianReference {
    GaussianMomentSummary summary;
    std::optional<double> thermal_nbar;
    std::optional<FockDensityMatrix> matrix;
};

GaussianReference gaussian_reference(const QFunctionModel& model);
GaussianReference gaussian_reference(const FockDensityMatrix& rho);

// Wehrl-entropy non-Gaussianity: H_W of the moment-matched Gaussian
// (closed form) minus H_W of the model. Values below -2 * est_error are
// clamped to that bound; the raw value stays in the report.
MeasureReport ng_measure(const QFunctionModel& model, const QuadratureSpec& quad);

// ln(m+1) - m - ln m! + m psi(m+1)
double ng_fock_closed(int m);

// (n+1) ln(n+1) - n ln n, the entropy of a thermal state with mean photon
// number n.
double thermal_entropy_closed(double nbar);

// Hilbert-Schmidt comparison measure Tr[(rho - tau)^2] / (2 Tr rho^2);
// requires a thermal-representable Gaussian reference.
MeasureReport delta1(const FockDensityMatrix& rho);

// Relative-entropy comparison measure S(tau) - S(rho); same scope as delta1.
MeasureReport delta2(const FockDensityMatrix& rho);

} // namespace ngq
