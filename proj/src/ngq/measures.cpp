#include "ngq/measures.hpp"

#include <cmath>
#include <sstream>

#include "ngq/errors.hpp"
#include "ngq/special_functions.hpp"

namespace ngq {

namespace {

constexpr double kThermalDetectTol = 1e-10;
constexpr double kReferenceTailTol = 1e-12;

GaussianReference reference_from_fit(GaussianMomentSummary fit)
{
    GaussianReference ref;
    ref.summary = std::move(fit);
    if (ref.summary.modes != 1)
        return ref;

    const auto& cov = ref.summary.covariance;
    const bool zero_mean = ref.summary.mean.cwiseAbs().maxCoeff() < kThermalDetectTol;
    const bool isotropic = std::abs(cov(0, 0) - cov(1, 1)) < kThermalDetectTol
                        && std::abs(cov(0, 1)) < kThermalDetectTol;
    if (!zero_mean || !isotropic)
        return ref;

    const double nbar = std::max(0.0, cov.trace() - 1.0); // <a adag> - 1
    ref.thermal_nbar = nbar;
    const double x = nbar / (nbar + 1.0);
    const StateFamilySpec spec = StateFamilySpec::thermal(x);
    ref.matrix = make_state(spec, default_cutoff(spec, kReferenceTailTol));
    return ref;
}

} // namespace

GaussianReference gaussian_reference(const QFunctionModel& model)
{
    return reference_from_fit(gaussian_fit(model));
}

GaussianReference gaussian_reference(const FockDensityMatrix& rho)
{
    return reference_from_fit(gaussian_fit(QFunctionModel::from_matrix(rho)));
}

MeasureReport ng_measure(const QFunctionModel& model, const QuadratureSpec& quad)
{
    const GaussianMomentSummary fit = gaussian_fit(model);
    const MeasureReport reference = wehrl_gaussian(fit);
    const MeasureReport entropy = wehrl(model, quad);

    MeasureReport report;
    report.raw_value = reference.value - entropy.value;
    report.est_error = entropy.est_error;
    report.value = std::max(report.raw_value, -2.0 * report.est_error);
    report.method = entropy.method;
    report.metadata = entropy.metadata;
    return report;
}

double ng_fock_closed(int m)
{
    if (m < 0)
        throw DomainError("ng_fock_closed: photon number must be non-negative");
    return std::log(m + 1.0) - m - log_factorial(m) + m * digamma(m + 1.0);
}

double thermal_entropy_closed(double nbar)
{
    if (nbar < 0.0)
        throw DomainError("thermal_entropy_closed: mean photon number must be non-negative");
    if (nbar == 0.0)
        return 0.0;
    return (nbar + 1.0) * std::log(nbar + 1.0) - nbar * std::log(nbar);
}

MeasureReport delta1(const FockDensityMatrix& rho)
{
    const GaussianReference ref = gaussian_reference(rho);
    if (!ref.matrix)
        throw UnsupportedStateError(
            "delta1: the Gaussian reference is not a thermal state; only zero-mean "
            "phase-symmetric states are supported");

    const int n = std::max(rho.cutoff(), ref.matrix->cutoff());
    const FockDensityMatrix rho_p = pad_to_cutoff(rho, n);
    const FockDensityMatrix tau_p = pad_to_cutoff(*ref.matrix, n);

    const double tr_rr = hs_inner(rho_p, rho_p);
    const double tr_tt = hs_inner(tau_p, tau_p);
    const double tr_rt = hs_inner(rho_p, tau_p);

    MeasureReport report;
    report.value = (tr_rr + tr_tt - 2.0 * tr_rt) / (2.0 * tr_rr);
    report.raw_value = report.value;
    report.method = Method::ClosedForm;
    report.est_error = rho.tail_mass() + ref.matrix->tail_mass();
    std::ostringstream os;
    os << "delta1; reference nbar=" << *ref.thermal_nbar;
    report.metadata = os.str();
    return report;
}

MeasureReport delta2(const FockDensityMatrix& rho)
{
    const GaussianReference ref = gaussian_reference(rho);
    if (!ref.matrix)
        throw UnsupportedStateError(
            "delta2: the Gaussian reference is not a thermal state; only zero-mean "
            "phase-symmetric states are supported");

    MeasureReport report;
    report.value = thermal_entropy_closed(*ref.thermal_nbar) - von_neumann_entropy(rho);
    report.raw_value = report.value;
    report.method = Method::ClosedForm;
    report.est_error = rho.tail_mass() + ref.matrix->tail_mass();
    std::ostringstream os;
    os << "delta2; reference nbar=" << *ref.thermal_nbar;
    report.metadata = os.str();
    return report;
}

} // namespace ngq
