#include "ngq/entropy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ngq/errors.hpp"
#include "ngq/quadrature.hpp"
#include "ngq/special_functions.hpp"

namespace ngq {

namespace {

constexpr int kMaxRefinements = 4;
constexpr double kRefineFactor = 1.6;
constexpr double kProposalInflation = 1.5;
constexpr int kMcExtensions = 3;

double entropy_integrand(double q) { return -xlogx(q); }
double identity_integrand(double q) { return q; }

struct Bounds {
    double radius;     // integration radius about the chosen center
    Complex center;    // polar center (single mode)
    double sigma_max;  // sqrt of the largest covariance eigenvalue
};

Bounds radial_bounds(const QFunctionModel& model, const QuadratureSpec& quad, bool about_mean)
{
    const GaussianMomentSummary fit = gaussian_fit(model);
    const double a = fit.covariance(0, 0);
    const double b = fit.covariance(1, 1);
    const double c = fit.covariance(0, 1);
    const double lam_max = 0.5 * (a + b) + std::sqrt(0.25 * (a - b) * (a - b) + c * c);

    Bounds out;
    out.sigma_max = std::sqrt(lam_max);
    out.center = about_mean ? Complex(fit.mean(0), fit.mean(1)) : Complex(0.0, 0.0);
    const double spread = std::sqrt(a + b) + 12.0 * out.sigma_max;
    const double offset = about_mean ? 0.0 : std::hypot(fit.mean(0), fit.mean(1));
    out.radius = quad.radial_cut > 0.0 ? quad.radial_cut : spread + offset;
    return out;
}

// Iterated refinement of a u-space integral; returns value and error estimate
// (refinement difference plus a crude bound on the discarded [U, inf) tail).
template <typename Integral>
std::pair<double, double> refine(Integral&& once, double tail_est, double target, const char* what)
{
    double prev = once(0);
    for (int level = 1; level <= kMaxRefinements; ++level) {
        const double cur = once(level);
        const double est = std::abs(cur - prev) + tail_est;
        if (est <= target)
            return {cur, est};
        prev = cur;
    }
    std::ostringstream os;
    os << what << ": failed to reach target_abs_err " << target
       << " within the refinement limit";
    throw ConvergenceError(os.str());
}

int scaled_nodes(int base, int level)
{
    double n = base;
    for (int i = 0; i < level; ++i)
        n *= kRefineFactor;
    return static_cast<int>(std::ceil(n));
}

MeasureReport run_radial(const QFunctionModel& model, const QuadratureSpec& quad,
                         double (*transform)(double))
{
    quad.validate();
    if (model.modes() != 1 || !model.phase_symmetric())
        throw DomainError("radial rule: requires a phase-symmetric single-mode model");

    const Bounds bounds = radial_bounds(model, quad, true);
    const double upper = bounds.radius * bounds.radius; // u = r^2

    const auto g = [&](double u) { return transform(model(Complex(std::sqrt(u), 0.0))); };
    const double tail_est = std::abs(g(upper)) * upper;

    const auto once = [&](int level) {
        return integrate_graded(g, upper, scaled_nodes(quad.radial_nodes, level));
    };
    const auto [value, est] = refine(once, tail_est, quad.target_abs_err, "radial rule");

    MeasureReport report;
    report.value = value;
    report.raw_value = value;
    report.method = Method::Radial;
    report.est_error = est;
    report.metadata = model.describe();
    return report;
}

MeasureReport run_grid2d(const QFunctionModel& model, const QuadratureSpec& quad,
                         double (*transform)(double))
{
    quad.validate();
    if (model.modes() != 1)
        throw DomainError("2D rule: requires a single-mode model");

    const Bounds bounds = radial_bounds(model, quad, true);
    const double upper = bounds.radius * bounds.radius;
    const Complex center = bounds.center;

    // polar rule about the Q mean: graded Gauss-Legendre in u = r^2 times a
    // uniform angular average
    const auto once = [&](int level) {
        const int n_theta = 2 * scaled_nodes(quad.grid_nodes_per_axis, level);
        const auto g = [&](double u) {
            const double r = std::sqrt(u);
            KahanSum ang;
            for (int k = 0; k < n_theta; ++k) {
                const double th = 2.0 * std::numbers::pi * k / n_theta;
                ang.add(transform(model(center + std::polar(r, th))));
            }
            return ang.value() / n_theta;
        };
        return integrate_graded(g, upper, scaled_nodes(quad.grid_nodes_per_axis, level));
    };

    const auto tail_probe = [&](double u) {
        const double r = std::sqrt(u);
        double worst = 0.0;
        for (int k = 0; k < 8; ++k)
            worst = std::max(worst, std::abs(transform(model(center + std::polar(r, 0.25 * std::numbers::pi * k)))));
        return worst;
    };
    const double tail_est = tail_probe(upper) * upper;

    const auto [value, est] = refine(once, tail_est, quad.target_abs_err, "2D rule");

    MeasureReport report;
    report.value = value;
    report.raw_value = value;
    report.method = Method::Grid2D;
    report.est_error = est;
    report.metadata = model.describe();
    return report;
}

MeasureReport run_mc(const QFunctionModel& model, const QuadratureSpec& quad,
                     double (*transform)(double))
{
    quad.validate();
    if (model.modes() != 2)
        throw DomainError("Monte Carlo rule: requires a two-mode model");

    const GaussianMomentSummary fit = gaussian_fit(model);
    const Eigen::MatrixXd cov = kProposalInflation * fit.covariance;
    const Eigen::LLT<Eigen::MatrixXd> llt(cov);
    const Eigen::MatrixXd l = llt.matrixL();
    double logdet_l = 0.0;
    for (int i = 0; i < 4; ++i)
        logdet_l += std::log(l(i, i));
    // proposal Lebesgue density: phi(x) = exp(-|z|^2/2) / ((2 pi)^2 det L)
    const double log_phi_norm = -2.0 * std::log(2.0 * std::numbers::pi) - logdet_l;
    const double log_pi2 = 2.0 * std::log(std::numbers::pi);

    KahanSum sum;
    KahanSum sum_sq;
    std::int64_t done = 0;
    std::int64_t budget = quad.mc_samples;

    double mean = 0.0;
    double se = 0.0;
    for (int round = 0; round <= kMcExtensions; ++round) {
        for (std::int64_t i = done; i < budget; ++i) {
            Eigen::Vector4d z;
            counter_normal_pair(quad.mc_seed, 2 * static_cast<std::uint64_t>(i), z(0), z(1));
            counter_normal_pair(quad.mc_seed, 2 * static_cast<std::uint64_t>(i) + 1, z(2), z(3));
            const Eigen::Vector4d x = fit.mean + l * z;
            const Complex alpha[2] = {Complex(x(0), x(1)), Complex(x(2), x(3))};
            const double q = model(std::span<const Complex>(alpha, 2));
            const double f = transform(q);
            const double log_phi = -0.5 * z.squaredNorm() + log_phi_norm;
            const double w = f == 0.0 ? 0.0 : f * std::exp(-log_phi - log_pi2);
            sum.add(w);
            sum_sq.add(w * w);
        }
        done = budget;
        mean = sum.value() / static_cast<double>(done);
        const double var = std::max(0.0, sum_sq.value() / static_cast<double>(done) - mean * mean);
        se = std::sqrt(var / static_cast<double>(done));
        if (se <= quad.target_abs_err)
            break;
        if (round == kMcExtensions) {
            std::ostringstream os;
            os << "Monte Carlo rule: standard error " << se << " above target "
               << quad.target_abs_err << " after " << done << " samples";
            throw ConvergenceError(os.str());
        }
        budget *= 2;
    }

    MeasureReport report;
    report.value = mean;
    report.raw_value = mean;
    report.method = Method::Mc4D;
    report.est_error = se;
    std::ostringstream os;
    os << model.describe() << "; samples=" << done << " seed=" << quad.mc_seed;
    report.metadata = os.str();
    return report;
}

MeasureReport run_dispatch(const QFunctionModel& model, const QuadratureSpec& quad,
                           double (*transform)(double))
{
    if (model.modes() == 1)
        return model.phase_symmetric() ? run_radial(model, quad, transform)
                                       : run_grid2d(model, quad, transform);
    return run_mc(model, quad, transform);
}

} // namespace

void QuadratureSpec::validate() const
{
    if (radial_nodes < 16 || grid_nodes_per_axis < 16 || mc_samples < 16)
        throw DomainError("QuadratureSpec: all node/sample counts must be at least 16");
    if (!(target_abs_err >= 1e-12))
        throw DomainError("QuadratureSpec: target_abs_err must be at least 1e-12");
    if (radial_cut < 0.0)
        throw DomainError("QuadratureSpec: radial_cut must be non-negative");
}

const char* method_name(Method method)
{
    switch (method) {
    case Method::ClosedForm: return "closed_form";
    case Method::Radial: return "radial";
    case Method::Grid2D: return "grid2d";
    case Method::Mc4D: return "mc4d";
    }
    return "unknown";
}

MeasureReport wehrl(const QFunctionModel& model, const QuadratureSpec& quad)
{
    return run_dispatch(model, quad, entropy_integrand);
}

MeasureReport wehrl_radial(const QFunctionModel& model, const QuadratureSpec& quad)
{
    return run_radial(model, quad, entropy_integrand);
}

MeasureReport wehrl_grid2d(const QFunctionModel& model, const QuadratureSpec& quad)
{
    return run_grid2d(model, quad, entropy_integrand);
}

MeasureReport wehrl_mc(const QFunctionModel& model, const QuadratureSpec& quad)
{
    return run_mc(model, quad, entropy_integrand);
}

MeasureReport wehrl_gaussian(const GaussianMomentSummary& fit)
{
    fit.validate();
    const Eigen::LLT<Eigen::MatrixXd> llt(fit.covariance);
    double logdet = 0.0;
    for (int i = 0; i < 2 * fit.modes; ++i)
        logdet += 2.0 * std::log(llt.matrixL()(i, i));

    MeasureReport report;
    report.value = fit.modes * (1.0 + std::numbers::ln2) + 0.5 * logdet;
    report.raw_value = report.value;
    report.method = Method::ClosedForm;
    report.est_error = 0.0;
    report.metadata = "gaussian closed form";
    return report;
}

double wehrl_fock_closed(int m)
{
    if (m < 0)
        throw DomainError("wehrl_fock_closed: photon number must be non-negative");
    return 1.0 + m + log_factorial(m) - m * digamma(m + 1.0);
}

double q_normalization(const QFunctionModel& model, const QuadratureSpec& quad)
{
    return run_dispatch(model, quad, identity_integrand).value;
}

Complex q_moment_quad(const QFunctionModel& model, int p, int q, const QuadratureSpec& quad)
{
    quad.validate();
    if (model.modes() != 1)
        throw DomainError("q_moment_quad: requires a single-mode model");
    if (p < 0 || q < 0)
        throw DomainError("q_moment_quad: orders must be non-negative");

    if (p == q && model.phase_symmetric()) {
        const Bounds bounds = radial_bounds(model, quad, true);
        const double upper = bounds.radius * bounds.radius;
        const auto g = [&](double u) {
            return std::pow(u, p) * model(Complex(std::sqrt(u), 0.0));
        };
        const auto once = [&](int level) {
            return integrate_graded(g, upper, scaled_nodes(quad.radial_nodes, level));
        };
        double prev = once(0);
        for (int level = 1; level <= kMaxRefinements; ++level) {
            const double cur = once(level);
            if (std::abs(cur - prev) <= quad.target_abs_err * std::max(1.0, std::abs(cur)))
                return cur;
            prev = cur;
        }
        throw ConvergenceError("q_moment_quad: radial rule failed to converge");
    }

    // polar rule about the origin (moments are origin-referenced)
    const Bounds bounds = radial_bounds(model, quad, false);
    const double upper = bounds.radius * bounds.radius;
    const auto once = [&](int level) {
        const int nodes = scaled_nodes(quad.grid_nodes_per_axis, level);
        const int n_theta = 2 * nodes;
        const GaussRule base = gauss_legendre(nodes, -1.0, 1.0);
        KahanSum re;
        KahanSum im;
        double hi = upper;
        const int panels = 6;
        for (int panel = 0; panel < panels; ++panel) {
            const double lo = (panel == panels - 1) ? 0.0 : hi / 6.0;
            const double mid = 0.5 * (hi + lo);
            const double halfw = 0.5 * (hi - lo);
            for (int i = 0; i < nodes; ++i) {
                const double u = mid + halfw * base.nodes[i];
                const double w = halfw * base.weights[i] / n_theta;
                const double mag = std::pow(u, 0.5 * (p + q));
                for (int k = 0; k < n_theta; ++k) {
                    const double th = 2.0 * std::numbers::pi * k / n_theta;
                    const Complex z = std::polar(std::sqrt(u), th);
                    const Complex term = std::polar(mag, (q - p) * th) * (w * model(z));
                    re.add(term.real());
                    im.add(term.imag());
                }
            }
            hi = lo;
        }
        return Complex(re.value(), im.value());
    };

    Complex prev = once(0);
    for (int level = 1; level <= kMaxRefinements; ++level) {
        const Complex cur = once(level);
        if (std::abs(cur - prev) <= quad.target_abs_err * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw ConvergenceError("q_moment_quad: polar rule failed to converge");
}

} // namespace ngq
