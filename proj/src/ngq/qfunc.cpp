#include "ngq/qfunc.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ngq/errors.hpp"
#include "ngq/special_functions.hpp"

namespace ngq {

namespace {

constexpr double kPointwiseSlack = 1e-12;
constexpr double kOverflowGuard = 700.0; // |alpha|^2 beyond which Q underflows

Eigen::Matrix2d rotation2(double theta)
{
    Eigen::Matrix2d r;
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

// Realification of a complex linear map: each entry u becomes the 2x2 block
// [[Re u, -Im u], [Im u, Re u]]; orthogonal whenever the map is unitary.
Eigen::MatrixXd realify(const Eigen::Matrix2cd& u)
{
    Eigen::MatrixXd o(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            o(2 * i, 2 * j) = u(i, j).real();
            o(2 * i, 2 * j + 1) = -u(i, j).imag();
            o(2 * i + 1, 2 * j) = u(i, j).imag();
            o(2 * i + 1, 2 * j + 1) = u(i, j).real();
        }
    return o;
}

} // namespace

void GaussianMomentSummary::validate() const
{
    if (modes < 1 || modes > 2)
        throw DomainError("GaussianMomentSummary: only one or two modes supported");
    const int d = 2 * modes;
    if (mean.size() != d || covariance.rows() != d || covariance.cols() != d)
        throw DomainError("GaussianMomentSummary: dimension mismatch");
    if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw InvariantViolation("GaussianMomentSummary: covariance is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() <= 0.0)
        throw InvariantViolation("GaussianMomentSummary: covariance is not positive definite");

    for (int j = 0; j < modes; ++j) {
        const Eigen::Matrix2d block = covariance.block<2, 2>(2 * j, 2 * j);
        if (4.0 * block.determinant() < 1.0 - 1e-9)
            throw InvariantViolation("GaussianMomentSummary: mode block below the vacuum-smoothing bound");
    }
}

struct QFunctionModel::Node {
    Kind kind;
    int modes = 1;

    // leaf payloads
    int m = 0;
    double x = 0.0;
    double beta_abs = 0.0;
    GaussianMomentSummary gauss;
    Eigen::MatrixXd gauss_inv;     // covariance inverse, fixed at construction
    double gauss_lognorm = 0.0;    // -ln(2^n sqrt(det Sigma))
    std::shared_ptr<const FockDensityMatrix> matrix;

    // wrapper payloads
    double lambda = 1.0;
    double theta = 0.0;
    std::vector<Complex> xi;
    Eigen::Matrix2cd unitary;
    std::vector<QFunctionModel> children;
};

QFunctionModel::QFunctionModel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

QFunctionModel::Kind QFunctionModel::kind() const { return node_->kind; }
int QFunctionModel::modes() const { return node_->modes; }

QFunctionModel QFunctionModel::analytic_fock(int m)
{
    if (m < 0)
        throw DomainError("analytic_fock: photon number must be non-negative");
    auto n = std::make_shared<Node>();
    n->kind = Kind::AnalyticFock;
    n->m = m;
    return QFunctionModel(std::move(n));
}

QFunctionModel QFunctionModel::analytic_pats(int m, double x)
{
    if (m < 0)
        throw DomainError("analytic_pats: added photon number must be non-negative");
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("analytic_pats: Boltzmann parameter must lie in [0, 1)");
    auto n = std::make_shared<Node>();
    n->kind = Kind::AnalyticPats;
    n->m = m;
    n->x = x;
    return QFunctionModel(std::move(n));
}

QFunctionModel QFunctionModel::analytic_phase_averaged(double beta_abs)
{
    if (beta_abs < 0.0)
        throw DomainError("analytic_phase_averaged: amplitude modulus must be non-negative");
    auto n = std::make_shared<Node>();
    n->kind = Kind::AnalyticPhaseAveraged;
    n->beta_abs = beta_abs;
    return QFunctionModel(std::move(n));
}

QFunctionModel QFunctionModel::analytic_gaussian(GaussianMomentSummary summary)
{
    summary.validate();
    auto n = std::make_shared<Node>();
    n->kind = Kind::AnalyticGaussian;
    n->modes = summary.modes;
    const Eigen::LLT<Eigen::MatrixXd> llt(summary.covariance);
    double logdet = 0.0;
    for (int i = 0; i < 2 * summary.modes; ++i)
        logdet += 2.0 * std::log(llt.matrixL()(i, i));
    n->gauss_inv = llt.solve(Eigen::MatrixXd::Identity(2 * summary.modes, 2 * summary.modes));
    n->gauss_lognorm = -0.5 * logdet - summary.modes * std::numbers::ln2;
    n->gauss = std::move(summary);
    return QFunctionModel(std::move(n));
}

QFunctionModel QFunctionModel::analytic_thermal(double nbar)
{
    if (nbar < 0.0)
        throw DomainError("analytic_thermal: mean photon number must be non-negative");
    GaussianMomentSummary s;
    s.modes = 1;
    s.mean = Eigen::VectorXd::Zero(2);
    s.covariance = 0.5 * (nbar + 1.0) * Eigen::MatrixXd::Identity(2, 2);
    return analytic_gaussian(std::move(s));
}

QFunctionModel QFunctionModel::from_matrix(FockDensityMatrix rho)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::FromMatrix;
    n->matrix = std::make_shared<FockDensityMatrix>(std::move(rho));
    return QFunctionModel(std::move(n));
}

bool QFunctionModel::phase_symmetric() const
{
    const Node& n = *node_;
    if (n.modes != 1)
        return false;
    switch (n.kind) {
    case Kind::AnalyticFock:
    case Kind::AnalyticPats:
    case Kind::AnalyticPhaseAveraged:
        return true;
    case Kind::AnalyticGaussian:
        return n.gauss.mean.cwiseAbs().maxCoeff() < 1e-14
            && std::abs(n.gauss.covariance(0, 0) - n.gauss.covariance(1, 1)) < 1e-14
            && std::abs(n.gauss.covariance(0, 1)) < 1e-14;
    case Kind::FromMatrix:
        return n.matrix->is_diagonal();
    case Kind::Scaled:
    case Kind::Rotated:
        return n.children[0].phase_symmetric();
    case Kind::Displaced: {
        for (const Complex& z : n.xi)
            if (z != Complex(0.0, 0.0))
                return false;
        return n.children[0].phase_symmetric();
    }
    default:
        return false;
    }
}

std::string QFunctionModel::describe() const
{
    const Node& n = *node_;
    std::ostringstream os;
    switch (n.kind) {
    case Kind::AnalyticFock: os << "fock(m=" << n.m << ")"; break;
    case Kind::AnalyticPats: os << "pats(m=" << n.m << ",x=" << n.x << ")"; break;
    case Kind::AnalyticPhaseAveraged: os << "phase_averaged(|beta|=" << n.beta_abs << ")"; break;
    case Kind::AnalyticGaussian: os << "gaussian(n=" << n.modes << ")"; break;
    case Kind::FromMatrix: os << "matrix(cutoff=" << n.matrix->cutoff() << ")"; break;
    case Kind::Scaled: os << "scaled(lambda=" << n.lambda << "," << n.children[0].describe() << ")"; break;
    case Kind::Displaced:
        os << "displaced(";
        for (const Complex& z : n.xi)
            os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i;";
        os << n.children[0].describe() << ")";
        break;
    case Kind::Rotated: os << "rotated(theta=" << n.theta << "," << n.children[0].describe() << ")"; break;
    case Kind::Product: os << "product(" << n.children[0].describe() << "," << n.children[1].describe() << ")"; break;
    case Kind::LinearMixed: os << "linear_mixed(" << n.children[0].describe() << ")"; break;
    }
    return os.str();
}

double QFunctionModel::eval_unchecked(const Complex* a) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::AnalyticFock: {
        const double u = std::norm(a[0]);
        if (n.m == 0)
            return std::exp(-u);
        if (u == 0.0)
            return 0.0;
        return std::exp(n.m * std::log(u) - log_factorial(n.m) - u);
    }
    case Kind::AnalyticPats: {
        const double lam2 = 1.0 - n.x;
        const double u = std::norm(a[0]);
        if (n.m == 0)
            return lam2 * std::exp(-lam2 * u);
        if (u == 0.0)
            return 0.0;
        return std::exp((n.m + 1) * std::log(lam2) + n.m * std::log(u)
                        - log_factorial(n.m) - lam2 * u);
    }
    case Kind::AnalyticPhaseAveraged: {
        const double r = std::abs(a[0]);
        const double b = n.beta_abs;
        const double d = r - b;
        return bessel_i0_scaled(2.0 * r * b) * std::exp(-d * d);
    }
    case Kind::AnalyticGaussian: {
        const int d = 2 * n.modes;
        Eigen::VectorXd v(d);
        for (int j = 0; j < n.modes; ++j) {
            v(2 * j) = a[j].real() - n.gauss.mean(2 * j);
            v(2 * j + 1) = a[j].imag() - n.gauss.mean(2 * j + 1);
        }
        // normalized under d^{2n}alpha/pi^n: Q = exp(-v' S^-1 v / 2) / (2^n sqrt(det S))
        return std::exp(-0.5 * v.dot(n.gauss_inv * v) + n.gauss_lognorm);
    }
    case Kind::FromMatrix: {
        const double u = std::norm(a[0]);
        if (u > kOverflowGuard)
            return 0.0; // coherent overlap underflows for every cutoff in use
        const FockDensityMatrix& rho = *n.matrix;
        const int nn = rho.cutoff();
        if (rho.is_diagonal()) {
            // Q = sum_k p_k e^{-u} u^k / k!
            double t = std::exp(-u);
            double q = 0.0;
            for (int k = 0; k < nn; ++k) {
                q += rho.elements()(k, k).real() * t;
                t *= u / (k + 1.0);
            }
            return q;
        }
        // Q = v^dag rho v with v_k = alpha^k / sqrt(k!) e^{-u/2}
        Eigen::VectorXcd v(nn);
        v(0) = std::exp(-0.5 * u);
        for (int k = 1; k < nn; ++k)
            v(k) = v(k - 1) * a[0] / std::sqrt(static_cast<double>(k));
        const Complex q = v.dot(rho.elements() * v); // Eigen dot conjugates the left factor
        return q.real();
    }
    case Kind::Scaled: {
        Complex b[2];
        for (int j = 0; j < n.modes; ++j)
            b[j] = n.lambda * a[j];
        double factor = 1.0;
        for (int j = 0; j < n.modes; ++j)
            factor *= n.lambda * n.lambda;
        return factor * n.children[0].eval_unchecked(b);
    }
    case Kind::Displaced: {
        Complex b[2];
        for (int j = 0; j < n.modes; ++j)
            b[j] = a[j] - n.xi[j];
        return n.children[0].eval_unchecked(b);
    }
    case Kind::Rotated: {
        const Complex phase = std::polar(1.0, -n.theta);
        Complex b[2];
        for (int j = 0; j < n.modes; ++j)
            b[j] = phase * a[j];
        return n.children[0].eval_unchecked(b);
    }
    case Kind::Product: {
        double q = n.children[0].eval_unchecked(a);
        q *= n.children[1].eval_unchecked(a + n.children[0].modes());
        return q;
    }
    case Kind::LinearMixed: {
        Complex b[2];
        b[0] = std::conj(n.unitary(0, 0)) * a[0] + std::conj(n.unitary(1, 0)) * a[1];
        b[1] = std::conj(n.unitary(0, 1)) * a[0] + std::conj(n.unitary(1, 1)) * a[1];
        return n.children[0].eval_unchecked(b);
    }
    }
    throw InvariantViolation("q_eval: unknown node kind");
}

double QFunctionModel::operator()(Complex alpha) const
{
    return (*this)(std::span<const Complex>(&alpha, 1));
}

double QFunctionModel::operator()(std::span<const Complex> alpha) const
{
    if (static_cast<int>(alpha.size()) != node_->modes)
        throw DomainError("q_eval: argument length does not match the model's mode count");
    const double q = eval_unchecked(alpha.data());
    if (q > 1.0 + kPointwiseSlack || q < -kPointwiseSlack)
        throw InvariantViolation("q_eval: value escaped [0, 1]");
    return q < 0.0 ? 0.0 : q; // roundoff-negative values are flushed to zero
}

double q_eval(const QFunctionModel& model, std::span<const Complex> alpha)
{
    return model(alpha);
}

QFunctionModel scale(const QFunctionModel& model, double lambda)
{
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw DomainError("scale: lambda must lie in (0, 1]");
    auto n = std::make_shared<QFunctionModel::Node>();
    n->kind = QFunctionModel::Kind::Scaled;
    n->modes = model.modes();
    n->lambda = lambda;
    n->children.push_back(model);
    return QFunctionModel(std::move(n));
}

QFunctionModel displace(const QFunctionModel& model, std::span<const Complex> xi)
{
    if (static_cast<int>(xi.size()) != model.modes())
        throw DomainError("displace: displacement length does not match the mode count");
    auto n = std::make_shared<QFunctionModel::Node>();
    n->kind = QFunctionModel::Kind::Displaced;
    n->modes = model.modes();
    n->xi.assign(xi.begin(), xi.end());
    n->children.push_back(model);
    return QFunctionModel(std::move(n));
}

QFunctionModel displace(const QFunctionModel& model, Complex xi)
{
    return displace(model, std::span<const Complex>(&xi, 1));
}

QFunctionModel rotate(const QFunctionModel& model, double theta)
{
    auto n = std::make_shared<QFunctionModel::Node>();
    n->kind = QFunctionModel::Kind::Rotated;
    n->modes = model.modes();
    n->theta = theta;
    n->children.push_back(model);
    return QFunctionModel(std::move(n));
}

QFunctionModel tensor(const QFunctionModel& a, const QFunctionModel& b)
{
    if (a.modes() + b.modes() > 2)
        throw DomainError("tensor: at most two modes supported");
    auto n = std::make_shared<QFunctionModel::Node>();
    n->kind = QFunctionModel::Kind::Product;
    n->modes = a.modes() + b.modes();
    n->children.push_back(a);
    n->children.push_back(b);
    return QFunctionModel(std::move(n));
}

QFunctionModel linear_mix(const QFunctionModel& model, const Eigen::Matrix2cd& unitary)
{
    if (model.modes() != 2)
        throw DomainError("linear_mix: requires a two-mode model");
    const Eigen::Matrix2cd dev = unitary.adjoint() * unitary - Eigen::Matrix2cd::Identity();
    if (dev.cwiseAbs().maxCoeff() > 1e-12)
        throw DomainError("linear_mix: matrix is not unitary");
    auto n = std::make_shared<QFunctionModel::Node>();
    n->kind = QFunctionModel::Kind::LinearMixed;
    n->modes = 2;
    n->unitary = unitary;
    n->children.push_back(model);
    return QFunctionModel(std::move(n));
}

QFunctionModel beamsplit(const QFunctionModel& a, const QFunctionModel& b,
                         const Eigen::Matrix2cd& unitary)
{
    if (a.modes() != 1 || b.modes() != 1)
        throw DomainError("beamsplit: both inputs must be single-mode");
    return linear_mix(tensor(a, b), unitary);
}

Eigen::Matrix2cd beamsplitter_5050()
{
    const double c = std::numbers::sqrt2 / 2.0;
    Eigen::Matrix2cd u;
    u << c, c, -c, c;
    return u;
}

GaussianMomentSummary gaussian_fit(const QFunctionModel& model)
{
    using Kind = QFunctionModel::Kind;
    const QFunctionModel::Node& n = *model.node_;

    GaussianMomentSummary out;
    out.modes = n.modes;

    const auto isotropic = [](double second_moment) {
        GaussianMomentSummary s;
        s.modes = 1;
        s.mean = Eigen::VectorXd::Zero(2);
        s.covariance = 0.5 * second_moment * Eigen::MatrixXd::Identity(2, 2);
        return s;
    };

    switch (n.kind) {
    case Kind::AnalyticFock:
        return isotropic(n.m + 1.0);
    case Kind::AnalyticPats:
        return isotropic((n.m + 1.0) / (1.0 - n.x));
    case Kind::AnalyticPhaseAveraged:
        return isotropic(1.0 + n.beta_abs * n.beta_abs);
    case Kind::AnalyticGaussian:
        return n.gauss;
    case Kind::FromMatrix: {
        const FockDensityMatrix& rho = *n.matrix;
        const Complex a1 = normal_moment(rho, 0, 1);            // <alpha>
        const Complex a2 = normal_moment(rho, 0, 2);            // <alpha^2>
        const double aa = anti_normal_moment(rho, 1, 1).real(); // <|alpha|^2>
        const double ex = a1.real();
        const double ey = a1.imag();
        const double exx = 0.5 * (a2.real() + aa);
        const double eyy = 0.5 * (aa - a2.real());
        const double exy = 0.5 * a2.imag();
        out.mean = Eigen::VectorXd(2);
        out.mean << ex, ey;
        out.covariance = Eigen::MatrixXd(2, 2);
        out.covariance << exx - ex * ex, exy - ex * ey, exy - ex * ey, eyy - ey * ey;
        return out;
    }
    case Kind::Scaled: {
        GaussianMomentSummary f = gaussian_fit(n.children[0]);
        f.mean /= n.lambda;
        f.covariance /= n.lambda * n.lambda;
        return f;
    }
    case Kind::Displaced: {
        GaussianMomentSummary f = gaussian_fit(n.children[0]);
        for (int j = 0; j < n.modes; ++j) {
            f.mean(2 * j) += n.xi[j].real();
            f.mean(2 * j + 1) += n.xi[j].imag();
        }
        return f;
    }
    case Kind::Rotated: {
        GaussianMomentSummary f = gaussian_fit(n.children[0]);
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(2 * n.modes, 2 * n.modes);
        for (int j = 0; j < n.modes; ++j)
            r.block<2, 2>(2 * j, 2 * j) = rotation2(n.theta);
        f.mean = r * f.mean;
        f.covariance = r * f.covariance * r.transpose();
        return f;
    }
    case Kind::Product: {
        const GaussianMomentSummary fa = gaussian_fit(n.children[0]);
        const GaussianMomentSummary fb = gaussian_fit(n.children[1]);
        const int da = 2 * fa.modes;
        const int db = 2 * fb.modes;
        out.mean = Eigen::VectorXd(da + db);
        out.mean << fa.mean, fb.mean;
        out.covariance = Eigen::MatrixXd::Zero(da + db, da + db);
        out.covariance.topLeftCorner(da, da) = fa.covariance;
        out.covariance.bottomRightCorner(db, db) = fb.covariance;
        return out;
    }
    case Kind::LinearMixed: {
        GaussianMomentSummary f = gaussian_fit(n.children[0]);
        const Eigen::MatrixXd o = realify(n.unitary);
        f.mean = o * f.mean;
        f.covariance = o * f.covariance * o.transpose();
        return f;
    }
    }
    throw InvariantViolation("gaussian_fit: unknown node kind");
}

} // namespace ngq
