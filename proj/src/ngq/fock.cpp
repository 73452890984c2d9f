#include "ngq/fock.hpp"

#include <cmath>
#include <sstream>

#include "ngq/errors.hpp"
#include "ngq/quadrature.hpp"
#include "ngq/special_functions.hpp"

namespace ngq {

namespace {

constexpr double kTailCheck = 1e-10;
constexpr double kTraceSlack = 1e-12;
constexpr double kEigenSlack = 1e-10;

void require(bool ok, const char* msg)
{
    if (!ok)
        throw DomainError(msg);
}

} // namespace

StateFamilySpec StateFamilySpec::fock(int m)
{
    require(m >= 0, "fock: photon number must be non-negative");
    StateFamilySpec s;
    s.family = StateFamily::Fock;
    s.m = m;
    return s;
}

StateFamilySpec StateFamilySpec::thermal(double x)
{
    require(x >= 0.0 && x < 1.0, "thermal: Boltzmann parameter must lie in [0, 1)");
    StateFamilySpec s;
    s.family = StateFamily::Thermal;
    s.x = x;
    return s;
}

StateFamilySpec StateFamilySpec::pats(int m, double x)
{
    require(m >= 0, "pats: added photon number must be non-negative");
    require(x >= 0.0 && x < 1.0, "pats: Boltzmann parameter must lie in [0, 1)");
    StateFamilySpec s;
    s.family = StateFamily::Pats;
    s.m = m;
    s.x = x;
    return s;
}

StateFamilySpec StateFamilySpec::phase_averaged(double beta_abs)
{
    require(beta_abs >= 0.0, "phase_averaged: amplitude modulus must be non-negative");
    StateFamilySpec s;
    s.family = StateFamily::PhaseAveragedCoherent;
    s.beta_abs = beta_abs;
    return s;
}

StateFamilySpec StateFamilySpec::coherent(Complex beta)
{
    StateFamilySpec s;
    s.family = StateFamily::Coherent;
    s.beta = beta;
    s.beta_abs = std::abs(beta);
    return s;
}

std::string StateFamilySpec::describe() const
{
    std::ostringstream os;
    switch (family) {
    case StateFamily::Fock: os << "fock(m=" << m << ")"; break;
    case StateFamily::Thermal: os << "thermal(x=" << x << ")"; break;
    case StateFamily::Pats: os << "pats(m=" << m << ",x=" << x << ")"; break;
    case StateFamily::PhaseAveragedCoherent: os << "phase_averaged(|beta|=" << beta_abs << ")"; break;
    case StateFamily::Coherent: os << "coherent(" << beta.real() << (beta.imag() < 0 ? "" : "+") << beta.imag() << "i)"; break;
    }
    return os.str();
}

FockDensityMatrix::FockDensityMatrix(Eigen::MatrixXcd elements, double tail_mass)
    : elements_(std::move(elements)), tail_mass_(tail_mass)
{
    const auto n = elements_.rows();
    if (n < 1 || elements_.cols() != n)
        throw DomainError("FockDensityMatrix: need a square matrix with cutoff >= 1");
    if (tail_mass_ < 0.0 || !std::isfinite(tail_mass_))
        throw DomainError("FockDensityMatrix: tail mass must be finite and non-negative");

    double max_offdiag = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            if (elements_(i, j) != std::conj(elements_(j, i)))
                throw InvariantViolation("FockDensityMatrix: matrix is not hermitian");
            if (i != j)
                max_offdiag = std::max(max_offdiag, std::abs(elements_(i, j)));
        }
    }
    diagonal_ = (max_offdiag == 0.0);

    const double tr = elements_.trace().real();
    if (std::abs(tr - 1.0) > tail_mass_ + kTraceSlack)
        throw InvariantViolation("FockDensityMatrix: trace deviates from one beyond the tail allowance");

    double min_eig = 0.0;
    if (diagonal_) {
        min_eig = elements_.diagonal().real().minCoeff();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(elements_, Eigen::EigenvaluesOnly);
        min_eig = solver.eigenvalues().minCoeff();
    }
    if (min_eig < -kEigenSlack)
        throw InvariantViolation("FockDensityMatrix: matrix is not positive semidefinite");
}

double FockDensityMatrix::trace() const
{
    return elements_.trace().real();
}

double family_tail_mass(const StateFamilySpec& spec, int cutoff)
{
    if (cutoff < 1)
        return 1.0;
    const int n = cutoff;
    switch (spec.family) {
    case StateFamily::Fock:
        return n > spec.m ? 0.0 : 1.0;
    case StateFamily::Thermal:
        return spec.x == 0.0 ? 0.0 : std::exp(n * std::log(spec.x));
    case StateFamily::Pats: {
        if (n <= spec.m)
            return 1.0;
        if (spec.x == 0.0)
            return 0.0;
        // negative-binomial upper tail as the matching binomial sum:
        // sum_{j=n-m}^{n} C(n, j) x^j (1-x)^{n-j}
        KahanSum s;
        for (int j = n - spec.m; j <= n; ++j)
            s.add(std::exp(log_binomial(n, j) + j * std::log(spec.x)
                           + (n - j) * std::log1p(-spec.x)));
        return s.value();
    }
    case StateFamily::PhaseAveragedCoherent:
    case StateFamily::Coherent: {
        const double mu = spec.beta_abs * spec.beta_abs;
        if (mu == 0.0)
            return 0.0;
        // Poisson upper tail, summed directly in log space
        double term = std::exp(n * std::log(mu) - mu - log_factorial(n));
        KahanSum s;
        for (int k = n; k < n + 100000; ++k) {
            s.add(term);
            term *= mu / (k + 1.0);
            if (term < 1e-18 * (s.value() + 1e-300))
                break;
        }
        return s.value();
    }
    }
    return 1.0;
}

int default_cutoff(const StateFamilySpec& spec, double tail_tol)
{
    if (!(tail_tol > 0.0))
        throw DomainError("default_cutoff: tail tolerance must be positive");
    int lo = std::max(32, spec.m + 1);
    if (family_tail_mass(spec, lo) < tail_tol)
        return lo;
    int hi = lo;
    while (family_tail_mass(spec, hi) >= tail_tol) {
        hi = hi * 2;
        if (hi > 1 << 20)
            throw TruncationError("default_cutoff: no feasible cutoff below 2^20");
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        (family_tail_mass(spec, mid) < tail_tol ? hi : lo) = mid;
    }
    return hi;
}

FockDensityMatrix make_state(const StateFamilySpec& spec, int cutoff)
{
    if (cutoff < 1)
        throw DomainError("make_state: cutoff must be at least 1");
    const double tail = family_tail_mass(spec, cutoff);
    if (!(tail < kTailCheck)) {
        std::ostringstream os;
        os << "make_state: cutoff " << cutoff << " leaves tail mass " << tail
           << " for " << spec.describe() << "; need cutoff >= "
           << default_cutoff(spec, kTailCheck);
        throw TruncationError(os.str());
    }

    const int n = cutoff;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);

    switch (spec.family) {
    case StateFamily::Fock:
        rho(spec.m, spec.m) = 1.0;
        break;
    case StateFamily::Thermal: {
        double p = 1.0 - spec.x;
        for (int k = 0; k < n; ++k) {
            rho(k, k) = p;
            p *= spec.x;
        }
        break;
    }
    case StateFamily::Pats: {
        if (spec.x == 0.0) {
            rho(spec.m, spec.m) = 1.0;
            break;
        }
        // P(k) = (1-x)^{m+1} C(k, m) x^{k-m} for k >= m
        const double lx = std::log(spec.x);
        const double l1mx = std::log1p(-spec.x);
        for (int k = spec.m; k < n; ++k)
            rho(k, k) = std::exp((spec.m + 1) * l1mx + log_binomial(k, spec.m)
                                 + (k - spec.m) * lx);
        break;
    }
    case StateFamily::PhaseAveragedCoherent: {
        const double mu = spec.beta_abs * spec.beta_abs;
        if (mu == 0.0) {
            rho(0, 0) = 1.0;
            break;
        }
        for (int k = 0; k < n; ++k)
            rho(k, k) = std::exp(k * std::log(mu) - mu - log_factorial(k));
        break;
    }
    case StateFamily::Coherent: {
        Eigen::VectorXcd v(n);
        v(0) = std::exp(-0.5 * std::norm(spec.beta));
        for (int k = 1; k < n; ++k)
            v(k) = v(k - 1) * spec.beta / std::sqrt(static_cast<double>(k));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                rho(i, j) = v(i) * std::conj(v(j));
        break;
    }
    }

    return FockDensityMatrix(std::move(rho), tail);
}

FockDensityMatrix make_state(const StateFamilySpec& spec)
{
    return make_state(spec, default_cutoff(spec));
}

Complex normal_moment(const FockDensityMatrix& rho, int dagger_order, int lowering_order)
{
    const int a = dagger_order;
    const int b = lowering_order;
    if (a < 0 || b < 0)
        throw DomainError("normal_moment: orders must be non-negative");

    const int n = rho.cutoff();
    const auto& m = rho.elements();
    // Tr(rho adag^a a^b) = sum_i rho(i, i+a-b) sqrt(i!/(i-b)!) sqrt((i+a-b)!/(i-b)!)
    Complex total = 0.0;
    for (int i = b; i < n; ++i) {
        const int j = i + a - b;
        if (j < 0 || j >= n)
            continue;
        const double lf = 0.5 * (log_factorial(i) + log_factorial(j)) - log_factorial(i - b);
        total += m(i, j) * std::exp(lf);
    }
    return total;
}

Complex anti_normal_moment(const FockDensityMatrix& rho, int p, int q)
{
    if (p < 0 || q < 0)
        throw DomainError("anti_normal_moment: orders must be non-negative");
    if (p + q > rho.cutoff() / 2)
        throw TruncationError("anti_normal_moment: moment order exceeds cutoff/2");

    // a^q adag^p = sum_k k! C(p,k) C(q,k) adag^{p-k} a^{q-k}, term by term exact
    Complex total = 0.0;
    for (int k = 0; k <= std::min(p, q); ++k) {
        const double coeff = std::exp(log_factorial(k) + log_binomial(p, k) + log_binomial(q, k));
        total += coeff * normal_moment(rho, p - k, q - k);
    }
    return total;
}

double von_neumann_entropy(const FockDensityMatrix& rho)
{
    Eigen::VectorXd eigs;
    if (rho.is_diagonal()) {
        eigs = rho.elements().diagonal().real();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.elements(), Eigen::EigenvaluesOnly);
        eigs = solver.eigenvalues();
    }

    KahanSum s;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        double lambda = eigs(i);
        if (lambda < -1e-10 || lambda > 1.0 + 1e-10)
            throw InvariantViolation("von_neumann_entropy: eigenvalue outside [0, 1] beyond tolerance");
        lambda = std::min(std::max(lambda, 0.0), 1.0);
        s.add(-xlogx(lambda));
    }
    return s.value();
}

double hs_inner(const FockDensityMatrix& rho, const FockDensityMatrix& sigma)
{
    if (rho.cutoff() != sigma.cutoff())
        throw DomainError("hs_inner: cutoff mismatch");
    // Tr(rho sigma) = sum_{mn} rho_mn conj(sigma_mn) for hermitian sigma
    const Complex v = rho.elements().cwiseProduct(sigma.elements().conjugate()).sum();
    return v.real();
}

FockDensityMatrix rotate_state(const FockDensityMatrix& rho, double theta)
{
    const int n = rho.cutoff();
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i) {
        out(i, i) = rho.elements()(i, i);
        for (int j = i + 1; j < n; ++j) {
            const Complex phase = std::polar(1.0, -theta * static_cast<double>(i - j));
            const Complex z = rho.elements()(i, j) * phase;
            out(i, j) = z;
            out(j, i) = std::conj(z);
        }
    }
    return FockDensityMatrix(std::move(out), rho.tail_mass());
}

FockDensityMatrix pad_to_cutoff(const FockDensityMatrix& rho, int cutoff)
{
    if (cutoff < rho.cutoff())
        throw DomainError("pad_to_cutoff: target cutoff smaller than current");
    if (cutoff == rho.cutoff())
        return rho;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    out.topLeftCorner(rho.cutoff(), rho.cutoff()) = rho.elements();
    return FockDensityMatrix(std::move(out), rho.tail_mass());
}

} // namespace ngq
