#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ngq/fock.hpp"

namespace ngq {

// First and second moments of a Q distribution in (Re a_1, Im a_1, ...)
// coordinates under the measure d^{2n}alpha / pi^n.
struct GaussianMomentSummary {
    int modes = 1;
    Eigen::VectorXd mean;       // length 2n
    Eigen::MatrixXd covariance; // 2n x 2n, symmetric positive definite

    // Symmetry, positivity and the per-mode physicality bound
    // det(2 Sigma_mode) >= 1 - 1e-9 (Q is a vacuum-smoothed distribution).
    void validate() const;
};

// Evaluatable Q-function model: analytic catalog members, matrix-backed
// states, and lazy shape-preserving transform wrappers. Immutable
// evaluation trees; evaluation is pure and reentrant.
class QFunctionModel {
public:
    enum class Kind {
        AnalyticFock,
        AnalyticPats,
        AnalyticPhaseAveraged,
        AnalyticGaussian,
        FromMatrix,
        Scaled,
        Displaced,
        Rotated,
        Product,
        LinearMixed,
    };

    static QFunctionModel analytic_fock(int m);
    static QFunctionModel analytic_pats(int m, double x);
    static QFunctionModel analytic_phase_averaged(double beta_abs);
    static QFunctionModel analytic_gaussian(GaussianMomentSummary summary);
    static QFunctionModel analytic_thermal(double nbar);
    static QFunctionModel vacuum() { return analytic_fock(0); }
    static QFunctionModel from_matrix(FockDensityMatrix rho);

    Kind kind() const;
    int modes() const;
    // Circular symmetry about the origin (single mode only); picks the
    // radial entropy engine.
    bool phase_symmetric() const;
    std::string describe() const;

    double operator()(Complex alpha) const;
    double operator()(std::span<const Complex> alpha) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit QFunctionModel(std::shared_ptr<const Node> node);
    double eval_unchecked(const Complex* alpha) const;

    friend QFunctionModel scale(const QFunctionModel&, double);
    friend QFunctionModel displace(const QFunctionModel&, std::span<const Complex>);
    friend QFunctionModel rotate(const QFunctionModel&, double);
    friend QFunctionModel tensor(const QFunctionModel&, const QFunctionModel&);
    friend QFunctionModel linear_mix(const QFunctionModel&, const Eigen::Matrix2cd&);
    friend GaussianMomentSummary gaussian_fit(const QFunctionModel&);
};

double q_eval(const QFunctionModel& model, std::span<const Complex> alpha);

// Q'(alpha) = lambda^{2n} Q(lambda alpha); requires 0 < lambda <= 1.
QFunctionModel scale(const QFunctionModel& model, double lambda);

// Q'(alpha) = Q(alpha - xi).
QFunctionModel displace(const QFunctionModel& model, std::span<const Complex> xi);
QFunctionModel displace(const QFunctionModel& model, Complex xi);

// Q'(alpha) = Q(e^{-i theta} alpha).
QFunctionModel rotate(const QFunctionModel& model, double theta);

// Two-mode product Q_a(alpha_1) Q_b(alpha_2).
QFunctionModel tensor(const QFunctionModel& a, const QFunctionModel& b);

// Q'(alpha) = Q(U^dag alpha) on a two-mode model; U unitary within 1e-12.
QFunctionModel linear_mix(const QFunctionModel& model, const Eigen::Matrix2cd& unitary);

// Passive two-port acting on single-mode inputs a and b.
QFunctionModel beamsplit(const QFunctionModel& a, const QFunctionModel& b,
                         const Eigen::Matrix2cd& unitary);
Eigen::Matrix2cd beamsplitter_5050();

// Mean and covariance of the model's Q distribution, propagated exactly
// through the transform tree from operator moments / closed forms.
GaussianMomentSummary gaussian_fit(const QFunctionModel& model);

} // namespace ngq
