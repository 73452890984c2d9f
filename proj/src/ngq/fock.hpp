#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace ngq {

using Complex = std::complex<double>;

enum class StateFamily {
    Fock,
    Thermal,
    Pats, // photon-added thermal
    PhaseAveragedCoherent,
    Coherent,
};

// One member of the state catalog. Construct through the named factories,
// which validate parameter ranges.
struct StateFamilySpec {
    StateFamily family = StateFamily::Fock;
    int m = 0;             // photon number (Fock) / added photons (PATS)
    double x = 0.0;        // Boltzmann parameter in [0, 1)
    double beta_abs = 0.0; // coherent amplitude modulus
    Complex beta{0.0, 0.0};

    static StateFamilySpec fock(int m);
    static StateFamilySpec thermal(double x);
    static StateFamilySpec pats(int m, double x);
    static StateFamilySpec phase_averaged(double beta_abs);
    static StateFamilySpec coherent(Complex beta);

    std::string describe() const;
};

// Single-mode density operator truncated to the basis |0>..|cutoff-1>.
// Construction checks hermiticity, trace (within tail_mass + 1e-12 of one)
// and positivity (smallest eigenvalue >= -1e-10). Immutable afterwards.
class FockDensityMatrix {
public:
    FockDensityMatrix(Eigen::MatrixXcd elements, double tail_mass);

    int cutoff() const { return static_cast<int>(elements_.rows()); }
    const Eigen::MatrixXcd& elements() const { return elements_; }
    double tail_mass() const { return tail_mass_; }
    double trace() const;
    bool is_diagonal() const { return diagonal_; }

private:
    Eigen::MatrixXcd elements_;
    double tail_mass_ = 0.0;
    bool diagonal_ = false;
};

// Probability mass the truncation at `cutoff` discards, from the family's
// analytic number distribution (geometric / negative-binomial / Poisson).
double family_tail_mass(const StateFamilySpec& spec, int cutoff);

// Smallest cutoff (at least 32) whose analytic tail mass is below tail_tol.
int default_cutoff(const StateFamilySpec& spec, double tail_tol = 1e-10);

FockDensityMatrix make_state(const StateFamilySpec& spec, int cutoff);
FockDensityMatrix make_state(const StateFamilySpec& spec); // auto cutoff

// Tr(rho adag^a a^b); exact under truncation for states with negligible
// mass near the cutoff.
Complex normal_moment(const FockDensityMatrix& rho, int dagger_order, int lowering_order);

// Tr(rho a^q adag^p), the order-(p,q) moment of the state's Q function.
// Requires p + q <= cutoff / 2.
Complex anti_normal_moment(const FockDensityMatrix& rho, int p, int q);

// -sum lambda_i ln lambda_i over the spectrum, eigenvalues clamped to [0, 1]
// when within 1e-10 of that interval.
double von_neumann_entropy(const FockDensityMatrix& rho);

// Tr(rho sigma); requires equal cutoffs.
double hs_inner(const FockDensityMatrix& rho, const FockDensityMatrix& sigma);

// exp(-i theta n) rho exp(i theta n): entrywise phase e^{-i theta (m-n)}.
FockDensityMatrix rotate_state(const FockDensityMatrix& rho, double theta);

// Embed into a larger basis (zero padding); exact.
FockDensityMatrix pad_to_cutoff(const FockDensityMatrix& rho, int cutoff);

} // namespace ngq
