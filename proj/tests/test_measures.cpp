#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ngq/errors.hpp"
#include "ngq/measures.hpp"
#include "ngq/quadrature.hpp"
#include "ngq/special_functions.hpp"

using namespace ngq;
using M = QFunctionModel;
using S = StateFamilySpec;

TEST_CASE("the Gaussian reference of the catalog is thermal")
{
    const GaussianReference fock = gaussian_reference(M::analytic_fock(3));
    REQUIRE(fock.thermal_nbar.has_value());
    CHECK(*fock.thermal_nbar == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(fock.matrix.has_value());
    CHECK(fock.matrix->is_diagonal());

    const GaussianReference pats = gaussian_reference(M::analytic_pats(1, 0.4));
    CHECK(*pats.thermal_nbar == doctest::Approx((1.0 + 0.4) / 0.6).epsilon(1e-12));

    const GaussianReference pac = gaussian_reference(M::analytic_phase_averaged(1.3));
    CHECK(*pac.thermal_nbar == doctest::Approx(1.69).epsilon(1e-12));

    // consistency between the summary and the attached reference
    CHECK(2.0 * pats.summary.covariance(0, 0) - 1.0
          == doctest::Approx(*pats.thermal_nbar).epsilon(1e-10));
}

TEST_CASE("states outside the phase-symmetric class get no thermal reference")
{
    CHECK(!gaussian_reference(displace(M::vacuum(), Complex(0.4, 0.0))).thermal_nbar);
    CHECK(!gaussian_reference(make_state(S::coherent({0.4, 0.1}), 40)).thermal_nbar);
    CHECK(gaussian_reference(make_state(S::pats(1, 0.3), 64)).thermal_nbar.has_value());
}

TEST_CASE("the measure vanishes on Gaussian states")
{
    const QuadratureSpec quad;
    const std::vector<M> gaussians = {
        M::vacuum(),
        M::analytic_thermal(1.0),
        displace(M::vacuum(), Complex(0.8, -0.3)),
        rotate(displace(M::analytic_thermal(0.5), Complex(1.0, 0.2)), 0.4),
    };
    for (const M& model : gaussians) {
        const MeasureReport report = ng_measure(model, quad);
        CHECK(std::abs(report.value) < 1e-8);
        CHECK(report.value >= -2.0 * report.est_error);
    }
}

TEST_CASE("Fock-state measure matches its closed form")
{
    const QuadratureSpec quad;
    for (int m = 0; m <= 15; ++m) {
        const MeasureReport report = ng_measure(M::analytic_fock(m), quad);
        CHECK(std::abs(report.value - ng_fock_closed(m)) < 1e-6);
    }
}

TEST_CASE("closed-form anchors of the Fock measure")
{
    CHECK(ng_fock_closed(0) == 0.0);
    CHECK(ng_fock_closed(1) == doctest::Approx(0.11593151565841242).epsilon(1e-13));
    CHECK(ng_fock_closed(2) == doctest::Approx(0.2510337783050989).epsilon(1e-13));
    CHECK(ng_fock_closed(3) == doctest::Approx(0.36288789718723624).epsilon(1e-13));
    for (int m = 0; m < 50; ++m)
        CHECK(ng_fock_closed(m + 1) > ng_fock_closed(m));
    CHECK_THROWS_AS(ng_fock_closed(-1), DomainError);
}

TEST_CASE("photon-added thermal states share the Fock measure")
{
    const QuadratureSpec quad;
    for (int m : {1, 2}) {
        for (double x : {0.0, 0.3, 0.6, 0.9}) {
            const MeasureReport report = ng_measure(M::analytic_pats(m, x), quad);
            CHECK(std::abs(report.value - ng_fock_closed(m)) < 1e-6);
        }
    }
}

TEST_CASE("thermal reference entropy matches the truncated spectrum sum")
{
    for (double nbar : {0.5, 1.0, 3.0}) {
        const double x = nbar / (nbar + 1.0);
        const S spec = S::thermal(x);
        const FockDensityMatrix rho = make_state(spec, default_cutoff(spec, 1e-15));
        CHECK(thermal_entropy_closed(nbar)
              == doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
    }
    CHECK(thermal_entropy_closed(0.0) == 0.0);
    CHECK_THROWS_AS(thermal_entropy_closed(-0.5), DomainError);
}

TEST_CASE("Hilbert-Schmidt measure on the reference anchors")
{
    CHECK(std::abs(delta1(make_state(S::thermal(0.4), 64)).value) < 1e-12);
    CHECK(delta1(make_state(S::fock(1), 34)).value
          == doctest::Approx(5.0 / 12.0).epsilon(1e-10));

    const MeasureReport large = delta1(make_state(S::fock(50), 64));
    CHECK(std::abs(large.value - 0.5) < 0.02);

    CHECK_THROWS_AS(delta1(make_state(S::coherent({0.5, 0.1}), 40)), UnsupportedStateError);
}

TEST_CASE("Hilbert-Schmidt measure against an independent trace computation")
{
    const int m = 1;
    const double x = 0.5;
    const FockDensityMatrix rho = make_state(S::pats(m, x), 160);

    // direct traces from the closed-form number distributions
    const double nbar = (m + x) / (1.0 - x);
    const double xt = nbar / (nbar + 1.0);
    KahanSum tr_rr, tr_rt;
    for (int k = 0; k < 2000; ++k) {
        const double pk = k >= m
            ? std::exp((m + 1) * std::log1p(-x) + log_binomial(k, m) + (k - m) * std::log(x))
            : 0.0;
        const double tk = std::exp(std::log1p(-xt) + k * std::log(xt));
        tr_rr.add(pk * pk);
        tr_rt.add(pk * tk);
    }
    const double tr_tt = 1.0 / (2.0 * nbar + 1.0);
    const double expected = (tr_rr.value() + tr_tt - 2.0 * tr_rt.value()) / (2.0 * tr_rr.value());

    CHECK(delta1(rho).value == doctest::Approx(expected).epsilon(1e-10));
    CHECK(delta1(rho).value == doctest::Approx(0.2377142857142856).epsilon(1e-9));
}

TEST_CASE("relative-entropy measure anchors")
{
    CHECK(std::abs(delta2(make_state(S::thermal(0.4), 64)).value) < 1e-10);
    CHECK(delta2(make_state(S::fock(1), 34)).value
          == doctest::Approx(2.0 * std::numbers::ln2).epsilon(1e-10));
    CHECK(delta2(make_state(S::pats(1, 0.5), 160)).value
          == doctest::Approx(0.3698936771052441).epsilon(1e-9));
    CHECK_THROWS_AS(delta2(make_state(S::coherent({0.5, 0.1}), 40)), UnsupportedStateError);
}

TEST_CASE("for pure states the relative-entropy measure is blind beyond the reference")
{
    for (int m : {1, 2, 5}) {
        const FockDensityMatrix rho = make_state(S::fock(m), 64);
        const MeasureReport report = delta2(rho);
        CHECK(std::abs(report.value - thermal_entropy_closed(m)) < 1e-14);
    }
}

TEST_CASE("the comparison measures vary where the shape criterion demands constancy")
{
    double d1_min = 1e9, d1_max = -1e9, d2_min = 1e9, d2_max = -1e9, n_min = 1e9, n_max = -1e9;
    const QuadratureSpec quad;
    for (int i = 0; i <= 9; ++i) {
        const double x = 0.1 * i;
        const S spec = S::pats(1, x);
        const FockDensityMatrix rho = make_state(spec, default_cutoff(spec));
        d1_min = std::min(d1_min, delta1(rho).value);
        d1_max = std::max(d1_max, delta1(rho).value);
        d2_min = std::min(d2_min, delta2(rho).value);
        d2_max = std::max(d2_max, delta2(rho).value);
        const double n = ng_measure(M::analytic_pats(1, x), quad).value;
        n_min = std::min(n_min, n);
        n_max = std::max(n_max, n);
    }
    CHECK(d1_max - d1_min > 0.01);
    CHECK(d2_max - d2_min > 0.01);
    CHECK(n_max - n_min < 1e-6);
}

TEST_CASE("the measure is additive on product states")
{
    const QuadratureSpec quad;
    const M f1 = M::analytic_fock(1);
    const M p13 = M::analytic_pats(1, 0.3);
    const double n_f1 = ng_measure(f1, quad).value;
    const double n_p13 = ng_measure(p13, quad).value;

    const MeasureReport both = ng_measure(tensor(f1, p13), ngqtest::mc_quad(400000, 11));
    CHECK(std::abs(both.value - n_f1 - n_p13) < 1e-2);

    const MeasureReport twice = ng_measure(tensor(f1, f1), ngqtest::mc_quad(400000, 12));
    CHECK(std::abs(twice.value - 2.0 * n_f1) < 1e-2);
}

TEST_CASE("attaching a Gaussian mode does not change the measure")
{
    const QuadratureSpec quad;
    const M f1 = M::analytic_fock(1);
    const double n_f1 = ng_measure(f1, quad).value;
    const MeasureReport with_thermal =
        ng_measure(tensor(f1, M::analytic_thermal(1.0)), ngqtest::mc_quad(400000, 13));
    CHECK(std::abs(with_thermal.value - n_f1) < 1e-2);
}

TEST_CASE("a beam splitter with a coherent ancilla preserves the measure")
{
    const QuadratureSpec quad;
    const double expected = ng_fock_closed(1);

    const M out = beamsplit(M::analytic_pats(1, 0.4), M::vacuum(), beamsplitter_5050());
    const MeasureReport r5050 = ng_measure(out, ngqtest::mc_quad(600000, 14));
    CHECK(std::abs(r5050.value - expected) < 1e-2);

    // convention independence: an asymmetric two-port
    Eigen::Matrix2cd u;
    u << Complex(0.6, 0.0), Complex(0.0, 0.8), Complex(0.0, 0.8), Complex(0.6, 0.0);
    const M out2 = beamsplit(M::analytic_pats(1, 0.4), M::vacuum(), u);
    const MeasureReport r_other = ng_measure(out2, ngqtest::mc_quad(600000, 15));
    CHECK(std::abs(r_other.value - expected) < 1e-2);
}

TEST_CASE("reports expose clamping honestly")
{
    const QuadratureSpec quad;
    const MeasureReport report = ng_measure(M::vacuum(), quad);
    CHECK(report.value >= -2.0 * report.est_error);
    CHECK(report.value >= report.raw_value);
    CHECK(report.est_error >= 0.0);
}
