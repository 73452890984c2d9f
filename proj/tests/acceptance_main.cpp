// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failures. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ngq/cumulants.hpp"
#include "ngq/entropy.hpp"
#include "ngq/measures.hpp"
#include "ngq/qfunc.hpp"
#include "ngq/special_functions.hpp"

using namespace ngq;
using M = QFunctionModel;
using S = StateFamilySpec;

namespace {

struct Criterion {
    std::string id;
    std::string name;
    std::function<bool(std::string&)> run;
};

std::string fmt(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::pair<std::string, M>> invariance_catalog()
{
    std::vector<std::pair<std::string, M>> out;
    out.emplace_back("vacuum", M::vacuum());
    out.emplace_back("fock(1)", M::analytic_fock(1));
    out.emplace_back("fock(3)", M::analytic_fock(3));
    out.emplace_back("thermal(nbar=1)", M::analytic_thermal(1.0));
    out.emplace_back("pats(1,0.3)", M::analytic_pats(1, 0.3));
    out.emplace_back("pats(2,0.5)", M::analytic_pats(2, 0.5));
    out.emplace_back("phase_averaged(1)", M::analytic_phase_averaged(1.0));
    out.emplace_back("coherent(0.8-0.3i)", displace(M::vacuum(), Complex(0.8, -0.3)));
    return out;
}

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    const QuadratureSpec quad; // deterministic engines at their defaults

    std::vector<Criterion> criteria;

    criteria.push_back({"1", "Fock Wehrl entropy matches the digamma closed form", [&](std::string& d) {
        double worst = 0.0;
        for (int m = 0; m <= 15; ++m)
            worst = std::max(worst,
                             std::abs(wehrl(M::analytic_fock(m), quad).value - wehrl_fock_closed(m)));
        const double vacuum_dev = std::abs(wehrl(M::vacuum(), quad).value - 1.0);
        d = "max dev " + fmt(worst) + " (tol 1e-7), vacuum dev " + fmt(vacuum_dev)
          + " (tol 1e-9)";
        return worst < 1e-7 && vacuum_dev < 1e-9;
    }});

    criteria.push_back({"2a", "Fock measure matches its closed form", [&](std::string& d) {
        double worst = 0.0;
        for (int m = 0; m <= 15; ++m)
            worst = std::max(worst,
                             std::abs(ng_measure(M::analytic_fock(m), quad).value - ng_fock_closed(m)));
        const double anchor = std::abs(ng_fock_closed(1) - 0.11593151565841242);
        d = "max dev " + fmt(worst) + " (tol 1e-6), m=1 anchor dev " + fmt(anchor);
        return worst < 1e-6 && anchor < 1e-9;
    }});

    criteria.push_back({"2b", "Fock measure increases strictly with photon number", [&](std::string& d) {
        bool increasing = true;
        for (int m = 0; m < 50; ++m)
            increasing = increasing && (ng_fock_closed(m + 1) > ng_fock_closed(m));
        double measured_prev = ng_measure(M::vacuum(), quad).value;
        for (int m = 1; m <= 15 && increasing; ++m) {
            const double v = ng_measure(M::analytic_fock(m), quad).value;
            increasing = increasing && (v > measured_prev);
            measured_prev = v;
        }
        d = increasing ? "monotone through m=50" : "monotonicity broken";
        return increasing;
    }});

    criteria.push_back({"2c", "Fock measure magnitude tracks ln(m+1) by m=50", [&](std::string& d) {
        const double value = ng_fock_closed(50);
        const double target = std::log(51.0);
        const double rel = std::abs(value - target) / target;
        d = "N(50)=" + fmt(value) + " vs ln(51)=" + fmt(target) + ", rel dev " + fmt(rel)
          + " (tol 0.10)";
        return rel <= 0.10;
    }});

    criteria.push_back({"3", "photon-added thermal measure is flat in temperature", [&](std::string& d) {
        double worst_sd = 0.0;
        double worst_anchor = 0.0;
        for (int m = 1; m <= 3; ++m) {
            std::vector<double> values;
            for (int i = 0; i <= 9; ++i)
                values.push_back(ng_measure(M::analytic_pats(m, 0.1 * i), quad).value);
            double mean = 0.0;
            for (double v : values)
                mean += v;
            mean /= values.size();
            double var = 0.0;
            for (double v : values) {
                var += (v - mean) * (v - mean);
                worst_anchor = std::max(worst_anchor, std::abs(v - ng_fock_closed(m)));
            }
            worst_sd = std::max(worst_sd, std::sqrt(var / values.size()));
        }
        d = "max stddev " + fmt(worst_sd) + ", max anchor dev " + fmt(worst_anchor)
          + " (tol 1e-5)";
        return worst_sd < 1e-5 && worst_anchor < 1e-5;
    }});

    criteria.push_back({"4", "Hilbert-Schmidt measure anchors and non-constancy", [&](std::string& d) {
        const double v1 = delta1(make_state(S::fock(1), 34)).value;
        const double dev1 = std::abs(v1 - 5.0 / 12.0);
        const double v50 = delta1(make_state(S::fock(50), 64)).value;
        const double dev50 = std::abs(v50 - 0.5);
        double lo = 1e9, hi = -1e9;
        for (int i = 0; i <= 9; ++i) {
            const S spec = S::pats(1, 0.1 * i);
            const double v = delta1(make_state(spec, default_cutoff(spec))).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        d = "fock(1) dev " + fmt(dev1) + " (tol 1e-10), fock(50) dev " + fmt(dev50)
          + " (tol 0.02), spread " + fmt(hi - lo) + " (min 0.01)";
        return dev1 < 1e-10 && dev50 < 0.02 && (hi - lo) > 0.01;
    }});

    criteria.push_back({"5", "relative-entropy measure anchors and non-constancy", [&](std::string& d) {
        const double v1 = delta2(make_state(S::fock(1), 34)).value;
        const double dev1 = std::abs(v1 - 2.0 * std::numbers::ln2);
        double lo = 1e9, hi = -1e9;
        for (int i = 0; i <= 9; ++i) {
            const S spec = S::pats(1, 0.1 * i);
            const double v = delta2(make_state(spec, default_cutoff(spec))).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double pure_dev = 0.0;
        for (int m : {1, 2, 5}) {
            const double v = delta2(make_state(S::fock(m), 64)).value;
            pure_dev = std::max(pure_dev, std::abs(v - thermal_entropy_closed(m)));
        }
        d = "fock(1) dev " + fmt(dev1) + " (tol 1e-10), spread " + fmt(hi - lo)
          + " (min 0.01), pure-state dev " + fmt(pure_dev);
        return dev1 < 1e-10 && (hi - lo) > 0.01 && pure_dev < 1e-14;
    }});

    criteria.push_back({"6", "entropy and measure invariance under shape transforms", [&](std::string& d) {
        double worst_hw = 0.0;
        double worst_ng = 0.0;
        const Complex xi(1.0, 0.5);
        for (const auto& [name, model] : invariance_catalog()) {
            const double hw = wehrl(model, quad).value;
            const double ng = ng_measure(model, quad).value;
            for (double lambda : {0.5, 0.8}) {
                const M scaled = scale(model, lambda);
                worst_hw = std::max(worst_hw,
                                    std::abs(wehrl(scaled, quad).value - hw + 2.0 * std::log(lambda)));
                worst_ng = std::max(worst_ng, std::abs(ng_measure(scaled, quad).value - ng));
            }
            worst_ng = std::max(worst_ng,
                                std::abs(ng_measure(displace(model, xi), quad).value - ng));
            worst_ng = std::max(worst_ng,
                                std::abs(ng_measure(rotate(model, std::numbers::pi / 3), quad).value - ng));
        }
        d = "max scaling-law dev " + fmt(worst_hw) + ", max measure dev " + fmt(worst_ng)
          + " (tol 2e-6)";
        return worst_hw < 2e-6 && worst_ng < 2e-6;
    }});

    criteria.push_back({"7", "higher cumulants ignore the ordering parameter", [&](std::string& d) {
        const S pats_spec = S::pats(1, 0.3);
        const SInvarianceReport report =
            s_invariance_report(make_state(pats_spec, default_cutoff(pats_spec, 1e-15)), 4);

        double worst_gaussian = 0.0;
        const std::vector<FockDensityMatrix> gaussians = {
            make_state(S::fock(0), 64),
            make_state(S::thermal(0.5), 192),
            make_state(S::coherent({0.8, -0.3}), 96),
        };
        for (const FockDensityMatrix& rho : gaussians)
            for (double s : {-1.0, 0.0, 1.0}) {
                const CumulantTable gamma = moments_to_cumulants(s_ordered_moments(rho, 4, s));
                for (int p = 0; p <= 4; ++p)
                    for (int q = 0; p + q <= 4; ++q)
                        if (p + q >= 3)
                            worst_gaussian = std::max(worst_gaussian, std::abs(gamma.at(p, q)));
            }
        d = "ordering dev " + fmt(report.max_higher_order_deviation)
          + " (tol 1e-8), Gaussian cumulant max " + fmt(worst_gaussian) + " (tol 1e-10)";
        return report.max_higher_order_deviation < 1e-8 && worst_gaussian < 1e-10;
    }});

    criteria.push_back({"8", "tensor additivity and beam-splitter invariance", [&](std::string& d) {
        QuadratureSpec mc = quad;
        mc.mc_samples = 2'000'000;
        mc.mc_seed = 90210;
        mc.target_abs_err = 5e-3;

        const M f1 = M::analytic_fock(1);
        const double pair_dev =
            std::abs(ng_measure(tensor(f1, f1), mc).value - 2.0 * ng_fock_closed(1));

        mc.mc_seed = 90211;
        const M out = beamsplit(M::analytic_pats(1, 0.4), M::vacuum(), beamsplitter_5050());
        const double split_dev = std::abs(ng_measure(out, mc).value - ng_fock_closed(1));

        d = "tensor dev " + fmt(pair_dev) + ", beam-splitter dev " + fmt(split_dev)
          + " (tol 1e-2)";
        return pair_dev < 1e-2 && split_dev < 1e-2;
    }});

    criteria.push_back({"9", "phase-averaged coherent curve starts at zero and rises", [&](std::string& d) {
        const double at_zero = std::abs(ng_measure(M::analytic_phase_averaged(0.0), quad).value);
        bool increasing = true;
        double prev = -1e9;
        for (int i = 0; i <= 10; ++i) {
            const double b2 = 0.5 * i;
            const double v = ng_measure(M::analytic_phase_averaged(std::sqrt(b2)), quad).value;
            increasing = increasing && (v > prev);
            prev = v;
        }
        d = "value at zero " + fmt(at_zero) + " (tol 1e-8), "
          + (increasing ? "monotone over the energy grid" : "monotonicity broken");
        return at_zero < 1e-8 && increasing;
    }});

    criteria.push_back({"10", "quadrature and operator moments agree across the catalog", [&](std::string& d) {
        const std::vector<std::pair<std::string, S>> catalog = {
            {"fock(3)", S::fock(3)},
            {"thermal(0.5)", S::thermal(0.5)},
            {"pats(1,0.3)", S::pats(1, 0.3)},
            {"pats(2,0.5)", S::pats(2, 0.5)},
            {"phase_averaged(1)", S::phase_averaged(1.0)},
            {"coherent(0.8-0.3i)", S::coherent({0.8, -0.3})},
        };
        double worst = 0.0;
        for (const auto& [name, spec] : catalog) {
            const FockDensityMatrix rho = make_state(spec, default_cutoff(spec, 1e-14));
            const M model = M::from_matrix(rho);
            for (int p = 0; p <= 4; ++p)
                for (int q = 0; p + q <= 4; ++q)
                    worst = std::max(worst, std::abs(q_moment_quad(model, p, q, quad)
                                                     - anti_normal_moment(rho, p, q)));
        }
        d = "max moment dev " + fmt(worst) + " (tol 1e-6)";
        return worst < 1e-6;
    }});

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok)
            ++failures;
        std::printf("[%s] %-3s %s: %s\n", ok ? "PASS" : "FAIL", criterion.id.c_str(),
                    criterion.name.c_str(), detail.c_str());
        std::fflush(stdout);
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = seconds < 300.0;
    if (!in_budget)
        ++failures;
    std::printf("[%s] rt  full suite runtime: %.1f s (budget 300 s)\n",
                in_budget ? "PASS" : "FAIL", seconds);
    std::printf("%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
