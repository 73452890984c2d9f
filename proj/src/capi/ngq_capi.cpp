#include "ngq.h"

#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "ngq/cumulants.hpp"
#include "ngq/entropy.hpp"
#include "ngq/errors.hpp"
#include "ngq/fock.hpp"
#include "ngq/measures.hpp"
#include "ngq/qfunc.hpp"
#include "ngq/special_functions.hpp"

struct ngq_state {
    ngq::FockDensityMatrix rho;
};

struct ngq_model {
    ngq::QFunctionModel model;
};

namespace {

thread_local std::string g_last_error;

ngq_status fail(ngq_status code, const char* what)
{
    g_last_error = what;
    return code;
}

template <typename Fn>
ngq_status guarded(Fn&& fn)
{
    try {
        fn();
        g_last_error.clear();
        return NGQ_OK;
    } catch (const ngq::DomainError& e) {
        return fail(NGQ_ERROR_DOMAIN, e.what());
    } catch (const ngq::TruncationError& e) {
        return fail(NGQ_ERROR_TRUNCATION, e.what());
    } catch (const ngq::ConvergenceError& e) {
        return fail(NGQ_ERROR_CONVERGENCE, e.what());
    } catch (const ngq::UnsupportedStateError& e) {
        return fail(NGQ_ERROR_UNSUPPORTED_STATE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(NGQ_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(NGQ_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(NGQ_ERROR_INTERNAL, "unknown error");
    }
}

ngq_status make_state_handle(const ngq::StateFamilySpec& spec, int cutoff, ngq_state** out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "output handle is null");
    return guarded([&] {
        ngq::FockDensityMatrix rho =
            cutoff <= 0 ? ngq::make_state(spec) : ngq::make_state(spec, cutoff);
        *out = new ngq_state{std::move(rho)};
    });
}

ngq::QuadratureSpec to_spec(const ngq_quad& quad)
{
    ngq::QuadratureSpec spec;
    spec.radial_nodes = quad.radial_nodes;
    spec.radial_cut = quad.radial_cut;
    spec.grid_nodes_per_axis = quad.grid_nodes_per_axis;
    spec.mc_samples = quad.mc_samples;
    spec.mc_seed = quad.mc_seed;
    spec.target_abs_err = quad.target_abs_err;
    return spec;
}

void to_report(const ngq::MeasureReport& in, ngq_report& out)
{
    out.value = in.value;
    out.raw_value = in.raw_value;
    out.est_error = in.est_error;
    out.method = static_cast<int>(in.method);
}

} // namespace

extern "C" {

const char* ngq_version(void)
{
    return "0.1.0";
}

const char* ngq_last_error(void)
{
    return g_last_error.c_str();
}

void ngq_quad_default(ngq_quad* quad)
{
    if (quad == nullptr)
        return;
    const ngq::QuadratureSpec spec;
    quad->radial_nodes = spec.radial_nodes;
    quad->radial_cut = spec.radial_cut;
    quad->grid_nodes_per_axis = spec.grid_nodes_per_axis;
    quad->mc_samples = spec.mc_samples;
    quad->mc_seed = spec.mc_seed;
    quad->target_abs_err = spec.target_abs_err;
}

ngq_status ngq_state_fock(int m, int cutoff, ngq_state** out)
{
    ngq_status rc = NGQ_OK;
    ngq::StateFamilySpec spec;
    rc = guarded([&] { spec = ngq::StateFamilySpec::fock(m); });
    return rc != NGQ_OK ? rc : make_state_handle(spec, cutoff, out);
}

ngq_status ngq_state_thermal(double x, int cutoff, ngq_state** out)
{
    ngq_status rc = NGQ_OK;
    ngq::StateFamilySpec spec;
    rc = guarded([&] { spec = ngq::StateFamilySpec::thermal(x); });
    return rc != NGQ_OK ? rc : make_state_handle(spec, cutoff, out);
}

ngq_status ngq_state_pats(int m, double x, int cutoff, ngq_state** out)
{
    ngq_status rc = NGQ_OK;
    ngq::StateFamilySpec spec;
    rc = guarded([&] { spec = ngq::StateFamilySpec::pats(m, x); });
    return rc != NGQ_OK ? rc : make_state_handle(spec, cutoff, out);
}

ngq_status ngq_state_phase_averaged(double beta_abs, int cutoff, ngq_state** out)
{
    ngq_status rc = NGQ_OK;
    ngq::StateFamilySpec spec;
    rc = guarded([&] { spec = ngq::StateFamilySpec::phase_averaged(beta_abs); });
    return rc != NGQ_OK ? rc : make_state_handle(spec, cutoff, out);
}

ngq_status ngq_state_coherent(double beta_re, double beta_im, int cutoff, ngq_state** out)
{
    ngq_status rc = NGQ_OK;
    ngq::StateFamilySpec spec;
    rc = guarded([&] { spec = ngq::StateFamilySpec::coherent({beta_re, beta_im}); });
    return rc != NGQ_OK ? rc : make_state_handle(spec, cutoff, out);
}

void ngq_state_free(ngq_state* state)
{
    delete state;
}

int ngq_state_cutoff(const ngq_state* state)
{
    return state == nullptr ? 0 : state->rho.cutoff();
}

double ngq_state_tail_mass(const ngq_state* state)
{
    return state == nullptr ? 1.0 : state->rho.tail_mass();
}

ngq_status ngq_state_element(const ngq_state* state, int row, int col, double* re, double* im)
{
    if (state == nullptr || re == nullptr || im == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    if (row < 0 || col < 0 || row >= state->rho.cutoff() || col >= state->rho.cutoff())
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "element index outside the basis");
    const ngq::Complex v = state->rho.elements()(row, col);
    *re = v.real();
    *im = v.imag();
    return NGQ_OK;
}

ngq_status ngq_state_rotate(const ngq_state* state, double theta, ngq_state** out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new ngq_state{ngq::rotate_state(state->rho, theta)}; });
}

ngq_status ngq_state_von_neumann_entropy(const ngq_state* state, double* out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ngq::von_neumann_entropy(state->rho); });
}

ngq_status ngq_state_anti_normal_moment(const ngq_state* state, int p, int q,
                                        double* re, double* im)
{
    if (state == nullptr || re == nullptr || im == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ngq::Complex v = ngq::anti_normal_moment(state->rho, p, q);
        *re = v.real();
        *im = v.imag();
    });
}

ngq_status ngq_state_hs_inner(const ngq_state* a, const ngq_state* b, double* out)
{
    if (a == nullptr || b == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ngq::hs_inner(a->rho, b->rho); });
}

ngq_status ngq_model_fock(int m, ngq_model** out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "output handle is null");
    return guarded([&] { *out = new ngq_model{ngq::QFunctionModel::analytic_fock(m)}; });
}

ngq_status ngq_model_pats(int m, double x, ngq_model** out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "output handle is null");
    return guarded([&] { *out = new ngq_model{ngq::QFunctionModel::analytic_pats(m, x)}; });
}

ngq_status ngq_model_phase_averaged(double beta_abs, ngq_model** out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "output handle is null");
    return guarded(
        [&] { *out = new ngq_model{ngq::QFunctionModel::analytic_phase_averaged(beta_abs)}; });
}

ngq_status ngq_model_thermal(double nbar, ngq_model** out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "output handle is null");
    return guarded([&] { *out = new ngq_model{ngq::QFunctionModel::analytic_thermal(nbar)}; });
}

ngq_status ngq_model_from_state(const ngq_state* state, ngq_model** out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new ngq_model{ngq::QFunctionModel::from_matrix(state->rho)}; });
}

void ngq_model_free(ngq_model* model)
{
    delete model;
}

int ngq_model_modes(const ngq_model* model)
{
    return model == nullptr ? 0 : model->model.modes();
}

ngq_status ngq_model_scale(const ngq_model* model, double lambda, ngq_model** out)
{
    if (model == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new ngq_model{ngq::scale(model->model, lambda)}; });
}

ngq_status ngq_model_displace(const ngq_model* model, const double* xi_re_im, ngq_model** out)
{
    if (model == nullptr || xi_re_im == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<ngq::Complex> xi(model->model.modes());
        for (std::size_t j = 0; j < xi.size(); ++j)
            xi[j] = {xi_re_im[2 * j], xi_re_im[2 * j + 1]};
        *out = new ngq_model{ngq::displace(model->model, std::span<const ngq::Complex>(xi))};
    });
}

ngq_status ngq_model_rotate(const ngq_model* model, double theta, ngq_model** out)
{
    if (model == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new ngq_model{ngq::rotate(model->model, theta)}; });
}

ngq_status ngq_model_tensor(const ngq_model* a, const ngq_model* b, ngq_model** out)
{
    if (a == nullptr || b == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new ngq_model{ngq::tensor(a->model, b->model)}; });
}

ngq_status ngq_model_beamsplit(const ngq_model* a, const ngq_model* b, const double* u_re_im,
                               ngq_model** out)
{
    if (a == nullptr || b == nullptr || u_re_im == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        Eigen::Matrix2cd u;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const int k = 2 * (2 * i + j);
                u(i, j) = ngq::Complex(u_re_im[k], u_re_im[k + 1]);
            }
        *out = new ngq_model{ngq::beamsplit(a->model, b->model, u)};
    });
}

ngq_status ngq_model_beamsplit_5050(const ngq_model* a, const ngq_model* b, ngq_model** out)
{
    if (a == nullptr || b == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = new ngq_model{ngq::beamsplit(a->model, b->model, ngq::beamsplitter_5050())}; });
}

ngq_status ngq_model_eval(const ngq_model* model, const double* alpha_re_im, double* out)
{
    if (model == nullptr || alpha_re_im == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ngq::Complex alpha[2];
        const int n = model->model.modes();
        for (int j = 0; j < n; ++j)
            alpha[j] = {alpha_re_im[2 * j], alpha_re_im[2 * j + 1]};
        *out = model->model(std::span<const ngq::Complex>(alpha, static_cast<std::size_t>(n)));
    });
}

ngq_status ngq_model_gaussian_fit(const ngq_model* model, double* mean, double* cov)
{
    if (model == nullptr || mean == nullptr || cov == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ngq::GaussianMomentSummary fit = ngq::gaussian_fit(model->model);
        const int d = 2 * fit.modes;
        for (int i = 0; i < d; ++i)
            mean[i] = fit.mean(i);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                cov[i * d + j] = fit.covariance(i, j);
    });
}

ngq_status ngq_wehrl(const ngq_model* model, const ngq_quad* quad, ngq_report* out)
{
    if (model == nullptr || quad == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { to_report(ngq::wehrl(model->model, to_spec(*quad)), *out); });
}

ngq_status ngq_wehrl_gaussian(const ngq_model* model, ngq_report* out)
{
    if (model == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded(
        [&] { to_report(ngq::wehrl_gaussian(ngq::gaussian_fit(model->model)), *out); });
}

ngq_status ngq_wehrl_fock_closed(int m, double* out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ngq::wehrl_fock_closed(m); });
}

ngq_status ngq_ng_measure(const ngq_model* model, const ngq_quad* quad, ngq_report* out)
{
    if (model == nullptr || quad == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { to_report(ngq::ng_measure(model->model, to_spec(*quad)), *out); });
}

ngq_status ngq_ng_fock_closed(int m, double* out)
{
    if (out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ngq::ng_fock_closed(m); });
}

ngq_status ngq_reference_thermal_nbar(const ngq_state* state, double* out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ngq::GaussianReference ref = ngq::gaussian_reference(state->rho);
        if (!ref.thermal_nbar)
            throw ngq::UnsupportedStateError(
                "the Gaussian reference of this state is not a thermal state");
        *out = *ref.thermal_nbar;
    });
}

ngq_status ngq_delta1(const ngq_state* state, ngq_report* out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { to_report(ngq::delta1(state->rho), *out); });
}

ngq_status ngq_delta2(const ngq_state* state, ngq_report* out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { to_report(ngq::delta2(state->rho), *out); });
}

ngq_status ngq_s_ordered_moment(const ngq_state* state, int p, int q, double s,
                                double* re, double* im)
{
    if (state == nullptr || re == nullptr || im == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ngq::MomentTable table = ngq::s_ordered_moments(state->rho, p + q, s);
        const ngq::Complex v = table.at(p, q);
        *re = v.real();
        *im = v.imag();
    });
}

ngq_status ngq_s_invariance(const ngq_state* state, int order_cap,
                            double* max_higher_order_dev, double* second_order_shift_dev)
{
    if (state == nullptr || max_higher_order_dev == nullptr || second_order_shift_dev == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ngq::SInvarianceReport report = ngq::s_invariance_report(state->rho, order_cap);
        *max_higher_order_dev = report.max_higher_order_deviation;
        *second_order_shift_dev = report.second_order_shift_deviation;
    });
}

ngq_status ngq_cumulant_indicator(const ngq_state* state, int order_cap, double* out)
{
    if (state == nullptr || out == nullptr)
        return fail(NGQ_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ngq::cumulant_indicator(state->rho, order_cap); });
}

double ngq_digamma(double x)
{
    double v = std::numeric_limits<double>::quiet_NaN();
    guarded([&] { v = ngq::digamma(x); });
    return v;
}

double ngq_log_factorial(int m)
{
    double v = std::numeric_limits<double>::quiet_NaN();
    guarded([&] { v = ngq::log_factorial(m); });
    return v;
}

double ngq_bessel_i0_scaled(double x)
{
    double v = std::numeric_limits<double>::quiet_NaN();
    guarded([&] { v = ngq::bessel_i0_scaled(x); });
    return v;
}

} // extern "C"
