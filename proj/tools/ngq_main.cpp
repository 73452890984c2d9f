// Command-line front end for the ngq shared library. Produces the measure
// curves and invariance suites as CSV files (plus optional SVG plots) and a
// manifest.json run record. Links only the public C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngq.h"

namespace {

struct UsageExit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceExit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(ngq_status status)
{
    if (status == NGQ_OK)
        return;
    const std::string msg = ngq_last_error();
    if (status == NGQ_ERROR_CONVERGENCE)
        throw ConvergenceExit(msg);
    throw UsageExit(msg);
}

// RAII wrappers over the opaque C handles.
struct State {
    ngq_state* ptr = nullptr;
    State() = default;
    explicit State(ngq_state* p) : ptr(p) {}
    State(State&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    State& operator=(State&& other) noexcept
    {
        if (this != &other) {
            ngq_state_free(ptr);
            ptr = other.ptr;
            other.ptr = nullptr;
        }
        return *this;
    }
    State(const State&) = delete;
    State& operator=(const State&) = delete;
    ~State() { ngq_state_free(ptr); }
};

struct Model {
    ngq_model* ptr = nullptr;
    Model() = default;
    explicit Model(ngq_model* p) : ptr(p) {}
    Model(Model&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    Model& operator=(Model&& other) noexcept
    {
        if (this != &other) {
            ngq_model_free(ptr);
            ptr = other.ptr;
            other.ptr = nullptr;
        }
        return *this;
    }
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;
    ~Model() { ngq_model_free(ptr); }
};

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    std::vector<double> points() const
    {
        if (!(step > 0.0))
            throw UsageExit("grid step must be positive");
        if (stop < start)
            throw UsageExit("grid stop must not precede start");
        std::vector<double> out;
        const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        out.reserve(n);
        for (int i = 0; i < n; ++i)
            out.push_back(start + i * step);
        return out;
    }
};

Grid parse_grid(const std::string& text)
{
    Grid g;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3)
        throw UsageExit("grid must be start:stop:step, got '" + text + "'");
    return g;
}

std::string format17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& header)
        : path_(path), out_(path, std::ios::binary)
    {
        if (!out_)
            throw UsageExit("cannot open output file " + path.string());
        out_ << header << "\n";
        n_columns_ = 1 + std::count(header.begin(), header.end(), ',');
        columns_.resize(n_columns_);
    }

    void row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << (i ? "," : "") << cells[i];
        out_ << "\n";
        if (cells.size() >= 2) {
            // numeric prefix kept for plotting
            char* end = nullptr;
            const double x = std::strtod(cells[0].c_str(), &end);
            const double y = std::strtod(cells[1].c_str(), &end);
            xs_.push_back(x);
            ys_.push_back(y);
        }
    }

    void close()
    {
        out_.close();
        if (!out_)
            throw UsageExit("failed writing " + path_.string());
    }

    const std::filesystem::path& path() const { return path_; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t n_columns_ = 0;
    std::vector<std::string> columns_;
    std::vector<double> xs_;
    std::vector<double> ys_;
};

// Minimal SVG line plot; derivative of the CSV contents only.
void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::vector<double>& xs, const std::vector<double>& ys)
{
    if (xs.size() < 2)
        return;
    const double w = 640, h = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
        ymin = std::min(ymin, ys[i]);
        ymax = std::max(ymax, ys[i]);
    }
    if (xmax == xmin)
        xmax = xmin + 1;
    if (ymax == ymin)
        ymax = ymin + 1;
    const auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    const auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageExit("cannot open output file " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
        << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = xmin + t * (xmax - xmin) / 4;
        const double yv = ymin + t * (ymax - ymin) / 4;
        out << "<text x=\"" << px(xv) << "\" y=\"" << h - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << xv << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << yv << "</text>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << px(xs[i]) << "," << py(ys[i]) << " ";
    out << "\"/>\n</svg>\n";
}

struct Options {
    std::string out_dir;
    bool emit_plot = false;
    int cutoff = 0; // 0 = automatic
    ngq_quad quad{};
    double mc_target = 5e-3;
    int m_max = 20;
    int m = 1;
    int order_cap = 4;
    std::string x_grid = "0:0.9:0.1";
    std::string beta_sq_grid = "0:5:0.25";
};

std::filesystem::path resolve_out_dir(const Options& opt)
{
    std::string dir = opt.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("NGQ_OUT_DIR"))
            dir = env;
    }
    if (dir.empty())
        dir = ".";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw UsageExit("cannot create output directory " + dir + ": " + ec.message());
    // probe writability
    const std::filesystem::path probe = std::filesystem::path(dir) / ".ngq_write_probe";
    {
        std::ofstream f(probe);
        if (!f)
            throw UsageExit("output directory " + dir + " is not writable");
    }
    std::filesystem::remove(probe, ec);
    return dir;
}

nlohmann::json quad_json(const ngq_quad& q)
{
    return {
        {"radial_nodes", q.radial_nodes},
        {"radial_cut", q.radial_cut},
        {"grid_nodes_per_axis", q.grid_nodes_per_axis},
        {"mc_samples", q.mc_samples},
        {"mc_seed", q.mc_seed},
        {"target_abs_err", q.target_abs_err},
    };
}

void write_manifest(const std::filesystem::path& dir, const std::string& command,
                    const Options& opt, const nlohmann::json& params,
                    const std::vector<std::string>& outputs)
{
    nlohmann::json manifest = {
        {"command", command},
        {"version", ngq_version()},
        {"config",
         {{"out_dir", dir.string()},
          {"emit_plot", opt.emit_plot},
          {"cutoff", opt.cutoff},
          {"mc_target", opt.mc_target},
          {"quad", quad_json(opt.quad)}}},
        {"params", params},
        {"outputs", outputs},
    };
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out)
        throw UsageExit("cannot write manifest.json");
    out << manifest.dump(2) << "\n";
}

Model make_model_fock(int m)
{
    ngq_model* p = nullptr;
    check(ngq_model_fock(m, &p));
    return Model(p);
}

Model make_model_pats(int m, double x)
{
    ngq_model* p = nullptr;
    check(ngq_model_pats(m, x, &p));
    return Model(p);
}

Model make_model_phase_averaged(double beta_abs)
{
    ngq_model* p = nullptr;
    check(ngq_model_phase_averaged(beta_abs, &p));
    return Model(p);
}

Model make_model_thermal(double nbar)
{
    ngq_model* p = nullptr;
    check(ngq_model_thermal(nbar, &p));
    return Model(p);
}

Model make_model_displaced(const Model& inner, double re, double im)
{
    const double xi[2] = {re, im};
    ngq_model* p = nullptr;
    check(ngq_model_displace(inner.ptr, xi, &p));
    return Model(p);
}

ngq_report measure_ng(const Model& model, const ngq_quad& quad)
{
    ngq_report r{};
    check(ngq_ng_measure(model.ptr, &quad, &r));
    return r;
}

ngq_report measure_wehrl(const Model& model, const ngq_quad& quad)
{
    ngq_report r{};
    check(ngq_wehrl(model.ptr, &quad, &r));
    return r;
}

int run_fock_curve(const Options& opt)
{
    const auto dir = resolve_out_dir(opt);
    if (opt.m_max < 0)
        throw UsageExit("--m-max must be non-negative");
    CsvWriter csv(dir / "fock_curve.csv", "m,N,abs_err");
    for (int m = 0; m <= opt.m_max; ++m) {
        const Model model = make_model_fock(m);
        const ngq_report r = measure_ng(model, opt.quad);
        csv.row({std::to_string(m), format17(r.value), format17(r.est_error)});
    }
    csv.close();
    std::vector<std::string> outputs = {csv.path().filename().string()};
    if (opt.emit_plot) {
        write_svg(dir / "fock_curve.svg", "non-Gaussianity of Fock states", csv.xs(), csv.ys());
        outputs.push_back("fock_curve.svg");
    }
    write_manifest(dir, "fock-curve", opt, {{"m_max", opt.m_max}}, outputs);
    std::printf("wrote %s\n", csv.path().string().c_str());
    return 0;
}

int run_pats_flatness(const Options& opt, bool deltas_only)
{
    const auto dir = resolve_out_dir(opt);
    if (opt.m < 0)
        throw UsageExit("--m must be non-negative");
    const std::vector<double> xs = parse_grid(opt.x_grid).points();
    if (xs.empty())
        throw UsageExit("empty x grid");

    const std::string stem =
        (deltas_only ? "delta_curves_m" : "pats_flatness_m") + std::to_string(opt.m);
    CsvWriter csv(dir / (stem + ".csv"), deltas_only ? "x,delta1,delta2" : "x,N,delta1,delta2");
    for (double x : xs) {
        ngq_state* sp = nullptr;
        check(ngq_state_pats(opt.m, x, opt.cutoff, &sp));
        const State state(sp);
        ngq_report d1{};
        ngq_report d2{};
        check(ngq_delta1(state.ptr, &d1));
        check(ngq_delta2(state.ptr, &d2));
        if (deltas_only) {
            csv.row({format17(x), format17(d1.value), format17(d2.value)});
        } else {
            const Model model = make_model_pats(opt.m, x);
            const ngq_report r = measure_ng(model, opt.quad);
            csv.row({format17(x), format17(r.value), format17(d1.value), format17(d2.value)});
        }
    }
    csv.close();
    std::vector<std::string> outputs = {csv.path().filename().string()};
    if (opt.emit_plot) {
        write_svg(dir / (stem + ".svg"),
                  deltas_only ? "delta measures for photon-added thermal states"
                              : "shape-criterion flatness for photon-added thermal states",
                  csv.xs(), csv.ys());
        outputs.push_back(stem + ".svg");
    }
    write_manifest(dir, deltas_only ? "delta-curves" : "pats-flatness", opt,
                   {{"m", opt.m}, {"x_grid", opt.x_grid}}, outputs);
    std::printf("wrote %s\n", csv.path().string().c_str());
    return 0;
}

int run_phase_averaged_curve(const Options& opt)
{
    const auto dir = resolve_out_dir(opt);
    const std::vector<double> grid = parse_grid(opt.beta_sq_grid).points();
    if (grid.empty())
        throw UsageExit("empty beta^2 grid");
    CsvWriter csv(dir / "phase_averaged_curve.csv", "beta_sq,N,abs_err");
    for (double b2 : grid) {
        const Model model = make_model_phase_averaged(std::sqrt(b2));
        const ngq_report r = measure_ng(model, opt.quad);
        csv.row({format17(b2), format17(r.value), format17(r.est_error)});
    }
    csv.close();
    std::vector<std::string> outputs = {csv.path().filename().string()};
    if (opt.emit_plot) {
        write_svg(dir / "phase_averaged_curve.svg",
                  "non-Gaussianity of phase-averaged coherent states", csv.xs(), csv.ys());
        outputs.push_back("phase_averaged_curve.svg");
    }
    write_manifest(dir, "phase-averaged-curve", opt, {{"beta_sq_grid", opt.beta_sq_grid}},
                   outputs);
    std::printf("wrote %s\n", csv.path().string().c_str());
    return 0;
}

struct CatalogEntry {
    std::string name;
    Model model;
};

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    out.push_back({"vacuum", make_model_fock(0)});
    out.push_back({"fock(1)", make_model_fock(1)});
    out.push_back({"fock(3)", make_model_fock(3)});
    out.push_back({"thermal(nbar=1)", make_model_thermal(1.0)});
    out.push_back({"pats(m=1 x=0.3)", make_model_pats(1, 0.3)});
    out.push_back({"pats(m=2 x=0.5)", make_model_pats(2, 0.5)});
    out.push_back({"phase_averaged(1)", make_model_phase_averaged(1.0)});
    out.push_back({"coherent(0.8-0.3i)", make_model_displaced(make_model_fock(0), 0.8, -0.3)});
    return out;
}

int run_invariance_suite(const Options& opt)
{
    const auto dir = resolve_out_dir(opt);
    CsvWriter csv(dir / "invariance_suite.csv",
                  "case,transform,param,hw_base,hw_transformed,hw_dev,n_base,n_transformed,n_dev");

    struct Transform {
        std::string name;
        std::string param;
        double value;
    };
    const std::vector<Transform> transforms = {
        {"scale", "0.5", 0.5},
        {"scale", "0.8", 0.8},
        {"displace", "1+0.5i", 0.0},
        {"rotate", "pi/3", std::numbers::pi / 3.0},
    };

    for (const CatalogEntry& entry : build_catalog()) {
        const ngq_report hw_base = measure_wehrl(entry.model, opt.quad);
        const ngq_report n_base = measure_ng(entry.model, opt.quad);
        for (const Transform& t : transforms) {
            Model transformed;
            double expected_hw_shift = 0.0;
            if (t.name == "scale") {
                ngq_model* p = nullptr;
                check(ngq_model_scale(entry.model.ptr, t.value, &p));
                transformed = Model(p);
                expected_hw_shift = -2.0 * std::log(t.value);
            } else if (t.name == "displace") {
                transformed = make_model_displaced(entry.model, 1.0, 0.5);
            } else {
                ngq_model* p = nullptr;
                check(ngq_model_rotate(entry.model.ptr, t.value, &p));
                transformed = Model(p);
            }
            const ngq_report hw_t = measure_wehrl(transformed, opt.quad);
            const ngq_report n_t = measure_ng(transformed, opt.quad);
            const double hw_dev = std::abs(hw_t.value - hw_base.value - expected_hw_shift);
            const double n_dev = std::abs(n_t.value - n_base.value);
            csv.row({entry.name, t.name, t.param, format17(hw_base.value),
                     format17(hw_t.value), format17(hw_dev), format17(n_base.value),
                     format17(n_t.value), format17(n_dev)});
        }
    }

    // two-mode checks run under the Monte Carlo engine
    ngq_quad mc_quad = opt.quad;
    mc_quad.target_abs_err = opt.mc_target;

    {
        const Model f1 = make_model_fock(1);
        ngq_model* p = nullptr;
        check(ngq_model_tensor(f1.ptr, f1.ptr, &p));
        const Model pair(p);
        const ngq_report hw1 = measure_wehrl(f1, opt.quad);
        const ngq_report n1 = measure_ng(f1, opt.quad);
        const ngq_report hw12 = measure_wehrl(pair, mc_quad);
        const ngq_report n12 = measure_ng(pair, mc_quad);
        csv.row({"fock(1) x fock(1)", "tensor-additivity", "", format17(2 * hw1.value),
                 format17(hw12.value), format17(std::abs(hw12.value - 2 * hw1.value)),
                 format17(2 * n1.value), format17(n12.value),
                 format17(std::abs(n12.value - 2 * n1.value))});
    }
    {
        const Model a = make_model_pats(1, 0.4);
        const Model vac = make_model_fock(0);
        ngq_model* p = nullptr;
        check(ngq_model_beamsplit_5050(a.ptr, vac.ptr, &p));
        const Model out(p);
        const ngq_report hw_a = measure_wehrl(a, opt.quad);
        const ngq_report hw_v = measure_wehrl(vac, opt.quad);
        const ngq_report n_a = measure_ng(a, opt.quad);
        const ngq_report hw_o = measure_wehrl(out, mc_quad);
        const ngq_report n_o = measure_ng(out, mc_quad);
        csv.row({"pats(m=1 x=0.4) & vacuum", "beamsplit-5050", "",
                 format17(hw_a.value + hw_v.value), format17(hw_o.value),
                 format17(std::abs(hw_o.value - hw_a.value - hw_v.value)),
                 format17(n_a.value), format17(n_o.value),
                 format17(std::abs(n_o.value - n_a.value))});
    }
    {
        const Model f1 = make_model_fock(1);
        const Model th = make_model_thermal(1.0);
        ngq_model* p = nullptr;
        check(ngq_model_tensor(f1.ptr, th.ptr, &p));
        const Model pair(p);
        const ngq_report hw1 = measure_wehrl(f1, opt.quad);
        const ngq_report hwt = measure_wehrl(th, opt.quad);
        const ngq_report n1 = measure_ng(f1, opt.quad);
        const ngq_report hw12 = measure_wehrl(pair, mc_quad);
        const ngq_report n12 = measure_ng(pair, mc_quad);
        csv.row({"fock(1) x thermal(nbar=1)", "tensor-gaussian", "",
                 format17(hw1.value + hwt.value), format17(hw12.value),
                 format17(std::abs(hw12.value - hw1.value - hwt.value)), format17(n1.value),
                 format17(n12.value), format17(std::abs(n12.value - n1.value))});
    }

    csv.close();
    std::vector<std::string> outputs = {csv.path().filename().string()};
    write_manifest(dir, "invariance-suite", opt, {{"mc_target", opt.mc_target}}, outputs);
    std::printf("wrote %s\n", csv.path().string().c_str());
    return 0;
}

int run_cumulant_check(const Options& opt)
{
    const auto dir = resolve_out_dir(opt);
    if (opt.order_cap < 3)
        throw UsageExit("--order-cap must be at least 3");

    // Cumulants of order 3..K cancel to the state's truncation error, so the
    // default basis here is generous rather than the tail-1e-10 minimum.
    const int cutoff = opt.cutoff > 0 ? opt.cutoff : 160;

    struct StateEntry {
        std::string name;
        State state;
    };
    std::vector<StateEntry> states;
    const auto add = [&](const char* name, ngq_status status, ngq_state* p) {
        check(status);
        states.push_back({name, State(p)});
    };
    {
        ngq_state* p = nullptr;
        ngq_status rc = ngq_state_fock(0, cutoff, &p);
        add("vacuum", rc, p);
        rc = ngq_state_fock(1, cutoff, &p);
        add("fock(1)", rc, p);
        rc = ngq_state_fock(2, cutoff, &p);
        add("fock(2)", rc, p);
        rc = ngq_state_thermal(0.5, cutoff, &p);
        add("thermal(x=0.5)", rc, p);
        rc = ngq_state_pats(1, 0.3, cutoff, &p);
        add("pats(m=1 x=0.3)", rc, p);
        rc = ngq_state_pats(2, 0.5, cutoff, &p);
        add("pats(m=2 x=0.5)", rc, p);
        rc = ngq_state_phase_averaged(1.0, cutoff, &p);
        add("phase_averaged(1)", rc, p);
        rc = ngq_state_coherent(0.8, -0.3, cutoff, &p);
        add("coherent(0.8-0.3i)", rc, p);
    }

    CsvWriter csv(dir / "cumulant_check.csv",
                  "state,theorem3_dev,second_order_shift_dev,indicator");
    for (const StateEntry& entry : states) {
        double dev = 0.0, shift = 0.0, indicator = 0.0;
        check(ngq_s_invariance(entry.state.ptr, opt.order_cap, &dev, &shift));
        check(ngq_cumulant_indicator(entry.state.ptr, opt.order_cap, &indicator));
        csv.row({entry.name, format17(dev), format17(shift), format17(indicator)});
    }
    csv.close();
    write_manifest(dir, "cumulant-check", opt, {{"order_cap", opt.order_cap}},
                   {csv.path().filename().string()});
    std::printf("wrote %s\n", csv.path().string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    ngq_quad_default(&opt.quad);

    CLI::App app{"Wehrl-entropy non-Gaussianity measures for oscillator states"};
    app.set_version_flag("--version", ngq_version());
    app.set_config("--config", "", "key=value configuration file; flags override it");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--out-dir", opt.out_dir, "output directory (default: $NGQ_OUT_DIR or .)");
    app.add_flag("--emit-plot", opt.emit_plot, "also write an SVG plot per CSV");
    app.add_option("--cutoff", opt.cutoff, "Fock-basis cutoff; 0 = automatic");
    app.add_option("--radial-nodes", opt.quad.radial_nodes, "radial Gauss-Legendre nodes per panel");
    app.add_option("--grid-nodes", opt.quad.grid_nodes_per_axis, "2D rule resolution");
    app.add_option("--mc-samples", opt.quad.mc_samples, "Monte Carlo sample budget");
    app.add_option("--seed", opt.quad.mc_seed, "Monte Carlo stream seed");
    app.add_option("--target-abs-err", opt.quad.target_abs_err, "deterministic error target");
    app.add_option("--mc-target", opt.mc_target, "error target for Monte Carlo measurements");
    // registered on the parent so a flat key=value config file reaches them;
    // fallthrough still lets them follow the subcommand on the command line
    app.add_option("--m-max", opt.m_max, "largest photon number (fock-curve)");
    app.add_option("--m", opt.m, "added photon number (pats-flatness, delta-curves)");
    app.add_option("--x-grid", opt.x_grid, "Boltzmann parameter grid start:stop:step");
    app.add_option("--beta-sq-grid", opt.beta_sq_grid, "|beta|^2 grid start:stop:step");
    app.add_option("--order-cap", opt.order_cap, "highest cumulant order (cumulant-check)");

    CLI::App* fock_curve = app.add_subcommand("fock-curve", "non-Gaussianity over photon number");
    CLI::App* pats_flatness =
        app.add_subcommand("pats-flatness", "all three measures across the Boltzmann parameter");
    CLI::App* delta_curves =
        app.add_subcommand("delta-curves", "comparison measures across the Boltzmann parameter");
    CLI::App* pac_curve =
        app.add_subcommand("phase-averaged-curve", "non-Gaussianity over |beta|^2");
    CLI::App* invariance =
        app.add_subcommand("invariance-suite", "displacement/rotation/scaling/tensor checks");
    CLI::App* cumulant = app.add_subcommand("cumulant-check",
                                            "ordering invariance and cumulant indicators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (fock_curve->parsed())
            return run_fock_curve(opt);
        if (pats_flatness->parsed())
            return run_pats_flatness(opt, false);
        if (delta_curves->parsed())
            return run_pats_flatness(opt, true);
        if (pac_curve->parsed())
            return run_phase_averaged_curve(opt);
        if (invariance->parsed())
            return run_invariance_suite(opt);
        if (cumulant->parsed())
            return run_cumulant_check(opt);
        std::fprintf(stderr, "error: unknown command\n");
        return 1;
    } catch (const ConvergenceExit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const UsageExit& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
