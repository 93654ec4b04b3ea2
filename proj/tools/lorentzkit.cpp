// lorentzkit command-line tool.
//
// Exit codes: 0 ok, 2 validation failure (JSON report on stderr), 64 usage,
// 65 bad config or input data, 74 I/O failure.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentzkit/bohr_atom.hpp"
#include "lorentzkit/cone_sections.hpp"
#include "lorentzkit/curvature.hpp"
#include "lorentzkit/error.hpp"
#include "lorentzkit/geodesics.hpp"
#include "lorentzkit/io/config.hpp"
#include "lorentzkit/io/csv.hpp"
#include "lorentzkit/kepler.hpp"
#include "lorentzkit/metric_models.hpp"
#include "lorentzkit/validation.hpp"

namespace lk = lorentzkit;
using lk::io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 74;

struct Globals {
    std::string constants_path;
    std::string tolerance_arg;
    std::string out_path;
    std::string format;  // empty: command default
};

// Thrown by commands that finished their work but must report a failed verdict.
struct ValidationFailure {
    Json report;
};

using Row = std::vector<std::string>;

struct Table {
    Row header;
    std::vector<Row> rows;
};

std::string num(double v) { return lk::io::format_double(v); }

std::string render_csv(const Table& t) {
    std::ostringstream os;
    lk::io::CsvWriter w(os);
    w.row(t.header);
    for (const auto& r : t.rows) w.row(r);
    return os.str();
}

// Numeric-looking cells go out as JSON numbers, the rest as strings.
Json table_to_json(const Table& t) {
    Json arr = Json::array();
    for (const auto& r : t.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < t.header.size() && i < r.size(); ++i) {
            long long iv = 0;
            const auto* end = r[i].data() + r[i].size();
            const auto res = std::from_chars(r[i].data(), end, iv);
            if (!r[i].empty() && res.ec == std::errc{} && res.ptr == end) {
                o[t.header[i]] = iv;
                continue;
            }
            try {
                o[t.header[i]] = lk::io::parse_double(r[i]);
            } catch (const lk::Error&) {
                o[t.header[i]] = r[i];
            }
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

void flatten(const Json& j, const std::string& prefix, Table& t) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, t);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), t);
    } else if (j.is_number_float()) {
        t.rows.push_back({prefix, num(j.get<double>())});
    } else if (j.is_string()) {
        t.rows.push_back({prefix, j.get<std::string>()});
    } else {
        t.rows.push_back({prefix, j.dump()});
    }
}

class Emitter {
public:
    explicit Emitter(const Globals& g) : g_(g) {}

    void table(const Table& t) const {
        if (format("csv") == "json") write(table_to_json(t).dump(2) + "\n");
        else write(render_csv(t));
    }

    void report(const Json& j) const {
        if (format("json") == "csv") {
            Table t{{"key", "value"}, {}};
            flatten(j, "", t);
            write(render_csv(t));
        } else {
            write(j.dump(2) + "\n");
        }
    }

private:
    std::string format(const char* fallback) const { return g_.format.empty() ? fallback : g_.format; }

    void write(const std::string& text) const {
        if (g_.out_path.empty() || g_.out_path == "-") {
            std::cout << text;
            std::cout.flush();
            if (!std::cout) lk::fail(lk::ErrorKind::Io, "cannot write to standard output");
            return;
        }
        std::ofstream f(g_.out_path, std::ios::binary | std::ios::trunc);
        if (!f) lk::fail(lk::ErrorKind::Io, "cannot open '" + g_.out_path + "' for writing");
        f << text;
        f.close();
        if (!f) lk::fail(lk::ErrorKind::Io, "cannot write '" + g_.out_path + "'");
    }

    const Globals& g_;
};

lk::bohr::PhysicalConstants load_constants(const Globals& g) {
    if (g.constants_path.empty()) return lk::bohr::PhysicalConstants::codata2018();
    return lk::io::constants_from_json(lk::io::load_json_argument(g.constants_path, "constants"));
}

lk::validation::Context load_context(const Globals& g) {
    lk::validation::Context ctx;
    ctx.constants = load_constants(g);
    if (!g.tolerance_arg.empty()) {
        lk::io::apply_tolerances(ctx.tol, lk::io::load_json_argument(g.tolerance_arg, "tolerance"));
    }
    return ctx;
}

Json suite_json(const lk::validation::SuiteReport& s) {
    Json j = Json::object();
    j["suite"] = s.name;
    j["criterion"] = s.criterion;
    j["description"] = s.description;
    j["passed"] = s.passed();
    j["seconds"] = s.seconds;
    if (!s.error.empty()) j["error"] = s.error;
    Json checks = Json::array();
    for (const auto& c : s.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        if (std::isfinite(c.measured)) cj["measured"] = c.measured;
        else cj["measured"] = num(c.measured);
        cj["tolerance"] = c.tolerance;
        cj["compare"] = c.compare == lk::validation::Compare::AtMost ? "<=" : ">";
        cj["passed"] = c.passed;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

// Runs the named suites, emits the report, and turns any red suite into a validation failure.
void run_suites(const Globals& g, const std::vector<std::string>& names) {
    for (const auto& n : names) {
        bool known = false;
        for (const auto& [name, _] : lk::validation::registry()) known = known || n == name;
        if (!known) lk::fail(lk::ErrorKind::Input, "unknown suite '" + n + "'");
    }
    const auto ctx = load_context(g);
    std::vector<lk::validation::SuiteReport> reports;
    for (const auto& [name, suite] : lk::validation::registry()) {
        bool wanted = names.empty();
        for (const auto& n : names) wanted = wanted || n == name;
        if (wanted) reports.push_back(lk::validation::run_suite(name, suite, ctx));
    }

    Json out = Json::object();
    Json suites = Json::array();
    Json failed = Json::array();
    for (const auto& r : reports) {
        suites.push_back(suite_json(r));
        if (!r.passed()) failed.push_back(suite_json(r));
    }
    out["passed"] = failed.empty();
    out["suites"] = std::move(suites);
    Emitter(g).report(out);
    if (!failed.empty()) {
        Json f = Json::object();
        f["passed"] = false;
        f["failed"] = std::move(failed);
        throw ValidationFailure{std::move(f)};
    }
}

// ---- cone ------------------------------------------------------------------------------

void cmd_cone_section(const Globals& g, double a, double phi, std::size_t samples) {
    const auto sec = lk::section_sphere(a, lk::observer_along_d3(phi));
    const auto el = lk::projected_ellipse(sec);
    Table t{{"kind", "index", "x0", "x1", "x2", "x3"}, {}};
    // great circle in Span{e1, w} on the sphere, then its projection
    for (std::size_t i = 0; i < samples; ++i) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
        const auto x = lk::sphere_point(sec, ang, 0.0);
        t.rows.push_back({"sphere", std::to_string(i), num(x[0]), num(x[1]), num(x[2]), num(x[3])});
    }
    const auto proj = lk::project_to_rest_space(sec, samples);
    for (std::size_t i = 0; i < proj.size(); ++i) {
        t.rows.push_back({"ellipse", std::to_string(i), num(0.0), num(proj[i][0]), num(proj[i][1]), num(proj[i][2])});
    }
    if (g.format == "json") {
        Json j = Json::object();
        j["a"] = a;
        j["phi"] = phi;
        j["radius"] = sec.radius;
        j["center"] = sec.center.components();
        j["ellipse"] = {{"semi_major", el.semi_major},
                        {"semi_minor", el.semi_minor},
                        {"focal_distance", el.focal_distance},
                        {"eccentricity", el.eccentricity}};
        j["samples"] = table_to_json(t);
        Emitter(g).report(j);
    } else {
        Emitter(g).table(t);
    }
}

// ---- kepler ----------------------------------------------------------------------------

lk::kepler::PlanarTrajectory read_polar_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) lk::fail(lk::ErrorKind::Io, "cannot open '" + path + "'");
    const auto table = lk::io::parse_csv(in);
    if (table.empty()) lk::fail(lk::ErrorKind::Input, path + ": empty file");
    const auto& head = table.front();
    auto col = [&](const char* name) {
        for (std::size_t i = 0; i < head.size(); ++i)
            if (head[i] == name) return i;
        lk::fail(lk::ErrorKind::Input, path + ": missing column '" + name + "'");
    };
    const std::size_t ct = col("t");
    const std::size_t cr = col("r");
    const std::size_t cth = col("theta");
    lk::kepler::PlanarTrajectory out;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& row = table[i];
        if (row.size() == 1 && row[0].empty()) continue;
        if (row.size() != head.size()) {
            lk::fail(lk::ErrorKind::Input, path + ": row " + std::to_string(i + 1) + " has the wrong field count");
        }
        out.push_back({lk::io::parse_double(row[ct]), lk::io::parse_double(row[cr]), lk::io::parse_double(row[cth])});
    }
    return out;
}

void cmd_kepler_check(const Globals& g, const std::vector<std::string>& paths) {
    Json j = Json::object();
    Json orbits = Json::array();
    std::vector<lk::kepler::OrbitSummary> summaries;
    for (const auto& p : paths) {
        const auto traj = read_polar_csv(p);
        const auto h = lk::kepler::areal_velocity(traj);
        double lo = h.front();
        double hi = h.front();
        double mean = 0.0;
        for (double v : h) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            mean += v;
        }
        mean /= static_cast<double>(h.size());
        const auto sum = lk::kepler::summarize_orbit(traj);
        summaries.push_back(sum);
        Json o = Json::object();
        o["path"] = p;
        o["samples"] = traj.size();
        o["areal_velocity_mean"] = mean;
        o["areal_velocity_drift"] = hi - lo;
        o["areal_velocity_rel_drift"] = mean != 0.0 ? (hi - lo) / std::abs(mean) : 0.0;
        o["period"] = sum.period;
        o["mean_radius"] = sum.mean_radius;
        o["T2_over_R3"] = sum.period * sum.period / std::pow(sum.mean_radius, 3);
        orbits.push_back(std::move(o));
    }
    j["orbits"] = std::move(orbits);
    Json ratios = Json::array();
    for (std::size_t i = 1; i < summaries.size(); ++i) {
        ratios.push_back({{"first", 0},
                          {"second", i},
                          {"ratio", lk::kepler::third_law_ratio(summaries[0].period, summaries[0].mean_radius,
                                                                summaries[i].period, summaries[i].mean_radius)}});
    }
    j["third_law_ratios"] = std::move(ratios);
    Emitter(g).report(j);
}

// ---- metric ----------------------------------------------------------------------------

void cmd_metric_table(const Globals& g, const std::string& model, double r, double phi) {
    const lk::MetricModel m(lk::parse_region(model));
    const auto comp = lk::metric_components(m, r, phi);
    const auto an = lk::christoffel_analytic(m, r, phi);
    const auto fd = lk::christoffel_fd_oracle(m, r, phi);
    Json j = Json::object();
    j["model"] = model;
    j["r"] = r;
    j["phi"] = phi;
    j["g"] = {{"g00", comp.g[0]}, {"g11", comp.g[1]}, {"g22", comp.g[2]}, {"g33", comp.g[3]}};
    j["degenerate"] = comp.degenerate;
    Json ch = Json::object();
    for (const auto& k : lk::ChristoffelTable::nonzero_keys()) {
        ch["G" + std::to_string(k[0]) + "_" + std::to_string(k[1]) + std::to_string(k[2])] = an(k[0], k[1], k[2]);
    }
    j["christoffel"] = std::move(ch);
    j["fd_max_mixed_difference"] = an.max_mixed_difference(fd);
    Emitter(g).report(j);
}

// ---- curvature -------------------------------------------------------------------------

double tidy(double v) { return v == 0.0 ? 0.0 : v; }  // drops -0

Json curvature_json(const lk::CurvatureReport& c, double k) {
    Json j = {{"r", c.r},
            {"K_base", c.K_base},
            {"hessian_tt", c.hessian_tt},
            {"hessian_rr", c.hessian_rr},
            {"laplacian_r", c.laplacian_r},
            {"r_star", c.r_star},
            {"ric_tt", c.ric_tt},
            {"ric_rr", c.ric_rr},
            {"ric_horizontal", c.ric_horizontal},
            {"ric_vertical_coeff", c.ric_vertical_coeff},
            {"scalar", c.scalar},
            {"einstein_horizontal_coeff", c.einstein_horizontal_coeff},
            {"einstein_vertical_coeff", c.einstein_vertical_coeff},
            {"k", k},
            {"stress_horizontal_coeff", k * c.einstein_horizontal_coeff},
            {"stress_vertical_coeff", k * c.einstein_vertical_coeff}};
    for (auto& [key, v] : j.items()) v = tidy(v.get<double>());
    return j;
}

void cmd_curvature_report(const Globals& g, const std::string& model, double r, double k) {
    const lk::MetricModel m(lk::parse_region(model));
    Json j = Json::object();
    j["model"] = model;
    j["report"] = curvature_json(lk::ricci_warped(m, r), k);
    j["gauss_fd_oracle"] = lk::gauss_curvature_fd_oracle(lk::strip_metric(m), r);
    if (m.region() == lk::Region::Interior) {
        const auto dp = lk::einstein_density_pressure(r);
        j["density"] = k * dp.density;
        j["pressure"] = k * dp.pressure;
        j["contraction"] = k * dp.contraction;
    }
    Emitter(g).report(j);
}

// ---- geodesic --------------------------------------------------------------------------

void cmd_geodesic_trace(const Globals& g, const std::string& model, const std::string& seed_arg, double eta_end,
                        double step) {
    const lk::MetricModel m(lk::parse_region(model));
    const auto s0 = lk::io::seed_from_json(lk::io::load_json_argument(seed_arg, "seed"), m);
    const auto tr = lk::integrate(m, s0, eta_end, step);
    Table t{{"eta", "t", "r", "phi", "theta", "dt", "dr", "dphi", "dtheta", "monitor_ht", "monitor_L", "monitor_E"}, {}};
    for (const auto& smp : tr.samples) {
        const auto& s = smp.state;
        t.rows.push_back({num(s.eta), num(s.t), num(s.r), num(s.phi), num(s.theta), num(s.dt), num(s.dr),
                          num(s.dphi), num(s.dtheta), num(smp.monitor.ht), num(smp.monitor.L), num(smp.monitor.E)});
    }
    Emitter(g).table(t);
    if (tr.left_domain) std::cerr << "note: trajectory left the model domain, output truncated\n";
}

void cmd_geodesic_circular(const Globals& g, const std::string& model, double r) {
    const auto region = lk::parse_region(model);
    if (region == lk::Region::Interior) {
        const auto v = lk::interior_circular_verdict(r);
        Json j = Json::object();
        j["model"] = "interior";
        j["r0"] = v.r0;
        j["verdict"] = v.impossible ? "impossible" : "possible";
        j["gamma1_00"] = v.gamma1_00;
        j["gamma1_33"] = v.gamma1_33;
        j["dt_deta"] = v.dt_deta;
        j["trace"] = v.trace;
        throw ValidationFailure{std::move(j)};
    }
    const auto c = lk::circular_orbit(r);
    Json j = Json::object();
    j["model"] = "exterior";
    j["r"] = c.r;
    j["L"] = c.L;
    j["v_orb"] = c.v_orb;
    j["residual"] = c.residual;
    j["period_t"] = c.period_t;
    j["period_eta"] = c.period_eta;
    j["energy"] = c.energy;
    Emitter(g).report(j);
}

void cmd_geodesic_radial(const Globals& g, double b2, double from, double to) {
    Json j = Json::object();
    j["b2"] = b2;
    j["from"] = from;
    j["to"] = to;
    j["newton_time"] = lk::timelike_radial_quadrature(b2, from, to);
    const auto mx = lk::radial_speed_maximum(b2);
    j["speed_maximum"] = {{"r", mx.r}, {"impedance", mx.impedance}, {"speed", mx.speed}};
    Emitter(g).report(j);
}

void cmd_geodesic_verdict(const Globals& g, double r0) {
    const auto v = lk::interior_circular_verdict(r0);
    Json j = Json::object();
    j["r0"] = v.r0;
    j["verdict"] = v.impossible ? "impossible" : "possible";
    j["gamma1_00"] = v.gamma1_00;
    j["gamma1_33"] = v.gamma1_33;
    j["dt_deta"] = v.dt_deta;
    j["trace"] = v.trace;
    Emitter(g).report(j);
}

// ---- bohr ------------------------------------------------------------------------------

void cmd_bohr_spectrum(const Globals& g, int Z, int n_max) {
    const auto k = load_constants(g);
    if (n_max < 0) lk::fail(lk::ErrorKind::Domain, "n-max must be non-negative");
    Table t{{"Z", "n_from", "n_to", "energy_J", "frequency_Hz", "wavelength_m"}, {}};
    for (int n = 1; n <= n_max; ++n) {
        const auto line = lk::bohr::transition_energy(k, Z, n);
        t.rows.push_back({std::to_string(line.Z), std::to_string(line.n_from), std::to_string(line.n_to),
                          num(line.energy), num(line.frequency), num(line.wavelength)});
    }
    Emitter(g).table(t);
    if (lk::bohr::superluminal(k, Z)) std::cerr << "note: orbital speed at n = 1 reaches c for Z = " << Z << "\n";
}

void cmd_bohr_masses(const Globals& g) {
    const auto k = load_constants(g);
    const auto m = lk::bohr::mass_estimates(k);
    const auto s = lk::bohr::scale_relations(k);
    Json j = Json::object();
    j["beta_hat_physical"] = lk::bohr::beta_hat_physical(k);
    j["beta_hat_rational"] = m.beta_hat;
    j["phi_I"] = m.phi_I;
    j["M_check_over_me"] = m.M_check_over_me;
    j["M_proton_over_me"] = m.M_proton_over_me;
    j["M_check_kg"] = m.M_check_kg;
    j["neutron_ratio_rounded"] = m.neutron_ratio_rounded;
    j["neutron_ratio_computed"] = m.neutron_ratio_computed;
    j["b2_fit"] = m.b2_fit;
    j["b2_fit_gap"] = m.b2_fit_gap;
    j["a0"] = s.a0;
    j["ionization_energy"] = lk::bohr::ionization_energy(k, 1);
    j["scale_relations_max_residual"] = s.max_relative_residual;
    Emitter(g).report(j);
}

int error_exit(const lk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == lk::ErrorKind::Io ? kExitIo : kExitData;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lorentzkit: Lorentzian geometry toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_help_all_flag("--help-all", "Expand all help");

    Globals g;
    app.add_option("--constants", g.constants_path, "JSON file overriding physical constants");
    app.add_option("--tolerance", g.tolerance_arg, "Tolerance overrides, inline JSON or a JSON file");
    app.add_option("--out", g.out_path, "Output path (default stdout)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    std::function<void()> action;

    // cone
    auto* cone = app.add_subcommand("cone", "Light-cone sections")->require_subcommand(1);
    auto* cone_sec = cone->add_subcommand("section", "Sphere and projected-ellipse samples");
    double cone_a = 1.0;
    double cone_phi = 0.5;
    std::size_t cone_samples = 16;
    cone_sec->add_option("--a", cone_a, "Section height")->required();
    cone_sec->add_option("--phi", cone_phi, "Observer hyperbolic angle")->required();
    cone_sec->add_option("--samples", cone_samples, "Samples per curve")->check(CLI::Range(3, 1000000));
    cone_sec->callback([&] { action = [&] { cmd_cone_section(g, cone_a, cone_phi, cone_samples); }; });

    // kepler
    auto* kep = app.add_subcommand("kepler", "Newtonian orbit checks")->require_subcommand(1);
    auto* kep_check = kep->add_subcommand("check", "Areal velocity and third-law ratios of sampled orbits");
    std::vector<std::string> kep_paths;
    kep_check->add_option("--traj", kep_paths, "CSV with columns t,r,theta (repeatable)")->required();
    kep_check->callback([&] { action = [&] { cmd_kepler_check(g, kep_paths); }; });

    // metric
    auto* met = app.add_subcommand("metric", "Metric models")->require_subcommand(1);
    auto* met_tab = met->add_subcommand("table", "Metric components and Christoffel symbols");
    std::string met_model = "exterior";
    double met_r = 0.0;
    double met_phi = std::numbers::pi / 2.0;
    met_tab->add_option("--model", met_model)->check(CLI::IsMember({"exterior", "interior"}));
    met_tab->add_option("--r", met_r)->required();
    met_tab->add_option("--phi", met_phi);
    met_tab->callback([&] { action = [&] { cmd_metric_table(g, met_model, met_r, met_phi); }; });

    // curvature
    auto* cur = app.add_subcommand("curvature", "Warped-product curvature")->require_subcommand(1);
    auto* cur_rep = cur->add_subcommand("report", "Curvature report at one radius");
    std::string cur_model = "interior";
    double cur_r = 0.0;
    double cur_k = 1.0;
    cur_rep->add_option("--model", cur_model)->check(CLI::IsMember({"exterior", "interior"}));
    cur_rep->add_option("--r", cur_r)->required();
    cur_rep->add_option("--k", cur_k, "Scale k in T = k G");
    cur_rep->callback([&] { action = [&] { cmd_curvature_report(g, cur_model, cur_r, cur_k); }; });
    auto* cur_ver = cur->add_subcommand("verify", "Curvature invariant suites");
    cur_ver->callback([&] {
        action = [&] { run_suites(g, {"interior_curvature", "exterior_ricci_flat", "immersion_pullbacks"}); };
    });

    // geodesic
    auto* geo = app.add_subcommand("geodesic", "Geodesics")->require_subcommand(1);
    auto* geo_tr = geo->add_subcommand("trace", "Integrate a geodesic from a JSON seed");
    std::string geo_model = "exterior";
    std::string geo_seed;
    double geo_eta_end = 10.0;
    double geo_step = lk::kDefaultStep;
    geo_tr->add_option("--model", geo_model)->check(CLI::IsMember({"exterior", "interior"}));
    geo_tr->add_option("--seed", geo_seed, "Seed JSON (inline or file)")->required();
    geo_tr->add_option("--eta-end", geo_eta_end);
    geo_tr->add_option("--step", geo_step);
    geo_tr->callback([&] { action = [&] { cmd_geodesic_trace(g, geo_model, geo_seed, geo_eta_end, geo_step); }; });

    auto* geo_circ = geo->add_subcommand("circular", "Circular equatorial orbit");
    std::string circ_model = "exterior";
    double circ_r = 3.0;
    geo_circ->add_option("--r", circ_r)->required();
    geo_circ->add_option("--model", circ_model)->check(CLI::IsMember({"exterior", "interior"}));
    geo_circ->callback([&] { action = [&] { cmd_geodesic_circular(g, circ_model, circ_r); }; });

    auto* geo_rad = geo->add_subcommand("radial", "Newton-time quadrature for radial infall");
    double rad_b2 = 1.0;
    double rad_from = 1.0;
    double rad_to = 4.0;
    geo_rad->add_option("--b2", rad_b2)->required();
    geo_rad->add_option("--from", rad_from)->required();
    geo_rad->add_option("--to", rad_to)->required();
    geo_rad->callback([&] { action = [&] { cmd_geodesic_radial(g, rad_b2, rad_from, rad_to); }; });

    auto* geo_ver = geo->add_subcommand("verdict-interior", "Interior circular-orbit verdict");
    double ver_r0 = 0.5;
    geo_ver->add_option("--r0", ver_r0)->required();
    geo_ver->callback([&] { action = [&] { cmd_geodesic_verdict(g, ver_r0); }; });

    // bohr
    auto* bohr = app.add_subcommand("bohr", "Bohr Z-atom")->require_subcommand(1);
    auto* bohr_sp = bohr->add_subcommand("spectrum", "Lines n -> n+1 for n = 1..n-max");
    int sp_Z = 1;
    int sp_nmax = 5;
    bohr_sp->add_option("--Z", sp_Z)->required();
    bohr_sp->add_option("--n-max", sp_nmax)->required();
    bohr_sp->callback([&] { action = [&] { cmd_bohr_spectrum(g, sp_Z, sp_nmax); }; });
    auto* bohr_m = bohr->add_subcommand("masses", "Impedance-based mass arithmetic");
    bohr_m->callback([&] { action = [&] { cmd_bohr_masses(g); }; });

    // validate
    auto* val = app.add_subcommand("validate", "Run the validation suites");
    std::vector<std::string> val_suites;
    val->add_option("--suite", val_suites, "Run only these suites (repeatable)");
    val->callback([&] { action = [&] { run_suites(g, val_suites); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const ValidationFailure& f) {
        std::cerr << f.report.dump(2) << "\n";
        return kExitValidation;
    } catch (const lk::Error& e) {
        return error_exit(e);
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
