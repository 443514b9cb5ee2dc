// Command-line front end. Subcommands:
//
//   flow            integrate the first-order system, residuals per step
//   classify        branch and bolt data for given (k, kappa, f_norm)
//   metric          sample metric coefficients (family or chart form)
//   verify          targeted checks: ricci | holonomy | cayley | superpotential
//   harmonic        middle-form profiles, L2 integral, transport check
//   phase-portrait  vector field grid and overlay trajectories
//   report          the full acceptance dossier
//
// CSV has a single header row; floats carry 17 significant digits, so
// identical invocations give bit-identical files. Exit codes: 0 success,
// 1 usage or config error, 2 numerical or domain failure. Relative --out
// paths land in $SPIN7_OUT_DIR when that is set.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spin7/acceptance.hpp"
#include "spin7/closed_form.hpp"
#include "spin7/curvature.hpp"
#include "spin7/families.hpp"
#include "spin7/flow.hpp"
#include "spin7/harmonic.hpp"
#include "spin7/ode.hpp"
#include "spin7/sweep.hpp"

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("SPIN7_OUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

// stream to --out if given, else stdout
struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    bool ok = true;

    explicit OutStream(const std::string& path) {
        if (path.empty()) return;
        std::string full = resolve_out(path);
        file.open(full);
        if (!file) {
            std::cerr << "cannot open output file: " << full << "\n";
            ok = false;
            return;
        }
        os = &file;
    }
    std::ostream& get() { return *os; }
};

spin7::Family parse_family(const std::string& name) {
    if (name == "A8") return spin7::Family::A8;
    if (name == "B8") return spin7::Family::B8;
    if (name == "SpinBundle") return spin7::Family::SpinBundle;
    if (name == "G2Circle") return spin7::Family::G2Circle;
    throw CLI::ValidationError("--family", "unknown family: " + name);
}

// ---- flow -------------------------------------------------------------------

int cmd_flow(double a0, double b0, double c0, double t0, double t1, double tol,
             const std::string& out) {
    if (!std::isfinite(a0) || !std::isfinite(b0) || !std::isfinite(c0) ||
        !std::isfinite(t0) || !std::isfinite(t1) || t1 == t0 || tol <= 0) {
        std::cerr << "flow: need finite initial data, t1 != t0 and a positive "
                     "tolerance\n";
        return 1;
    }
    OutStream o(out);
    if (!o.ok) return 1;

    std::vector<spin7::FlowState> path;
    bool singular = false;
    auto rhs = [](double, const std::array<double, 3>& y) {
        return spin7::flow_rhs(y[0], y[1], y[2]);
    };
    std::array<double, 3> y = {a0, b0, c0};
    double t = t0;
    const int segments = 64;
    path.push_back({t, y[0], y[1], y[2]});
    for (int s = 0; s < segments && !singular; ++s) {
        double tb = t0 + (t1 - t0) * (s + 1) / segments;
        try {
            auto res = spin7::integrate_ode<3>(rhs, y, t, tb, 1e-10, 1e-13);
            for (std::size_t i = 1; i < res.t.size(); ++i)
                path.push_back({res.t[i], res.y[i][0], res.y[i][1], res.y[i][2]});
            y = res.y.back();
            t = res.t.back();
            // an integrator that stops short has hit a singular point
            if (std::fabs(tb - t) > 1e-9 * std::fabs(t1 - t0)) singular = true;
        } catch (const std::exception&) {
            singular = true;
        }
        if (!std::isfinite(y[0]) || !std::isfinite(y[1]) || !std::isfinite(y[2]))
            singular = true;
    }

    o.get() << "t,a,b,c,ricci_residual,el_residual,TplusV\n";
    double worst = 0;
    for (const auto& st : path) {
        spin7::TriadJet<double> tj = spin7::flow_jets(st.a, st.b, st.c);
        double rr = spin7::ricci_flat_residual(tj);
        auto el3 = spin7::euler_lagrange_residual(tj);
        double el = std::max({el3[0], el3[1], el3[2]});
        double tv = spin7::energy_residual(st.a, st.b, st.c);
        worst = std::max({worst, rr, el});
        o.get() << fmt(st.t) << ',' << fmt(st.a) << ',' << fmt(st.b) << ','
                << fmt(st.c) << ',' << fmt(rr) << ',' << fmt(el) << ',' << fmt(tv)
                << '\n';
    }
    if (singular) {
        std::cerr << "flow: trajectory became singular near t = " << fmt(t)
                  << "; output is partial\n";
        return 2;
    }
    if (worst >= tol) {
        std::cerr << "flow: residuals reached " << fmt(worst) << " (tolerance "
                  << fmt(tol) << ")\n";
        return 2;
    }
    return 0;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(double k, std::optional<double> kappa, double f_norm,
                 bool negative_v, bool, const std::string& out) {
    if (k < 0) {
        std::cerr << "classify: k must be nonnegative\n";
        return 1;
    }
    spin7::SolutionParams p;
    p.k = k;
    p.kappa = kappa;
    p.f_norm = f_norm;
    p.negative_v = negative_v;
    nlohmann::json j;
    try {
        spin7::Classification c = spin7::classify(p);
        j["branch"] = spin7::branch_name(c.branch);
        j["k"] = k;
        if (kappa) j["kappa"] = *kappa;
        j["f_norm"] = f_norm;
        if (c.branch == spin7::Branch::B8minus) j["z0"] = c.bolt_coord;
        if (c.branch == spin7::Branch::B8plus) j["y0"] = c.bolt_coord;
        j["bolt"] = {{"v_residual", c.bolt_v_residual},
                     {"s4_radius_sq", c.s4_radius_sq}};
        j["circle_radius_sq"] = c.circle_radius_sq;
    } catch (const std::exception& e) {
        std::cerr << "classify: " << e.what() << "\n";
        return 2;
    }
    OutStream o(out);
    if (!o.ok) return 1;
    o.get() << j.dump(2) << "\n";
    return 0;
}

// ---- metric -----------------------------------------------------------------

int cmd_metric(const std::string& family, double scale, double k,
               std::optional<double> kappa, double f_norm, double r_min,
               double r_max, int samples, const std::string& out) {
    if (samples < 2 || !(r_min < r_max)) {
        std::cerr << "metric: need --samples >= 2 and --r-min < --r-max\n";
        return 1;
    }
    OutStream o(out);
    if (!o.ok) return 1;

    try {
        if (!family.empty()) {
            spin7::MetricFamily mf(parse_family(family), scale);
            if (r_min <= mf.r_min()) {
                std::cerr << "metric: range must stay above r = " << fmt(mf.r_min())
                          << " for this family\n";
                return 1;
            }
            o.get() << "r,g_rr,coef_S4,coef_R12,coef_R3,a,b,c\n";
            for (int i = 0; i < samples; ++i) {
                double r = r_min + (r_max - r_min) * i / (samples - 1);
                spin7::MetricSample s = mf.sample(r);
                o.get() << fmt(r) << ',' << fmt(s.g_rr) << ',' << fmt(s.coef_S4)
                        << ',' << fmt(s.coef_R12) << ',' << fmt(s.coef_R3) << ','
                        << fmt(s.triad.a) << ',' << fmt(s.triad.b) << ','
                        << fmt(s.triad.c) << '\n';
            }
            return 0;
        }
        if (k == 0 && !kappa) {
            std::cerr << "metric: pass --family, or --k/--kappa for the chart "
                         "form\n";
            return 1;
        }
        spin7::SolutionParams p;
        p.k = k;
        p.kappa = kappa;
        p.f_norm = f_norm;
        o.get() << "coord,v,g_chart,coef_S4,coef_R12,coef_R3\n";
        for (int i = 0; i < samples; ++i) {
            double x = r_min + (r_max - r_min) * i / (samples - 1);
            spin7::MetricPointZV m = spin7::metric_from_zv(p, x);
            o.get() << fmt(x) << ',' << fmt(m.v) << ',' << fmt(m.g_chart) << ','
                    << fmt(m.coef_S4) << ',' << fmt(m.coef_R12) << ','
                    << fmt(m.coef_R3) << '\n';
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "metric: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "metric: " << e.what() << "\n";
        return 2;
    }
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& mode, bool json, const std::string& out) {
    std::vector<int> ids;
    if (mode == "superpotential") ids = {1};
    else if (mode == "ricci") ids = {2, 3};
    else if (mode == "holonomy") ids = {7};
    else if (mode == "cayley") ids = {8};
    else {
        std::cerr << "verify: mode must be ricci, holonomy, cayley or "
                     "superpotential\n";
        return 1;
    }
    OutStream o(out);
    if (!o.ok) return 1;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (int id : ids) {
        spin7::CriterionResult r = spin7::run_criterion(id);
        all = all && r.pass;
        if (json)
            arr.push_back({{"id", r.id}, {"label", r.label}, {"pass", r.pass},
                           {"detail", r.detail}});
        else
            o.get() << (r.pass ? "PASS" : "FAIL") << "  " << r.label << ": "
                    << r.detail << "\n";
    }
    if (json) o.get() << arr.dump(2) << "\n";
    return all ? 0 : 2;
}

// ---- harmonic ---------------------------------------------------------------

int cmd_harmonic(const std::string& family, const std::string& label, double r_min,
                 double r_max, int samples, const std::string& out) {
    spin7::Family fam;
    try {
        fam = parse_family(family.empty() ? "A8" : family);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "harmonic: " << e.what() << "\n";
        return 1;
    }
    if (fam != spin7::Family::A8 && fam != spin7::Family::B8) {
        std::cerr << "harmonic: profiles exist for the A8 and B8 families\n";
        return 1;
    }
    spin7::DualityLabel lab =
        label == "plus" ? spin7::DualityLabel::Plus : spin7::DualityLabel::Minus;
    if (label != "plus" && label != "minus") {
        std::cerr << "harmonic: --label must be minus or plus\n";
        return 1;
    }
    double bolt = fam == spin7::Family::A8 ? 1.0 : 3.0;
    if (r_min <= 0) r_min = bolt + 0.05;
    if (r_max <= 0) r_max = 30.0;
    if (!(r_min > bolt) || !(r_max > r_min) || samples < 2) {
        std::cerr << "harmonic: need bolt < r_min < r_max and samples >= 2\n";
        return 1;
    }

    nlohmann::json j;
    j["family"] = spin7::MetricFamily(fam).name();
    j["label"] = spin7::duality_name(lab);
    bool norm = spin7::normalisable(fam, lab);
    j["normalisable"] = norm;

    if (norm && !out.empty()) {
        OutStream o(out);
        if (!o.ok) return 1;
        o.get() << "r,u1,u2,u3,norm_sq\n";
        for (int i = 0; i < samples; ++i) {
            double r = r_min * std::pow(r_max / r_min, double(i) / (samples - 1));
            auto u = spin7::middle_form_profile<double>(fam, lab, r);
            o.get() << fmt(r) << ',' << fmt(u[0]) << ',' << fmt(u[1]) << ','
                    << fmt(u[2]) << ',' << fmt(spin7::profile_norm_squared(u))
                    << '\n';
        }
    }

    try {
        spin7::TransportResult tr = spin7::transport_from_infinity(fam, lab);
        j["transport"] = {{"l2", tr.l2},
                          {"match_error", tr.match_error},
                          {"matched_constant", tr.matched_constant},
                          {"note", tr.note}};
        if (norm) {
            j["l2_integral"] = spin7::l2_norm_integral(fam, lab);
            auto rel = spin7::relation_probe(fam, lab);
            j["relation"] = {{"exists", rel.has_relation}};
            if (rel.has_relation)
                j["relation"]["coefficients"] = {rel.coeffs[0], rel.coeffs[1],
                                                 rel.coeffs[2]};
        }
    } catch (const std::exception& e) {
        std::cerr << "harmonic: " << e.what() << "\n";
        return 2;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---- phase portrait -----------------------------------------------------------

int cmd_phase_portrait(double z_min, double z_max, double v_min, double v_max,
                       int nz, int nv, const std::string& out,
                       const std::string& overlay) {
    if (nz < 1 || nv < 1 || !(z_min < z_max) || !(v_min < v_max)) {
        std::cerr << "phase-portrait: need a nonempty grid with ordered bounds\n";
        return 1;
    }
    OutStream o(out);
    if (!o.ok) return 1;
    auto rows = spin7::phase_portrait_grid(z_min, z_max, v_min, v_max, nz, nv, true);
    o.get() << "z,v,dz_dtau,dv_dtau\n";
    for (const auto& r : rows)
        o.get() << fmt(r[0]) << ',' << fmt(r[1]) << ',' << fmt(r[2]) << ','
                << fmt(r[3]) << '\n';

    if (!overlay.empty()) {
        OutStream ov(overlay);
        if (!ov.ok) return 1;
        ov.get() << "branch,z,v\n";
        auto emit = [&ov](const std::string& name, double z, double v) {
            ov.get() << name << ',' << fmt(z) << ',' << fmt(v) << '\n';
        };
        // the two elementary families fill the invariant line z = 1
        for (int i = 0; i < 50; ++i) {
            double v = -2.0 - 8.0 * i / 49.0;
            emit("A8", 1.0, v);
        }
        for (int i = 0; i < 50; ++i) {
            double v = 2.0 + 8.0 * i / 49.0;
            emit("B8", 1.0, v);
        }
        try {
            for (double k : {0.5, 1.0, 2.0}) {
                double z0 = spin7::bolt_z(k);
                std::string name = "B8minus_k=" + fmt(k);
                for (int i = 0; i < 50; ++i) {
                    double gap = (1.0 - z0) * std::pow(1e-3 / (1.0 - z0), i / 49.0);
                    double z = 1.0 - gap;
                    emit(name, z, spin7::v_of_z(z, k));
                }
            }
            for (double kap : {-1.0, 0.0, 1.5}) {
                double y0 = spin7::bolt_y(kap);
                std::string name = "B8plus_kappa=" + fmt(kap);
                for (int i = 0; i < 50; ++i) {
                    double y = (y0 + 1e-3) +
                               (0.999 - y0 - 1e-3) * i / 49.0;
                    emit(name, 1.0 / y, spin7::v_of_y(y, kap));
                }
            }
        } catch (const std::exception& e) {
            std::cerr << "phase-portrait: " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

// ---- report -----------------------------------------------------------------

int cmd_report(bool json, const std::string& out) {
    OutStream o(out);
    if (!o.ok) return 1;
    if (json) {
        std::string doc = spin7::acceptance_report_json();
        o.get() << doc << "\n";
        auto j = nlohmann::json::parse(doc);
        if (j["all_pass"].get<bool>()) return 0;
        std::cerr << "report: failing criteria:";
        for (const auto& c : j["criteria"])
            if (!c["pass"].get<bool>()) std::cerr << " " << c["id"].get<int>();
        std::cerr << "\n";
        return 2;
    }
    auto results = spin7::run_acceptance();
    spin7::MutationCheck mc = spin7::run_mutation_check();
    bool all = true;
    std::vector<int> failing;
    for (const auto& r : results) {
        all = all && r.pass;
        if (!r.pass) failing.push_back(r.id);
        o.get() << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.label
                << ": " << r.detail << "\n";
    }
    o.get() << (mc.detected ? "PASS" : "FAIL")
            << "  mutation check: a flipped sign moves the gradient by "
            << fmt(mc.gradient_mismatch) << " and the Ricci residual to "
            << fmt(mc.ricci_residual) << "\n";
    all = all && mc.detected;
    if (!all) {
        std::cerr << "report: failing criteria:";
        for (int id : failing) std::cerr << " " << id;
        if (!mc.detected) std::cerr << " mutation";
        std::cerr << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomogeneity-one metrics with an invariant 4-form: flows, "
                 "closed forms, classification and verification"};
    app.require_subcommand(1);
    app.set_config("--config");

    // flow
    auto* flow = app.add_subcommand("flow", "integrate the first-order system");
    double a0 = 1, b0 = -0.5, c0 = 1, t0 = 0, t1 = 1, tol = 1e-8;
    std::string flow_out;
    flow->add_option("--a0", a0, "initial a");
    flow->add_option("--b0", b0, "initial b (sign selects the family)");
    flow->add_option("--c0", c0, "initial c");
    flow->add_option("--t0", t0, "start time");
    flow->add_option("--t1", t1, "end time")->required();
    flow->add_option("--tol", tol, "pass threshold for the residual columns");
    flow->add_option("--out", flow_out, "CSV path (default stdout)");

    // classify
    auto* cls = app.add_subcommand("classify", "branch for given constants");
    double k = 0, f_norm = 1;
    std::optional<double> kappa;
    bool negative_v = false, cls_json = true;
    std::string cls_out;
    cls->add_option("--k", k, "z-chart constant (k >= 0)");
    cls->add_option("--kappa", kappa, "y-chart constant; selects the y-chart");
    cls->add_option("--f-norm", f_norm, "overall scale of f");
    cls->add_flag("--negative-v", negative_v, "k = 0: pick the nut branch");
    cls->add_option("--out", cls_out, "JSON path (default stdout)");

    // metric
    auto* met = app.add_subcommand("metric", "sample metric coefficients");
    std::string met_family, met_out;
    double met_scale = 1, met_k = 0, met_fnorm = 1, r_min = 0, r_max = 0;
    std::optional<double> met_kappa;
    int met_samples = 100;
    met->add_option("--family", met_family, "A8, B8, SpinBundle or G2Circle");
    met->add_option("--scale", met_scale, "family scale parameter");
    met->add_option("--k", met_k, "chart form: z-chart constant");
    met->add_option("--kappa", met_kappa, "chart form: y-chart constant");
    met->add_option("--f-norm", met_fnorm, "chart form: scale of f");
    met->add_option("--r-min", r_min, "range start (r, z or y)")->required();
    met->add_option("--r-max", r_max, "range end")->required();
    met->add_option("--samples", met_samples, "number of rows");
    met->add_option("--out", met_out, "CSV path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run one targeted check");
    std::string ver_mode, ver_out;
    bool ver_json = false;
    ver->add_option("mode", ver_mode, "ricci | holonomy | cayley | superpotential")
        ->required();
    ver->add_flag("--json", ver_json, "emit JSON instead of text");
    ver->add_option("--out", ver_out, "output path (default stdout)");

    // harmonic
    auto* har = app.add_subcommand("harmonic", "middle-form profiles and integrals");
    std::string har_family = "A8", har_label = "minus", har_out;
    double har_rmin = 0, har_rmax = 0;
    int har_samples = 100;
    har->add_option("--family", har_family, "A8 or B8");
    har->add_option("--label", har_label, "minus or plus (star eigenvalue class)");
    har->add_option("--r-min", har_rmin, "profile range start (default near bolt)");
    har->add_option("--r-max", har_rmax, "profile range end (default 30)");
    har->add_option("--samples", har_samples, "number of CSV rows");
    har->add_option("--out", har_out, "profile CSV path (summary JSON on stdout)");

    // phase-portrait
    auto* php = app.add_subcommand("phase-portrait", "vector field of the v equation");
    double z_lo = -1.5, z_hi = 1.5, v_lo = -6, v_hi = 6;
    int nz = 60, nv = 60;
    std::string php_out, php_overlay;
    php->add_option("--z-min", z_lo, "grid start in z");
    php->add_option("--z-max", z_hi, "grid end in z");
    php->add_option("--v-min", v_lo, "grid start in v");
    php->add_option("--v-max", v_hi, "grid end in v");
    php->add_option("--nz", nz, "grid cells in z");
    php->add_option("--nv", nv, "grid cells in v");
    php->add_option("--out", php_out, "field CSV path (default stdout)");
    php->add_option("--trajectories", php_overlay,
                    "also write overlay trajectories to this CSV");

    // report
    auto* rep = app.add_subcommand("report", "full acceptance dossier");
    bool rep_json = false;
    std::string rep_out;
    rep->add_flag("--json", rep_json, "emit the JSON document");
    rep->add_option("--out", rep_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // every usage problem maps to the same code
    }

    try {
        if (*flow) return cmd_flow(a0, b0, c0, t0, t1, tol, flow_out);
        if (*cls) return cmd_classify(k, kappa, f_norm, negative_v, cls_json, cls_out);
        if (*met)
            return cmd_metric(met_family, met_scale, met_k, met_kappa, met_fnorm,
                              r_min, r_max, met_samples, met_out);
        if (*ver) return cmd_verify(ver_mode, ver_json, ver_out);
        if (*har)
            return cmd_harmonic(har_family, har_label, har_rmin, har_rmax,
                                har_samples, har_out);
        if (*php)
            return cmd_phase_portrait(z_lo, z_hi, v_lo, v_hi, nz, nv, php_out,
                                      php_overlay);
        if (*rep) return cmd_report(rep_json, rep_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
