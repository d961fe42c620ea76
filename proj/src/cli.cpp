#include "wirtlab/cli.hpp"

#include "wirtlab/coefficients.hpp"
#include "wirtlab/convex.hpp"
#include "wirtlab/curve.hpp"
#include "wirtlab/errors.hpp"
#include "wirtlab/json_io.hpp"
#include "wirtlab/report.hpp"
#include "wirtlab/trig.hpp"
#include "wirtlab/wirtinger.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace wirtlab::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

/// 17 significant digits, round-trip safe; used for all CSV output.
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int verdict_exit(const std::vector<InequalityReport>& rows) {
    for (const auto& r : rows)
        if (r.failed()) return kExitFail;
    return kExitPass;
}

// --------------------------------------------------------------------------
// coeffs
// --------------------------------------------------------------------------

int run_coeffs(int m, const std::string& format, std::ostream& out) {
    const auto table = CoefficientTable::make(m);
    if (format == "csv") {
        out << "k,c,lambda,S\n";
        for (int k = 0; k <= m; ++k) {
            out << k << "," << table.c[static_cast<std::size_t>(k)].str() << ",";
            if (k < m) out << table.lambda[static_cast<std::size_t>(k)].str();
            out << ",";
            if (k < m) out << table.S[static_cast<std::size_t>(k)].str();
            out << "\n";
        }
    } else {
        out << table_to_json(table).dump(2) << "\n";
    }
    return kExitPass;
}

// --------------------------------------------------------------------------
// verify-wirtinger
// --------------------------------------------------------------------------

WirtingerForm parse_form(const std::string& name) {
    if (name == "b") return WirtingerForm::B;
    if (name == "c") return WirtingerForm::C;
    return WirtingerForm::A;
}

std::vector<InequalityReport> wirtinger_rows(const WirtingerAudit& a, bool with_sandwich,
                                             const std::string& form_label, bool all_forms) {
    std::vector<InequalityReport> rows;
    const auto add = [&](const std::string& name, double lhs, double rhs, const char* src) {
        rows.push_back(InequalityReport::make(name, lhs, rhs, a.atol, a.rtol, src));
    };
    const std::string order = "order-" + std::to_string(a.m);
    if (all_forms || form_label == "a")
        add(order + " wirtinger functional (form a)", 0.0, a.form_a,
            "higher-order Wirtinger inequality, central factorial form");
    if (all_forms || form_label == "b")
        add(order + " wirtinger functional (form b)", 0.0, a.form_b,
            "higher-order Wirtinger inequality, difference form");
    if (all_forms || form_label == "c")
        add(order + " wirtinger functional (form c)", 0.0, a.form_c,
            "higher-order Wirtinger inequality, telescoped form");
    add(order + " three-form agreement (a vs b)", a.form_a, a.form_b,
        "equivalence of the three functional forms");
    add(order + " three-form agreement (b vs c)", a.form_b, a.form_c,
        "equivalence of the three functional forms");
    add(order + " certificate agreement", a.form_a, a.certificate,
        "Parseval expansion of the functional");
    if (with_sandwich)
        add(order + " sandwich (form " + form_label + ")", a.sandwich.lower, a.sandwich.upper,
            "reverse refinement of the order-m inequality");
    return rows;
}

int run_verify_wirtinger(int m, const std::string& input, int random_count, int random_degree,
                         std::uint64_t seed, const std::string& form_label, bool with_sandwich,
                         std::ostream& out) {
    const WirtingerForm form = parse_form(form_label == "all" ? "a" : form_label);
    const bool all_forms = form_label == "all";

    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        int fail_count = 0;
        int equality_count = 0;
        double max_disagreement = 0.0;
        double min_certificate_scaled = 0.0;
        double min_sandwich_scaled = 0.0;
        for (int i = 0; i < random_count; ++i) {
            const TrigSeries f = random_series(rng, random_degree, /*zero_mean=*/true);
            const WirtingerAudit a = audit(f, m, form);
            const auto rows = wirtinger_rows(a, with_sandwich, all_forms ? "a" : form_label,
                                             all_forms);
            for (const auto& r : rows) fail_count += r.failed() ? 1 : 0;
            if (a.equality) ++equality_count;
            const double scale = a.atol / a.rtol;
            max_disagreement = std::max({max_disagreement,
                                         std::abs(a.form_a - a.form_b) / scale,
                                         std::abs(a.form_b - a.form_c) / scale,
                                         std::abs(a.form_a - a.certificate) / scale});
            min_certificate_scaled = std::min(min_certificate_scaled, a.certificate / scale);
            min_sandwich_scaled =
                std::min(min_sandwich_scaled, (a.sandwich.upper - a.sandwich.lower) / scale);
        }
        Json j;
        j["mode"] = "random";
        j["m"] = m;
        j["count"] = random_count;
        j["degree"] = random_degree;
        j["seed"] = seed;
        j["failures"] = fail_count;
        j["equality_cases"] = equality_count;
        j["max_form_disagreement_scaled"] = max_disagreement;
        j["min_certificate_scaled"] = min_certificate_scaled;
        j["min_sandwich_gap_scaled"] = min_sandwich_scaled;
        out << j.dump(2) << "\n";
        return fail_count > 0 ? kExitFail : kExitPass;
    }

    const TrigSeries f = series_from_json(load_json_file(input));
    const WirtingerAudit a = audit(f, m, form);
    const auto rows = wirtinger_rows(a, with_sandwich, all_forms ? "a" : form_label, all_forms);
    Json j = wirtinger_audit_to_json(a);
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(report_to_json(r));
    j["inequalities"] = std::move(arr);
    out << j.dump(2) << "\n";
    return verdict_exit(rows);
}

// --------------------------------------------------------------------------
// curve-report
// --------------------------------------------------------------------------

void emit_curve_points(const PlaneCurve& c, int n, bool close, std::ostream& out) {
    out << "t,x,y\n";
    const int rows = close ? n + 1 : n;
    for (int j = 0; j < rows; ++j) {
        const double t = kTwoPi * (j % n) / n;
        const Vec2 p = c.point(t);
        out << fmt17(t) << "," << fmt17(p.x) << "," << fmt17(p.y) << "\n";
    }
}

int run_curve_report(const std::string& input, int grid, int emit_points, bool close,
                     std::ostream& out) {
    const PlaneCurve c = curve_from_json(load_json_file(input));
    if (emit_points >= 3) {
        emit_curve_points(c, emit_points, close, out);
        return kExitPass;
    }

    if (!simplicity_check(c, grid))
        throw GateError("simplicity", "curve: simplicity check failed (self-crossing found)");
    const CurveAudit a = thm31a_audit(c);
    const CurveIdentities ids = identity_checks(c);

    const double rtol = 1e-9;
    const double scale = 1.0 + a.L * a.L + std::abs(a.deficit) + a.T1 + a.T2 +
                         std::abs(a.sachs_gap) + std::abs(a.reverse_sachs_rhs);
    const double atol = rtol * scale;
    std::vector<InequalityReport> rows;
    rows.push_back(InequalityReport::make("sharpened isoperimetric", a.T1, a.deficit, atol, rtol,
                                          "Chakerian sharpened isoperimetric inequality"));
    rows.push_back(InequalityReport::make("deficit upper bound", a.deficit, a.T1 + a.T2, atol,
                                          rtol, "reverse bound on the isoperimetric deficit"));
    const double l3 = a.L * a.L * a.L / (4.0 * kPi * kPi);
    const double sachs_scale = rtol * (1.0 + l3 + std::abs(a.reverse_sachs_rhs));
    rows.push_back(InequalityReport::make("sachs", l3 - a.sachs_gap, l3, sachs_scale, rtol,
                                          "Sachs inequality"));
    rows.push_back(InequalityReport::make("reverse sachs", a.sachs_gap, a.reverse_sachs_rhs,
                                          sachs_scale, rtol, "reverse Sachs inequality"));

    std::vector<InequalityReport> identity_rows;
    const auto add_identity = [&](const std::string& name, CurveIdentities::Pair p,
                                  const char* src) {
        const double tol = rtol * (1.0 + std::max(std::abs(p.lhs), std::abs(p.rhs)));
        identity_rows.push_back(InequalityReport::make(name, p.lhs, p.rhs, tol, rtol, src));
    };
    add_identity("square expansion (curvature field)", ids.square_kappa,
                 "expansion of the squared distance to the curvature comparison field");
    add_identity("square expansion (normal field)", ids.square_normal,
                 "expansion of the squared distance to the normal comparison field");
    add_identity("minkowski formula", ids.minkowski, "Minkowski formula");
    add_identity("divergence identity", ids.divergence, "divergence theorem for the area");

    Json j = curve_audit_to_json(a);
    Json ineq = Json::array();
    for (const auto& r : rows) ineq.push_back(report_to_json(r));
    j["inequalities"] = std::move(ineq);
    Json idj = Json::array();
    for (const auto& r : identity_rows) idj.push_back(report_to_json(r));
    j["identities"] = std::move(idj);
    out << j.dump(2) << "\n";

    std::vector<InequalityReport> all = rows;
    all.insert(all.end(), identity_rows.begin(), identity_rows.end());
    // Identity rows must come out as equalities; anything else is a failure.
    for (const auto& r : identity_rows)
        if (r.verdict != Verdict::Equality) return kExitFail;
    return verdict_exit(rows);
}

// --------------------------------------------------------------------------
// convex-report
// --------------------------------------------------------------------------

void emit_convex_points(const SupportFunction& body, int n, bool close, std::ostream& out) {
    const PlaneCurve c = reconstruct_curve(body);
    const TrigSeries drho = derivative(body.rho());
    out << "theta,x,y,rho,drho_sq\n";
    const int rows = close ? n + 1 : n;
    for (int j = 0; j < rows; ++j) {
        const double t = kTwoPi * (j % n) / n;
        const Vec2 p = c.point(t);
        const double d = drho(t);
        out << fmt17(t) << "," << fmt17(p.x) << "," << fmt17(p.y) << "," << fmt17(body.rho()(t))
            << "," << fmt17(d * d) << "\n";
    }
}

std::vector<InequalityReport> convex_rows(const ConvexAudit& a) {
    std::vector<InequalityReport> rows;
    const std::string order = "order-" + std::to_string(a.m);
    if (a.odd)
        rows.push_back(InequalityReport::make(
            order + " deficit lower bound", a.bound, a.deficit, a.atol, 1e-9,
            "support-function deficit bound, odd order"));
    else
        rows.push_back(InequalityReport::make(
            order + " deficit upper bound", a.deficit, a.bound, a.atol, 1e-9,
            "support-function deficit bound, even order"));
    return rows;
}

std::vector<InequalityReport> reverse_rows(const ReverseIsoReport& r) {
    std::vector<InequalityReport> rows;
    const auto add = [&](const std::string& name, double lhs, double rhs, const char* src) {
        rows.push_back(InequalityReport::make(name, lhs, rhs, r.atol, 1e-9, src));
    };
    add("reverse isoperimetric (kappa^-5)", r.deficit, r.reverse01_rhs,
        "reverse isoperimetric inequality, fifth-power curvature weight");
    add("reverse isoperimetric (kappa^-3)", r.deficit, r.reverse02_rhs,
        "reverse isoperimetric inequality, third-power curvature weight");
    add("reverse isoperimetric (kappa^-2)", r.deficit, r.reverse03_rhs,
        "reverse isoperimetric inequality, second-power curvature weight");
    add("bernstein-mettler (kappa^-3)", r.bm_k3_rhs, r.bm_k3_lhs,
        "Bernstein-Mettler inequality (Benguria-Loss case)");
    add("bernstein-mettler (kappa^-2)", r.bm_k2_rhs, r.bm_k2_lhs,
        "Bernstein-Mettler inequality (Benguria-Loss case)");
    add("gage", r.gage_rhs, r.gage_lhs, "Gage inequality");
    return rows;
}

int run_convex_report(const std::string& input, int m, bool all_orders, int emit_points,
                      bool close, std::ostream& out) {
    const SupportFunction body = SupportFunction::make(series_from_json(load_json_file(input)));
    if (emit_points >= 3) {
        emit_convex_points(body, emit_points, close, out);
        return kExitPass;
    }

    const auto geom = support_geometry(body);
    Json j;
    j["L"] = geom.L;
    j["A"] = geom.A;
    j["deficit"] = geom.L * geom.L - 4.0 * kPi * geom.A;
    j["min_rho"] = body.min_rho();

    std::vector<InequalityReport> rows;
    Json audits = Json::array();
    const int m_lo = all_orders ? 1 : m;
    const int m_hi = all_orders ? 5 : m;
    for (int order = m_lo; order <= m_hi; ++order) {
        const ConvexAudit a = thm32_audit(body, order);
        Json aj = convex_audit_to_json(a);
        Json ineq = Json::array();
        for (const auto& r : convex_rows(a)) {
            ineq.push_back(report_to_json(r));
            rows.push_back(r);
        }
        aj["inequalities"] = std::move(ineq);
        audits.push_back(std::move(aj));
    }
    j["deficit_bounds"] = std::move(audits);

    const LinTsaiReport lt = lin_tsai_audit(body);
    Json ltj;
    ltj["inv_curv"] = lt.inv_curv;
    ltj["curv_variation"] = lt.curv_variation;
    ltj["middle"] = lt.middle;
    ltj["upper"] = lt.upper;
    {
        auto r1 = InequalityReport::make("lin-tsai", 0.0, lt.middle, lt.atol, 1e-9,
                                         "Lin-Tsai inequality");
        auto r2 = InequalityReport::make("lin-tsai stability", lt.middle, lt.upper, lt.atol,
                                         1e-9, "stability bound for the Lin-Tsai inequality");
        ltj["inequalities"] = Json::array({report_to_json(r1), report_to_json(r2)});
        rows.push_back(r1);
        rows.push_back(r2);
    }
    j["lin_tsai"] = std::move(ltj);

    const ReverseIsoReport rev = reverse_isoperimetric_audit(body);
    Json revj;
    revj["q_rho"] = rev.q_rho;
    revj["q_rho_ratio"] = rev.q_rho_ratio;
    revj["q_rho_cubed"] = rev.q_rho_cubed;
    revj["kappa_sq"] = rev.kappa_sq;
    Json revineq = Json::array();
    for (const auto& r : reverse_rows(rev)) {
        revineq.push_back(report_to_json(r));
        rows.push_back(r);
    }
    revj["inequalities"] = std::move(revineq);
    j["reverse_isoperimetric"] = std::move(revj);

    out << j.dump(2) << "\n";
    return verdict_exit(rows);
}

// --------------------------------------------------------------------------
// sweep
// --------------------------------------------------------------------------

int run_sweep(int degree, int count, std::uint64_t seed, int m, std::ostream& out) {
    std::mt19937_64 rng(seed);
    out << "index,L,A,deficit,thm32_bound,thm32_slack,lin_tsai_lower_slack,"
           "lin_tsai_upper_slack,reverse01_slack,reverse02_slack,reverse03_slack,"
           "bm_k3_slack,bm_k2_slack,gage_slack\n";
    bool any_fail = false;
    for (int i = 0; i < count; ++i) {
        const SupportFunction body = random_convex(rng, degree, 0.3);
        const ConvexAudit a = thm32_audit(body, m);
        const LinTsaiReport lt = lin_tsai_audit(body);
        const ReverseIsoReport rev = reverse_isoperimetric_audit(body);

        const double slacks[] = {a.slack,
                                 lt.lower_slack,
                                 lt.upper_slack,
                                 rev.reverse01_rhs - rev.deficit,
                                 rev.reverse02_rhs - rev.deficit,
                                 rev.reverse03_rhs - rev.deficit,
                                 rev.bm_k3_lhs - rev.bm_k3_rhs,
                                 rev.bm_k2_lhs - rev.bm_k2_rhs,
                                 rev.gage_lhs - rev.gage_rhs};
        const double atols[] = {a.atol,  lt.atol,  lt.atol,  rev.atol, rev.atol,
                                rev.atol, rev.atol, rev.atol, rev.atol};
        for (int k = 0; k < 9; ++k) any_fail = any_fail || slacks[k] < -atols[k];

        out << i << "," << fmt17(a.L) << "," << fmt17(a.A) << "," << fmt17(a.deficit) << ","
            << fmt17(a.bound) << "," << fmt17(slacks[0]) << "," << fmt17(slacks[1]) << ","
            << fmt17(slacks[2]) << "," << fmt17(slacks[3]) << "," << fmt17(slacks[4]) << ","
            << fmt17(slacks[5]) << "," << fmt17(slacks[6]) << "," << fmt17(slacks[7]) << ","
            << fmt17(slacks[8]) << "\n";
    }
    return any_fail ? kExitFail : kExitPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wirtlab: verify Wirtinger-type and isoperimetric-deficit inequalities"};
    app.require_subcommand(1);

    // coeffs
    int coeffs_m = 1;
    std::string coeffs_format = "json";
    auto* coeffs = app.add_subcommand("coeffs", "print the exact coefficient table for order m");
    coeffs->add_option("--m", coeffs_m, "order m >= 1")->required();
    coeffs->add_option("--format", coeffs_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify-wirtinger
    int vw_m = 1;
    std::string vw_input;
    std::string vw_form = "a";
    bool vw_sandwich = false;
    int vw_random = 0, vw_degree = 8;
    std::uint64_t vw_seed = 0;
    auto* vw = app.add_subcommand("verify-wirtinger",
                                  "audit the order-m functionals on a series");
    vw->add_option("--m", vw_m, "order m in 1..8")->required();
    vw->add_option("--input", vw_input, "series JSON file");
    vw->add_option("--form", vw_form, "a, b, c, or all")
        ->check(CLI::IsMember({"a", "b", "c", "all"}));
    vw->add_flag("--sandwich", vw_sandwich, "include the sandwich bounds");
    vw->add_option("--random", vw_random, "audit COUNT random zero-mean series instead");
    vw->add_option("--degree", vw_degree, "degree of the random series");
    vw->add_option("--seed", vw_seed, "random seed");

    // curve-report
    std::string cr_input;
    int cr_grid = 256, cr_points = 0;
    bool cr_close = false;
    auto* cr = app.add_subcommand("curve-report", "audit a closed plane curve");
    cr->add_option("--input", cr_input, "curve JSON file")->required();
    cr->add_option("--grid", cr_grid, "simplicity-check resolution")->check(CLI::Range(3, 1 << 20));
    cr->add_option("--emit-points", cr_points, "emit N boundary samples as CSV instead")
        ->check(CLI::Range(3, 1 << 24));
    cr->add_flag("--close", cr_close, "repeat the first emitted point as the last");

    // convex-report
    std::string cx_input;
    int cx_m = 3, cx_points = 0;
    bool cx_all = false, cx_close = false;
    auto* cx = app.add_subcommand("convex-report", "audit a convex body via its support function");
    cx->add_option("--support", cx_input, "support-function series JSON file")->required();
    cx->add_option("--m", cx_m, "order m in 1..8");
    cx->add_flag("--all", cx_all, "audit orders 1..5");
    cx->add_option("--emit-points", cx_points, "emit N boundary samples as CSV instead")
        ->check(CLI::Range(3, 1 << 24));
    cx->add_flag("--close", cx_close, "repeat the first emitted point as the last");

    // sweep
    int sw_degree = 6, sw_count = 10, sw_m = 3;
    std::uint64_t sw_seed = 0;
    auto* sw = app.add_subcommand("sweep", "CSV of audit slacks over a random convex corpus");
    sw->add_option("--degree", sw_degree, "support-function degree");
    sw->add_option("--count", sw_count, "number of instances")->required();
    sw->add_option("--seed", sw_seed, "random seed")->required();
    sw->add_option("--m", sw_m, "deficit-bound order");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return run_coeffs(coeffs_m, coeffs_format, out);
        if (vw->parsed()) {
            if (vw_random <= 0 && vw_input.empty()) {
                err << "error: verify-wirtinger needs --input or --random\n";
                return kExitUsage;
            }
            return run_verify_wirtinger(vw_m, vw_input, vw_random, vw_degree, vw_seed, vw_form,
                                        vw_sandwich, out);
        }
        if (cr->parsed()) return run_curve_report(cr_input, cr_grid, cr_points, cr_close, out);
        if (cx->parsed())
            return run_convex_report(cx_input, cx_m, cx_all, cx_points, cx_close, out);
        if (sw->parsed()) return run_sweep(sw_degree, sw_count, sw_seed, sw_m, out);
    } catch (const GateError& e) {
        err << "error: " << e.gate() << " gate: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand given\n";
    return kExitUsage;
}

} // namespace wirtlab::cli
