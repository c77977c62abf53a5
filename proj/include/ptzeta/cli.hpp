#pragma once

// Command-line front end. All units have hbar = 1; M is the arbitrary
// scale entering zeta as (M^2)^s. Output is buffered and only flushed on
// success (or on a verify failure, where the report must still appear),
// so invalid input never leaves partial CSV behind.
//
// Exit codes: 0 success, 2 invalid input, 1 numerical failure or failed
// verification checks.

#include <cstdarg>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptzeta/errors.hpp"
#include "ptzeta/heatkernel.hpp"
#include "ptzeta/model.hpp"
#include "ptzeta/verify.hpp"
#include "ptzeta/zeta.hpp"

namespace ptzeta::cli {

enum class Format { text, json, csv };

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline std::string num_csv(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

inline std::string num_txt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::text;
}

inline const char* rep_name(Representation r) {
    switch (r) {
        case Representation::integral: return "integral";
        case Representation::hypergeometric: return "hypergeometric";
        case Representation::mellin_numeric: return "mellin_numeric";
        case Representation::closed_form: return "closed_form";
    }
    return "unknown";
}

inline ordered_json spec_json(const OperatorSpec& s) {
    return ordered_json{{"n", s.n}, {"b", s.b}, {"lambda", s.lambda}, {"d", s.d}, {"M", s.M}};
}

// Closed forms track the derivative oracle to a few 1e-14 relative on the
// validation grid; quote a rounding-level estimate rather than pretending
// to an independent error bound.
inline double closed_form_err(const Correction& c) {
    return 1e-13 * std::max(1.0, std::abs(c.zeta_prime_zero));
}

inline void emit_correction_text(const Correction& c, double zeta0, std::ostream& out) {
    const OperatorSpec& s = c.spec;
    out << "spec: n=" << s.n << " b=" << num_txt(s.b) << " lambda=" << num_txt(s.lambda)
        << " d=" << s.d << " M=" << num_txt(s.M) << "\n";
    out << "zeta(0)       = " << num_txt(zeta0) << "\n";
    out << "zeta'(0)      = " << num_txt(c.zeta_prime_zero) << "\n";
    out << "delta_epsilon = " << num_txt(c.delta_epsilon) << "\n";
    out << "provenance: closed_form, err est " << num_txt(closed_form_err(c)) << "\n";
}

inline ordered_json correction_json(const Correction& c, double zeta0) {
    return ordered_json{
        {"spec", spec_json(c.spec)},
        {"results",
         {{"zeta0", zeta0}, {"dzeta0", c.zeta_prime_zero}, {"delta_epsilon", c.delta_epsilon}}},
        {"provenance", {{"representation", "closed_form"}, {"err_est", closed_form_err(c)}}},
    };
}

inline void emit_correction_csv_header(std::ostream& out) {
    out << "n,b,lambda,d,M,zeta0,dzeta0,delta_epsilon\n";
}

inline void emit_correction_csv_row(const Correction& c, double zeta0, std::ostream& out) {
    const OperatorSpec& s = c.spec;
    out << s.n << ',' << num_csv(s.b) << ',' << num_csv(s.lambda) << ',' << s.d << ','
        << num_csv(s.M) << ',' << num_csv(zeta0) << ',' << num_csv(c.zeta_prime_zero) << ','
        << num_csv(c.delta_epsilon) << "\n";
}

inline int emit_correction(const Correction& c, Format f, std::ostream& out) {
    const double zeta0 = zeta_at_zero(c.spec);
    if (f == Format::json)
        out << correction_json(c, zeta0).dump(2) << "\n";
    else if (f == Format::csv) {
        emit_correction_csv_header(out);
        emit_correction_csv_row(c, zeta0, out);
    } else
        emit_correction_text(c, zeta0, out);
    return 0;
}

inline void csv_quote(const std::string& s, std::ostream& out) {
    out << '"';
    for (char ch : s) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

// "a..b" (inclusive int range), "a,b,c" or a single value
inline std::vector<int> parse_int_range(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        std::size_t p1 = 0, p2 = 0;
        const int lo = std::stoi(text.substr(0, dots), &p1);
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &p2);
        if (p1 != dots || p2 != rest.size() || hi < lo)
            throw domain_error("malformed integer range: " + text);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        std::size_t used = 0;
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) throw domain_error("malformed integer list: " + text);
        out.push_back(std::stoi(item, &used));
        if (used != item.size()) throw domain_error("malformed integer list: " + text);
        pos = comma + 1;
    }
    if (out.empty()) throw domain_error("empty range: " + text);
    return out;
}

inline std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        std::size_t used = 0;
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) throw domain_error("malformed list: " + text);
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw domain_error("malformed list: " + text);
        pos = comma + 1;
    }
    if (out.empty()) throw domain_error("empty list: " + text);
    return out;
}

struct TraceArgs {
    std::string kind = "gamma0";
    double t_min = 0.0, t_max = 0.0;
    int points = 0;
    int n = 1;
    double b = 1.0;
    std::optional<double> lambda;
    int d = 1;
    double M = 1.0;
};

inline int run_trace(const TraceArgs& a, Format f, std::ostream& out) {
    TraceCurve curve;
    ordered_json head;
    if (a.kind == "gamma0") {
        const ReflectionlessPotential pot(a.n, a.b);
        curve = make_trace_curve(pot, a.t_min, a.t_max, a.points);
        head = ordered_json{{"kind", "gamma0"}, {"potential", {{"n", a.n}, {"b", a.b}}}};
    } else if (a.kind == "gamma-full") {
        // lambda defaults to the continuum edge n^2 b^2
        const double lam = a.lambda ? *a.lambda : double(a.n) * double(a.n) * a.b * a.b;
        const OperatorSpec spec(a.n, a.b, lam, a.d, a.M);
        curve = make_trace_curve(spec, a.t_min, a.t_max, a.points);
        head = ordered_json{{"kind", "gamma-full"}, {"spec", spec_json(spec)}};
    } else { // free-density
        curve = make_free_trace_curve(a.d, a.t_min, a.t_max, a.points);
        head = ordered_json{{"kind", "free-density"}, {"d", a.d}};
    }
    if (f == Format::csv)
        to_csv(curve, out);
    else if (f == Format::json) {
        auto samples = ordered_json::array();
        for (const auto& [t, v] : curve.samples)
            samples.push_back(ordered_json{{"t", t}, {"value", v}});
        head["samples"] = std::move(samples);
        out << head.dump(2) << "\n";
    } else {
        out << "t value\n";
        for (const auto& [t, v] : curve.samples) out << num_txt(t) << ' ' << num_txt(v) << "\n";
    }
    return 0;
}

inline int run_verify(const std::string& suite, bool paper_compare, double tol_scale,
                      Format f, std::ostream& out) {
    VerificationReport rep;
    if (suite == "specfun")
        rep = verify_specfun();
    else if (suite == "model")
        rep = verify_model();
    else if (suite == "trace")
        rep = verify_trace();
    else if (suite == "zeta")
        rep = verify_zeta();
    else
        rep = verify_all();
    if (paper_compare) {
        auto lines = paper_compare_info();
        rep.info.insert(rep.info.end(), lines.begin(), lines.end());
    }
    // tolerance override: rescale every check tolerance before judging
    std::size_t failed = 0;
    for (auto& c : rep.checks) {
        const double scale = c.relative ? std::max(std::abs(c.lhs), std::abs(c.rhs)) : 1.0;
        c.pass = std::abs(c.lhs - c.rhs) <= c.tol * tol_scale * scale;
        failed += c.pass ? 0 : 1;
    }
    if (f == Format::json) {
        auto checks = ordered_json::array();
        for (const auto& c : rep.checks)
            checks.push_back(ordered_json{{"name", c.name},
                                          {"lhs", c.lhs},
                                          {"rhs", c.rhs},
                                          {"tol", c.tol},
                                          {"relative", c.relative},
                                          {"pass", c.pass}});
        ordered_json j{{"suite", suite},
                       {"checks", std::move(checks)},
                       {"passed", rep.checks.size() - failed},
                       {"failed", failed},
                       {"all_pass", failed == 0}};
        if (paper_compare) j["paper-printed (informational)"] = rep.info;
        out << j.dump(2) << "\n";
    } else if (f == Format::csv) {
        out << "name,lhs,rhs,tol,relative,pass\n";
        for (const auto& c : rep.checks) {
            csv_quote(c.name, out);
            out << ',' << num_csv(c.lhs) << ',' << num_csv(c.rhs) << ',' << num_csv(c.tol)
                << ',' << (c.relative ? 1 : 0) << ',' << (c.pass ? 1 : 0) << "\n";
        }
        if (paper_compare) {
            out << "# paper-printed (informational)\n";
            for (const auto& line : rep.info) out << "# " << line << "\n";
        }
    } else {
        char buf[160];
        for (const auto& c : rep.checks) {
            std::snprintf(buf, sizeof buf, "%s  %-58s lhs=% .10e rhs=% .10e (%s tol %g)\n",
                          c.pass ? "PASS" : "FAIL", c.name.c_str(), c.lhs, c.rhs,
                          c.relative ? "rel" : "abs", c.tol * tol_scale);
            out << buf;
        }
        out << "summary: " << rep.checks.size() << " checks, " << failed << " failed\n";
        if (paper_compare) {
            out << "\npaper-printed (informational)\n";
            for (const auto& line : rep.info) out << "  " << line << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}

struct SweepArgs {
    std::string d_range;
    std::string lambda_scale = "1";
    std::optional<double> m, g;
    std::optional<int> n;
    std::optional<double> b, lambda;
    double M = 1.0;
};

inline int run_sweep(const SweepArgs& a, Format f, std::ostream& out) {
    const bool kink_mode = a.m.has_value() || a.g.has_value()
                           || (!a.n.has_value() && !a.b.has_value() && !a.lambda.has_value());
    if (kink_mode && (a.n.has_value() || a.b.has_value() || a.lambda.has_value()))
        throw domain_error("sweep: give either kink parameters (--m, --g) or well "
                           "parameters (--n, --b, --lambda), not both");
    if (kink_mode && a.lambda_scale != "1")
        throw domain_error("sweep: --lambda-scale requires well parameters; the kink's "
                           "lambda is pinned to the continuum edge");
    if (!kink_mode && !(a.n && a.b && a.lambda))
        throw domain_error("sweep: well mode needs all of --n, --b, --lambda");
    const std::vector<int> ds = parse_int_range(a.d_range);
    const std::vector<double> scales = parse_double_list(a.lambda_scale);

    std::vector<Correction> rows;
    for (int d : ds)
        for (double scale : scales) {
            if (kink_mode)
                rows.push_back(kink_correction(a.m.value_or(1.0), a.g.value_or(1.0), d, a.M));
            else
                rows.push_back(
                    mass_correction(OperatorSpec(*a.n, *a.b, *a.lambda * scale, d, a.M)));
        }
    if (f == Format::json) {
        auto arr = ordered_json::array();
        for (const auto& c : rows) arr.push_back(correction_json(c, zeta_at_zero(c.spec)));
        out << arr.dump(2) << "\n";
    } else {
        emit_correction_csv_header(out);
        for (const auto& c : rows) emit_correction_csv_row(c, zeta_at_zero(c.spec), out);
    }
    return 0;
}

} // namespace detail

// Testable entry point; main() is a thin wrapper. Output is buffered so
// nothing reaches `out` when the input is rejected.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"one-loop corrections for reflectionless sech^2 wells via the spectral "
                 "zeta function (units: hbar = 1; energies in units of the input mass)"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    struct SpecFlags {
        int n = 1;
        double b = 1.0, lambda = 0.0, M = 1.0;
        int d = 1;
        void add(CLI::App* c, bool need_lambda = true) {
            c->add_option("--n", n, "number of bound levels")->required();
            c->add_option("--b", b, "well width scale")->required();
            auto* lam = c->add_option("--lambda", lambda, "mass-squared offset (>= n^2 b^2)");
            if (need_lambda) lam->required();
            c->add_option("--d", d, "spatial dimension")->capture_default_str();
            c->add_option("--M", M, "zeta scale")->capture_default_str();
        }
    };

    auto* c_corr = app.add_subcommand("correction", "zeta(0), zeta'(0) and delta epsilon "
                                                    "for an explicit well spec");
    SpecFlags corr;
    corr.add(c_corr);

    auto* c_kink = app.add_subcommand("kink", "one-loop kink mass correction of the "
                                              "quartic double well");
    double k_m = 1.0, k_g = 1.0, k_M = 1.0;
    int k_d = 1;
    c_kink->add_option("--m", k_m, "mass parameter")->capture_default_str();
    c_kink->add_option("--g", k_g, "quartic coupling")->capture_default_str();
    c_kink->add_option("--d", k_d, "spatial dimension")->capture_default_str();
    c_kink->add_option("--M", k_M, "zeta scale")->capture_default_str();

    auto* c_zeta = app.add_subcommand("zeta", "evaluate zeta_D(s) in one representation");
    SpecFlags zf;
    zf.add(c_zeta);
    double zeta_s = 0.0;
    std::string zeta_rep = "integral";
    c_zeta->add_option("--s", zeta_s, "argument of zeta_D")->required();
    c_zeta->add_option("--rep", zeta_rep, "representation")
        ->check(CLI::IsMember({"integral", "hyp", "mellin"}))
        ->capture_default_str();

    auto* c_trace = app.add_subcommand("trace", "sample a heat-kernel trace on a log grid");
    detail::TraceArgs tr;
    c_trace->add_option("--kind", tr.kind, "curve to sample")
        ->check(CLI::IsMember({"gamma0", "gamma-full", "free-density"}))
        ->capture_default_str();
    c_trace->add_option("--t-min", tr.t_min, "smallest t")->required();
    c_trace->add_option("--t-max", tr.t_max, "largest t")->required();
    c_trace->add_option("--points", tr.points, "number of samples")->required();
    c_trace->add_option("--n", tr.n, "number of bound levels")->capture_default_str();
    c_trace->add_option("--b", tr.b, "well width scale")->capture_default_str();
    double tr_lambda = 0.0;
    auto* tr_lam_opt = c_trace->add_option("--lambda", tr_lambda,
                                           "mass-squared offset (gamma-full; default n^2 b^2)");
    c_trace->add_option("--d", tr.d, "spatial dimension")->capture_default_str();
    c_trace->add_option("--M", tr.M, "zeta scale (unused by traces)")->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "run the cross-validation suites");
    std::string suite = "all";
    bool paper_compare = false;
    double tol_scale = 1.0;
    c_verify->add_option("--suite", suite, "which suite")
        ->check(CLI::IsMember({"specfun", "model", "trace", "zeta", "all"}))
        ->capture_default_str();
    c_verify->add_flag("--paper-compare", paper_compare,
                       "also print externally published kink values next to computed ones");
    c_verify->add_option("--tol-scale", tol_scale, "multiply every check tolerance")
        ->capture_default_str();

    auto* c_sweep = app.add_subcommand("sweep", "tabulate corrections over a parameter range");
    detail::SweepArgs sw;
    c_sweep->add_option("--d", sw.d_range, "dimension range, e.g. 1..4 or 1,2,4")->required();
    c_sweep->add_option("--lambda-scale", sw.lambda_scale,
                        "comma list of factors applied to --lambda")
        ->capture_default_str();
    double sw_m = 0, sw_g = 0, sw_b = 0, sw_lambda = 0;
    int sw_n = 0;
    auto* o_m = c_sweep->add_option("--m", sw_m, "kink mass parameter");
    auto* o_g = c_sweep->add_option("--g", sw_g, "kink quartic coupling");
    auto* o_n = c_sweep->add_option("--n", sw_n, "number of bound levels");
    auto* o_b = c_sweep->add_option("--b", sw_b, "well width scale");
    auto* o_l = c_sweep->add_option("--lambda", sw_lambda, "mass-squared offset");
    c_sweep->add_option("--M", sw.M, "zeta scale")->capture_default_str();

    for (auto* sub : {c_corr, c_kink, c_zeta, c_trace, c_verify, c_sweep}) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("ptzeta");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const Format f = detail::parse_format(format);
    std::ostringstream buf;
    int rc = 0;
    try {
        if (c_corr->parsed()) {
            rc = detail::emit_correction(
                mass_correction(OperatorSpec(corr.n, corr.b, corr.lambda, corr.d, corr.M)), f,
                buf);
        } else if (c_kink->parsed()) {
            if (f == Format::text)
                buf << "kink: m=" << detail::num_txt(k_m) << " g=" << detail::num_txt(k_g)
                    << " (maps to n=2, b=m/sqrt(2), lambda=2m^2 at the continuum edge)\n";
            rc = detail::emit_correction(kink_correction(k_m, k_g, k_d, k_M), f, buf);
        } else if (c_zeta->parsed()) {
            const OperatorSpec spec(zf.n, zf.b, zf.lambda, zf.d, zf.M);
            ZetaValue zv = zeta_rep == "hyp"      ? zeta_hyp_rep(zeta_s, spec)
                           : zeta_rep == "mellin" ? zeta_mellin_numeric(zeta_s, spec)
                                                  : zeta_integral_rep(zeta_s, spec);
            if (f == Format::json) {
                detail::ordered_json j{
                    {"spec", detail::spec_json(spec)},
                    {"results", {{"s", zv.s}, {"zeta", zv.value}}},
                    {"provenance",
                     {{"representation", detail::rep_name(zv.representation)},
                      {"err_est", zv.abs_error_estimate}}}};
                buf << j.dump(2) << "\n";
            } else if (f == Format::csv) {
                buf << "s,value,err_est,representation\n"
                    << detail::num_csv(zv.s) << ',' << detail::num_csv(zv.value) << ','
                    << detail::num_csv(zv.abs_error_estimate) << ','
                    << detail::rep_name(zv.representation) << "\n";
            } else {
                buf << "spec: n=" << spec.n << " b=" << detail::num_txt(spec.b)
                    << " lambda=" << detail::num_txt(spec.lambda) << " d=" << spec.d
                    << " M=" << detail::num_txt(spec.M) << "\n";
                buf << "zeta(" << detail::num_txt(zv.s) << ") = " << detail::num_txt(zv.value)
                    << "\n";
                buf << "provenance: " << detail::rep_name(zv.representation) << ", err est "
                    << detail::num_txt(zv.abs_error_estimate) << "\n";
            }
        } else if (c_trace->parsed()) {
            if (tr_lam_opt->count() > 0) tr.lambda = tr_lambda;
            rc = detail::run_trace(tr, f, buf);
        } else if (c_verify->parsed()) {
            if (!(tol_scale > 0.0)) throw domain_error("--tol-scale must be positive");
            rc = detail::run_verify(suite, paper_compare, tol_scale, f, buf);
        } else if (c_sweep->parsed()) {
            if (o_m->count()) sw.m = sw_m;
            if (o_g->count()) sw.g = sw_g;
            if (o_n->count()) sw.n = sw_n;
            if (o_b->count()) sw.b = sw_b;
            if (o_l->count()) sw.lambda = sw_lambda;
            rc = detail::run_sweep(sw, f, buf);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) { // pole, overflow, convergence, divergence
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }
    out << buf.str();
    return rc;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace ptzeta::cli
