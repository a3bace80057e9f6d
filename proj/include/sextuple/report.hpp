#ifndef SEXTUPLE_REPORT_HPP
#define SEXTUPLE_REPORT_HPP

// Serialization of verification reports and of the case catalog: JSON, CSV
// (one row per case and path) and plain text. Wall times are optional so
// that reports for a fixed configuration are byte-identical.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sextuple/engine.hpp"

namespace sextuple {

using ordered_json = nlohmann::ordered_json;

/// "re", "re+imi" or "re-imi" with round-trip precision; parse_complex reads it back.
inline std::string format_complex(complex z, int digits = 17)
{
    char re[40], im[40];
    std::snprintf(re, sizeof re, "%.*g", digits, z.real());
    if (z.imag() == 0.0)
        return re;
    std::snprintf(im, sizeof im, "%+.*g", digits, z.imag());
    return std::string(re) + im + "i";
}

inline ordered_json complex_json(complex z) { return ordered_json::array({z.real(), z.imag()}); }

inline ordered_json params_json(const ParameterSet& ps)
{
    ordered_json j = ordered_json::object();
    for (const char* name : parameter_names)
        j[name] = complex_json(parameter(ps, name));
    return j;
}

struct ReportFormat {
    bool timings = false;
};

inline ordered_json report_json(const VerificationReport& r, const ReportFormat& fmt = {})
{
    ordered_json j;
    j["case"] = to_string(r.id.tag);
    j["params"] = params_json(r.params);
    if (is_difference_family(r.id.tag) && (r.id.n || r.id.tag != CaseTag::difference_arctanh))
        j["params"]["n"] = complex_json(difference_n(r.id));
    if (r.id.tag == CaseTag::alt_lerch)
        j["theorem_params"] = params_json(r.theorem_params);
    j["tolerance"] = {{"rel", r.tol.rel_tol}, {"abs", r.tol.abs_tol}};

    ordered_json paths = ordered_json::object();
    for (const auto& p : r.paths) {
        ordered_json e;
        e["status"] = to_string(p.status);
        if (p.status == PathStatus::ok) {
            e["value"] = complex_json(p.value);
            e["err"] = p.error_estimate;
        } else {
            e["reason"] = p.detail;
        }
        paths[to_string(p.kind)] = std::move(e);
    }
    j["paths"] = std::move(paths);

    ordered_json diffs = ordered_json::array();
    for (const auto& d : r.diffs)
        diffs.push_back({{"pair", {to_string(d.a), to_string(d.b)}},
                         {"abs", d.abs_diff},
                         {"rel", d.rel_diff},
                         {"bound", d.bound},
                         {"pass", d.pass}});
    j["diffs"] = std::move(diffs);
    j["verdict"] = to_string(r.verdict);
    j["violations"] = r.violations;
    j["warnings"] = r.warnings;
    if (fmt.timings) {
        ordered_json t = ordered_json::object();
        for (const auto& p : r.paths)
            t[to_string(p.kind)] = p.seconds;
        t["total"] = r.seconds;
        j["times"] = std::move(t);
    }
    return j;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::string num17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace detail

inline std::string report_csv_header(const ReportFormat& fmt = {})
{
    return std::string("case,path,status,value_re,value_im,err,verdict,detail") + (fmt.timings ? ",seconds" : "") +
           "\n";
}

/// One row per path; a report without paths (validation failure with none
/// requested) still gets one row so that the verdict is visible.
inline std::string report_csv_rows(const VerificationReport& r, const ReportFormat& fmt = {})
{
    std::ostringstream os;
    const std::string tag = to_string(r.id.tag);
    const std::string verdict = to_string(r.verdict);
    auto row = [&](const std::string& path, const std::string& status, const std::string& re, const std::string& im,
                   const std::string& err, const std::string& detail, double secs) {
        os << tag << ',' << path << ',' << status << ',' << re << ',' << im << ',' << err << ',' << verdict << ','
           << detail::csv_field(detail);
        if (fmt.timings)
            os << ',' << detail::num17(secs);
        os << '\n';
    };
    for (const auto& p : r.paths) {
        if (p.status == PathStatus::ok)
            row(to_string(p.kind), "ok", detail::num17(p.value.real()), detail::num17(p.value.imag()),
                detail::num17(p.error_estimate), "", p.seconds);
        else
            row(to_string(p.kind), to_string(p.status), "", "", "", p.detail, p.seconds);
    }
    if (r.paths.empty()) {
        std::string why;
        for (const auto& v : r.violations)
            why += (why.empty() ? "" : "; ") + v;
        row("", "", "", "", "", why, r.seconds);
    }
    return os.str();
}

inline std::string report_csv(const VerificationReport& r, const ReportFormat& fmt = {})
{
    return report_csv_header(fmt) + report_csv_rows(r, fmt);
}

inline std::string report_text(const VerificationReport& r, const ReportFormat& fmt = {})
{
    std::ostringstream os;
    const CaseInfo& info = case_info(r.id.tag);
    os << "case     " << info.name << " (" << info.title << ")\n";
    os << "params  ";
    for (const char* name : parameter_names)
        os << ' ' << name << '=' << format_complex(parameter(r.params, name), 15);
    if (is_difference_family(r.id.tag) && (r.id.n || r.id.tag != CaseTag::difference_arctanh))
        os << " n=" << format_complex(difference_n(r.id), 15);
    os << '\n';
    for (const auto& v : r.violations)
        os << "invalid  " << v << '\n';
    for (const auto& w : r.warnings)
        os << "warning  " << w << '\n';
    for (const auto& p : r.paths) {
        char head[16];
        std::snprintf(head, sizeof head, "%-9s", to_string(p.kind));
        os << head;
        if (p.status == PathStatus::ok) {
            char err[32];
            std::snprintf(err, sizeof err, "%.2g", p.error_estimate);
            os << format_complex(p.value, 15) << "   err " << err;
        } else {
            os << to_string(p.status) << ": " << p.detail;
        }
        if (fmt.timings) {
            char t[32];
            std::snprintf(t, sizeof t, "   %.3fs", p.seconds);
            os << t;
        }
        os << '\n';
    }
    for (const auto& d : r.diffs) {
        char line[160];
        std::snprintf(line, sizeof line, "diff     %s-%s abs %.3g rel %.3g bound %.3g %s\n", to_string(d.a),
                      to_string(d.b), d.abs_diff, d.rel_diff, d.bound, d.pass ? "ok" : "FAIL");
        os << line;
    }
    os << "verdict  " << to_string(r.verdict) << '\n';
    return os.str();
}

inline ordered_json case_json(const CaseInfo& c)
{
    ordered_json fixed = ordered_json::object();
    for (const auto& f : c.fixed)
        fixed[f.name] = f.value;
    return {{"case", c.name},      {"title", c.title}, {"constraints", c.constraints},
            {"fixed", fixed},      {"rhs", c.rhs},     {"needs_n", c.needs_n}};
}

inline std::string case_text(const CaseInfo& c)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-19s", c.name);
    return std::string(buf) + c.title + "  [" + c.constraints + "]  = " + c.rhs;
}

} // namespace sextuple

#endif // SEXTUPLE_REPORT_HPP
