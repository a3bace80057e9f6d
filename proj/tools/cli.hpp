#ifndef SEXTUPLE_TOOLS_CLI_HPP
#define SEXTUPLE_TOOLS_CLI_HPP

// Command line front end. run_cli takes the arguments without the program
// name and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 pass, 1 fail or inconclusive, 2 invalid input or validation
// failure, 3 numeric failure.

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextuple/acceptance.hpp"
#include "sextuple/engine.hpp"
#include "sextuple/report.hpp"

namespace sextuple::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_invalid = 2, exit_numeric = 3 };

inline int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return exit_pass;
    case Verdict::fail:
    case Verdict::inconclusive:
        return exit_fail;
    case Verdict::validation_failure:
        return exit_invalid;
    case Verdict::numeric_failure:
        return exit_numeric;
    }
    return exit_fail;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accepts "re", "re+imi", "re-imi" and "imi".
inline std::optional<complex> parse_complex(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s += c;
    if (s.empty())
        return std::nullopt;
    const char* p = s.c_str();
    const char* end = p + s.size();
    auto number = [&](double& out) {
        char* stop = nullptr;
        errno = 0;
        out = std::strtod(p, &stop);
        if (stop == p || errno == ERANGE || !std::isfinite(out))
            return false;
        p = stop;
        return true;
    };

    double re = 0.0;
    if (!number(re))
        return std::nullopt;
    if (p == end)
        return complex{re, 0.0};
    if (*p == 'i' && p + 1 == end)
        return complex{0.0, re};
    if (*p != '+' && *p != '-')
        return std::nullopt;
    double im = 0.0;
    if (!number(im) || p + 1 != end || *p != 'i')
        return std::nullopt;
    return complex{re, im};
}

namespace detail {

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!(cur = trim(cur)).empty())
            out.push_back(cur);
    return out;
}

inline double to_double(const std::string& key, const std::string& s)
{
    double x = 0.0;
    const char* b = s.data();
    const auto [ptr, ec] = std::from_chars(b, b + s.size(), x);
    if (ec != std::errc{} || ptr != b + s.size() || !std::isfinite(x))
        throw UsageError("--" + key + ": not a number: " + s);
    return x;
}

template <class Int>
Int to_int(const std::string& key, const std::string& s)
{
    Int x{};
    const char* b = s.data();
    const auto [ptr, ec] = std::from_chars(b, b + s.size(), x);
    if (ec != std::errc{} || ptr != b + s.size())
        throw UsageError("--" + key + ": not an integer: " + s);
    return x;
}

inline bool to_bool(const std::string& key, const std::string& s)
{
    if (s == "true" || s == "1" || s == "on" || s == "yes")
        return true;
    if (s == "false" || s == "0" || s == "off" || s == "no")
        return false;
    throw UsageError(key + ": expected true or false, got " + s);
}

/// key = value lines; '#' and ';' start comments, [section] headers are ignored.
inline std::vector<std::pair<std::string, std::string>> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read config file " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        while (!key.empty() && key[0] == '-')
            key.erase(0, 1);
        for (char& c : key)
            if (c == '_')
                c = '-';
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front())
            value = value.substr(1, value.size() - 2);
        out.emplace_back(key, value);
    }
    return out;
}

inline const char* verify_keys[] = {"case", "k",        "a",     "m",         "u",    "v",      "mu",
                                    "nu",   "n",        "paths", "tol",       "abs-tol", "quad-tol", "level",
                                    "qmc-count", "seed", "format", "output", "timings"};

} // namespace detail

struct VerifyRequest {
    IdentityCase id;
    ParameterSet params;
    VerifyOptions options;
    std::string format = "text";
    std::string output;
    bool timings = false;
};

/// Builds a request from raw option strings (empty means unset).
inline VerifyRequest make_request(const std::map<std::string, std::string>& raw, bool timings)
{
    auto get = [&](const char* k) -> std::string {
        const auto it = raw.find(k);
        return it == raw.end() ? std::string{} : it->second;
    };

    VerifyRequest req;
    const std::string name = get("case");
    if (name.empty())
        throw UsageError("--case is required (see 'list')");
    const auto tag = parse_case(name);
    if (!tag)
        throw UsageError("unknown case: " + name);
    req.id.tag = *tag;
    req.params = case_defaults(*tag);

    for (const char* pname : parameter_names) {
        const std::string s = get(pname);
        if (s.empty())
            continue;
        const auto z = parse_complex(s);
        if (!z)
            throw UsageError(std::string("--") + pname + ": not a complex number: " + s);
        parameter(req.params, pname) = *z;
    }
    if (const std::string s = get("n"); !s.empty()) {
        const auto z = parse_complex(s);
        if (!z)
            throw UsageError("--n: not a complex number: " + s);
        req.id.n = *z;
    }

    if (const std::string s = get("paths"); !s.empty()) {
        for (const auto& p : detail::split(s, ',')) {
            if (p == "all") {
                req.options.paths.assign(all_paths.begin(), all_paths.end());
                continue;
            }
            const auto kind = parse_path(p);
            if (!kind)
                throw UsageError("unknown path: " + p);
            if (std::find(req.options.paths.begin(), req.options.paths.end(), *kind) == req.options.paths.end())
                req.options.paths.push_back(*kind);
        }
    }

    if (const std::string s = get("tol"); !s.empty())
        req.options.tol.rel_tol = detail::to_double("tol", s);
    if (const std::string s = get("abs-tol"); !s.empty())
        req.options.tol.abs_tol = detail::to_double("abs-tol", s);
    if (const std::string s = get("quad-tol"); !s.empty())
        req.options.quad_tol = detail::to_double("quad-tol", s);
    if (req.options.tol.rel_tol < 0.0 || req.options.tol.abs_tol < 0.0 || req.options.quad_tol < 0.0)
        throw UsageError("tolerances must be non-negative");
    if (const std::string s = get("level"); !s.empty()) {
        req.options.tensor_level = detail::to_int<int>("level", s);
        if (req.options.tensor_level < 2 || req.options.tensor_level > 8)
            throw UsageError("--level must be in 2..8");
    }
    if (const std::string s = get("qmc-count"); !s.empty())
        req.options.qmc.count = detail::to_int<std::uint64_t>("qmc-count", s);
    if (const std::string s = get("seed"); !s.empty())
        req.options.qmc.shift_seed = detail::to_int<std::uint64_t>("seed", s);

    if (const std::string s = get("format"); !s.empty())
        req.format = s;
    if (req.format != "text" && req.format != "json" && req.format != "csv")
        throw UsageError("--format must be text, json or csv");
    req.output = get("output");
    req.timings = timings;
    return req;
}

inline std::string render(const VerificationReport& rep, const std::string& format, bool timings)
{
    const ReportFormat fmt{timings};
    if (format == "json")
        return report_json(rep, fmt).dump(2) + "\n";
    if (format == "csv")
        return report_csv(rep, fmt);
    return report_text(rep, fmt);
}

/// Where the report goes: --output, else $SEXTUPLE_OUTPUT_DIR/<case>.<ext>, else stdout (empty).
inline std::string output_path(const VerifyRequest& req)
{
    if (!req.output.empty())
        return req.output;
    const char* dir = std::getenv("SEXTUPLE_OUTPUT_DIR");
    if (!dir || !*dir)
        return "";
    const std::string ext = req.format == "json" ? ".json" : req.format == "csv" ? ".csv" : ".txt";
    return (std::filesystem::path(dir) / (std::string(to_string(req.id.tag)) + ext)).string();
}

inline int run_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err)
{
    const VerificationReport rep = verify(req.id, req.params, req.options);
    const std::string text = render(rep, req.format, req.timings);
    const std::string path = output_path(req);
    if (path.empty()) {
        out << text;
    } else {
        const auto parent = std::filesystem::path(path).parent_path();
        std::error_code ec;
        if (!parent.empty())
            std::filesystem::create_directories(parent, ec);
        std::ofstream f(path, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << path << '\n';
            return exit_invalid;
        }
        out << "wrote " << path << " (verdict " << to_string(rep.verdict) << ")\n";
    }
    return exit_code(rep.verdict);
}

inline int run_list(const std::string& name, const std::string& format, std::ostream& out)
{
    std::vector<const CaseInfo*> sel;
    if (name.empty()) {
        for (const auto& c : case_catalog())
            sel.push_back(&c);
    } else {
        const auto tag = parse_case(name);
        if (!tag)
            throw UsageError("unknown case: " + name);
        sel.push_back(&case_info(*tag));
    }
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto* c : sel)
            j.push_back(case_json(*c));
        out << j.dump(2) << '\n';
    } else if (format == "text") {
        for (const auto* c : sel)
            out << case_text(*c) << '\n';
    } else {
        throw UsageError("--format must be text or json");
    }
    return exit_pass;
}

inline int run_selftest(const std::string& only, std::ostream& out)
{
    acceptance::Selection sel;
    for (const auto& s : detail::split(only, ','))
        sel.only.insert(s);
    const auto results = acceptance::run(sel, [&](const acceptance::Result& r) {
        out << acceptance::format_line(r) << '\n' << std::flush;
    });
    int failed = 0;
    for (const auto& r : results)
        failed += r.pass ? 0 : 1;
    out << results.size() << " criteria, " << failed << " failed\n";
    if (results.empty())
        throw UsageError("--only selected nothing");
    return failed == 0 ? exit_pass : exit_fail;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numerical verification of a closed form for a sextuple integral"};
    app.name("sextuple");
    app.require_subcommand(1);

    std::string list_case, list_format = "text";
    auto* list = app.add_subcommand("list", "Show the identity cases");
    list->add_option("--case", list_case, "Show one case only");
    list->add_option("--format", list_format, "text or json");

    std::map<std::string, std::string> raw;
    bool timings = false;
    std::string config;
    auto* ver = app.add_subcommand("verify", "Evaluate one case along several paths and compare");
    ver->add_option("--case", raw["case"], "Case name (see 'list')");
    ver->add_option("--k", raw["k"], "Exponent k (complex)");
    ver->add_option("--a", raw["a"], "Scale a (complex)");
    ver->add_option("--m", raw["m"], "Parameter m (complex)");
    ver->add_option("--u", raw["u"], "Parameter u (complex)");
    ver->add_option("--v", raw["v"], "Parameter v (complex)");
    ver->add_option("--mu", raw["mu"], "Parameter mu (complex)");
    ver->add_option("--nu", raw["nu"], "Parameter nu (complex)");
    ver->add_option("--n", raw["n"], "Second point of the difference cases");
    ver->add_option("--paths", raw["paths"], "Comma separated: jet,moment,closed,special,limit,arctanh,product,tensor,qmc");
    ver->add_option("--tol", raw["tol"], "Relative tolerance (default 1e-8)");
    ver->add_option("--abs-tol", raw["abs-tol"], "Absolute tolerance (default 1e-8)");
    ver->add_option("--quad-tol", raw["quad-tol"], "Tolerance for pairs with the tensor rule (default 1e-4)");
    ver->add_option("--level", raw["level"], "Tensor rule level (default 4)");
    ver->add_option("--qmc-count", raw["qmc-count"], "QMC points over all replicates (power of two)");
    ver->add_option("--seed", raw["seed"], "QMC shift seed");
    ver->add_option("--format", raw["format"], "text, json or csv");
    ver->add_option("--output", raw["output"], "Write the report to this file");
    ver->add_flag("--timings", timings, "Include wall times");
    ver->add_option("--config", config, "key = value file; command line flags take precedence");

    std::string only;
    auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
    self->add_option("--only", only, "Comma separated criterion ids or modules (lerch,legendre,mellin,gamma,jets)");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("sextuple");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_pass : exit_invalid;
    }

    try {
        if (*list)
            return run_list(list_case, list_format, out);
        if (*self)
            return run_selftest(only, out);

        if (!config.empty()) {
            for (const auto& [key, value] : detail::read_config(config)) {
                if (key == "config")
                    throw UsageError("config files cannot nest");
                if (std::find(std::begin(detail::verify_keys), std::end(detail::verify_keys), key) ==
                    std::end(detail::verify_keys))
                    throw UsageError(config + ": unknown key " + key);
                if (ver->get_option("--" + key)->count() > 0)
                    continue;
                if (key == "timings")
                    timings = detail::to_bool(key, value);
                else
                    raw[key] = value;
            }
        }
        return run_verify(make_request(raw, timings), out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_numeric;
    }
}

} // namespace sextuple::cli

#endif // SEXTUPLE_TOOLS_CLI_HPP
