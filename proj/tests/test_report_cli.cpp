#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sextuple/report.hpp"

using namespace sextuple;
using cli::parse_complex;
using cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> example = {"verify", "--case", "theorem", "--k",   "2",   "--a",      "1.5",
                                          "--m",    "0.4",    "--u",     "-0.3",  "--v", "1.2",      "--mu",
                                          "-0.1",   "--nu",   "0.9",     "--paths", "jet,moment,closed", "--tol",
                                          "1e-8",   "--format", "json"};

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "sextuple_test_report_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("complex literals", "[cli]")
{
    CHECK(parse_complex("1.5") == complex{1.5, 0.0});
    CHECK(parse_complex("-2") == complex{-2.0, 0.0});
    CHECK(parse_complex("0.5+2i") == complex{0.5, 2.0});
    CHECK(parse_complex("0.5-2i") == complex{0.5, -2.0});
    CHECK(parse_complex("1e-3-2.5e2i") == complex{1e-3, -250.0});
    CHECK(parse_complex("3i") == complex{0.0, 3.0});
    CHECK(parse_complex(" 1 + 1i ") == complex{1.0, 1.0});
    for (const char* bad : {"", "i", "1+", "1+2", "1+2j", "x", "1+2i3", "nan", "inf", "1e999"})
        CHECK_FALSE(parse_complex(bad));

    for (complex z : {complex{0.1, -0.2}, complex{-3.0, 0.0}, complex{1e-300, 1e300}, complex{pi, pi}})
        CHECK(parse_complex(format_complex(z)) == z);
    CHECK(format_complex({1.0, 0.0}) == "1");
    CHECK(format_complex({1.0, -2.0}) == "1-2i");
}

TEST_CASE("JSON report", "[report]")
{
    VerifyOptions o;
    o.paths = {PathKind::jet, PathKind::closed, PathKind::special};
    ParameterSet ps;
    ps.k = 2.0;
    ps.a = 1.5;
    ps.m = 0.4;
    const VerificationReport r = verify({}, ps, o);
    const std::string s1 = report_json(r).dump(2);
    const std::string s2 = report_json(verify({}, ps, o)).dump(2);
    CHECK(s1 == s2);

    const auto j = nlohmann::json::parse(s1);
    CHECK(j["case"] == "theorem");
    CHECK(j["verdict"] == "pass");
    CHECK(j["paths"]["jet"]["status"] == "ok");
    CHECK(j["paths"]["special"]["status"] == "inadmissible");
    CHECK(j["paths"]["special"].contains("reason"));
    CHECK(j["params"]["a"][0] == 1.5);
    CHECK(j["diffs"].size() == 1);
    CHECK_FALSE(j.contains("times"));
    CHECK(report_json(r, {true}).contains("times"));

    const VerificationReport alt = verify({CaseTag::alt_lerch, std::nullopt}, case_defaults(CaseTag::alt_lerch));
    CHECK(report_json(alt).contains("theorem_params"));
    const VerificationReport l3 = verify({CaseTag::log3, std::nullopt}, case_defaults(CaseTag::log3));
    CHECK(report_json(l3)["params"]["n"][0] == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("CSV report", "[report]")
{
    VerifyOptions o;
    o.paths = {PathKind::jet, PathKind::closed, PathKind::special};
    ParameterSet ps;
    ps.k = 1.0;
    const std::string csv = report_csv(verify({}, ps, o));
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        lines.push_back(line);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "case,path,status,value_re,value_im,err,verdict,detail");
    CHECK(lines[1].rfind("theorem,jet,ok,", 0) == 0);
    CHECK(lines[3].rfind("theorem,special,inadmissible,,,,pass,", 0) == 0);
    CHECK(std::count(lines[1].begin(), lines[1].end(), ',') == 7);

    // without paths the verdict still gets a row
    ParameterSet bad;
    bad.m = 1.2;
    const std::string rows = report_csv_rows(verify({}, bad));
    CHECK(rows.rfind("theorem,,,,,,validation_failure,0<Re(m)<1;", 0) == 0);
    CHECK(detail::csv_field("a,b \"c\"") == "\"a,b \"\"c\"\"\"");
    CHECK(report_csv_header({true}).find(",seconds") != std::string::npos);
}

TEST_CASE("verify exit codes", "[cli]")
{
    const Run ok = run(example);
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["verdict"] == "pass");
    CHECK(run(example).out == ok.out);

    auto with = [](std::vector<std::string> base, std::vector<std::string> extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };
    // flags given twice: the last one must not be silently accepted
    CHECK(run(with(example, {"--m", "1.2"})).code == 2);

    CHECK(run({"verify", "--case", "theorem", "--m", "1.2"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--k", "2", "--paths", "closed"}).code == 1);
    CHECK(run({"verify", "--case", "theorem", "--k", "2", "--a", "1.5", "--m", "0.4", "--paths", "jet,closed", "--tol",
               "0", "--abs-tol", "0"})
              .code == 1);
    CHECK(run({"verify", "--case", "nope"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--k", "1+x"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--paths", "jet,foo"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--tol", "-1"}).code == 2);
    CHECK(run({"verify", "--case", "theorem", "--level", "1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);

    CHECK(cli::exit_code(Verdict::pass) == 0);
    CHECK(cli::exit_code(Verdict::fail) == 1);
    CHECK(cli::exit_code(Verdict::inconclusive) == 1);
    CHECK(cli::exit_code(Verdict::validation_failure) == 2);
    CHECK(cli::exit_code(Verdict::numeric_failure) == 3);
}

TEST_CASE("verify formats and case parameters", "[cli]")
{
    const Run csv = run({"verify", "--case", "log3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("case,path,status", 0) == 0);
    CHECK(csv.out.find("log3,arctanh,ok,") != std::string::npos);

    const Run text = run({"verify", "--case", "eta_zeta_line", "--k", "3", "--timings"});
    CHECK(text.code == 0);
    CHECK(text.out.find("verdict  pass") != std::string::npos);
    CHECK(text.out.find("s\n") != std::string::npos);

    const Run diff = run({"verify", "--case", "difference_arctanh", "--n", "0.25", "--format", "json"});
    CHECK(diff.code == 0);
    CHECK(nlohmann::json::parse(diff.out)["params"]["n"][0] == 0.25);
    CHECK(run({"verify", "--case", "difference_arctanh"}).code == 2);

    const Run cplx = run({"verify", "--case", "theorem", "--k", "2", "--a", "1+0.5i", "--format", "json"});
    CHECK(cplx.code == 0);
    const auto j = nlohmann::json::parse(cplx.out);
    CHECK(j["params"]["a"][1] == 0.5);
}

TEST_CASE("config file and output destinations", "[cli]")
{
    const auto cfg = scratch("verify.cfg");
    {
        std::ofstream f(cfg);
        f << "# comment\n[verify]\ncase = theorem\nk = 2\na = 1.5\nm = 0.4\npaths = jet,closed\nformat = json\n";
    }
    const Run from_file = run({"verify", "--config", cfg.string()});
    CHECK(from_file.code == 0);
    const auto j = nlohmann::json::parse(from_file.out);
    CHECK(j["params"]["m"][0] == 0.4);
    CHECK(j["paths"].size() == 2);

    // command line wins
    const Run over = run({"verify", "--config", cfg.string(), "--m", "0.3", "--format", "csv"});
    CHECK(over.code == 0);
    CHECK(over.out.rfind("case,path", 0) == 0);

    {
        std::ofstream f(cfg);
        f << "case = theorem\nbogus = 1\n";
    }
    CHECK(run({"verify", "--config", cfg.string()}).code == 2);
    CHECK(run({"verify", "--config", scratch("missing.cfg").string()}).code == 2);

    const auto out = scratch("report.json");
    std::filesystem::remove(out);
    std::vector<std::string> args = example;
    args.push_back("--output");
    args.push_back(out.string());
    const Run written = run(args);
    CHECK(written.code == 0);
    CHECK(written.out.find("wrote") == 0);
    CHECK(slurp(out) == run(example).out);

    const auto dir = scratch("outdir");
    std::filesystem::remove_all(dir);
    ::setenv("SEXTUPLE_OUTPUT_DIR", dir.string().c_str(), 1);
    const Run env = run({"verify", "--case", "apery", "--format", "json"});
    ::unsetenv("SEXTUPLE_OUTPUT_DIR");
    CHECK(env.code == 0);
    CHECK(std::filesystem::exists(dir / "apery.json"));
}

TEST_CASE("list", "[cli]")
{
    const Run text = run({"list"});
    CHECK(text.code == 0);
    CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 11);

    const Run js = run({"list", "--format", "json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 11);
    CHECK(j[10]["case"] == "apery");

    const Run one = run({"list", "--case", "apery"});
    CHECK(one.out.find("k=-3") != std::string::npos);
    CHECK(run({"list", "--case", "nope"}).code == 2);
}

TEST_CASE("selftest subset", "[cli]")
{
    const Run r = run({"selftest", "--only", "A6,A9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("A6   PASS") != std::string::npos);
    CHECK(r.out.find("2 criteria, 0 failed") != std::string::npos);
    CHECK(run({"selftest", "--only", "A99"}).code == 2);
}
