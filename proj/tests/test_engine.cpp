#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sextuple/engine.hpp"

using namespace sextuple;
using oracle::rel_err;

namespace {

// 50-digit references, rounded
constexpr double apery_ref = 0.0358712433779222196;  // 3 zeta(3) / (32 pi)
constexpr double log2_ref = 1.08879304515180107;     // pi log 2 / 2
constexpr double log3_ref = 0.862848073805800665;    // pi log 3 / 4
constexpr double acoth_ref = 1.38445839302434036;    // pi arccoth(sqrt 2) / 2
const complex harmonic_ref{0.140550462854873183, -1.07178198499923191};
constexpr double eta_half_ref = 6.64933249532466;    // real = imag at k = 1/2
constexpr double eta_three_ref = 306.019684785281453; // imaginary at k = 3

ParameterSet sample()
{
    ParameterSet ps;
    ps.k = 2.0;
    ps.a = 1.5;
    ps.m = 0.4;
    ps.u = -0.3;
    ps.v = 1.2;
    ps.mu = -0.1;
    ps.nu = 0.9;
    return ps;
}

complex path_value(const VerificationReport& r, PathKind k)
{
    const PathResult* p = r.find(k);
    REQUIRE(p != nullptr);
    REQUIRE(p->status == PathStatus::ok);
    return p->value;
}

} // namespace

TEST_CASE("catalog", "[engine]")
{
    REQUIRE(case_catalog().size() == 11);
    for (const auto& c : case_catalog()) {
        const auto t = parse_case(c.name);
        REQUIRE(t);
        CHECK(*t == c.tag);
        CHECK(std::string(to_string(c.tag)) == c.name);
    }
    CHECK_FALSE(parse_case("zeta"));
    CHECK(std::string(case_info(CaseTag::apery).constraints).find("k=-3") != std::string::npos);

    const ParameterSet ap = case_defaults(CaseTag::apery);
    CHECK(ap.k == complex{-3.0});
    CHECK(ap.a == complex{-1.0});
    CHECK(ap.m == complex{0.5});
    CHECK(case_defaults(CaseTag::harmonic_limit).a == complex{-2.0});

    for (PathKind p : all_paths)
        CHECK(parse_path(to_string(p)) == p);
    CHECK(parse_path("moment_expansion") == PathKind::moment);
    CHECK_FALSE(parse_path("monte_carlo"));
}

TEST_CASE("every case passes at its defaults", "[engine]")
{
    for (const auto& c : case_catalog()) {
        INFO(c.name);
        const IdentityCase id{c.tag, c.needs_n ? std::optional<complex>(0.25) : std::nullopt};
        const VerificationReport r = verify(id, case_defaults(c.tag));
        CHECK(r.violations.empty());
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.diffs.size() >= 1);
    }
}

TEST_CASE("special values of the named cases", "[engine]")
{
    auto special = [](CaseTag t, ParameterSet ps) {
        VerifyOptions o;
        o.paths = {PathKind::closed, PathKind::special, PathKind::limit, PathKind::arctanh};
        const VerificationReport r = verify({t, std::nullopt}, ps, o);
        CHECK(r.verdict == Verdict::pass);
        return r;
    };

    {
        const auto r = special(CaseTag::apery, case_defaults(CaseTag::apery));
        CHECK(std::abs(path_value(r, PathKind::special) - complex{0.0, apery_ref}) < 1e-16);
        CHECK(std::abs(path_value(r, PathKind::closed) - complex{0.0, apery_ref}) < 1e-15);
    }
    {
        const auto r = special(CaseTag::log2_limit, case_defaults(CaseTag::log2_limit));
        CHECK(rel_err(path_value(r, PathKind::special), complex{0.0, -log2_ref}) < 1e-15);
        CHECK(rel_err(path_value(r, PathKind::limit), complex{0.0, -log2_ref}) < 1e-11);
    }
    {
        const auto r = special(CaseTag::harmonic_limit, case_defaults(CaseTag::harmonic_limit));
        CHECK(rel_err(path_value(r, PathKind::special), harmonic_ref) < 1e-13);
        CHECK(rel_err(path_value(r, PathKind::limit), harmonic_ref) < 1e-10);
    }
    {
        const auto r = special(CaseTag::log3, case_defaults(CaseTag::log3));
        CHECK(rel_err(path_value(r, PathKind::special), -log3_ref) < 1e-15);
        CHECK(rel_err(path_value(r, PathKind::arctanh), -log3_ref) < 1e-14);
        CHECK(rel_err(path_value(r, PathKind::closed), -log3_ref) < 1e-12);
    }
    {
        const auto r = special(CaseTag::arccoth_sqrt2, case_defaults(CaseTag::arccoth_sqrt2));
        CHECK(rel_err(path_value(r, PathKind::special), -acoth_ref) < 1e-15);
        CHECK(rel_err(path_value(r, PathKind::closed), -acoth_ref) < 1e-12);
    }
    {
        ParameterSet ps = case_defaults(CaseTag::eta_zeta_line);
        ps.k = 0.5;
        const auto r = special(CaseTag::eta_zeta_line, ps);
        CHECK(rel_err(path_value(r, PathKind::closed), complex{eta_half_ref, eta_half_ref}) < 1e-13);
        ps.k = 3.0;
        const auto r3 = special(CaseTag::eta_zeta_line, ps);
        CHECK(rel_err(path_value(r3, PathKind::special), complex{0.0, eta_three_ref}) < 1e-14);
    }
    {
        // u and mu only scale by 2^(mu+u)
        ParameterSet ps = case_defaults(CaseTag::log3);
        ps.u = 0.1;
        ps.mu = 0.15;
        ps.v = 0.6;
        ps.nu = 0.7;
        const auto r = special(CaseTag::log3, ps);
        CHECK(rel_err(path_value(r, PathKind::closed), -log3_ref * std::pow(2.0, 0.25)) < 1e-12);
    }
}

TEST_CASE("worked example of the general identity", "[engine]")
{
    VerifyOptions o;
    o.paths = {PathKind::jet, PathKind::moment, PathKind::closed};
    const VerificationReport r = verify({}, sample(), o);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.diffs.size() == 3);
    const complex v = path_value(r, PathKind::closed);
    CHECK(std::abs(v.imag()) < 1e-12 * std::abs(v));
    CHECK(rel_err(path_value(r, PathKind::jet), v) < 1e-13);

    // defaults for this set are the three paths above
    const auto def = default_paths({}, sample());
    CHECK(def == std::vector<PathKind>{PathKind::jet, PathKind::moment, PathKind::closed});
}

TEST_CASE("inadmissible paths are reported, not failed", "[engine]")
{
    VerifyOptions o;
    o.paths = {PathKind::closed, PathKind::special, PathKind::limit, PathKind::product, PathKind::jet};
    ParameterSet ps = sample();
    ps.k = 0.5;
    const VerificationReport r = verify({}, ps, o);
    for (PathKind k : {PathKind::special, PathKind::limit, PathKind::product, PathKind::jet}) {
        const PathResult* p = r.find(k);
        REQUIRE(p);
        CHECK(p->status == PathStatus::inadmissible);
        CHECK_FALSE(p->detail.empty());
    }
    // one evaluable path is not enough for a verdict
    CHECK(r.verdict == Verdict::inconclusive);

    CHECK(inadmissible_reason({CaseTag::log3, std::nullopt}, case_defaults(CaseTag::log3), PathKind::tensor));
    CHECK(inadmissible_reason({CaseTag::eta_zeta_line, std::nullopt}, [] {
        ParameterSet q = case_defaults(CaseTag::eta_zeta_line);
        q.k = -1.0;
        return q;
    }(), PathKind::special));
    CHECK_FALSE(inadmissible_reason({CaseTag::eta_zeta_line, std::nullopt}, [] {
        ParameterSet q = case_defaults(CaseTag::eta_zeta_line);
        q.k = 3.0;
        return q;
    }(), PathKind::special));
}

TEST_CASE("validation failures skip every path", "[engine]")
{
    ParameterSet ps = sample();
    ps.m = 1.2;
    VerifyOptions o;
    o.paths = {PathKind::jet, PathKind::closed};
    const VerificationReport r = verify({}, ps, o);
    CHECK(r.verdict == Verdict::validation_failure);
    CHECK_FALSE(r.violations.empty());
    REQUIRE(r.paths.size() == 2);
    for (const auto& p : r.paths)
        CHECK(p.status == PathStatus::skipped);
    CHECK(r.diffs.empty());

    // fixed parameters of a case are enforced
    ParameterSet l3 = case_defaults(CaseTag::log3);
    l3.k = 2.0;
    CHECK(verify({CaseTag::log3, std::nullopt}, l3).verdict == Verdict::validation_failure);

    // the alternate form takes 0 < Re a <= 1
    ParameterSet alt = case_defaults(CaseTag::alt_lerch);
    alt.a = 1.5;
    CHECK(verify({CaseTag::alt_lerch, std::nullopt}, alt).verdict == Verdict::validation_failure);
}

TEST_CASE("numeric failure outranks a pass", "[engine]")
{
    VerifyOptions o;
    o.paths = {PathKind::closed, PathKind::special, PathKind::limit};
    o.limit_steps = {1.0 / 16, 1e-6};
    const VerificationReport r = verify({CaseTag::log2_limit, std::nullopt}, case_defaults(CaseTag::log2_limit), o);
    CHECK(r.find(PathKind::limit)->status == PathStatus::failed);
    CHECK(r.verdict == Verdict::numeric_failure);
}

TEST_CASE("limit steps are validated", "[engine]")
{
    const IdentityCase c{CaseTag::log2_limit, std::nullopt};
    const ParameterSet ps = case_defaults(c.tag);
    CHECK_THROWS_AS(rhs_limit(c, ps, {0.1}), domain_error);
    CHECK_THROWS_AS(rhs_limit(c, ps, {0.1, 0.2}), domain_error);
    CHECK_THROWS_AS(rhs_limit(c, ps, {0.1, 1e-6}), domain_error);
    CHECK_THROWS_AS(rhs_limit({CaseTag::theorem, std::nullopt}, ps), domain_error);
    const LimitValue l = rhs_limit(c, ps, {0.1, 0.05, 0.025, 0.0125});
    CHECK(rel_err(l.value, complex{0.0, -log2_ref}) < 1e-9);
}

TEST_CASE("product identity holds past the integrability strip", "[engine]")
{
    ParameterSet ps;
    ps.m = 0.3;
    ps.u = 0.2;
    ps.v = 1.4;
    ps.mu = -0.5;
    ps.nu = 2.0;
    const ProductCheck pc = product_identity_check(ps);
    CHECK(rel_err(pc.product, pc.csc_form) < 1e-12);
    CHECK(rel_err(pc.csc_form, pi * pi / std::sin(0.3 * pi) * std::pow(2.0, -0.3 - 1.0)) < 1e-14);

    // the integral itself does not exist there
    CHECK(verify({CaseTag::degenerate, std::nullopt}, ps).verdict == Verdict::validation_failure);
}

TEST_CASE("pair bound", "[engine]")
{
    VerifyOptions o;
    o.tol = Tolerances(1e-10, 1e-6);
    PathResult a{PathKind::closed, PathStatus::ok, complex{2.0}, 0.0, "", 0.0};
    PathResult b{PathKind::jet, PathStatus::ok, complex{2.0 + 3e-6}, 0.0, "", 0.0};
    PairDiff d = compare_paths(a, b, o);
    CHECK(d.bound == Catch::Approx(1e-6 * (2.0 + 3e-6)));
    CHECK_FALSE(d.pass);

    // QMC standard errors widen the bound by three sigma each
    PathResult q{PathKind::qmc, PathStatus::ok, complex{2.0 + 3e-6}, 1e-6, "", 0.0};
    d = compare_paths(a, q, o);
    CHECK(d.bound == Catch::Approx(1e-6 * (2.0 + 3e-6) + 3e-6));
    CHECK(d.pass);

    // tensor pairs use the quadrature tolerance
    PathResult t{PathKind::tensor, PathStatus::ok, complex{2.0 + 1e-4}, 0.0, "", 0.0};
    d = compare_paths(a, t, o);
    CHECK(d.bound == Catch::Approx(1e-4 * (2.0 + 1e-4)));
    CHECK(d.pass);
}

TEST_CASE("difference family", "[engine]")
{
    // n = 1/4 at m = 1/2 reproduces the arccoth case
    ParameterSet ps = case_defaults(CaseTag::difference_arctanh);
    ps.m = 0.5;
    const VerificationReport r = verify({CaseTag::difference_arctanh, complex{0.25}}, ps);
    CHECK(r.verdict == Verdict::pass);
    CHECK(rel_err(path_value(r, PathKind::closed), -acoth_ref) < 1e-12);
    CHECK(r.find(PathKind::special));

    // the named members fix n themselves
    CHECK(difference_n({CaseTag::log3, std::nullopt}) == complex{1.0 / 3.0});
    CHECK(difference_n({CaseTag::arccoth_sqrt2, std::nullopt}) == complex{0.25});
}

TEST_CASE("alternate form maps onto the general identity", "[engine]")
{
    ParameterSet ps = case_defaults(CaseTag::alt_lerch);
    ps.k = 2.0;
    ps.m = 0.7;
    ps.a = complex{0.4, 0.3};
    const ParameterSet g = theorem_parameters(CaseTag::alt_lerch, ps);
    CHECK(g.m == complex{0.35});
    CHECK(std::abs(g.a + std::exp(2.0 * I * pi * ps.a)) < 1e-15);

    VerifyOptions o;
    o.paths = {PathKind::jet, PathKind::closed, PathKind::special};
    const VerificationReport r = verify({CaseTag::alt_lerch, std::nullopt}, ps, o);
    CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("reports are deterministic", "[engine]")
{
    VerifyOptions o;
    o.paths = {PathKind::closed, PathKind::qmc};
    o.qmc.count = 1u << 12;
    ParameterSet ps = case_defaults(CaseTag::degenerate);
    const VerificationReport r1 = verify({CaseTag::degenerate, std::nullopt}, ps, o);
    const VerificationReport r2 = verify({CaseTag::degenerate, std::nullopt}, ps, o);
    CHECK(path_value(r1, PathKind::qmc) == path_value(r2, PathKind::qmc));
    CHECK(r1.find(PathKind::qmc)->error_estimate == r2.find(PathKind::qmc)->error_estimate);
}

TEST_CASE("Apery value through the alternate form", "[engine]")
{
    ParameterSet ps = case_defaults(CaseTag::alt_lerch);
    ps.k = -3.0;
    ps.m = 1.0;
    ps.a = 1.0;
    const VerificationReport r = verify({CaseTag::alt_lerch, std::nullopt}, ps);
    CHECK(r.verdict == Verdict::pass);
    CHECK(std::abs(path_value(r, PathKind::closed) - complex{0.0, apery_ref}) < 1e-15);
    CHECK(std::abs(path_value(r, PathKind::special) - complex{0.0, apery_ref}) < 1e-15);
}

TEST_CASE("degenerate case against QMC", "[engine][qmc]")
{
    VerifyOptions o;
    o.paths = {PathKind::qmc, PathKind::closed};
    o.qmc.count = 1u << 16;
    o.qmc.shift_seed = 7;
    const VerificationReport r = verify({CaseTag::degenerate, std::nullopt}, case_defaults(CaseTag::degenerate), o);
    CHECK(r.verdict == Verdict::pass);
    CHECK(std::abs(path_value(r, PathKind::qmc) - pi * pi / 2.0) < 5e-3);
}
