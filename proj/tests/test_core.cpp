#include <algorithm>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sextuple/core.hpp"

using namespace sextuple;

namespace {

ParameterSet reference()
{
    return ParameterSet{0.0, 1.0, 0.5, 0.0, 1.0, 0.0, 1.0};
}

bool mentions(const ValidationOutcome& o, const std::string& name)
{
    return std::find(o.violations.begin(), o.violations.end(), name) != o.violations.end();
}

} // namespace

TEST_CASE("reference parameters are valid", "[core]")
{
    const auto out = validate_parameters(reference());
    CHECK(out.valid());
    CHECK(out.violations.empty());
}

TEST_CASE("m outside (0,1) is reported", "[core]")
{
    auto ps = reference();
    ps.m = 1.2;
    const auto out = validate_parameters(ps);
    CHECK_FALSE(out.valid());
    CHECK(mentions(out, "0<Re(m)<1"));
}

TEST_CASE("Re(m) < |Re(v)| is enforced", "[core]")
{
    auto ps = reference();
    ps.v = 0.2;
    CHECK(mentions(validate_parameters(ps), "Re(m)<|Re(v)|"));
}

TEST_CASE("all violations are listed, nothing throws on non-finite input", "[core]")
{
    ParameterSet ps{0.0, 0.0, 2.0, 1.5, -1.0, 1.0, -1.0};
    const auto out = validate_parameters(ps);
    CHECK(mentions(out, "a!=0"));
    CHECK(mentions(out, "0<Re(m)<1"));
    CHECK(mentions(out, "Re(u)<1"));
    CHECK(mentions(out, "Re(v)>0"));
    CHECK(mentions(out, "Re(mu)<1"));
    CHECK(mentions(out, "Re(nu)>0"));

    ps = reference();
    ps.k = complex{std::nan(""), 0.0};
    CHECK_NOTHROW(validate_parameters(ps));
    CHECK_FALSE(validate_parameters(ps).valid());
}

TEST_CASE("log exponents below -1 are violations", "[core]")
{
    auto ps = reference();
    ps.v = 3.0; // beta_z = (0.5 - 3 - 1)/2 = -1.75
    CHECK(mentions(validate_parameters(ps), "Re(beta_z)>-1"));
}

TEST_CASE("boundary proximity and the narrower strip only warn", "[core]")
{
    auto ps = reference();
    ps.u = 1.0 - 1e-10;
    ps.v = 1.3;
    const auto out = validate_parameters(ps);
    CHECK(std::any_of(out.warnings.begin(), out.warnings.end(),
                      [](const std::string& w) { return w.find("near boundary: Re(u)<1") != std::string::npos; }));

    const auto ref = validate_parameters(reference());
    CHECK(ref.valid());
    CHECK_FALSE(ref.warnings.empty()); // m = 1/2 is outside Re(m) < 1/2
}

TEST_CASE("derive_exponents arithmetic", "[core]")
{
    auto e = derive_exponents(reference());
    CHECK(e.beta_p == complex{-0.75});
    CHECK(e.beta_q == complex{0.75});
    CHECK(e.beta_t == complex{0.75});
    CHECK(e.beta_z == complex{-0.75});

    ParameterSet ps = reference();
    ps.u = 0.25;
    ps.v = 0.75;
    e = derive_exponents(ps);
    CHECK(e.beta_t == complex{0.5});
    CHECK(e.beta_z == complex{-0.75});

    const ParameterSet zero{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    e = derive_exponents(zero);
    CHECK(e.beta_p == complex{0.0});
    CHECK(e.beta_q == complex{0.5});
    CHECK(e.beta_t == complex{0.0});
    CHECK(e.beta_z == complex{-0.5});
}

TEST_CASE("exponent sums are tied to m, u, mu", "[core][property]")
{
    for (int trial = 0; trial < 200; ++trial) {
        auto c = [] { return complex{oracle::uniform(-3, 3), oracle::uniform(-3, 3)}; };
        const ParameterSet ps{c(), c(), c(), c(), c(), c(), c()};
        const auto e = derive_exponents(ps);
        CHECK(std::abs(e.beta_t + e.beta_z + 0.5 - (ps.m - ps.u)) < 1e-14);
        CHECK(std::abs(e.beta_p + e.beta_q - 0.5 - (-ps.mu - ps.m)) < 1e-14);
    }
}

TEST_CASE("tolerances", "[core]")
{
    CHECK_THROWS_AS(Tolerances(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Tolerances(-1.0, 0.1), std::invalid_argument);
    const Tolerances t(1e-12, 1e-6);
    CHECK(t.close(1.0, 1.0 + 5e-7));
    CHECK_FALSE(t.close(1.0, 1.0 + 5e-6));
    CHECK(t.close(0.0, 1e-13));
}
