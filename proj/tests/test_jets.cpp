#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sextuple/jets.hpp"

using namespace sextuple;
using oracle::rel_err;

TEST_CASE("jet arithmetic", "[jets]")
{
    const Jet a = Jet::linear(4, 1.0, 1.0); // 1 + w
    const Jet sq = a * a;
    CHECK(sq[0] == complex{1.0});
    CHECK(sq[1] == complex{2.0});
    CHECK(sq[2] == complex{1.0});
    CHECK(sq[3] == complex{0.0});
    const Jet inv = reciprocal(a);
    for (int j = 0; j <= 4; ++j)
        CHECK(inv[j] == complex{(j % 2) ? -1.0 : 1.0});
    const Jet e = exp(Jet::linear(5, 0.0, 1.0));
    for (int j = 0; j <= 5; ++j)
        CHECK(std::abs(e.derivative(j) - 1.0) < 1e-14);
    CHECK(scale_variable(a, 3.0)[1] == complex{3.0});
    CHECK_THROWS_AS(Jet(13), domain_error);
    CHECK_THROWS_AS(Jet(2) + Jet(3), domain_error);
    CHECK_THROWS_AS(reciprocal(Jet(2)), domain_error);
}

TEST_CASE("gamma jets match finite differences", "[jets]")
{
    const complex z0{1.3, 0.4};
    const Jet g = jet_of_gamma(z0, 4);
    const Jet rg = jet_of_rgamma(z0, 4);
    for (int j = 0; j <= 4; ++j) {
        const complex fd = oracle::derivative([](complex z) { return std::exp(log_gamma(z)); }, z0, j, 0.2, 5);
        CHECK(rel_err(g.derivative(j), fd) < 1e-6);
        const complex fdr = oracle::derivative([](complex z) { return std::exp(-log_gamma(z)); }, z0, j, 0.2, 5);
        CHECK(rel_err(rg.derivative(j), fdr) < 1e-6);
    }
    const Jet prod = g * rg;
    CHECK(std::abs(prod[0] - 1.0) < 1e-14);
    for (int j = 1; j <= 4; ++j)
        CHECK(std::abs(prod[j]) < 1e-13);
}

TEST_CASE("csc jet", "[jets]")
{
    // d/dm csc(pi m) = -pi cot(pi m) csc(pi m)
    const Jet c = jet_csc(0.3, 3);
    CHECK(rel_err(c[0], 1.0 / std::sin(0.3 * pi)) < 1e-14);
    const double d1 = -pi * std::cos(0.3 * pi) / (std::sin(0.3 * pi) * std::sin(0.3 * pi));
    CHECK(rel_err(c[1], d1) < 1e-13);
    CHECK(std::abs(d1 - (-2.82133)) < 1e-5);
    const complex fd = oracle::derivative([](complex m) { return 1.0 / std::sin(pi * m); }, 0.3, 1, 0.05, 5);
    CHECK(rel_err(c[1], fd) < 1e-9);
    // at m = 1/2: csc(pi/2 + pi w) = sec(pi w) = 1 + (pi w)^2/2 + 5 (pi w)^4/24
    const Jet h = jet_csc(0.5, 4);
    CHECK(std::abs(h[1]) < 1e-15);
    CHECK(rel_err(h[2], pi * pi / 2.0) < 1e-14);
    CHECK(rel_err(h[4], 5.0 * std::pow(pi, 4) / 24.0) < 1e-13);
    CHECK_THROWS_AS(jet_csc(1.0, 2), pole_error);
}

TEST_CASE("closed-form generating function", "[jets]")
{
    ParameterSet ps; // a = 1, m = 1/2, mu = u = 0
    const Jet f = closed_form_jet(ps, 4);
    CHECK(rel_err(f.derivative(0), pi * pi / 2.0) < 1e-14);
    CHECK(std::abs(f.derivative(1)) < 1e-14);
    CHECK(rel_err(f.derivative(2), std::pow(pi, 4) / 2.0) < 1e-14);
    CHECK(std::abs(f.derivative(2) - 48.7045455170012) < 1e-10);

    // finite differences of F(w) in w for a complex parameter set
    ParameterSet q;
    q.a = complex{-2.0, 0.5};
    q.m = complex{0.3, 0.1};
    q.u = complex{0.2, 0.0};
    q.mu = complex{-0.1, 0.2};
    const Jet g = closed_form_jet(q, 4);
    auto F = [&](complex w) {
        return std::exp(w * std::log(q.a)) * pi * pi * std::pow(complex{2.0}, q.mu + q.u - 1.0) / std::sin(pi * (q.m + w));
    };
    for (int j = 0; j <= 4; ++j)
        CHECK(rel_err(g.derivative(j), oracle::derivative(F, 0.0, j, 0.05, 5)) < 1e-6);
    CHECK_THROWS_AS(jet_of_power(0.0, 2), domain_error);
}
