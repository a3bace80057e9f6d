#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sextuple/mellin.hpp"

using namespace sextuple;
using oracle::rel_err;

TEST_CASE("Mellin closed form on elementary kernels", "[mellin]")
{
    // u = 0, v = 0: int x^{s-1} dx = 1/s
    for (double s : {0.3, 1.0, 2.7})
        CHECK(rel_err(mellin_legendre_closed(s, 0.0, 0.0), 1.0 / s) < 1e-14);
    // u = 0, v = 1: int x^s dx
    CHECK(rel_err(mellin_legendre_closed(0.6, 0.0, 1.0), 1.0 / 1.6) < 1e-14);
    // v = 2: int x^{s-1} (3x^2-1)/2 dx at s = 1/2 -> 3/5 - 1 = -0.4
    CHECK(rel_err(mellin_legendre_closed(0.5, 0.0, 2.0), -0.4) < 1e-14);
    CHECK(rel_err(mellin_legendre_closed(0.5, 0.25, 0.75), 0.822178958662458552) < 1e-13);
    // int_0^1 x P_3(x) dx = 0, a pole of the second denominator Gamma
    CHECK(std::abs(mellin_legendre_closed(2.0, 0.0, 3.0)) < 1e-15);

    CHECK_THROWS_AS(mellin_legendre_closed(0.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(mellin_legendre_closed(0.5, 1.0, 1.0), domain_error);
}

TEST_CASE("Mellin quadrature agrees with closed form", "[mellin][property]")
{
    for (int i = 0; i < 50; ++i) {
        const double s = oracle::uniform(0.2, 3.0);
        const double u = oracle::uniform(-1.0, 0.8);
        const double v = oracle::uniform(0.1, 3.0);
        const QuadratureValue q = mellin_legendre_quadrature(s, u, v);
        const complex c = mellin_legendre_closed(s, u, v);
        CHECK(oracle::mixed_err(q.value, c) < 1e-10);
        CHECK(q.error_estimate < 1e-8);
    }
    for (int i = 0; i < 20; ++i) {
        const complex s{oracle::uniform(0.3, 2.5), oracle::uniform(-1.0, 1.0)};
        const complex u{oracle::uniform(-0.8, 0.7), oracle::uniform(-0.5, 0.5)};
        const complex v{oracle::uniform(0.2, 2.0), oracle::uniform(-0.8, 0.8)};
        CHECK(oracle::mixed_err(mellin_legendre_quadrature(s, u, v).value, mellin_legendre_closed(s, u, v)) < 1e-10);
    }
}

TEST_CASE("log moments", "[mellin]")
{
    CHECK(rel_err(log_moment(0.0), 1.0) < 1e-15);
    CHECK(rel_err(log_moment(3.0), 6.0) < 1e-14);
    CHECK(rel_err(log_moment(0.75), 0.919062526848883234) < 1e-14);
    CHECK(rel_err(log_moment(-0.5), std::sqrt(pi)) < 1e-14);
    CHECK_THROWS_AS(log_moment(-1.0), domain_error);
    // quadrature oracle: substitute L = -log z
    const Rule1D r = tanh_sinh(9);
    complex acc{0.0};
    const complex beta{0.4, 0.3};
    for (std::size_t i = 0; i < r.size(); ++i)
        acc += r.weights[i] * std::exp(beta * std::log(-std::log(r.nodes[i])));
    CHECK(rel_err(acc, log_moment(beta)) < 1e-10);
}
