#ifndef SEXTUPLE_MELLIN_HPP
#define SEXTUPLE_MELLIN_HPP

// One-dimensional factors of the separable reduction:
//   M(s; u, v) = int_0^1 x^{s-1} (1-x^2)^{-u/2} P_v^u(x) dx
//   int_0^1 log^beta(1/z) dz = Gamma(beta + 1)

#include <cmath>

#include "sextuple/core.hpp"
#include "sextuple/legendre.hpp"
#include "sextuple/quad.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

struct MellinArgs {
    complex s;
    complex u;
    complex v;
};

/// Integrability of the Legendre kernel: Re(s) > 0 at x = 0, Re(u) < 1 at x = 1.
inline void check_mellin_args(const MellinArgs& a)
{
    if (!(a.s.real() > 0.0))
        throw domain_error("mellin: requires Re(s) > 0");
    if (!(a.u.real() < 1.0))
        throw domain_error("mellin: requires Re(u) < 1");
}

/// M(s;u,v) = sqrt(pi) 2^{u-s} Gamma(s) / [Gamma((s-u+v)/2 + 1) Gamma((s-u-v+1)/2)]
inline complex mellin_legendre_closed(complex s, complex u, complex v)
{
    check_mellin_args({s, u, v});
    if (is_nonpositive_integer(s))
        throw pole_error("mellin_legendre_closed: Gamma(s) pole");
    const complex num = std::sqrt(pi) * std::pow(complex{2.0}, u - s) * gamma(s);
    return num * rgamma((s - u + v) / 2.0 + 1.0) * rgamma((s - u - v + 1.0) / 2.0);
}

/// tanh-sinh evaluation of M at the given level; the error estimate is the
/// difference from the half-density rule.
inline QuadratureValue mellin_legendre_quadrature(complex s, complex u, complex v, int level = 10)
{
    check_mellin_args({s, u, v});
    const LegendreKernel kernel(v, u);
    const auto eval = [&](int lev) {
        const Rule1D r = tanh_sinh(lev);
        complex acc{0.0};
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double x = r.nodes[i];
            const double c = r.complement(i);
            acc += r.weights[i] * std::exp((s - 1.0) * std::log(x)) * kernel(x, c);
        }
        return acc;
    };
    const complex fine = eval(level);
    const complex coarse = eval(std::max(1, level - 1));
    const double err = std::abs(fine - coarse);
    if (!is_finite(fine))
        throw convergence_error("mellin_legendre_quadrature: non-finite value");
    return {fine, err};
}

/// int_0^1 log^beta(1/z) dz
inline complex log_moment(complex beta)
{
    if (!(beta.real() > -1.0))
        throw domain_error("log_moment: requires Re(beta) > -1");
    return gamma(beta + 1.0);
}

} // namespace sextuple

#endif // SEXTUPLE_MELLIN_HPP
