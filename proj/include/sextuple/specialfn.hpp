#ifndef SEXTUPLE_SPECIALFN_HPP
#define SEXTUPLE_SPECIALFN_HPP

// Complex gamma family (log-gamma, gamma, digamma, polygamma, harmonic numbers)
// and the zeta family (Hurwitz, Riemann, Dirichlet eta). Principal branches
// throughout.

#include <array>
#include <cmath>
#include <string>

#include "sextuple/core.hpp"

namespace sextuple {

namespace detail {

// B_2, B_4, ..., B_16
inline constexpr std::array<double, 8> bernoulli_even = {
    1.0 / 6.0,     -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
};

inline constexpr int max_polygamma_order = 12;

inline double factorial(int n) noexcept
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline void check_gamma_pole(complex z, const char* fn)
{
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error(std::string(fn) + ": pole at non-positive integer " + std::to_string(z.real()));
}

// Number of unit shifts that moves Re(z) to at least `threshold`.
inline int shift_count(complex z, double threshold) noexcept
{
    return z.real() >= threshold ? 0 : static_cast<int>(std::ceil(threshold - z.real()));
}

} // namespace detail

/// Principal log-gamma, continuous on the plane cut along (-inf, 0].
/// Upward recurrence to Re(z) >= 15, then the Stirling series through B_16.
inline complex log_gamma(complex z)
{
    detail::check_gamma_pole(z, "log_gamma");
    if (z.imag() == 0.0 && z.real() > 0.0)
        return complex{std::lgamma(z.real())};
    const int n = detail::shift_count(z, 15.0);
    complex shift_log{0.0};
    for (int j = 0; j < n; ++j)
        shift_log += std::log(z + static_cast<double>(j));
    const complex w = z + static_cast<double>(n);

    const complex inv = 1.0 / w;
    const complex inv2 = inv * inv;
    complex series{0.0};
    complex p = inv;
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const double two_j = 2.0 * static_cast<double>(j + 1);
        series += detail::bernoulli_even[j] / (two_j * (two_j - 1.0)) * p;
        p *= inv2;
    }
    const complex stirling = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series;
    return stirling - shift_log;
}

/// Gamma function; reflection for Re(z) < 1/2. The real axis goes to libm.
inline complex gamma(complex z)
{
    detail::check_gamma_pole(z, "gamma");
    if (z.imag() == 0.0)
        return complex{std::tgamma(z.real())};
    if (z.real() < 0.5)
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    return std::exp(log_gamma(z));
}

/// 1/Gamma(z), entire; exactly zero at the poles of gamma.
inline complex rgamma(complex z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        return complex{0.0};
    if (z.imag() == 0.0)
        return complex{1.0 / std::tgamma(z.real())};
    if (z.real() < 0.5)
        return std::sin(pi * z) * gamma(1.0 - z) / pi;
    return std::exp(-log_gamma(z));
}

/// psi^{(n)}(z) for 0 <= n <= 12: upward recurrence plus the asymptotic series.
inline complex polygamma(int n, complex z)
{
    if (n < 0 || n > detail::max_polygamma_order)
        throw domain_error("polygamma: order must lie in [0, 12]");
    detail::check_gamma_pole(z, "polygamma");

    const int shifts = detail::shift_count(z, 15.0 + 2.0 * n);
    const double nfact = detail::factorial(n);
    complex acc{0.0};
    for (int j = 0; j < shifts; ++j)
        acc += std::pow(z + static_cast<double>(j), -(n + 1));
    const complex w = z + static_cast<double>(shifts);
    const complex inv = 1.0 / w;
    const complex inv2 = inv * inv;

    if (n == 0) {
        complex s = std::log(w) - 0.5 * inv;
        complex p = inv2;
        for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
            s -= detail::bernoulli_even[j] / (2.0 * static_cast<double>(j + 1)) * p;
            p *= inv2;
        }
        return s - acc;
    }

    // (-1)^{n+1} [ (n-1)!/w^n + n!/(2 w^{n+1}) + sum_j B_2j (2j+n-1)!/((2j)! w^{2j+n}) ]
    const complex wn = std::pow(inv, n);
    complex s = detail::factorial(n - 1) * wn + nfact * 0.5 * wn * inv;
    complex p = wn * inv2;
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const int two_j = 2 * static_cast<int>(j + 1);
        double c = 1.0; // (2j+n-1)!/(2j)!
        for (int i = two_j + 1; i <= two_j + n - 1; ++i)
            c *= i;
        s += detail::bernoulli_even[j] * c * p;
        p *= inv2;
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    // psi^{(n)}(z) = psi^{(n)}(z+N) - (-1)^n n! sum 1/(z+j)^{n+1}
    return sign * s + sign * nfact * acc;
}

inline complex digamma(complex z) { return polygamma(0, z); }

/// H_w = psi(w + 1) + gamma_E
inline complex harmonic(complex w)
{
    if (w.imag() == 0.0 && w.real() <= -1.0 && w.real() == std::floor(w.real()))
        throw pole_error("harmonic: pole at negative integer");
    return digamma(w + 1.0) + euler_gamma;
}

/// Rising factorial (s)_n = s (s+1) ... (s+n-1).
inline complex pochhammer(complex s, int n) noexcept
{
    complex p{1.0};
    for (int i = 0; i < n; ++i)
        p *= s + static_cast<double>(i);
    return p;
}

/// Hurwitz zeta by Euler-Maclaurin. For s a non-positive integer the
/// correction series terminates, so no shift is taken and the value is the
/// exact Bernoulli polynomial -B_{n+1}(v)/(n+1) up to rounding.
inline complex hurwitz_zeta(complex s, complex v)
{
    if (s == complex{1.0})
        throw pole_error("hurwitz_zeta: pole at s = 1");
    if (!(v.real() > 0.0))
        throw domain_error("hurwitz_zeta: requires Re(v) > 0");

    long sn = 0;
    const bool terminating = near_integer(s, 0.0, &sn) && sn <= 0 && -sn <= 15;

    int shift = 0;
    if (!terminating) {
        // for Re s < 0 the head sum grows like N^{1-Re s} and cancels against the
        // tail, so the shift is kept as small as the Bernoulli series allows
        const double target = s.real() >= 0.0 ? std::max(10.0, 5.0 + 1.5 * std::abs(s))
                                               : std::max(6.0, 3.0 + std::abs(s));
        while (std::abs(v + static_cast<double>(shift)) < target || (s.real() >= 0.0 && shift < 16))
            ++shift;
    }

    complex head{0.0};
    for (int n = 0; n < shift; ++n)
        head += std::pow(v + static_cast<double>(n), -s);

    const complex w = v + static_cast<double>(shift);
    const complex lw = std::log(w);
    const complex w_pow = std::exp(-s * lw); // w^{-s}
    complex tail = w * w_pow / (s - 1.0) + 0.5 * w_pow;

    const complex inv2 = 1.0 / (w * w);
    complex p = w_pow / w;       // w^{-s-2j+1}, starting at j = 1
    complex rising = s;          // (s)_{2j-1}
    double fact = 2.0;           // (2j)!
    for (std::size_t j = 0; j < detail::bernoulli_even.size(); ++j) {
        const complex term = detail::bernoulli_even[j] / fact * rising * p;
        tail += term;
        const double two_j = 2.0 * static_cast<double>(j + 1);
        rising *= (s + two_j - 1.0) * (s + two_j);
        fact *= (two_j + 1.0) * (two_j + 2.0);
        p *= inv2;
        if (rising == complex{0.0})
            break;
    }
    return head + tail;
}

inline complex riemann_zeta(complex s) { return hurwitz_zeta(s, complex{1.0}); }

/// Dirichlet eta (1 - 2^{1-s}) zeta(s), with eta(1) = ln 2.
inline complex dirichlet_eta(complex s)
{
    if (s == complex{1.0})
        return complex{std::log(2.0)};
    return (1.0 - std::pow(complex{2.0}, 1.0 - s)) * riemann_zeta(s);
}

} // namespace sextuple

#endif // SEXTUPLE_SPECIALFN_HPP
