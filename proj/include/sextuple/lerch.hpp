#ifndef SEXTUPLE_LERCH_HPP
#define SEXTUPLE_LERCH_HPP

// Hurwitz-Lerch zeta Phi(z, s, v) = sum_{n>=0} z^n (v+n)^{-s} and its
// continuations: plain series, the elementary form at s = -n, a direct sum
// with an asymptotic tail (|z| <= 1, z != 1), the z = -1 Hurwitz split and
// the Laplace-integral representation as an oracle.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sextuple/core.hpp"
#include "sextuple/quad.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

enum class LerchRegime { series, apostol, unit_circle, accelerated, hurwitz };

inline const char* to_string(LerchRegime r) noexcept
{
    switch (r) {
    case LerchRegime::series: return "series";
    case LerchRegime::apostol: return "apostol";
    case LerchRegime::unit_circle: return "unit_circle";
    case LerchRegime::accelerated: return "accelerated";
    case LerchRegime::hurwitz: return "hurwitz";
    }
    return "?";
}

struct LerchArgs {
    complex z;
    complex s;
    complex v;
};

struct LerchValue {
    complex value;
    double error_estimate = 0.0;
    LerchRegime regime = LerchRegime::series;
};

inline constexpr double lerch_integer_tol = 1e-12;
inline constexpr double lerch_unit_tol = 1e-12;
inline constexpr int max_apostol_order = 10;

namespace detail {

inline void check_lerch_v(complex v)
{
    if (is_nonpositive_integer(v))
        throw pole_error("lerch: v is a non-positive integer");
}

inline complex power_minus_s(complex base, complex s)
{
    if (base == complex{0.0})
        return s == complex{0.0} ? complex{1.0} : complex{0.0};
    return std::exp(-s * std::log(base));
}

} // namespace detail

/// Phi(z, -n, v) = (v + z d/dz)^n 1/(1-z), carried on the basis
/// b_i = z^i/(1-z)^{i+1}, where (v + z d/dz) b_i = (v+i) b_i + (i+1) b_{i+1}.
inline complex lerch_apostol(complex z, int n, complex v)
{
    if (n < 0)
        throw domain_error("lerch_apostol: n must be non-negative");
    if (z == complex{1.0})
        throw pole_error("lerch_apostol: pole at z = 1");

    std::vector<complex> c(static_cast<std::size_t>(n) + 1, complex{0.0});
    c[0] = 1.0;
    for (int step = 1; step <= n; ++step) {
        for (int i = step; i >= 0; --i) {
            complex next = (v + static_cast<double>(i)) * c[i];
            if (i > 0)
                next += static_cast<double>(i) * c[i - 1];
            c[i] = next;
        }
    }
    const complex inv = 1.0 / (1.0 - z);
    const complex ratio = z * inv;
    complex b = inv;
    complex sum{0.0};
    for (int i = 0; i <= n; ++i) {
        sum += c[i] * b;
        b *= ratio;
    }
    return sum;
}

/// Plain series, |z| < 1. Stops when three consecutive terms fall below
/// 1e-17 of the running sum.
inline LerchValue lerch_series(complex z, complex s, complex v, long max_terms = 20'000'000)
{
    detail::check_lerch_v(v);
    if (!(std::abs(z) < 1.0))
        throw unsupported_regime("lerch_series: requires |z| < 1");
    complex sum{0.0}, zn{1.0};
    int quiet = 0;
    for (long n = 0; n < max_terms; ++n) {
        const complex term = zn * detail::power_minus_s(v + static_cast<double>(n), s);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) || zn == complex{0.0}) {
            if (++quiet >= 3 && static_cast<double>(n) > -s.real())
                return {sum, std::abs(term), LerchRegime::series};
        } else {
            quiet = 0;
        }
        zn *= z;
    }
    throw convergence_error("lerch_series: no convergence");
}

namespace detail {

// Distance from 0 to the nearest singularity log z + 2 pi i k of
// 1/(1 - z e^{-t}).
inline double lerch_tail_radius(complex z)
{
    const complex lz = std::log(z);
    double r = std::abs(lz);
    for (int k : {-1, 1})
        r = std::min(r, std::abs(lz + complex{0.0, 2.0 * pi * k}));
    return r;
}

// Phi(z,s,v) = sum_{n<N} z^n (v+n)^{-s} + z^N Phi(z,s,v+N), the tail from
// Watson's lemma on the Laplace representation:
//   Phi(z,s,V) ~ sum_j c_j (s)_j V^{-s-j},  sum_j c_j t^j = 1/(1 - z e^{-t}).
inline LerchValue lerch_sum_plus_tail(complex z, complex s, complex v, LerchRegime tag)
{
    check_lerch_v(v);
    if (z == complex{1.0})
        throw pole_error("lerch: z = 1 needs Re(s) > 1 (Hurwitz regime)");
    const double r = lerch_tail_radius(z);
    // A smaller reach keeps the head sum short when its terms grow (Re s < 0).
    const double reach = (s.real() < 0.0 ? 30.0 : 40.0) + 2.0 * std::abs(s);
    constexpr long max_head = 1L << 22;
    double want = reach / r;
    long n_head = 0;
    while (n_head < max_head && std::abs(v + static_cast<double>(n_head)) < want)
        ++n_head;
    n_head = std::max(n_head, 4L);

    complex head{0.0}, zn{1.0};
    double head_mag = 0.0;
    for (long n = 0; n < n_head; ++n) {
        const complex term = zn * power_minus_s(v + static_cast<double>(n), s);
        head += term;
        head_mag += std::abs(term);
        zn *= z;
    }

    // Taylor coefficients of 1/(1 - z e^{-t}).
    constexpr int max_terms = 160;
    std::vector<complex> h(max_terms), c(max_terms);
    h[0] = 1.0 - z;
    double fact = 1.0;
    for (int j = 1; j < max_terms; ++j) {
        fact *= j;
        h[j] = -z * ((j % 2 == 0) ? 1.0 : -1.0) / fact;
    }
    c[0] = 1.0 / h[0];
    const complex V = v + static_cast<double>(n_head);
    const complex inv_v = 1.0 / V;
    complex vpow = power_minus_s(V, s); // V^{-s-j}
    complex rising{1.0};                // (s)_j
    complex tail{0.0};
    // Progress is judged on consecutive pairs: for z = -1 every other
    // coefficient vanishes.
    double prev_pair = std::numeric_limits<double>::infinity();
    double prev_mag = 0.0;
    double last = 0.0;
    for (int j = 0; j < max_terms; ++j) {
        if (j > 0) {
            complex acc{0.0};
            for (int i = 1; i <= j; ++i)
                acc += h[i] * c[j - i];
            c[j] = -acc / h[0];
        }
        const complex term = c[j] * rising * vpow;
        const double mag = std::abs(term);
        const double pair = mag + prev_mag;
        if (j > 3 && pair > prev_pair)
            break; // optimal truncation of the asymptotic series
        tail += term;
        last = pair;
        if (rising == complex{0.0} || (j > 1 && pair <= 1e-18 * std::abs(tail)))
            break;
        if (j > 0)
            prev_pair = pair;
        prev_mag = mag;
        rising *= s + static_cast<double>(j);
        vpow *= inv_v;
    }
    const complex value = head + zn * tail;
    const double err = std::abs(zn) * last + 4e-16 * (head_mag + std::abs(zn * tail));
    return {value, err, tag};
}

} // namespace detail

/// Phi on the unit circle, z != 1. Returns an error estimate that grows as
/// z approaches 1.
inline LerchValue lerch_unit_circle(complex z, complex s, complex v)
{
    if (std::abs(std::abs(z) - 1.0) > lerch_unit_tol)
        throw domain_error("lerch_unit_circle: |z| must be 1");
    if (std::abs(z - 1.0) < 1e-6)
        throw domain_error("lerch_unit_circle: z too close to 1");
    return detail::lerch_sum_plus_tail(z, s, v, LerchRegime::unit_circle);
}

/// Phi(-1, s, v) = 2^{-s} [zeta(s, v/2) - zeta(s, (v+1)/2)].
inline complex lerch_minus_one_split(complex s, complex v)
{
    if (!(v.real() > 0.0))
        throw domain_error("lerch_minus_one_split: requires Re(v) > 0");
    return std::pow(complex{2.0}, -s) * (hurwitz_zeta(s, v / 2.0) - hurwitz_zeta(s, (v + 1.0) / 2.0));
}

/// Laplace representation (1/Gamma(s)) int_0^inf t^{s-1} e^{-vt}/(1 - z e^{-t}) dt,
/// tanh-sinh on [0, 1] and Gauss-Laguerre on [1, inf). Cross-check only.
inline complex lerch_integral_oracle(complex z, complex s, complex v, Rule1D head = tanh_sinh(8),
                                     Rule1D tail = gauss_laguerre(128, 0.0))
{
    if (!(v.real() > 0.0))
        throw domain_error("lerch_integral_oracle: requires Re(v) > 0");
    if (std::abs(z) > 1.0 + 1e-15)
        throw domain_error("lerch_integral_oracle: requires |z| <= 1");
    if (z == complex{1.0}) {
        if (!(s.real() > 1.0))
            throw domain_error("lerch_integral_oracle: z = 1 requires Re(s) > 1");
    } else if (!(s.real() > 0.0)) {
        throw domain_error("lerch_integral_oracle: requires Re(s) > 0");
    }
    if (head.kind != RuleKind::tanh_sinh || tail.kind != RuleKind::gauss_laguerre || tail.alpha != 0.0)
        throw domain_error("lerch_integral_oracle: expects tanh-sinh head and Laguerre(alpha=0) tail");

    const auto integrand = [&](double t, double one_minus_e) {
        // 1 - z e^{-t} = (1 - z) + z (1 - e^{-t})
        const complex denom = (1.0 - z) + z * one_minus_e;
        return std::exp((s - 1.0) * std::log(t) - v * t) / denom;
    };

    complex sum{0.0};
    for (std::size_t i = 0; i < head.size(); ++i) {
        const double t = head.nodes[i];
        sum += head.weights[i] * integrand(t, -std::expm1(-t));
    }
    const double rho = v.real();
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const double x = tail.nodes[i];
        const double t = 1.0 + x / rho;
        // e^{x} f(t) / rho, with e^{-vt} e^{x} = e^{-v} e^{-i Im(v) x / rho}
        const complex denom = (1.0 - z) + z * (-std::expm1(-t));
        const complex f = std::exp((s - 1.0) * std::log(t) - v - complex{0.0, v.imag()} * (x / rho)) / denom;
        sum += tail.weights[i] * f / rho;
    }
    return sum * rgamma(s);
}

/// Dispatcher. Routing:
///   s a non-positive integer (within 1e-12) -> apostol
///   z == 1                                  -> Hurwitz zeta (needs Re s > 1)
///   |z| == 1 (within 1e-12)                 -> unit circle
///   |z| <= 1 - 1e-3 and (|z| <= 1/2 or Re s >= 0) -> series
///   otherwise |z| < 1                        -> accelerated (sum + tail)
///   |z| > 1                                  -> unsupported
inline LerchValue lerch_phi_detailed(const LerchArgs& args)
{
    const auto [z, s, v] = args;
    detail::check_lerch_v(v);
    const double az = std::abs(z);

    long n = 0;
    if (near_integer(s, lerch_integer_tol, &n) && n <= 0 && -n <= max_apostol_order && z != complex{1.0}) {
        if (az > 1.0 + lerch_unit_tol)
            throw unsupported_regime("lerch_phi: |z| > 1 is not continued");
        return {lerch_apostol(z, static_cast<int>(-n), v), 0.0, LerchRegime::apostol};
    }
    if (std::abs(z - 1.0) <= lerch_unit_tol) {
        if (!(s.real() > 1.0))
            throw pole_error("lerch_phi: z = 1 requires Re(s) > 1");
        return {hurwitz_zeta(s, v), 0.0, LerchRegime::hurwitz};
    }
    if (az > 1.0 + lerch_unit_tol)
        throw unsupported_regime("lerch_phi: |z| > 1 is not continued");
    if (std::abs(az - 1.0) <= lerch_unit_tol)
        return lerch_unit_circle(z / az, s, v);
    if (az <= 1.0 - 1e-3 && (az <= 0.5 || s.real() >= 0.0))
        return lerch_series(z, s, v);
    return detail::lerch_sum_plus_tail(z, s, v, LerchRegime::accelerated);
}

inline complex lerch_phi(const LerchArgs& args) { return lerch_phi_detailed(args).value; }

inline complex lerch_phi(complex z, complex s, complex v) { return lerch_phi({z, s, v}); }

} // namespace sextuple

#endif // SEXTUPLE_LERCH_HPP
