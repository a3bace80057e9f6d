#ifndef SEXTUPLE_LEGENDRE_HPP
#define SEXTUPLE_LEGENDRE_HPP

// Associated Legendre functions of the first kind on (0, 1) ("Ferrers"
// functions) for complex degree and order, Condon-Shortley phase.

#include <cmath>
#include <vector>

#include "sextuple/core.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

inline constexpr long max_hyp2f1_terms = 100'000;

/// Gauss series 2F1(a, b; c; x) for 0 <= x <= 1/2.
inline complex hyp2f1(complex a, complex b, complex c, double x)
{
    if (is_nonpositive_integer(c))
        throw pole_error("hyp2f1: c is a non-positive integer");
    if (!(x >= 0.0 && x <= 0.5))
        throw domain_error("hyp2f1: x must lie in [0, 1/2]");

    complex sum{1.0}, term{1.0};
    int quiet = 0;
    for (long n = 0; n < max_hyp2f1_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum += term;
        if (term == complex{0.0})
            return sum;
        // only trust smallness once the term ratio has turned below one
        const bool decaying = std::abs((a + dn + 1.0) * (b + dn + 1.0)) * x < std::abs((c + dn + 1.0) * (dn + 2.0));
        if (decaying && std::abs(term) < 1e-17 * std::abs(sum)) {
            if (++quiet >= 3)
                return sum;
        } else {
            quiet = 0;
        }
    }
    throw convergence_error("hyp2f1: series did not converge");
}

namespace detail {

inline void check_open_unit(double x, const char* fn)
{
    if (!(x > 0.0 && x < 1.0))
        throw domain_error(std::string(fn) + ": x must lie in (0, 1)");
}

inline bool is_positive_integer_order(complex u, long* m)
{
    return u.imag() == 0.0 && u.real() >= 1.0 && u.real() == std::floor(u.real()) &&
           (*m = static_cast<long>(u.real()), true);
}

// Below this x the expansion about x = 0 is used; the Gauss series in
// (1-x)/2 cancels badly there once |v| grows.
inline constexpr double legendre_switch_x = 0.6;

// Degrees with Re(v) above this are reached (for x >= legendre_switch_x) by
// the upward recurrence (nu-u+1) K_{nu+1} = (2nu+1) x K_nu - (nu+u) K_{nu-1}
// from small seeds; it is neutrally stable on (0, 1) while the series cancel.
inline constexpr double legendre_recurrence_from = 3.0;

// (1-x^2)^{-u/2} P_v^u(x) for one degree straight from the series, with the
// x-independent Gamma factors computed once.
class KernelSeries {
public:
    KernelSeries() = default;
    KernelSeries(complex v, complex u) : v_(v), u_(u)
    {
        // expansion about x = 0:
        // P = 2^u sqrt(pi) (1-x^2)^{-u/2} [F(a, b+1/2; 1/2; x^2)/(G(a+1/2) G(b+1))
        //                                 - 2x F(a+1/2, b+1; 3/2; x^2)/(G(b+1/2) G(a))]
        a_ = -0.5 * (v + u);
        b_ = 0.5 * (v - u);
        const complex front = std::pow(complex{2.0}, u) * std::sqrt(pi);
        even_ = front * rgamma(a_ + 0.5) * rgamma(b_ + 1.0);
        odd_ = 2.0 * front * rgamma(b_ + 0.5) * rgamma(a_);

        // expansion about x = 1
        if (is_positive_integer_order(u, &m_)) {
            // P_v^m = (-1)^m Gamma(v+m+1)/Gamma(v-m+1) P_v^{-m}; c = m + 1 is regular
            complex w = v.real() < -0.5 ? -v - 1.0 : v;
            const double dm = static_cast<double>(m_);
            const double sign = (m_ % 2 == 0) ? 1.0 : -1.0;
            gauss_ = sign * gamma(w + dm + 1.0) * rgamma(w - dm + 1.0) / factorial(static_cast<int>(m_));
            c_ = dm + 1.0;
            w_ = w;
        } else {
            m_ = 0;
            gauss_ = rgamma(1.0 - u);
            c_ = 1.0 - u;
            w_ = v;
        }
    }

    complex operator()(double x, double one_minus_x) const
    {
        if (x < legendre_switch_x) {
            const double x2 = x * x;
            const complex br = even_ * hyp2f1(a_, b_ + 0.5, 0.5, x2) - odd_ * x * hyp2f1(a_ + 0.5, b_ + 1.0, 1.5, x2);
            return std::exp(-u_ * std::log1p(-x2)) * br;
        }
        const complex f = hyp2f1(-w_, w_ + 1.0, c_, 0.5 * one_minus_x);
        if (m_ > 0) {
            // (1-x^2)^{-m/2} ((1-x)/(1+x))^{m/2} = (1+x)^{-m}
            return gauss_ * std::pow(1.0 + x, -static_cast<double>(m_)) * f;
        }
        return std::exp(-u_ * std::log(one_minus_x)) * gauss_ * f;
    }

private:
    complex v_{0.0}, u_{0.0};
    complex a_{0.0}, b_{0.0}, even_{0.0}, odd_{0.0};
    complex gauss_{0.0}, c_{1.0}, w_{0.0};
    long m_ = 0;
};

} // namespace detail

/// The integrand factor (1-x^2)^{-u/2} P_v^u(x) for fixed (v, u), evaluated at
/// many x. Small x uses the expansion in x^2, x near 1 the Gauss series in
/// (1-x)/2, large degree the recurrence from small seeds. Positive integer
/// orders avoid the removable 1/Gamma(1-u) zero through the reflection in u.
class LegendreKernel {
public:
    LegendreKernel(complex v, complex u) : v_(v.real() < -0.5 ? -v - 1.0 : v), u_(u), direct_(v_, u)
    {
        if (v_.real() >= detail::legendre_recurrence_from) {
            n_ = static_cast<long>(std::floor(v_.real()));
            v0_ = v_ - static_cast<double>(n_);
            // keep Re(nu - u + 1) >= 1 along the way
            n0_ = std::max(0L, static_cast<long>(std::ceil(u.real() - v0_.real())));
            if (n0_ + 1 < n_) {
                seed0_ = detail::KernelSeries(v0_ + static_cast<double>(n0_), u);
                seed1_ = detail::KernelSeries(v0_ + static_cast<double>(n0_ + 1), u);
                recur_ = true;
            }
        }
    }

    complex degree() const noexcept { return v_; }
    complex order() const noexcept { return u_; }

    /// `one_minus_x` is 1 - x without cancellation; x may have rounded to 1.
    complex operator()(double x, double one_minus_x) const
    {
        if (!(x > 0.0 && x <= 1.0 && one_minus_x > 0.0 && one_minus_x <= 1.0))
            throw domain_error("legendre_kernel: x must lie in (0, 1)");
        if (!recur_ || x < detail::legendre_switch_x)
            return direct_(x, one_minus_x);
        complex prev = seed0_(x, one_minus_x);
        complex cur = seed1_(x, one_minus_x);
        for (long j = n0_ + 1; j < n_; ++j) {
            const complex nu = v0_ + static_cast<double>(j);
            const complex next = ((2.0 * nu + 1.0) * x * cur - (nu + u_) * prev) / (nu - u_ + 1.0);
            prev = cur;
            cur = next;
        }
        return cur;
    }

    complex operator()(double x) const
    {
        detail::check_open_unit(x, "legendre_kernel");
        return (*this)(x, 1.0 - x);
    }

private:
    complex v_, u_;
    detail::KernelSeries direct_, seed0_, seed1_;
    bool recur_ = false;
    long n_ = 0, n0_ = 0;
    complex v0_{0.0};
};

/// P_v^u(x) = ((1+x)/(1-x))^{u/2} 2F1(-v, v+1; 1-u; (1-x)/2) / Gamma(1-u), 0 < x < 1.
inline complex assoc_legendre_p(complex v, complex u, double x)
{
    detail::check_open_unit(x, "assoc_legendre_p");
    const double c = 1.0 - x;
    return std::exp(0.5 * u * std::log(c * (1.0 + x))) * LegendreKernel(v, u)(x, c);
}

/// (1-x^2)^{-u/2} P_v^u(x) = (1-x)^{-u} 2F1(-v, v+1; 1-u; (1-x)/2) / Gamma(1-u).
inline complex legendre_kernel(complex v, complex u, double x, double one_minus_x)
{
    return LegendreKernel(v, u)(x, one_minus_x);
}

inline complex legendre_kernel(complex v, complex u, double x)
{
    detail::check_open_unit(x, "legendre_kernel");
    return legendre_kernel(v, u, x, 1.0 - x);
}

/// P_n^{order}(x) for n = 0..nmax by the three-term recurrence in degree,
/// seeded by P_order^order = (-1)^order (2 order - 1)!! (1-x^2)^{order/2}.
/// Entries below `order` are zero.
inline std::vector<double> legendre_recurrence(int nmax, int order, double x)
{
    detail::check_open_unit(x, "legendre_recurrence");
    if (order < 0 || order > nmax || nmax > 200)
        throw domain_error("legendre_recurrence: need 0 <= order <= nmax <= 200");

    std::vector<double> p(static_cast<std::size_t>(nmax) + 1, 0.0);
    const double sq = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    for (int i = 1; i <= order; ++i)
        pmm *= -(2.0 * i - 1.0) * sq;
    p[order] = pmm;
    if (nmax == order)
        return p;
    p[order + 1] = x * (2.0 * order + 1.0) * pmm;
    for (int n = order + 1; n < nmax; ++n)
        p[n + 1] = ((2.0 * n + 1.0) * x * p[n] - (n + order) * p[n - 1]) / (n - order + 1.0);
    return p;
}

} // namespace sextuple

#endif // SEXTUPLE_LEGENDRE_HPP
