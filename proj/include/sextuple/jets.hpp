#ifndef SEXTUPLE_JETS_HPP
#define SEXTUPLE_JETS_HPP

// Truncated Taylor series in one complex variable w about w = 0. Coefficient j
// holds f^{(j)}(0)/j!, so k! times coefficient k is the k-th derivative the
// residue at w = 0 picks out.

#include <cmath>
#include <initializer_list>
#include <vector>

#include "sextuple/core.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

inline constexpr int max_jet_order = 12;

class Jet {
public:
    explicit Jet(int order) : c_(check(order) + 1, complex{0.0}) {}

    Jet(int order, std::initializer_list<complex> coeffs) : Jet(order)
    {
        std::size_t i = 0;
        for (complex z : coeffs) {
            if (i > static_cast<std::size_t>(order))
                break;
            c_[i++] = z;
        }
    }

    static Jet constant(int order, complex c0) { return Jet(order, {c0}); }

    /// c0 + c1 w
    static Jet linear(int order, complex c0, complex c1) { return Jet(order, {c0, c1}); }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const complex& operator[](int j) const { return c_.at(static_cast<std::size_t>(j)); }
    complex& operator[](int j) { return c_.at(static_cast<std::size_t>(j)); }
    const std::vector<complex>& coefficients() const noexcept { return c_; }

    /// j! * coefficient j
    complex derivative(int j) const { return (*this)[j] * detail::factorial(j); }

    Jet& operator+=(const Jet& o)
    {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    Jet& operator*=(complex s) noexcept
    {
        for (auto& z : c_)
            z *= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, complex s) { return a *= s; }
    friend Jet operator*(complex s, Jet a) { return a *= s; }

    /// Cauchy product truncated at the common order.
    friend Jet operator*(const Jet& a, const Jet& b)
    {
        a.same_order(b);
        Jet r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            complex acc{0.0};
            for (int i = 0; i <= n; ++i)
                acc += a.c_[i] * b.c_[n - i];
            r.c_[n] = acc;
        }
        return r;
    }

    void assert_finite(const char* what) const
    {
        for (complex z : c_)
            require_finite(z, what);
    }

private:
    static std::size_t check(int order)
    {
        if (order < 0 || order > max_jet_order)
            throw domain_error("Jet: order must lie in [0, 12]");
        return static_cast<std::size_t>(order);
    }

    void same_order(const Jet& o) const
    {
        if (o.c_.size() != c_.size())
            throw domain_error("Jet: order mismatch");
    }

    std::vector<complex> c_;
};

inline Jet reciprocal(const Jet& a)
{
    if (a[0] == complex{0.0})
        throw domain_error("Jet reciprocal: zero constant term");
    const int n = a.order();
    Jet r(n);
    const complex inv0 = 1.0 / a[0];
    r[0] = inv0;
    for (int j = 1; j <= n; ++j) {
        complex acc{0.0};
        for (int i = 1; i <= j; ++i)
            acc += a[i] * r[j - i];
        r[j] = -acc * inv0;
    }
    return r;
}

/// exp of a jet: E' = A' E, so j E_j = sum_{i=1}^j i A_i E_{j-i}.
inline Jet exp(const Jet& a)
{
    const int n = a.order();
    Jet e(n);
    e[0] = std::exp(a[0]);
    for (int j = 1; j <= n; ++j) {
        complex acc{0.0};
        for (int i = 1; i <= j; ++i)
            acc += static_cast<double>(i) * a[i] * e[j - i];
        e[j] = acc / static_cast<double>(j);
    }
    return e;
}

/// f(c w) from f(w): coefficient j scales by c^j.
inline Jet scale_variable(Jet a, complex c)
{
    complex p{1.0};
    for (int j = 0; j <= a.order(); ++j) {
        a[j] *= p;
        p *= c;
    }
    return a;
}

/// Taylor jet of log Gamma(z0 + w) without the constant term:
/// coefficient j >= 1 is psi^{(j-1)}(z0)/j!.
inline Jet log_gamma_increment_jet(complex z0, int order)
{
    Jet l(order);
    for (int j = 1; j <= order; ++j)
        l[j] = polygamma(j - 1, z0) / detail::factorial(j);
    return l;
}

/// Gamma(z0 + w)
inline Jet jet_of_gamma(complex z0, int order)
{
    return exp(log_gamma_increment_jet(z0, order)) * gamma(z0);
}

/// 1/Gamma(z0 + w)
inline Jet jet_of_rgamma(complex z0, int order)
{
    Jet l = log_gamma_increment_jet(z0, order);
    l *= -1.0;
    return exp(l) * rgamma(z0);
}

/// c^w = exp(w log c), principal log.
inline Jet jet_of_power(complex base, int order)
{
    if (base == complex{0.0})
        throw domain_error("jet_of_power: zero base");
    return exp(Jet::linear(order, 0.0, std::log(base)));
}

/// csc(pi (m + w))
inline Jet jet_csc(complex m, int order)
{
    long n = 0;
    if (near_integer(m, 0.0, &n))
        throw pole_error("jet_csc: pole at integer m");
    const Jet ep = exp(Jet::linear(order, I * pi * m, I * pi));
    const Jet em = exp(Jet::linear(order, -I * pi * m, -I * pi));
    const Jet sine = (ep - em) * (1.0 / (2.0 * I));
    return reciprocal(sine);
}

/// F(w) = a^w pi^2 2^{mu+u-1} csc(pi (m + w)), the collapsed generating
/// function of the sextuple integral in the power k of its coupling log.
inline Jet closed_form_jet(const ParameterSet& ps, int order)
{
    const complex scale = pi * pi * std::pow(complex{2.0}, ps.mu + ps.u - 1.0);
    Jet f = jet_of_power(ps.a, order) * jet_csc(ps.m, order);
    f *= scale;
    f.assert_finite("closed_form_jet");
    return f;
}

} // namespace sextuple

#endif // SEXTUPLE_JETS_HPP
