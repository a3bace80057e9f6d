#ifndef SEXTUPLE_CORE_HPP
#define SEXTUPLE_CORE_HPP

// Shared scalar types, the seven-parameter model of the sextuple identity and
// its convergence-strip validation.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextuple {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr complex I{0.0, 1.0};

// ---------------------------------------------------------------------------
// Errors. Every numeric failure is an exception derived from numeric_error so
// callers (engine, cli) can map them to a single "numeric path failed" status.

class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument sits on a pole of the function (gamma at 0, -1, ..., zeta at s = 1).
class pole_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

class domain_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

class convergence_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// The requested regime is deliberately not implemented (e.g. Lerch with |z| > 1).
class unsupported_regime : public numeric_error {
public:
    using numeric_error::numeric_error;
};

inline bool is_finite(complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline complex require_finite(complex z, const char* what)
{
    if (!is_finite(z))
        throw domain_error(std::string(what) + ": non-finite result");
    return z;
}

/// Nearest integer to z when z lies within tol of the real integers, else false.
inline bool near_integer(complex z, double tol, long* out = nullptr) noexcept
{
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > tol || std::abs(z.imag()) > tol)
        return false;
    if (out)
        *out = static_cast<long>(r);
    return true;
}

inline bool is_nonpositive_integer(complex z, double tol = 0.0) noexcept
{
    long n = 0;
    return near_integer(z, tol, &n) && n <= 0;
}

// ---------------------------------------------------------------------------
// Tolerances

struct Tolerances {
    double abs_tol = 0.0;
    double rel_tol = 1e-8;

    Tolerances() = default;
    Tolerances(double abs, double rel) : abs_tol(abs), rel_tol(rel)
    {
        if (!(abs >= 0.0) || !(rel >= 0.0))
            throw std::invalid_argument("tolerances must be non-negative");
        if (abs == 0.0 && rel == 0.0)
            throw std::invalid_argument("tolerances must not both be zero");
    }

    /// |a - b| <= max(abs_tol, rel_tol * max(|a|, |b|))
    bool close(complex a, complex b, double slack = 0.0) const noexcept
    {
        const double scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= std::max(abs_tol, rel_tol * scale) + slack;
    }
};

// ---------------------------------------------------------------------------
// Parameter model

/// The seven complex parameters of the identity. Names follow the integrand:
/// x carries (m, u, v) through x^{m-1}, (1-x^2)^{-u/2} P_v^u(x); y carries
/// (mu, nu); k is the power of the coupling logarithm and a its scale.
struct ParameterSet {
    complex k{0.0};
    complex a{1.0};
    complex m{0.5};
    complex u{0.0};
    complex v{1.0};
    complex mu{0.0};
    complex nu{1.0};

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Exponents of the four log(1/.) factors of the integrand.
struct ExponentQuad {
    complex beta_p;
    complex beta_q;
    complex beta_t;
    complex beta_z;
};

inline ExponentQuad derive_exponents(const ParameterSet& ps) noexcept
{
    return {
        (-ps.mu - ps.m - ps.nu) / 2.0,
        (-ps.mu - ps.m + ps.nu + 1.0) / 2.0,
        (ps.m - ps.u + ps.v) / 2.0,
        (ps.m - ps.u - ps.v - 1.0) / 2.0,
    };
}

struct ValidationOutcome {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool valid() const noexcept { return violations.empty(); }
};

inline constexpr double boundary_warning_margin = 1e-8;

namespace detail {

// Records "lhs < rhs" style constraints. Strict comparison, no epsilon; a
// margin under boundary_warning_margin only adds a warning.
struct StripChecker {
    ValidationOutcome& out;

    void less(double lhs, double rhs, const char* name)
    {
        if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
            out.violations.emplace_back(std::string(name) + " (non-finite)");
            return;
        }
        if (!(lhs < rhs))
            out.violations.emplace_back(name);
        else if (rhs - lhs < boundary_warning_margin)
            out.warnings.emplace_back(std::string("near boundary: ") + name);
    }
};

} // namespace detail

/// Every violated hypothesis of the identity, by name. Never throws.
inline ValidationOutcome validate_parameters(const ParameterSet& ps)
{
    ValidationOutcome out;
    detail::StripChecker c{out};

    for (auto [z, name] : {std::pair{ps.k, "k finite"}, {ps.a, "a finite"}, {ps.m, "m finite"},
                           {ps.u, "u finite"}, {ps.v, "v finite"}, {ps.mu, "mu finite"},
                           {ps.nu, "nu finite"}}) {
        if (!is_finite(z))
            out.violations.emplace_back(name);
    }
    if (!out.violations.empty())
        return out;

    c.less(ps.u.real(), 1.0, "Re(u)<1");
    if (!(0.0 < ps.m.real() && ps.m.real() < 1.0))
        out.violations.emplace_back("0<Re(m)<1");
    else {
        if (ps.m.real() < boundary_warning_margin || 1.0 - ps.m.real() < boundary_warning_margin)
            out.warnings.emplace_back("near boundary: 0<Re(m)<1");
    }
    c.less(0.0, ps.v.real(), "Re(v)>0");
    c.less(ps.m.real(), std::abs(ps.v.real()), "Re(m)<|Re(v)|");
    c.less(ps.mu.real(), 1.0, "Re(mu)<1");
    c.less(0.0, ps.nu.real(), "Re(nu)>0");
    c.less(ps.m.real(), std::abs(ps.nu.real()), "Re(m)<|Re(nu)|");

    const auto e = derive_exponents(ps);
    c.less(-1.0, e.beta_p.real(), "Re(beta_p)>-1");
    c.less(-1.0, e.beta_q.real(), "Re(beta_q)>-1");
    c.less(-1.0, e.beta_t.real(), "Re(beta_t)>-1");
    c.less(-1.0, e.beta_z.real(), "Re(beta_z)>-1");

    if (ps.a == complex{0.0})
        out.violations.emplace_back("a!=0");

    // The introduction states a narrower strip; it is advisory only.
    if (!(ps.u.real() < ps.m.real() && ps.m.real() < 0.5))
        out.warnings.emplace_back("outside narrower strip Re(u)<Re(m)<1/2");
    if (!(ps.m.real() < ps.v.real()))
        out.warnings.emplace_back("outside narrower strip Re(m)<Re(v)");
    return out;
}

} // namespace sextuple

#endif // SEXTUPLE_CORE_HPP
