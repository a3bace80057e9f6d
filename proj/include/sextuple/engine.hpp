#ifndef SEXTUPLE_ENGINE_HPP
#define SEXTUPLE_ENGINE_HPP

// The identity catalog and the multi-path verifier.
//
// Every case is evaluated through independent routes: Taylor jets of the
// collapsed generating function (jet), jets of the uncollapsed Mellin/Gamma
// product (moment), the Hurwitz-Lerch right-hand side (closed), the case's own
// closed form (special), Richardson limits in k (limit), the arctanh form of
// the difference cases (arctanh), the k = 0 product check (product) and the
// direct 6-D integral (tensor, qmc).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sextuple/core.hpp"
#include "sextuple/direct.hpp"
#include "sextuple/jets.hpp"
#include "sextuple/lerch.hpp"
#include "sextuple/mellin.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

// ---------------------------------------------------------------------------
// Catalog

enum class CaseTag {
    theorem,
    degenerate,
    hurwitz_zeta_form,
    harmonic_limit,
    difference_arctanh,
    log3,
    arccoth_sqrt2,
    alt_lerch,
    eta_zeta_line,
    log2_limit,
    apery,
};

struct FixedParameter {
    const char* name;
    double value;
};

struct CaseInfo {
    CaseTag tag;
    const char* name;
    const char* title;
    const char* constraints;
    const char* rhs;
    std::vector<FixedParameter> fixed;
    bool needs_n = false;
};

inline const std::vector<CaseInfo>& case_catalog()
{
    static const std::vector<CaseInfo> cat = {
        {CaseTag::theorem, "theorem", "General identity", "strip conditions only; k, a free",
         "i^(k-1) pi^(k+2) e^(i pi m) 2^(k+mu+u) Phi(e^(2 i pi m), -k, (pi - i log a)/(2 pi))", {}},
        {CaseTag::degenerate, "degenerate", "Degenerate case", "k=0", "pi^2 csc(pi m) 2^(mu+u-1)", {{"k", 0.0}}},
        {CaseTag::hurwitz_zeta_form, "hurwitz_zeta_form", "Hurwitz zeta form", "m=1/2",
         "i^k pi^(k+2) 2^(k+mu+u) 2^k [zeta(-k, V/2) - zeta(-k, (V+1)/2)], V = (pi - i log a)/(2 pi)",
         {{"m", 0.5}}},
        {CaseTag::harmonic_limit, "harmonic_limit", "Harmonic number limit", "m=1/2, a=-2, k=-1 (limit)",
         "-i pi (H(-i log2/(4 pi)) - H(-1/2 - i log2/(4 pi))) 2^(mu+u-2)",
         {{"m", 0.5}, {"a", -2.0}, {"k", -1.0}}},
        {CaseTag::difference_arctanh, "difference_arctanh", "Arctanh difference", "k=-1, a=1, second exponent n",
         "pi 2^(mu+u) (atanh(e^(i pi m)) - atanh(e^(i pi n)))", {{"k", -1.0}, {"a", 1.0}}, true},
        {CaseTag::log3, "log3", "log 3", "m=1/2, n=1/3, k=-1, a=1", "-pi log(3) 2^(mu+u-2)",
         {{"m", 0.5}, {"k", -1.0}, {"a", 1.0}}},
        {CaseTag::arccoth_sqrt2, "arccoth_sqrt2", "arccoth sqrt 2", "m=1/2, n=1/4, k=-1, a=1",
         "-pi arccoth(sqrt 2) 2^(mu+u-1)", {{"m", 0.5}, {"k", -1.0}, {"a", 1.0}}},
        {CaseTag::alt_lerch, "alt_lerch", "Alternate Lerch form",
         "m, a in alternate notation (general m -> m/2, a -> -e^(2 i pi a)); 0<Re(a)<=1",
         "-i pi^(k+2) e^(i pi (k+m)/2) 2^(k+mu+u) Phi(e^(i pi m), -k, a)", {}},
        {CaseTag::eta_zeta_line, "eta_zeta_line", "Riemann zeta line", "m=1/2, a=-1",
         "-(2^(k+1)-1) e^(i pi k/2) pi^(k+2) zeta(-k) 2^(k+mu+u)", {{"m", 0.5}, {"a", -1.0}}},
        {CaseTag::log2_limit, "log2_limit", "log 2 limit", "m=1/2, a=-1, k=-1 (limit)", "-i pi log(2) 2^(mu+u-1)",
         {{"m", 0.5}, {"a", -1.0}, {"k", -1.0}}},
        {CaseTag::apery, "apery", "Apery's constant", "k=-3, m=1/2, a=-1", "3 i zeta(3) 2^(mu+u-5) / pi",
         {{"m", 0.5}, {"a", -1.0}, {"k", -3.0}}},
    };
    return cat;
}

inline const CaseInfo& case_info(CaseTag t)
{
    for (const auto& c : case_catalog())
        if (c.tag == t)
            return c;
    throw domain_error("case_info: unknown tag");
}

inline const char* to_string(CaseTag t) { return case_info(t).name; }

inline std::optional<CaseTag> parse_case(std::string_view name)
{
    for (const auto& c : case_catalog())
        if (name == c.name)
            return c.tag;
    return std::nullopt;
}

/// A catalog entry plus its extras: the second exponent n of the difference
/// case. log3 and arccoth_sqrt2 fix n themselves.
struct IdentityCase {
    CaseTag tag = CaseTag::theorem;
    std::optional<complex> n;
};

inline constexpr std::array<const char*, 7> parameter_names = {"k", "a", "m", "u", "v", "mu", "nu"};

inline complex& parameter(ParameterSet& ps, std::string_view name)
{
    if (name == "k") return ps.k;
    if (name == "a") return ps.a;
    if (name == "m") return ps.m;
    if (name == "u") return ps.u;
    if (name == "v") return ps.v;
    if (name == "mu") return ps.mu;
    if (name == "nu") return ps.nu;
    throw domain_error("unknown parameter " + std::string(name));
}

inline complex parameter(const ParameterSet& ps, std::string_view name)
{
    return parameter(const_cast<ParameterSet&>(ps), name);
}

/// Reference parameters with the case's fixed values applied.
inline ParameterSet case_defaults(CaseTag t)
{
    ParameterSet ps;
    for (const auto& f : case_info(t).fixed)
        parameter(ps, f.name) = f.value;
    if (t == CaseTag::alt_lerch) {
        ps.m = 1.0;
        ps.a = 0.5;
    }
    return ps;
}

inline bool is_difference_family(CaseTag t) noexcept
{
    return t == CaseTag::difference_arctanh || t == CaseTag::log3 || t == CaseTag::arccoth_sqrt2;
}

/// The second exponent of a difference case.
inline complex difference_n(const IdentityCase& c)
{
    switch (c.tag) {
    case CaseTag::log3: return 1.0 / 3.0;
    case CaseTag::arccoth_sqrt2: return 0.25;
    case CaseTag::difference_arctanh:
        if (!c.n)
            throw domain_error("difference_arctanh: second exponent n is required");
        return *c.n;
    default: throw domain_error("difference_n: not a difference case");
    }
}

/// Parameters of the general identity the case is an instance of. Only the
/// alternate form changes notation: m -> m/2, a -> -e^{2 i pi a}.
inline ParameterSet theorem_parameters(CaseTag t, const ParameterSet& ps)
{
    if (t != CaseTag::alt_lerch)
        return ps;
    ParameterSet g = ps;
    g.m = ps.m / 2.0;
    g.a = -std::exp(2.0 * I * pi * ps.a);
    return g;
}

inline constexpr double case_constraint_tol = 1e-12;

inline ValidationOutcome validate_case(const IdentityCase& c, const ParameterSet& ps)
{
    ValidationOutcome out;
    const CaseInfo& info = case_info(c.tag);
    for (const auto& f : info.fixed) {
        if (std::abs(parameter(ps, f.name) - f.value) > case_constraint_tol) {
            std::string s = std::string(f.name) + "=";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", f.value);
            out.violations.push_back(s + buf + " required by case " + info.name);
        }
    }
    if (info.needs_n && !c.n)
        out.violations.emplace_back("case " + std::string(info.name) + " requires n");
    if (c.n && !info.needs_n) {
        if (!is_difference_family(c.tag) || std::abs(*c.n - difference_n({c.tag, std::nullopt})) > case_constraint_tol)
            out.violations.emplace_back("n is not a free parameter of case " + std::string(info.name));
    }
    if (c.tag == CaseTag::alt_lerch && !(ps.a.real() > 0.0 && ps.a.real() <= 1.0))
        out.violations.emplace_back("0<Re(a)<=1 required by case alt_lerch");

    const ParameterSet g = theorem_parameters(c.tag, ps);
    ValidationOutcome strip = validate_parameters(g);
    out.violations.insert(out.violations.end(), strip.violations.begin(), strip.violations.end());
    out.warnings.insert(out.warnings.end(), strip.warnings.begin(), strip.warnings.end());

    if (is_difference_family(c.tag) && (c.n || !info.needs_n)) {
        ParameterSet gn = g;
        gn.m = difference_n(c);
        for (const auto& v : validate_parameters(gn).violations)
            out.violations.push_back("n: " + v);
    }
    if (out.violations.empty() && std::abs(std::sin(pi * g.m)) < 1e-6)
        out.warnings.emplace_back("m close to a pole of csc(pi m)");
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation paths

namespace detail {

inline bool at_minus_one(complex k) { return std::abs(k + 1.0) <= 1e-12; }

inline complex cpow(double base, complex e) { return std::exp(e * std::log(base)); }

/// i^{k-1} pi^{k+2} e^{i pi m} 2^{k+mu+u}
inline complex theorem_prefactor(const ParameterSet& ps)
{
    return std::exp((ps.k - 1.0) * I * (pi / 2.0)) * cpow(pi, ps.k + 2.0) * std::exp(I * pi * ps.m) *
           cpow(2.0, ps.k + ps.mu + ps.u);
}

/// (pi - i log a)/(2 pi)
inline complex lerch_shift(complex a) { return (pi - I * std::log(a)) / (2.0 * pi); }

inline int jet_power(const ParameterSet& ps, const char* fn)
{
    long n = 0;
    if (!near_integer(ps.k, 0.0, &n) || n < 0 || n > 10)
        throw domain_error(std::string(fn) + ": k must be an integer in [0, 10]");
    return static_cast<int>(n);
}

/// M(s0 + dir w; u, v) as a jet in w.
inline Jet mellin_jet(complex s0, complex u, complex v, double dir, int order)
{
    check_mellin_args({s0, u, v});
    const complex z1 = (s0 - u + v) / 2.0 + 1.0;
    const complex z2 = (s0 - u - v + 1.0) / 2.0;
    Jet j = jet_of_gamma(s0, order) * scale_variable(jet_of_rgamma(z1, order), 0.5) *
            scale_variable(jet_of_rgamma(z2, order), 0.5) * jet_of_power(0.5, order);
    j *= std::sqrt(pi) * std::pow(complex{2.0}, u - s0);
    return scale_variable(j, dir);
}

} // namespace detail

/// The uncollapsed product a^w M(m+w;u,v) M(1-m-w;mu,nu) Gamma(beta_t+1+w/2)
/// Gamma(beta_z+1+w/2) Gamma(beta_p+1-w/2) Gamma(beta_q+1-w/2) as a jet.
inline Jet moment_product_jet(const ParameterSet& ps, int order)
{
    const ExponentQuad b = derive_exponents(ps);
    Jet j = jet_of_power(ps.a, order) * detail::mellin_jet(ps.m, ps.u, ps.v, 1.0, order) *
            detail::mellin_jet(1.0 - ps.m, ps.mu, ps.nu, -1.0, order);
    j = j * scale_variable(jet_of_gamma(b.beta_t + 1.0, order), 0.5);
    j = j * scale_variable(jet_of_gamma(b.beta_z + 1.0, order), 0.5);
    j = j * scale_variable(jet_of_gamma(b.beta_p + 1.0, order), -0.5);
    j = j * scale_variable(jet_of_gamma(b.beta_q + 1.0, order), -0.5);
    j.assert_finite("moment_product_jet");
    return j;
}

/// k! [w^k] of the collapsed generating function.
inline complex lhs_jet(const ParameterSet& ps, int k)
{
    if (k < 0 || k > 10)
        throw domain_error("lhs_jet: k must lie in [0, 10]");
    return closed_form_jet(ps, k).derivative(k);
}

/// k! [w^k] of the uncollapsed Mellin/Gamma product.
inline complex lhs_moment_expansion(const ParameterSet& ps, int k)
{
    if (k < 0 || k > 10)
        throw domain_error("lhs_moment_expansion: k must lie in [0, 10]");
    return moment_product_jet(ps, k).derivative(k);
}

/// i^{k-1} pi^{k+2} e^{i pi m} 2^{k+mu+u} Phi(e^{2 i pi m}, -k, (pi - i log a)/(2 pi)), principal branches.
inline complex rhs_theorem(const ParameterSet& ps)
{
    if (ps.a == complex{0.0})
        throw domain_error("rhs_theorem: a must be nonzero");
    const complex z = std::exp(2.0 * I * pi * ps.m);
    const complex phi = lerch_phi(z, -ps.k, detail::lerch_shift(ps.a));
    return require_finite(detail::theorem_prefactor(ps) * phi, "rhs_theorem");
}

struct ProductCheck {
    complex product; // M(m) M(1-m) and the four Gamma(beta + 1)
    complex csc_form; // pi^2 2^{mu+u-1} csc(pi m)
};

inline complex degenerate_value(const ParameterSet& ps)
{
    return pi * pi * detail::cpow(2.0, ps.mu + ps.u - 1.0) / std::sin(pi * ps.m);
}

/// Both members of the k = 0 collapse. Gamma factors are continued
/// analytically, so the product is defined past the integrability strip.
inline ProductCheck product_identity_check(const ParameterSet& ps)
{
    const ExponentQuad b = derive_exponents(ps);
    complex p = mellin_legendre_closed(ps.m, ps.u, ps.v) * mellin_legendre_closed(1.0 - ps.m, ps.mu, ps.nu);
    for (complex beta : {b.beta_t, b.beta_z, b.beta_p, b.beta_q})
        p *= gamma(beta + 1.0);
    return {require_finite(p, "product_identity_check"), degenerate_value(ps)};
}

namespace detail {

inline complex hurwitz_form(const ParameterSet& ps)
{
    const complex v = lerch_shift(ps.a);
    const complex two_k = cpow(2.0, ps.k);
    const complex split = hurwitz_zeta(-ps.k, v / 2.0) - hurwitz_zeta(-ps.k, (v + 1.0) / 2.0);
    return std::exp(ps.k * I * (pi / 2.0)) * cpow(pi, ps.k + 2.0) * cpow(2.0, ps.k + ps.mu + ps.u) * two_k * split;
}

inline complex eta_form(const ParameterSet& ps)
{
    const complex k = ps.k;
    return -(cpow(2.0, k + 1.0) - 1.0) * std::exp(I * pi * k / 2.0) * cpow(pi, k + 2.0) * riemann_zeta(-k) *
           cpow(2.0, k + ps.mu + ps.u);
}

inline complex arctanh_form(const ParameterSet& ps, complex n)
{
    return pi * cpow(2.0, ps.mu + ps.u) * (std::atanh(std::exp(I * pi * ps.m)) - std::atanh(std::exp(I * pi * n)));
}

} // namespace detail

/// The case's own closed form, in the case's notation.
inline complex rhs_example(const IdentityCase& c, const ParameterSet& ps)
{
    const complex two_mu_u = detail::cpow(2.0, ps.mu + ps.u);
    switch (c.tag) {
    case CaseTag::theorem: throw domain_error("rhs_example: the general identity has no special form");
    case CaseTag::degenerate: return degenerate_value(ps);
    case CaseTag::hurwitz_zeta_form:
        if (detail::at_minus_one(ps.k))
            throw pole_error("rhs_example: the Hurwitz split has a pole at k = -1");
        return detail::hurwitz_form(ps);
    case CaseTag::harmonic_limit: {
        const complex v2 = detail::lerch_shift(ps.a) / 2.0;
        return -I * pi * two_mu_u / 4.0 * (harmonic(v2 - 0.5) - harmonic(v2 - 1.0));
    }
    case CaseTag::difference_arctanh: return detail::arctanh_form(ps, difference_n(c));
    case CaseTag::log3: return -pi * std::log(3.0) * two_mu_u / 4.0;
    case CaseTag::arccoth_sqrt2: return -pi * std::atanh(1.0 / std::sqrt(2.0)) * two_mu_u / 2.0;
    case CaseTag::alt_lerch: {
        const complex k = ps.k;
        const complex phi = lerch_phi(std::exp(I * pi * ps.m), -k, ps.a);
        return -I * detail::cpow(pi, k + 2.0) * std::exp(I * pi * (k + ps.m) / 2.0) *
               detail::cpow(2.0, k + ps.mu + ps.u) * phi;
    }
    case CaseTag::eta_zeta_line:
        if (detail::at_minus_one(ps.k))
            throw pole_error("rhs_example: zeta(-k) has a pole at k = -1");
        return detail::eta_form(ps);
    case CaseTag::log2_limit: return -I * pi * std::log(2.0) * two_mu_u / 2.0;
    case CaseTag::apery: return 3.0 * I * riemann_zeta(3.0) * two_mu_u / 32.0 / pi;
    }
    throw domain_error("rhs_example: unknown case");
}

struct LimitValue {
    complex value;
    double error_estimate = 0.0;
};

inline const std::vector<double>& default_limit_steps()
{
    static const std::vector<double> eps = {1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128, 1.0 / 256};
    return eps;
}

inline constexpr double min_limit_step = 1e-5;

/// Limit in k of the family a limit case is taken from, by polynomial
/// extrapolation in eps^2 of the symmetric means (f(k0+eps) + f(k0-eps))/2.
/// The Apery value needs no limit and is evaluated in place.
inline LimitValue rhs_limit(const IdentityCase& c, const ParameterSet& ps,
                            const std::vector<double>& eps = default_limit_steps())
{
    ParameterSet q = ps;
    complex (*family)(const ParameterSet&) = nullptr;
    switch (c.tag) {
    case CaseTag::harmonic_limit: family = detail::hurwitz_form; break;
    case CaseTag::log2_limit: family = detail::eta_form; break;
    case CaseTag::apery: return {detail::eta_form(ps), 0.0};
    default: throw domain_error("rhs_limit: case is not a limit case");
    }
    if (eps.size() < 2)
        throw domain_error("rhs_limit: need at least two steps");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] >= min_limit_step) || (i > 0 && !(eps[i] < eps[i - 1])))
            throw domain_error("rhs_limit: steps must decrease and stay >= 1e-5");
    }

    const complex k0 = ps.k;
    std::vector<complex> t(eps.size());
    std::vector<double> h(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        q.k = k0 + eps[i];
        const complex up = family(q);
        q.k = k0 - eps[i];
        t[i] = 0.5 * (up + family(q));
        h[i] = eps[i] * eps[i];
    }
    // Neville's scheme towards h = 0
    complex prev_diag = t[0];
    double err = 0.0;
    for (std::size_t j = 1; j < t.size(); ++j) {
        for (std::size_t i = t.size() - 1; i >= j; --i)
            t[i] = t[i] + (t[i] - t[i - 1]) * h[i] / (h[i - j] - h[i]);
        err = std::abs(t[j] - prev_diag);
        prev_diag = t[j];
    }
    const complex value = t.back();
    if (!is_finite(value) || err > 1e-6 * std::max(1.0, std::abs(value)))
        throw convergence_error("rhs_limit: extrapolation did not settle");
    return {value, err};
}

// ---------------------------------------------------------------------------
// Verification

enum class PathKind { jet, moment, closed, special, limit, arctanh, product, tensor, qmc };

inline constexpr std::array<PathKind, 9> all_paths = {PathKind::jet,     PathKind::moment, PathKind::closed,
                                                      PathKind::special, PathKind::limit,  PathKind::arctanh,
                                                      PathKind::product, PathKind::tensor, PathKind::qmc};

inline const char* to_string(PathKind p) noexcept
{
    switch (p) {
    case PathKind::jet: return "jet";
    case PathKind::moment: return "moment";
    case PathKind::closed: return "closed";
    case PathKind::special: return "special";
    case PathKind::limit: return "limit";
    case PathKind::arctanh: return "arctanh";
    case PathKind::product: return "product";
    case PathKind::tensor: return "tensor";
    case PathKind::qmc: return "qmc";
    }
    return "?";
}

inline std::optional<PathKind> parse_path(std::string_view s)
{
    for (PathKind p : all_paths)
        if (s == to_string(p))
            return p;
    if (s == "moment_expansion")
        return PathKind::moment;
    return std::nullopt;
}

enum class PathStatus { ok, inadmissible, failed, skipped };

inline const char* to_string(PathStatus s) noexcept
{
    switch (s) {
    case PathStatus::ok: return "ok";
    case PathStatus::inadmissible: return "inadmissible";
    case PathStatus::failed: return "failed";
    case PathStatus::skipped: return "skipped";
    }
    return "?";
}

struct PathResult {
    PathKind kind = PathKind::closed;
    PathStatus status = PathStatus::skipped;
    complex value{0.0};
    double error_estimate = 0.0; // standard error for qmc
    std::string detail;          // reason or error message
    double seconds = 0.0;
};

struct PairDiff {
    PathKind a, b;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double bound = 0.0;
    bool pass = false;
};

enum class Verdict { pass, fail, inconclusive, validation_failure, numeric_failure };

inline const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::validation_failure: return "validation_failure";
    case Verdict::numeric_failure: return "numeric_failure";
    }
    return "?";
}

struct VerifyOptions {
    std::vector<PathKind> paths; // empty: every admissible path except tensor and qmc
    Tolerances tol{1e-8, 1e-8};
    double quad_tol = 1e-4; // relative tolerance of pairs involving the tensor rule
    int tensor_level = 4;
    QmcSpec qmc{};
    std::vector<double> limit_steps = default_limit_steps();
};

struct VerificationReport {
    IdentityCase id;
    ParameterSet params;
    ParameterSet theorem_params;
    Tolerances tol;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    std::vector<PathResult> paths;
    std::vector<PairDiff> diffs;
    Verdict verdict = Verdict::inconclusive;
    double seconds = 0.0;

    const PathResult* find(PathKind k) const
    {
        for (const auto& p : paths)
            if (p.kind == k)
                return &p;
        return nullptr;
    }
};

namespace detail {

inline bool real_parameters(const ParameterSet& g)
{
    for (complex z : {g.m, g.u, g.v, g.mu, g.nu})
        if (z.imag() != 0.0)
            return false;
    return true;
}

} // namespace detail

/// Why `path` cannot be evaluated for this case and parameter set, if so.
inline std::optional<std::string> inadmissible_reason(const IdentityCase& c, const ParameterSet& ps, PathKind path)
{
    const ParameterSet g = theorem_parameters(c.tag, ps);
    long kn = 0;
    const bool integer_k = near_integer(g.k, 0.0, &kn);
    const bool jet_k = integer_k && kn >= 0 && kn <= 10;
    switch (path) {
    case PathKind::jet:
    case PathKind::moment:
        if (!jet_k)
            return "jets need an integer k in [0, 10]";
        return std::nullopt;
    case PathKind::closed: return std::nullopt;
    case PathKind::special:
        if (c.tag == CaseTag::theorem)
            return "the general identity has no special closed form";
        if ((c.tag == CaseTag::eta_zeta_line || c.tag == CaseTag::hurwitz_zeta_form) &&
            detail::at_minus_one(ps.k))
            return "the closed form has a removable pole at k = -1; use the limit cases";
        return std::nullopt;
    case PathKind::limit:
        if (c.tag == CaseTag::harmonic_limit || c.tag == CaseTag::log2_limit || c.tag == CaseTag::apery)
            return std::nullopt;
        return "only the harmonic_limit, log2_limit and apery cases are limits";
    case PathKind::arctanh:
        if (c.tag == CaseTag::log3 || c.tag == CaseTag::arccoth_sqrt2)
            return std::nullopt;
        return "the arctanh form belongs to log3 and arccoth_sqrt2 (it is the special form of difference_arctanh)";
    case PathKind::product:
        if (integer_k && kn == 0)
            return std::nullopt;
        return "the product identity is the k = 0 member";
    case PathKind::tensor:
    case PathKind::qmc:
        if (is_difference_family(c.tag))
            return "k = -1 with a = 1: the coupling log vanishes inside the cube";
        if (!detail::real_parameters(g))
            return "direct integration needs real m, u, v, mu, nu";
        if (path == PathKind::tensor && !jet_k)
            return "the tensor rule needs an integer k in [0, 10]";
        if (path == PathKind::qmc && !(integer_k && kn >= 0 && kn <= 64) && std::log(g.a).imag() == 0.0)
            return "log argument vanishes inside the cube for a > 0 and this k";
        return std::nullopt;
    }
    return "unknown path";
}

inline PathResult evaluate_path(const IdentityCase& c, const ParameterSet& ps, PathKind path,
                                const VerifyOptions& opt)
{
    PathResult r;
    r.kind = path;
    if (auto why = inadmissible_reason(c, ps, path)) {
        r.status = PathStatus::inadmissible;
        r.detail = *why;
        return r;
    }
    const ParameterSet g = theorem_parameters(c.tag, ps);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (path) {
        case PathKind::jet: r.value = lhs_jet(g, detail::jet_power(g, "lhs_jet")); break;
        case PathKind::moment: r.value = lhs_moment_expansion(g, detail::jet_power(g, "lhs_moment_expansion")); break;
        case PathKind::closed:
            if (is_difference_family(c.tag)) {
                ParameterSet gn = g;
                gn.m = difference_n(c);
                r.value = rhs_theorem(gn) - rhs_theorem(g);
            } else {
                r.value = rhs_theorem(g);
            }
            break;
        case PathKind::special: r.value = rhs_example(c, ps); break;
        case PathKind::limit: {
            const LimitValue l = rhs_limit(c, ps, opt.limit_steps);
            r.value = l.value;
            r.error_estimate = l.error_estimate;
            break;
        }
        case PathKind::arctanh: r.value = detail::arctanh_form(ps, difference_n(c)); break;
        case PathKind::product: r.value = product_identity_check(g).product; break;
        case PathKind::tensor: {
            const QuadratureValue q = integrate_6d_tensor_estimate(Integrand6D(g), opt.tensor_level);
            r.value = q.value;
            r.error_estimate = q.error_estimate;
            break;
        }
        case PathKind::qmc: {
            const QmcValue q = integrate_6d_qmc(Integrand6D(g), opt.qmc);
            r.value = q.value;
            r.error_estimate = q.stderr_estimate;
            break;
        }
        }
        require_finite(r.value, to_string(path));
        r.status = PathStatus::ok;
    } catch (const std::exception& e) {
        r.status = PathStatus::failed;
        r.value = 0.0;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Paths evaluated when none are requested.
inline std::vector<PathKind> default_paths(const IdentityCase& c, const ParameterSet& ps)
{
    std::vector<PathKind> out;
    for (PathKind p : all_paths)
        if (p != PathKind::tensor && p != PathKind::qmc && !inadmissible_reason(c, ps, p))
            out.push_back(p);
    return out;
}

/// |a - b| <= max(abs, rel * max(|a|, |b|)) + 3 (stderr_a + stderr_b); pairs
/// with the tensor rule use the looser quadrature tolerance.
inline PairDiff compare_paths(const PathResult& a, const PathResult& b, const VerifyOptions& opt)
{
    PairDiff d{a.kind, b.kind};
    d.abs_diff = std::abs(a.value - b.value);
    const double scale = std::max(std::abs(a.value), std::abs(b.value));
    d.rel_diff = scale > 0.0 ? d.abs_diff / scale : 0.0;
    double rel = opt.tol.rel_tol, abs = opt.tol.abs_tol;
    if (a.kind == PathKind::tensor || b.kind == PathKind::tensor) {
        rel = std::max(rel, opt.quad_tol);
        abs = std::max(abs, opt.quad_tol);
    }
    double sigma = 0.0;
    for (const PathResult* p : {&a, &b})
        if (p->kind == PathKind::qmc)
            sigma += p->error_estimate;
    d.bound = std::max(abs, rel * scale) + 3.0 * sigma;
    d.pass = d.abs_diff <= d.bound;
    return d;
}

inline VerificationReport verify(const IdentityCase& c, const ParameterSet& ps, const VerifyOptions& opt = {})
{
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = c;
    rep.params = ps;
    rep.tol = opt.tol;

    std::vector<PathKind> wanted = opt.paths;
    {
        ValidationOutcome v = validate_case(c, ps);
        rep.violations = std::move(v.violations);
        rep.warnings = std::move(v.warnings);
    }
    rep.theorem_params = theorem_parameters(c.tag, ps);
    if (wanted.empty() && rep.violations.empty())
        wanted = default_paths(c, ps);
    // catalog order, no duplicates
    std::vector<PathKind> order;
    for (PathKind p : all_paths)
        if (std::find(wanted.begin(), wanted.end(), p) != wanted.end())
            order.push_back(p);

    if (!rep.violations.empty()) {
        for (PathKind p : order)
            rep.paths.push_back({p, PathStatus::skipped, complex{0.0}, 0.0, "parameter validation failed", 0.0});
        rep.verdict = Verdict::validation_failure;
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

    for (PathKind p : order)
        rep.paths.push_back(evaluate_path(c, ps, p, opt));

    bool failed = false;
    std::vector<const PathResult*> ok;
    for (const auto& p : rep.paths) {
        if (p.status == PathStatus::ok)
            ok.push_back(&p);
        failed = failed || p.status == PathStatus::failed;
    }
    bool all_pass = true;
    for (std::size_t i = 0; i < ok.size(); ++i)
        for (std::size_t j = i + 1; j < ok.size(); ++j) {
            rep.diffs.push_back(compare_paths(*ok[i], *ok[j], opt));
            all_pass = all_pass && rep.diffs.back().pass;
        }

    if (failed)
        rep.verdict = Verdict::numeric_failure;
    else if (ok.size() < 2)
        rep.verdict = Verdict::inconclusive;
    else
        rep.verdict = all_pass ? Verdict::pass : Verdict::fail;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace sextuple

#endif // SEXTUPLE_ENGINE_HPP
