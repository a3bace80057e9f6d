#ifndef SEXTUPLE_ACCEPTANCE_HPP
#define SEXTUPLE_ACCEPTANCE_HPP

// Acceptance criteria A1-A10, shared by the acceptance test binary and the
// `selftest` command. Every criterion checks values and its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sextuple/direct.hpp"
#include "sextuple/engine.hpp"
#include "sextuple/jets.hpp"
#include "sextuple/legendre.hpp"
#include "sextuple/lerch.hpp"
#include "sextuple/mellin.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple::acceptance {

// Reference constants, 30-digit evaluations rounded to double.
inline constexpr double half_pi_sq = 4.934802200544679;     // pi^2/2
inline constexpr double half_pi_4 = 48.70454551700122;      // pi^4/2
inline constexpr double apery_value = 0.03587124337792222;  // 3 zeta(3)/(32 pi)
inline constexpr double log2_value = 1.088793045151801;     // pi log(2)/2
inline constexpr double log3_value = 0.8628480738058007;    // pi log(3)/4
inline constexpr double arccoth_value = 1.384458393024340;  // pi arccoth(sqrt 2)/2
inline constexpr double harmonic_re = 0.1405504628548732;   // -i pi/4 (psi(1-iL) - psi(1/2-iL)),
inline constexpr double harmonic_im = -1.071781984999232;   //   L = log(2)/(4 pi)

struct Result {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget = 0.0;
};

/// Which modules a run is restricted to; empty means everything.
struct Selection {
    std::set<std::string> only;

    bool wants(const std::vector<std::string>& modules) const
    {
        if (only.empty())
            return true;
        return std::any_of(modules.begin(), modules.end(), [&](const std::string& m) { return only.count(m) > 0; });
    }
};

namespace detail {

inline double rel(complex got, complex want)
{
    const double s = std::abs(want);
    return s == 0.0 ? std::abs(got - want) : std::abs(got - want) / s;
}

/// |got - want| / (1 + |want|), for targets that may vanish
inline double mixed(complex got, complex want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

inline std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

/// Random valid real parameter set (k = 0, a = 1).
inline ParameterSet random_valid_set(std::mt19937_64& g)
{
    std::uniform_real_distribution<double> m(0.05, 0.95), u(-0.9, 0.9), v(0.1, 2.5);
    for (;;) {
        ParameterSet ps;
        ps.m = m(g);
        ps.u = u(g);
        ps.v = v(g);
        ps.mu = u(g);
        ps.nu = v(g);
        if (validate_parameters(ps).valid())
            return ps;
    }
}

inline const std::vector<std::array<double, 4>>& grid_combos()
{
    // (u, v, mu, nu)
    static const std::vector<std::array<double, 4>> c = {
        {0.0, 1.0, 0.0, 1.0}, {-0.3, 1.2, -0.1, 0.9}, {0.25, 0.8, 0.2, 0.85}};
    return c;
}

/// Calls f(ps, k) over the integer-k grid; returns the largest error it reports.
inline double over_grid(const std::function<double(const ParameterSet&, int)>& f, int* count)
{
    double worst = 0.0;
    *count = 0;
    for (double a : {0.5, 1.0, 1.5, std::exp(1.0)})
        for (double m : {0.3, 0.5, 0.7})
            for (const auto& c : grid_combos()) {
                ParameterSet ps;
                ps.a = a;
                ps.m = m;
                ps.u = c[0];
                ps.v = c[1];
                ps.mu = c[2];
                ps.nu = c[3];
                if (!validate_parameters(ps).valid())
                    throw domain_error("acceptance grid point outside the strip");
                for (int k = 0; k <= 6; ++k) {
                    ps.k = k;
                    worst = std::max(worst, f(ps, k));
                    ++*count;
                }
            }
    return worst;
}

/// j-th derivative by central differences with Richardson extrapolation.
inline complex fd_derivative(const std::function<complex(complex)>& f, complex x0, int j, double h = 0.2,
                             int levels = 5)
{
    std::vector<complex> t;
    for (int l = 0; l < levels; ++l, h /= 2.0) {
        complex acc{0.0};
        double binom = 1.0;
        for (int i = 0; i <= j; ++i) {
            acc += ((i % 2 == 0) ? 1.0 : -1.0) * binom * f(x0 + (0.5 * j - i) * h);
            binom = binom * (j - i) / (i + 1.0);
        }
        t.push_back(acc / std::pow(h, j));
    }
    for (std::size_t lev = 1; lev < t.size(); ++lev) {
        const double f4 = std::pow(4.0, static_cast<double>(lev));
        for (std::size_t i = t.size() - 1; i >= lev; --i)
            t[i] = (f4 * t[i] - t[i - 1]) / (f4 - 1.0);
    }
    return t.back();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Criteria. Each returns pass/fail and a one-line detail.

inline Result a1_degenerate_product()
{
    Result r{"A1", "degenerate case: product identity vs csc form, 50 random sets", false, "", 0.0, 1.0};
    std::mt19937_64 g(101);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const ParameterSet ps = detail::random_valid_set(g);
        const ProductCheck pc = product_identity_check(ps);
        worst = std::max(worst, detail::rel(pc.product, pc.csc_form));
    }
    r.pass = worst <= 1e-10;
    r.detail = detail::fmt("max rel %.3g (tol 1e-10)", worst);
    return r;
}

inline Result a2_theorem_integer_k()
{
    Result r{"A2", "general identity, k = 0..6: jet vs Lerch right-hand side", false, "", 0.0, 10.0};
    int n = 0;
    const double worst = detail::over_grid(
        [](const ParameterSet& ps, int k) { return detail::mixed(lhs_jet(ps, k), rhs_theorem(ps)); }, &n);
    r.pass = worst <= 1e-9;
    r.detail = detail::fmt("%g points, max |d|/(1+|rhs|) %.3g (tol 1e-9)", n, worst);
    return r;
}

inline Result a3_path_independence()
{
    Result r{"A3", "moment expansion vs collapsed jet on the same grid", false, "", 0.0, 10.0};
    int n = 0;
    const double worst = detail::over_grid(
        [](const ParameterSet& ps, int k) {
            return detail::mixed(lhs_moment_expansion(ps, k), lhs_jet(ps, k));
        },
        &n);
    r.pass = worst <= 1e-9;
    r.detail = detail::fmt("%g points, max |d|/(1+|jet|) %.3g (tol 1e-9)", n, worst);
    return r;
}

inline Result a4_direct()
{
    Result r{"A4", "direct 6-D integral at the reference point, k = 0, 1, 2", false, "", 0.0, 120.0};
    ParameterSet ps; // m = 1/2, u = mu = 0, v = nu = 1, a = 1
    const std::vector<complex> ks = {0.0, 1.0, 2.0};
    std::vector<complex> target;
    for (int k = 0; k <= 2; ++k) {
        ps.k = k;
        target.push_back(lhs_jet(ps, k));
    }
    bool ok = detail::rel(target[0], half_pi_sq) < 1e-12 && std::abs(target[1]) < 1e-12 &&
              detail::rel(target[2], half_pi_4) < 1e-12;

    double tensor_worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
        ps.k = k;
        const Integrand6D f(ps);
        tensor_worst = std::max(tensor_worst, detail::mixed(integrate_6d_tensor(f, tensor_rules(f, 4)), target[k]));
    }
    ok = ok && tensor_worst <= 1e-4;

    ps.k = 0.0;
    const auto q = integrate_6d_qmc_powers(Integrand6D(ps), ks, QmcSpec{6, 1u << 20, 7, 8});
    double worst_sigma = 0.0;
    for (int k = 0; k <= 2; ++k)
        worst_sigma = std::max(worst_sigma, std::abs(q[k].value - target[k]) / q[k].stderr_estimate);
    ok = ok && worst_sigma <= 3.0 && std::abs(q[0].value.real() - 4.9348022) < 3.0 * q[0].stderr_estimate + 1e-7;

    r.pass = ok;
    r.detail = detail::fmt("tensor max mixed err %.3g (tol 1e-4); qmc max |d|/stderr %.3g (tol 3)", tensor_worst,
                           worst_sigma);
    return r;
}

inline Result a5_eta_line()
{
    Result r{"A5", "zeta line: Lerch right-hand sides vs zeta closed form, k = 1/2, 2, 3, 4", false, "", 0.0, 5.0};
    double worst = 0.0;
    const IdentityCase eta{CaseTag::eta_zeta_line};
    const IdentityCase alt{CaseTag::alt_lerch};
    for (double k : {0.5, 2.0, 3.0, 4.0}) {
        ParameterSet ps = case_defaults(CaseTag::eta_zeta_line);
        ps.k = k;
        const complex zeta_form = rhs_example(eta, ps);
        ParameterSet pa = case_defaults(CaseTag::alt_lerch); // m = a = 1 in alternate notation
        pa.m = 1.0;
        pa.a = 1.0;
        pa.k = k;
        // zeta(-2) = zeta(-4) = 0: measure against the size of the prefactor there
        const double scale = k == 2.0 || k == 4.0 ? std::pow(pi, k + 2.0) * std::pow(2.0, k) : std::abs(zeta_form);
        worst = std::max(worst, std::abs(rhs_theorem(ps) - zeta_form) / scale);
        worst = std::max(worst, std::abs(rhs_example(alt, pa) - zeta_form) / scale);
    }
    r.pass = worst <= 1e-8;
    r.detail = detail::fmt("max rel err %.3g (tol 1e-8)", worst);
    return r;
}

inline Result a6_apery()
{
    Result r{"A6", "Apery's constant at k = -3", false, "", 0.0, 1.0};
    const ParameterSet ps = case_defaults(CaseTag::apery);
    const complex want{0.0, apery_value};
    const double e1 = detail::rel(rhs_theorem(ps), want);
    const double e2 = detail::rel(rhs_example({CaseTag::apery}, ps), want);
    r.pass = std::max(e1, e2) <= 1e-9;
    r.detail = detail::fmt("rel err Lerch %.3g, closed form %.3g (tol 1e-9)", e1, e2);
    return r;
}

inline Result a7_log2_limit()
{
    Result r{"A7", "log 2 limit: extrapolation of the zeta line at k -> -1", false, "", 0.0, 5.0};
    const LimitValue l = rhs_limit({CaseTag::log2_limit}, case_defaults(CaseTag::log2_limit));
    const double err = std::abs(l.value - complex{0.0, -log2_value});
    r.pass = err <= 1e-6;
    r.detail = detail::fmt("abs err %.3g (tol 1e-6), extrapolation estimate %.2g", err, l.error_estimate);
    return r;
}

inline Result a8_harmonic_limit(std::uint64_t qmc_count = std::uint64_t{1} << 22)
{
    Result r{"A8", "harmonic limit at a = -2: Hurwitz-split limit, digamma form, QMC", false, "", 0.0, 180.0};
    const IdentityCase c{CaseTag::harmonic_limit};
    const ParameterSet ps = case_defaults(CaseTag::harmonic_limit);
    const complex want{harmonic_re, harmonic_im};
    const complex digamma_form = rhs_example(c, ps);
    const LimitValue l = rhs_limit(c, ps);
    const double e_lim = detail::rel(l.value, digamma_form);
    const double e_ref = detail::rel(digamma_form, want);
    const QmcValue q = integrate_6d_qmc(Integrand6D(ps), QmcSpec{6, qmc_count, 11, 8});
    const double sig = std::abs(q.value - digamma_form) / q.stderr_estimate;
    r.pass = e_lim <= 1e-9 && e_ref <= 1e-12 && sig <= 3.0;
    r.detail = detail::fmt("limit rel err %.3g (tol 1e-9); ", e_lim) +
               detail::fmt("qmc |d|/stderr %.3g (tol 3), stderr %.2g", sig, q.stderr_estimate);
    return r;
}

inline Result a9_differences()
{
    Result r{"A9", "arctanh differences at (1/2, 1/3) and (1/2, 1/4)", false, "", 0.0, 1.0};
    double worst = 0.0;
    for (auto [n, want] : {std::pair{1.0 / 3.0, -log3_value}, std::pair{0.25, -arccoth_value}}) {
        const IdentityCase c{CaseTag::difference_arctanh, complex{n}};
        const ParameterSet ps = case_defaults(CaseTag::difference_arctanh);
        worst = std::max(worst, std::abs(rhs_example(c, ps) - want));
        // the same difference through the Lerch right-hand side
        ParameterSet pn = ps;
        pn.m = n;
        worst = std::max(worst, std::abs(rhs_theorem(pn) - rhs_theorem(ps) - want));
    }
    r.pass = worst <= 1e-12;
    r.detail = detail::fmt("max abs err %.3g (tol 1e-12)", worst);
    return r;
}

inline Result a10_module_oracles(const Selection& sel = {})
{
    Result r{"A10", "module oracles", true, "", 0.0, 60.0};
    auto add = [&](const char* name, double err, double tol) {
        const bool ok = err <= tol;
        r.pass = r.pass && ok;
        char buf[120];
        std::snprintf(buf, sizeof buf, "%s%s %.2g/%.0e", r.detail.empty() ? "" : "; ", name, err, tol);
        r.detail += buf;
    };
    std::mt19937_64 g(202);
    std::uniform_real_distribution<double> U(0.0, 1.0);

    if (sel.wants({"lerch"})) {
        double worst = 0.0;
        for (auto [z, s, v] : {std::tuple{complex{0.4, 0.3}, complex{1.5, 0.2}, complex{0.7, 0.0}},
                               std::tuple{complex{-1.0}, complex{2.5}, complex{0.8}},
                               std::tuple{std::exp(complex{0.0, 2.1}), complex{1.2, -0.4}, complex{0.5, 0.3}},
                               std::tuple{complex{0.0, 0.97}, complex{3.0, 1.0}, complex{0.25}}})
            worst = std::max(worst, detail::rel(lerch_integral_oracle(z, s, v), lerch_phi(z, s, v)));
        for (int n = 0; n <= 4; ++n) {
            const complex z = std::exp(complex{0.0, 2.0 * pi * 0.3});
            const complex uc =
                sextuple::detail::lerch_sum_plus_tail(z, double(-n), complex{0.5, -0.1}, LerchRegime::unit_circle)
                    .value;
            worst = std::max(worst, detail::mixed(uc, lerch_apostol(z, n, complex{0.5, -0.1})));
        }
        const complex z = std::polar(0.999, 1.0);
        worst = std::max(worst, detail::rel(lerch_series(z, 2.0, 0.5).value,
                                            sextuple::detail::lerch_sum_plus_tail(z, 2.0, 0.5,
                                                                                  LerchRegime::accelerated)
                                                .value));
        add("lerch", worst, 1e-8);
    }
    if (sel.wants({"legendre"})) {
        double worst = 0.0;
        for (int order = 0; order <= 5; ++order)
            for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const auto p = legendre_recurrence(20, order, x);
                for (int n = order; n <= 20; ++n)
                    worst = std::max(worst, detail::rel(assoc_legendre_p(double(n), double(order), x), p[n]));
            }
        add("legendre", worst, 1e-10);
    }
    if (sel.wants({"mellin"})) {
        double worst = 0.0;
        for (int i = 0; i < 30; ++i) {
            const double s = 0.2 + 2.8 * U(g), u = -1.0 + 1.8 * U(g), v = 0.1 + 2.9 * U(g);
            worst = std::max(worst, detail::mixed(mellin_legendre_quadrature(s, u, v).value,
                                                  mellin_legendre_closed(s, u, v)));
        }
        add("mellin", worst, 1e-7);
    }
    if (sel.wants({"specialfn", "gamma"})) {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const complex z{-10.0 + 20.0 * U(g), -10.0 + 20.0 * U(g)};
            const complex refl = std::exp(log_gamma(z) + log_gamma(1.0 - z)) * std::sin(pi * z) / pi;
            worst = std::max(worst, std::abs(refl - 1.0));
        }
        add("gamma", worst, 1e-11);
    }
    if (sel.wants({"jets"})) {
        double worst = 0.0;
        const complex z0{1.3, 0.4};
        const Jet gj = jet_of_gamma(z0, 4);
        const Jet cj = jet_csc(0.3, 4);
        for (int j = 0; j <= 4; ++j) {
            worst = std::max(worst, detail::rel(gj.derivative(j),
                                                detail::fd_derivative(
                                                    [](complex z) { return std::exp(log_gamma(z)); }, z0, j)));
            worst = std::max(
                worst, detail::rel(cj.derivative(j),
                                   detail::fd_derivative([](complex m) { return 1.0 / std::sin(pi * m); }, 0.3, j,
                                                         0.05)));
        }
        add("jets", worst, 1e-6);
    }
    return r;
}

struct Criterion {
    std::string id;
    std::vector<std::string> modules;
    std::function<Result(const Selection&)> run;
};

inline const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {"A1", {"engine", "mellin", "specialfn"}, [](const Selection&) { return a1_degenerate_product(); }},
        {"A2", {"engine", "jets", "lerch"}, [](const Selection&) { return a2_theorem_integer_k(); }},
        {"A3", {"engine", "jets", "mellin"}, [](const Selection&) { return a3_path_independence(); }},
        {"A4", {"quad", "legendre", "engine"}, [](const Selection&) { return a4_direct(); }},
        {"A5", {"lerch", "specialfn", "engine"}, [](const Selection&) { return a5_eta_line(); }},
        {"A6", {"lerch", "specialfn", "engine"}, [](const Selection&) { return a6_apery(); }},
        {"A7", {"engine", "specialfn"}, [](const Selection&) { return a7_log2_limit(); }},
        {"A8", {"engine", "specialfn", "quad"}, [](const Selection&) { return a8_harmonic_limit(); }},
        {"A9", {"engine"}, [](const Selection&) { return a9_differences(); }},
        {"A10", {"lerch", "legendre", "mellin", "specialfn", "gamma", "jets"},
         [](const Selection& s) { return a10_module_oracles(s); }},
    };
    return all;
}

/// Runs the selected criteria; `only` entries are module names or criterion ids.
inline std::vector<Result> run(const Selection& sel = {}, const std::function<void(const Result&)>& on_result = {})
{
    Selection modules;
    std::set<std::string> ids;
    for (const auto& o : sel.only) {
        if (!o.empty() && o[0] == 'A')
            ids.insert(o);
        else
            modules.only.insert(o);
    }
    std::vector<Result> out;
    for (const auto& c : criteria()) {
        const bool by_id = ids.count(c.id) > 0;
        const bool by_module = !modules.only.empty() && modules.wants(c.modules);
        if (!sel.only.empty() && !by_id && !by_module)
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run(by_id ? Selection{} : modules);
        } catch (const std::exception& e) {
            r = Result{c.id, "", false, std::string("error: ") + e.what(), 0.0, 0.0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.budget > 0.0 && r.seconds > r.budget) {
            r.pass = false;
            r.detail += detail::fmt("; over time budget (%.1fs > %.0fs)", r.seconds, r.budget);
        }
        if (on_result)
            on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format_line(const Result& r)
{
    char head[64];
    std::snprintf(head, sizeof head, "%-4s %s  (%.2fs)  ", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
    return head + r.title + ": " + r.detail;
}

} // namespace sextuple::acceptance

#endif // SEXTUPLE_ACCEPTANCE_HPP
