#ifndef SEXTUPLE_QUAD_HPP
#define SEXTUPLE_QUAD_HPP

// One-dimensional rules (tanh-sinh, Gauss-Legendre, generalized
// Gauss-Laguerre) and a Sobol generator with digital shifts.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sextuple/core.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

enum class RuleKind { tanh_sinh, gauss_legendre, gauss_laguerre };

inline const char* to_string(RuleKind k) noexcept
{
    switch (k) {
    case RuleKind::tanh_sinh: return "tanh_sinh";
    case RuleKind::gauss_legendre: return "gauss_legendre";
    case RuleKind::gauss_laguerre: return "gauss_laguerre";
    }
    return "?";
}

/// Nodes and weights of a 1-D rule.
///
/// Domains: tanh_sinh on (0, 1), gauss_legendre on (-1, 1), gauss_laguerre on
/// (0, inf) against x^alpha e^{-x}. For tanh_sinh `complements` holds 1 - node
/// computed without cancellation; the tanh-sinh nodes crowd both endpoints to
/// within 1e-300 and `1.0 - node` would lose them.
struct Rule1D {
    RuleKind kind = RuleKind::tanh_sinh;
    double alpha = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> complements;

    std::size_t size() const noexcept { return nodes.size(); }

    double complement(std::size_t i) const noexcept
    {
        return complements.empty() ? 1.0 - nodes[i] : complements[i];
    }

    /// sum_i w_i f(x_i)
    template <class F>
    auto apply(F&& f) const
    {
        using R = decltype(f(0.0));
        R acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(nodes[i]);
        return acc;
    }
};

/// A quadrature result with an a-posteriori error estimate.
struct QuadratureValue {
    complex value;
    double error_estimate = 0.0;
};

inline constexpr int max_tanh_sinh_level = 12;
inline constexpr int max_gauss_points = 512;

/// Step used by a tanh-sinh rule of the given level: h = 2^{1 - level}.
inline double tanh_sinh_step(int level) { return std::ldexp(1.0, 1 - level); }

/// tanh-sinh rule on (0, 1), abscissae x(t) = (1 + tanh(pi/2 sinh t)) / 2 on
/// the grid t = j h restricted to [-t_left, t_right]. The defaults run the grid
/// until the weights underflow.
inline Rule1D tanh_sinh(int level, double t_left = 6.5, double t_right = 6.5)
{
    if (level < 1 || level > max_tanh_sinh_level)
        throw domain_error("tanh_sinh: level must lie in [1, 12]");
    if (!(t_left > 0.0) || !(t_right > 0.0))
        throw domain_error("tanh_sinh: truncation points must be positive");

    const double h = tanh_sinh_step(level);
    Rule1D r;
    r.kind = RuleKind::tanh_sinh;
    const long jl = static_cast<long>(std::floor(t_left / h));
    const long jr = static_cast<long>(std::floor(t_right / h));
    for (long j = -jl; j <= jr; ++j) {
        const double t = static_cast<double>(j) * h;
        const double s = 0.5 * pi * std::sinh(t);
        // x = 1/(1 + e^{-2s}), 1 - x = 1/(1 + e^{2s})
        const double e = std::exp(-2.0 * std::abs(s));
        const double small = e / (1.0 + e);
        const double large = 1.0 / (1.0 + e);
        const double x = s >= 0.0 ? large : small;
        const double c = s >= 0.0 ? small : large;
        // dx/dt = (pi/2) cosh t * x (1 - x) * 2
        const double w = h * pi * std::cosh(t) * x * c;
        if (!(x > 0.0) || !(c > 0.0) || !(w > 0.0))
            continue;
        r.nodes.push_back(x);
        r.complements.push_back(c);
        r.weights.push_back(w);
    }
    return r;
}

/// Truncation point of the tanh-sinh grid so that an endpoint singularity
/// d^gamma (gamma > -1) leaves less than `tail` mass beyond the last node.
inline double tanh_sinh_reach(double gamma, double tail = 1e-12)
{
    const double g1 = std::max(gamma + 1.0, 1e-3);
    // distance to the endpoint at t is ~ exp(-pi sinh t); need dist^{g1} < tail
    const double need = -std::log(tail) / g1;
    return std::min(6.5, std::asinh(need / pi) + 0.25);
}

/// n-point Gauss-Legendre on (-1, 1), Newton iteration on P_n.
inline Rule1D gauss_legendre(int n)
{
    if (n < 1 || n > max_gauss_points)
        throw domain_error("gauss_legendre: n must lie in [1, 512]");
    Rule1D r;
    r.kind = RuleKind::gauss_legendre;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // one more derivative evaluation at the converged node
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        r.nodes[n / 2] = 0.0;
    return r;
}

namespace detail {

struct LaguerreEval {
    double pn;      // p_n(x), scaled
    double dpn;     // p_n'(x), same scale
    double log_sum; // log sum_{j<n} p_j(x)^2, unscaled
};

// Orthonormal generalized Laguerre recurrence with running rescaling so that
// nodes far out on the axis do not overflow.
inline LaguerreEval laguerre_orthonormal(int n, double alpha, double x, double log_mu0)
{
    double p_prev = 0.0, dp_prev = 0.0;
    double p = std::exp(-0.5 * log_mu0), dp = 0.0;
    double sum = 0.0, log_scale = 0.0;
    for (int j = 0; j < n; ++j) {
        sum += p * p;
        const double a = 2.0 * j + alpha + 1.0;
        const double b_next = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
        const double b = j == 0 ? 0.0 : std::sqrt(j * (j + alpha));
        const double p_next = ((x - a) * p - b * p_prev) / b_next;
        const double dp_next = (p + (x - a) * dp - b * dp_prev) / b_next;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
        const double mag = std::max(std::abs(p), std::abs(p_prev));
        if (mag > 1e100) {
            p /= mag;
            p_prev /= mag;
            dp /= mag;
            dp_prev /= mag;
            sum /= mag * mag;
            log_scale += std::log(mag);
        }
    }
    return {p, dp, std::log(sum) + 2.0 * log_scale};
}

} // namespace detail

/// n-point generalized Gauss-Laguerre rule for x^alpha e^{-x} on (0, inf).
/// Golub-Welsch eigenvalues seed a Newton polish on the orthonormal
/// recurrence; weights are Christoffel numbers. Nodes whose weight underflows
/// double precision (n > ~180) are dropped.
inline Rule1D gauss_laguerre(int n, double alpha)
{
    if (n < 1 || n > max_gauss_points)
        throw domain_error("gauss_laguerre: n must lie in [1, 512]");
    if (!(alpha > -1.0))
        throw domain_error("gauss_laguerre: alpha must exceed -1");

    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    for (int j = 0; j < n; ++j)
        diag[j] = 2.0 * j + alpha + 1.0;
    for (int j = 1; j < n; ++j)
        sub[j - 1] = std::sqrt(j * (j + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw convergence_error("gauss_laguerre: eigenvalue solve failed");

    const double log_mu0 = log_gamma(complex{alpha + 1.0}).real();
    Rule1D r;
    r.kind = RuleKind::gauss_laguerre;
    r.alpha = alpha;
    for (int i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[i];
        for (int it = 0; it < 20; ++it) {
            const auto e = detail::laguerre_orthonormal(n, alpha, x, log_mu0);
            const double dx = e.pn / e.dpn;
            x -= dx;
            if (std::abs(dx) <= 4e-16 * std::abs(x))
                break;
        }
        const auto e = detail::laguerre_orthonormal(n, alpha, x, log_mu0);
        const double w = std::exp(-e.log_sum);
        if (!(w > 0.0) || !std::isfinite(w))
            continue;
        r.nodes.push_back(x);
        r.weights.push_back(w);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sobol points with digital shifts (first six dimensions, Joe-Kuo numbers).

class Sobol {
public:
    static constexpr int max_dimension = 6;
    static constexpr int bits = 64;

    explicit Sobol(int dimension) : dim_(dimension)
    {
        if (dimension < 1 || dimension > max_dimension)
            throw domain_error("Sobol: dimension must lie in [1, 6]");
        struct Entry {
            int s;
            unsigned a;
            std::array<unsigned, 4> m;
        };
        // d = 2..6 of the Joe-Kuo "new-joe-kuo-6.21201" table
        static constexpr std::array<Entry, 5> table = {{
            {1, 0, {1, 0, 0, 0}},
            {2, 1, {1, 3, 0, 0}},
            {3, 1, {1, 3, 1, 0}},
            {3, 2, {1, 1, 1, 0}},
            {4, 1, {1, 1, 3, 3}},
        }};
        for (int i = 0; i < bits; ++i)
            v_[0][i] = std::uint64_t{1} << (bits - 1 - i);
        for (int d = 1; d < dim_; ++d) {
            const Entry& e = table[d - 1];
            std::array<std::uint64_t, bits> m{};
            for (int i = 0; i < e.s; ++i)
                m[i] = e.m[i];
            for (int i = e.s; i < bits; ++i) {
                std::uint64_t mi = m[i - e.s] ^ (m[i - e.s] << e.s);
                for (int k = 1; k < e.s; ++k)
                    if ((e.a >> (e.s - 1 - k)) & 1u)
                        mi ^= m[i - k] << k;
                m[i] = mi;
            }
            for (int i = 0; i < bits; ++i)
                v_[d][i] = m[i] << (bits - 1 - i);
        }
    }

    int dimension() const noexcept { return dim_; }

    /// Integer coordinates of point `index` (Gray-code order).
    std::array<std::uint64_t, max_dimension> point(std::uint64_t index) const noexcept
    {
        std::array<std::uint64_t, max_dimension> x{};
        const std::uint64_t g = index ^ (index >> 1);
        for (int i = 0; i < bits; ++i)
            if ((g >> i) & 1u)
                for (int d = 0; d < dim_; ++d)
                    x[d] ^= v_[d][i];
        return x;
    }

    /// Moves `x` from point index to index + 1.
    void advance(std::array<std::uint64_t, max_dimension>& x, std::uint64_t index) const noexcept
    {
        int c = 0;
        while ((index >> c) & 1u)
            ++c;
        for (int d = 0; d < dim_; ++d)
            x[d] ^= v_[d][c];
    }

    /// Midpoint of the 2^-52 cell; never 0 or 1.
    static double to_unit(std::uint64_t x) noexcept
    {
        return (static_cast<double>(x >> 12) + 0.5) * 0x1p-52;
    }

private:
    int dim_;
    std::array<std::array<std::uint64_t, bits>, max_dimension> v_{};
};

} // namespace sextuple

#endif // SEXTUPLE_QUAD_HPP
