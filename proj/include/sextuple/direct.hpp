#ifndef SEXTUPLE_DIRECT_HPP
#define SEXTUPLE_DIRECT_HPP

// Direct evaluation of the sextuple integral
//
//   int_{[0,1]^6} x^{m-1} y^{-m} (1-x^2)^{-u/2} (1-y^2)^{-mu/2} P_v^u(x) P_nu^mu(y)
//     L_p^{beta_p} L_q^{beta_q} L_t^{beta_t} L_z^{beta_z}
//     log^k( a x sqrt(L_t L_z) / (y sqrt(L_p L_q)) )  dx dy dz dt dp dq,
//
// L_. = log(1/.), by a tensor tanh-sinh rule and by shifted Sobol QMC.

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "sextuple/core.hpp"
#include "sextuple/legendre.hpp"
#include "sextuple/quad.hpp"
#include "sextuple/specialfn.hpp"

namespace sextuple {

enum class Axis { x = 0, y = 1, p = 2, q = 3, t = 4, z = 5 };

inline constexpr std::array<const char*, 6> axis_names = {"x", "y", "p", "q", "t", "z"};

/// A sample point: x, y with exact complements, and the four L values.
struct Point6 {
    double x, cx, y, cy;
    double lp, lq, lt, lz;
};

/// Log of the coupling argument without log(a):
/// log x - log y + (log L_t + log L_z - log L_p - log L_q)/2.
inline double coupling_log(const Point6& pt) noexcept
{
    return std::log(pt.x) - std::log(pt.y) +
           0.5 * (std::log(pt.lt) + std::log(pt.lz) - std::log(pt.lp) - std::log(pt.lq));
}

/// (c + xi)^k with integer k >= 0 by repeated products, principal power otherwise.
inline complex coupling_power(complex base, complex k)
{
    long n = 0;
    if (near_integer(k, 0.0, &n) && n >= 0 && n <= 64) {
        complex r{1.0};
        for (long i = 0; i < n; ++i)
            r *= base;
        return r;
    }
    if (base == complex{0.0})
        throw pole_error("coupling_power: zero log argument");
    return std::exp(k * std::log(base));
}

/// The sextuple integrand for one parameter set; separable factors are
/// exposed so that tensor rules can precompute them per axis.
class Integrand6D {
public:
    explicit Integrand6D(const ParameterSet& ps)
        : ps_(ps), beta_(derive_exponents(ps)), log_a_(std::log(ps.a)), kx_(ps.v, ps.u), ky_(ps.nu, ps.mu)
    {
        if (ps.a == complex{0.0})
            throw domain_error("Integrand6D: a must be nonzero");
    }

    const ParameterSet& params() const noexcept { return ps_; }
    const ExponentQuad& exponents() const noexcept { return beta_; }
    complex log_a() const noexcept { return log_a_; }

    complex beta(Axis a) const
    {
        switch (a) {
        case Axis::p: return beta_.beta_p;
        case Axis::q: return beta_.beta_q;
        case Axis::t: return beta_.beta_t;
        case Axis::z: return beta_.beta_z;
        default: throw domain_error("Integrand6D::beta: not a log axis");
        }
    }

    const LegendreKernel& x_kernel() const noexcept { return kx_; }
    const LegendreKernel& y_kernel() const noexcept { return ky_; }

    /// x^{m-1} (1-x^2)^{-u/2} P_v^u(x)
    complex x_factor(double x, double cx) const { return std::exp((ps_.m - 1.0) * std::log(x)) * kx_(x, cx); }

    /// y^{-m} (1-y^2)^{-mu/2} P_nu^mu(y)
    complex y_factor(double y, double cy) const { return std::exp(-ps_.m * std::log(y)) * ky_(y, cy); }

    /// L^{beta} on one of the four log axes.
    complex log_factor(Axis a, double l) const { return std::exp(beta(a) * std::log(l)); }

    complex coupling(double xi) const { return coupling_power(log_a_ + xi, ps_.k); }

    complex operator()(const Point6& pt) const
    {
        return x_factor(pt.x, pt.cx) * y_factor(pt.y, pt.cy) * log_factor(Axis::p, pt.lp) *
               log_factor(Axis::q, pt.lq) * log_factor(Axis::t, pt.lt) * log_factor(Axis::z, pt.lz) *
               coupling(coupling_log(pt));
    }

    /// Endpoint exponents (left, right) of each axis in its original
    /// variable on (0, 1), real parts; these set the tanh-sinh truncation.
    std::array<double, 2> endpoint_exponents(Axis a) const
    {
        switch (a) {
        case Axis::x: return {ps_.m.real() - 1.0, -ps_.u.real()};
        case Axis::y: return {-ps_.m.real(), -ps_.mu.real()};
        default: return {0.0, beta(a).real()}; // L ~ 1 - p at p = 1
        }
    }

private:
    ParameterSet ps_;
    ExponentQuad beta_;
    complex log_a_;
    LegendreKernel kx_, ky_;
};

// ---------------------------------------------------------------------------
// Tensor rule

/// tanh-sinh rules on (0, 1) for the six axes at one level, each end truncated
/// where the endpoint singularity leaves less than `tail` mass.
inline std::array<Rule1D, 6> tensor_rules(const Integrand6D& f, int level, double tail = 1e-13)
{
    std::array<Rule1D, 6> rules;
    for (int i = 0; i < 6; ++i) {
        const auto e = f.endpoint_exponents(static_cast<Axis>(i));
        rules[i] = tanh_sinh(level, tanh_sinh_reach(e[0], tail), tanh_sinh_reach(e[1], tail));
    }
    return rules;
}

namespace detail {

struct AxisTable {
    std::vector<complex> factor; // weight times separable factor
    std::vector<double> xi;      // contribution to the coupling log
};

[[noreturn]] inline void non_finite_node(Axis a, double node, double comp)
{
    std::ostringstream os;
    os.precision(17);
    os << "integrate_6d_tensor: non-finite sample on axis " << axis_names[static_cast<int>(a)] << " at node " << node
       << " (complement " << comp << ")";
    throw numeric_error(os.str());
}

inline AxisTable axis_table(const Integrand6D& f, Axis a, const Rule1D& r)
{
    if (r.kind != RuleKind::tanh_sinh)
        throw domain_error("integrate_6d_tensor: axis rules must be tanh-sinh on (0, 1)");
    AxisTable t;
    t.factor.reserve(r.size());
    t.xi.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double s = r.nodes[i], c = r.complement(i);
        complex val;
        double xi;
        switch (a) {
        case Axis::x:
            val = f.x_factor(s, c);
            xi = std::log(s);
            break;
        case Axis::y:
            val = f.y_factor(s, c);
            xi = -std::log(s);
            break;
        default: {
            // L = -log s, accurate near s = 1 through the complement
            const double l = s < 0.5 ? -std::log(s) : -std::log1p(-c);
            val = f.log_factor(a, l);
            xi = (a == Axis::t || a == Axis::z ? 0.5 : -0.5) * std::log(l);
        }
        }
        val *= r.weights[i];
        if (!is_finite(val) || !std::isfinite(xi))
            non_finite_node(a, s, c);
        t.factor.push_back(val);
        t.xi.push_back(xi);
    }
    return t;
}

} // namespace detail

/// Tensor-product sum over the given per-axis tanh-sinh rules (order x, y, p,
/// q, t, z). For integer k >= 0 the innermost axis is summed through its power
/// moments, sum_j f_j (A + xi_j)^k = sum_r C(k,r) A^{k-r} sum_j f_j xi_j^r,
/// which is the same tensor sum with fewer operations.
inline complex integrate_6d_tensor(const Integrand6D& f, const std::array<Rule1D, 6>& rules)
{
    std::array<detail::AxisTable, 6> tab;
    for (int i = 0; i < 6; ++i)
        tab[i] = detail::axis_table(f, static_cast<Axis>(i), rules[i]);

    const complex k = f.params().k;
    long kn = 0;
    const bool poly = near_integer(k, 0.0, &kn) && kn >= 0 && kn <= 64;

    std::vector<complex> moments;
    std::vector<double> binom;
    if (poly) {
        moments.assign(static_cast<std::size_t>(kn) + 1, complex{0.0});
        const auto& last = tab[5];
        for (std::size_t j = 0; j < last.xi.size(); ++j) {
            complex p = last.factor[j];
            for (long r = 0; r <= kn; ++r) {
                moments[r] += p;
                p *= last.xi[j];
            }
        }
        binom.assign(static_cast<std::size_t>(kn) + 1, 1.0);
        for (long r = 1; r <= kn; ++r)
            binom[r] = binom[r - 1] * static_cast<double>(kn - r + 1) / static_cast<double>(r);
    }

    const complex la = f.log_a();
    complex total{0.0};
    for (std::size_t i0 = 0; i0 < tab[0].xi.size(); ++i0) {
        complex s0{0.0};
        for (std::size_t i1 = 0; i1 < tab[1].xi.size(); ++i1) {
            const complex w1 = tab[1].factor[i1];
            const double x1 = tab[0].xi[i0] + tab[1].xi[i1];
            complex s1{0.0};
            for (std::size_t i2 = 0; i2 < tab[2].xi.size(); ++i2) {
                const complex w2 = tab[2].factor[i2];
                const double x2 = x1 + tab[2].xi[i2];
                complex s2{0.0};
                for (std::size_t i3 = 0; i3 < tab[3].xi.size(); ++i3) {
                    const complex w3 = tab[3].factor[i3];
                    const double x3 = x2 + tab[3].xi[i3];
                    complex s3{0.0};
                    for (std::size_t i4 = 0; i4 < tab[4].xi.size(); ++i4) {
                        const complex a = la + (x3 + tab[4].xi[i4]);
                        complex inner{0.0};
                        if (poly) {
                            // Horner in A over the moments
                            for (long r = 0; r <= kn; ++r)
                                inner = inner * a + binom[r] * moments[r];
                        } else {
                            const auto& last = tab[5];
                            for (std::size_t j = 0; j < last.xi.size(); ++j)
                                inner += last.factor[j] * coupling_power(a + last.xi[j], k);
                        }
                        s3 += tab[4].factor[i4] * inner;
                    }
                    s2 += w3 * s3;
                }
                s1 += w2 * s2;
            }
            s0 += w1 * s1;
        }
        total += tab[0].factor[i0] * s0;
    }
    if (!is_finite(total))
        throw numeric_error("integrate_6d_tensor: non-finite total");
    return total;
}

/// Brute-force tensor sum of a general callable g(x, y, p, q, t, z) over
/// arbitrary rules (no separability assumed).
template <class G>
    requires std::invocable<G&, const std::array<double, 6>&>
complex integrate_6d_tensor(G&& g, const std::array<Rule1D, 6>& rules)
{
    complex total{0.0};
    std::array<std::size_t, 6> idx{};
    std::array<double, 6> pt{};
    const auto rec = [&](auto&& self, int axis, double w) -> void {
        if (axis == 6) {
            total += w * complex{g(pt)};
            return;
        }
        for (idx[axis] = 0; idx[axis] < rules[axis].size(); ++idx[axis]) {
            pt[axis] = rules[axis].nodes[idx[axis]];
            self(self, axis + 1, w * rules[axis].weights[idx[axis]]);
        }
    };
    rec(rec, 0, 1.0);
    return total;
}

/// Tensor value at `level` with the difference from level - 1 as error estimate.
inline QuadratureValue integrate_6d_tensor_estimate(const Integrand6D& f, int level = 4, double tail = 1e-13)
{
    if (level < 2)
        throw domain_error("integrate_6d_tensor_estimate: level must be >= 2");
    const complex fine = integrate_6d_tensor(f, tensor_rules(f, level, tail));
    const complex coarse = integrate_6d_tensor(f, tensor_rules(f, level - 1, tail));
    return {fine, std::abs(fine - coarse)};
}

// ---------------------------------------------------------------------------
// Quasi-Monte Carlo

struct QmcSpec {
    int dimension = 6;
    std::uint64_t count = 1u << 20; // total over all replicates
    std::uint64_t shift_seed = 0;
    int replicates = 8;

    void check() const
    {
        if (dimension != 6)
            throw domain_error("QmcSpec: dimension must be 6");
        if (count < (1u << 10) || (count & (count - 1)) != 0)
            throw domain_error("QmcSpec: count must be a power of two >= 2^10");
        if (replicates < 2 || static_cast<std::uint64_t>(replicates) > count)
            throw domain_error("QmcSpec: need at least two replicates");
    }
};

struct QmcValue {
    complex value;
    double stderr_estimate = 0.0;
};

/// Randomized QMC over (0,1)^6 for a callable g(u, out) writing `outputs`
/// complex values. Replicate r uses the first count/replicates Sobol points
/// XOR-ed with a digital shift drawn from mt19937_64(shift_seed). Summation
/// order is fixed, so results are reproducible bit for bit.
template <class G>
std::vector<QmcValue> qmc_unit_cube(G&& g, std::size_t outputs, const QmcSpec& spec)
{
    spec.check();
    const Sobol sobol(6);
    std::mt19937_64 rng(spec.shift_seed);
    const std::uint64_t per = spec.count / static_cast<std::uint64_t>(spec.replicates);
    constexpr std::uint64_t block = 4096;

    std::vector<std::vector<complex>> means(static_cast<std::size_t>(spec.replicates), std::vector<complex>(outputs));
    std::vector<complex> out(outputs), block_sum(outputs), rep_sum(outputs);
    std::array<double, 6> u{};
    for (int r = 0; r < spec.replicates; ++r) {
        std::array<std::uint64_t, 6> shift{};
        for (auto& s : shift)
            s = rng();
        std::fill(rep_sum.begin(), rep_sum.end(), complex{0.0});
        std::fill(block_sum.begin(), block_sum.end(), complex{0.0});
        auto x = sobol.point(0);
        for (std::uint64_t i = 0; i < per; ++i) {
            for (int d = 0; d < 6; ++d)
                u[d] = Sobol::to_unit(x[d] ^ shift[d]);
            g(u, out.data());
            for (std::size_t o = 0; o < outputs; ++o)
                block_sum[o] += out[o];
            if ((i + 1) % block == 0 || i + 1 == per) {
                for (std::size_t o = 0; o < outputs; ++o)
                    rep_sum[o] += block_sum[o];
                std::fill(block_sum.begin(), block_sum.end(), complex{0.0});
            }
            if (i + 1 < per)
                sobol.advance(x, i);
        }
        for (std::size_t o = 0; o < outputs; ++o)
            means[r][o] = rep_sum[o] / static_cast<double>(per);
    }

    std::vector<QmcValue> res(outputs);
    const double nr = static_cast<double>(spec.replicates);
    for (std::size_t o = 0; o < outputs; ++o) {
        complex mean{0.0};
        for (int r = 0; r < spec.replicates; ++r)
            mean += means[r][o];
        mean /= nr;
        double ss = 0.0;
        for (int r = 0; r < spec.replicates; ++r)
            ss += std::norm(means[r][o] - mean);
        res[o] = {mean, std::sqrt(ss / (nr - 1.0) / nr)};
        if (!is_finite(res[o].value))
            throw numeric_error("qmc: non-finite estimate");
    }
    return res;
}

namespace detail {

// Inverse CDFs taken from the nearer tail so that 1 - u stays exact.
inline double beta_quantile(double a, double b, double u, double* complement)
{
    if (u <= 0.5)
        return boost::math::ibeta_inv(a, b, u, complement);
    return boost::math::ibetac_inv(a, b, 1.0 - u, complement);
}

inline double gamma_quantile(double a, double u)
{
    const double l = u <= 0.5 ? boost::math::gamma_p_inv(a, u) : boost::math::gamma_q_inv(a, 1.0 - u);
    // Sub-normal tail of a tiny shape parameter; its mass is below 2^-52.
    return std::max(l, std::numeric_limits<double>::min());
}

} // namespace detail

/// QMC estimates of the sextuple integral for several powers k at once (ps.k
/// is ignored). Importance maps: x ~ Beta(Re m, 1 - Re u), y ~ Beta(1 - Re m,
/// 1 - Re mu), L_. ~ Gamma(Re beta_. + 1); the densities are divided out, so
/// the remaining weight carries only the smooth Legendre series and the
/// imaginary parts of the exponents.
inline std::vector<QmcValue> integrate_6d_qmc_powers(const Integrand6D& f, std::span<const complex> ks,
                                                     const QmcSpec& spec)
{
    const ParameterSet& ps = f.params();
    const double ax = ps.m.real(), bx = 1.0 - ps.u.real();
    const double ay = 1.0 - ps.m.real(), by = 1.0 - ps.mu.real();
    if (!(ax > 0.0 && bx > 0.0 && ay > 0.0 && by > 0.0))
        throw domain_error("integrate_6d_qmc: parameters outside the integrability strip");
    std::array<double, 4> shape{};
    std::array<complex, 4> imag_beta{};
    double log_const = std::log(boost::math::beta(ax, bx)) + std::log(boost::math::beta(ay, by));
    for (int i = 0; i < 4; ++i) {
        const complex b = f.beta(static_cast<Axis>(i + 2));
        shape[i] = b.real() + 1.0;
        if (!(shape[i] > 0.0))
            throw domain_error("integrate_6d_qmc: log exponent with Re <= -1");
        imag_beta[i] = complex{0.0, b.imag()};
        log_const += std::lgamma(shape[i]);
    }
    const double weight_const = std::exp(log_const);
    const complex m = ps.m, u = ps.u, mu = ps.mu;

    const auto g = [&](const std::array<double, 6>& s, complex* out) {
        Point6 pt{};
        pt.x = detail::beta_quantile(ax, bx, s[0], &pt.cx);
        pt.y = detail::beta_quantile(ay, by, s[1], &pt.cy);
        pt.lp = detail::gamma_quantile(shape[0], s[2]);
        pt.lq = detail::gamma_quantile(shape[1], s[3]);
        pt.lt = detail::gamma_quantile(shape[2], s[4]);
        pt.lz = detail::gamma_quantile(shape[3], s[5]);
        if (!(pt.cx > 0.0 && pt.cy > 0.0 && pt.x > 0.0 && pt.y > 0.0))
            throw numeric_error("integrate_6d_qmc: sample on the cube boundary");

        // x^{m-1} K_x / [x^{ax-1} (1-x)^{bx-1}] = x^{i Im m} (1-x)^{Re u} K_x, likewise for y
        const double lx = std::log(pt.x), lcx = std::log(pt.cx);
        const double ly = std::log(pt.y), lcy = std::log(pt.cy);
        complex w = std::exp((m - ax) * lx + u.real() * lcx) * f.x_kernel()(pt.x, pt.cx);
        w *= std::exp((1.0 - m - ay) * ly + mu.real() * lcy) * f.y_kernel()(pt.y, pt.cy);
        const std::array<double, 4> ls = {pt.lp, pt.lq, pt.lt, pt.lz};
        for (int i = 0; i < 4; ++i)
            if (imag_beta[i] != complex{0.0})
                w *= std::exp(imag_beta[i] * std::log(ls[i]));
        w *= weight_const;
        const complex base = f.log_a() + coupling_log(pt);
        for (std::size_t j = 0; j < ks.size(); ++j)
            out[j] = w * coupling_power(base, ks[j]);
        if (!is_finite(out[0])) {
            std::ostringstream os;
            os.precision(17);
            os << "integrate_6d_qmc: non-finite sample at x=" << pt.x << " y=" << pt.y << " Lp=" << pt.lp
               << " Lq=" << pt.lq << " Lt=" << pt.lt << " Lz=" << pt.lz;
            throw numeric_error(os.str());
        }
    };
    return qmc_unit_cube(g, ks.size(), spec);
}

inline QmcValue integrate_6d_qmc(const Integrand6D& f, const QmcSpec& spec)
{
    const complex k = f.params().k;
    return integrate_6d_qmc_powers(f, std::span<const complex>(&k, 1), spec).front();
}

} // namespace sextuple

#endif // SEXTUPLE_DIRECT_HPP
