#pragma once

// Isometric representations of finite-dimensional Toeplitz kernels.
//
// A kernel of the form w K_{z^n} is turned into u K_{z alpha} with a single
// multiplier u of unit norm and a unimodular parameter alpha: u is the
// normalised orthogonal complement of w against {w z^j, j >= 1}, obtained
// from the Gram normal equations of the weight |w|^2, and alpha is the
// degree-(n-1) ratio z^{n-1} conj(q)/q picked up by that projection. The
// Herglotz machinery (F, b, a, u_alpha) reparametrises the same kernel for
// any inner alpha. Half-integer power symbols supply the standard family
// with a genuine branch cut, and one-sided jump exponents classify piecewise
// continuous symbols by their winding at the discontinuities.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/errors.hpp"
#include "tklab/grid.hpp"
#include "tklab/toeplitz.hpp"

namespace tklab {

// ker T_g = multiplier_w * K_{z^degree_n}, spanned by multiplier_w * z^j.
struct FiniteKernelRep {
    HardyFunction multiplier_w;
    std::size_t degree_n = 0;
    std::vector<HardyFunction> basis;
};

inline FiniteKernelRep finite_kernel_rep(const HardyFunction& w, std::size_t n) {
    const GridConfig& cfg = w.config();
    if (n == 0) throw ConfigInvalid("finite_kernel_rep: degree must be positive");
    if (n > cfg.truncation) throw ConfigInvalid("finite_kernel_rep: degree exceeds truncation");
    if (w.sample_norm() <= cfg.tol_coeff) throw ZeroFunction("finite_kernel_rep");
    FiniteKernelRep rep{w, n, {}};
    rep.basis.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        rep.basis.push_back(HardyFunction::trusted(
            mul(w, BoundaryFunction::monomial(static_cast<long>(j), cfg))));
    return rep;
}

// Principal square root of 1 + z on the sample nodes. The cut sits at -1,
// which the offset grid never hits; the coefficient tail decays like
// m^{-3/2}, so the recorded aliasing defect is of order grid_size^{-1}.
inline HardyFunction half_power_root(const GridConfig& cfg) {
    cfg.validate();
    std::vector<cplx> s(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k)
        s[k] = std::sqrt(cplx{1.0, 0.0} + cfg.node(k));
    return HardyFunction::trusted(BoundaryFunction::from_samples(std::move(s), cfg));
}

// Samples of z^{-n/2} on the principal branch, n odd. With w = (1+z)^{1/2}
// the identity z^{-n/2} = z^{-(n-1)/2} conj(w)/w holds exactly at every
// node, since both sides reduce to exp(-i n theta/2) for theta in (-pi, pi).
inline ToeplitzSymbol halfinteger_symbol(long n, const GridConfig& cfg) {
    cfg.validate();
    if (n % 2 == 0) throw EvenN("halfinteger_symbol: n = " + std::to_string(n));
    if (n <= 0) throw ConfigInvalid("halfinteger_symbol: n must be positive");
    std::vector<cplx> s(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const double h = -0.5 * static_cast<double>(n) * cfg.signed_angle(k);
        s[k] = cplx{std::cos(h), std::sin(h)};
    }
    return ToeplitzSymbol(BoundaryFunction::from_samples(std::move(s), cfg),
                          {cplx{-1.0, 0.0}});
}

// Sign symbol: +1 on the upper half-circle, -1 on the lower. Piecewise
// constant with jumps at both real points; its Toeplitz kernel is trivial.
inline ToeplitzSymbol sign_symbol(const GridConfig& cfg) {
    cfg.validate();
    std::vector<cplx> s(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k)
        s[k] = cfg.angle(k) < pi ? cplx{1.0, 0.0} : cplx{-1.0, 0.0};
    return ToeplitzSymbol(BoundaryFunction::from_samples(std::move(s), cfg),
                          {cplx{1.0, 0.0}, cplx{-1.0, 0.0}});
}

// Kernel dimension zero, with the finite-section certificate as evidence.
struct TrivialKernel {
    KernelBasis evidence;
};

// ker T_{z^{-n/2}} for odd n: trivial at n = 1, otherwise w K_{z^N} with
// w = (1+z)^{1/2} and N = (n-1)/2. The basis is verified against the symbol
// at the branch tier, and the next shift w z^N must leave the kernel
// decisively, two orders above that tier.
inline std::variant<TrivialKernel, FiniteKernelRep>
halfinteger_symbol_kernel(long n, const GridConfig& cfg) {
    auto sym = halfinteger_symbol(n, cfg);
    if (n == 1) return TrivialKernel{numerical_kernel(sym, cfg.section_size)};

    const auto N = static_cast<std::size_t>((n - 1) / 2);
    auto rep = finite_kernel_rep(half_power_root(cfg), N);
    for (const auto& b : rep.basis)
        if (residual_in_kernel(sym, b) > cfg.tol_branch)
            throw FactorisationFailed("half-integer basis residual above the branch tier");
    auto beyond = mul(rep.multiplier_w,
                      BoundaryFunction::monomial(static_cast<long>(N), cfg));
    if (residual_in_kernel(sym, beyond) < 100.0 * cfg.tol_branch)
        throw FactorisationFailed("half-integer kernel does not terminate at degree " +
                                  std::to_string(N));
    return rep;
}

// u = U/||U|| with U = w - P(w), P the orthogonal projection onto
// span{w z^j, j = 1..n-1}; alpha = z^{n-1} conj(q)/q where U = w q. The
// sample norm of u f then equals the norm of f for every f in K_{z alpha}.
struct IsometricRep {
    HardyFunction u;                    // unit norm, u(0) rotated positive
    BoundaryFunction alpha_boundary;    // unimodular at every node
    HardyFunction orthogonal_vector_U;
    double gram_condition = 1.0;
    std::vector<cplx> q_coeffs;         // q(0) = 1, size = degree_n
};

inline IsometricRep isometric_multiplier_finite(const FiniteKernelRep& rep) {
    const GridConfig& cfg = rep.multiplier_w.config();
    const std::size_t n = rep.degree_n;
    if (n == 0 || rep.basis.size() != n)
        throw ConfigInvalid("isometric_multiplier_finite: malformed representation");
    if (n > cfg.truncation)
        throw ConfigInvalid("isometric_multiplier_finite: degree exceeds truncation");

    // Gram normal equations over the weight |w|^2: <w z^j, w z^i> = c_{i-j},
    // a Hermitian Toeplitz matrix of its Fourier coefficients.
    auto weight = mul(rep.multiplier_w, complex_conjugate(rep.multiplier_w));
    const auto m = static_cast<Eigen::Index>(n) - 1;
    Eigen::MatrixXcd G(m, m);
    Eigen::VectorXcd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        rhs(i) = weight.coeff(static_cast<long>(i) + 1);
        for (Eigen::Index j = 0; j < m; ++j)
            G(i, j) = weight.coeff(static_cast<long>(i - j));
    }

    double cond = 1.0;
    std::vector<cplx> q(n, cplx{0.0, 0.0});
    q[0] = cplx{1.0, 0.0};
    if (m > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smin = svd.singularValues()(m - 1);
        const double smax = svd.singularValues()(0);
        cond = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
        if (!(cond < 1e8))
            throw IllConditionedGram("condition number " + std::to_string(cond));
        Eigen::VectorXcd x = svd.solve(rhs);
        for (Eigen::Index j = 0; j < m; ++j)
            q[static_cast<std::size_t>(j) + 1] = -x(j);
    }

    auto qpoly = HardyFunction::from_coeffs(q, cfg);
    auto U = HardyFunction::trusted(mul(rep.multiplier_w, qpoly));
    const double nu = U.sample_norm();
    if (nu <= cfg.tol_coeff) throw ZeroFunction("isometric_multiplier_finite");

    cplx rot{1.0, 0.0};
    const cplx u0 = U.coeff(0);
    if (std::abs(u0) > cfg.tol_coeff) rot = std::conj(u0) / std::abs(u0);
    auto u = HardyFunction::trusted(U * (rot / nu));

    // alpha depends on q alone: z^{n-1} conj(q)/q is unimodular wherever q
    // does not vanish, and q cannot vanish at a node for a genuine kernel.
    std::vector<cplx> as(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const cplx qk = qpoly.sample(k);
        if (std::abs(qk) < 1e-12)
            throw FactorisationFailed("alpha parameter degenerates at a boundary node");
        const cplx t = std::polar(1.0, static_cast<double>(n - 1) * cfg.angle(k));
        as[k] = t * std::conj(qk) / qk;
    }
    auto alpha = BoundaryFunction::from_samples(std::move(as), cfg);
    return {std::move(u), std::move(alpha), std::move(U), cond, std::move(q)};
}

// Blaschke zeros of alpha: the circle reflections 1/conj(r) of the roots r
// of q, plus a zero at the origin for each degree q falls short of n-1.
// Companion-matrix root finding; reliable only at small degree.
inline std::vector<cplx> alpha_blaschke_zeros(const IsometricRep& rep) {
    const std::size_t n = rep.q_coeffs.size();
    if (n == 0) throw ConfigInvalid("alpha_blaschke_zeros: empty representation");
    if (n > 8) throw ConfigInvalid("alpha_blaschke_zeros: supported only up to degree 8");

    double mag = 0.0;
    for (const cplx& c : rep.q_coeffs) mag = std::max(mag, std::abs(c));
    std::size_t d = n - 1;
    while (d > 0 && std::abs(rep.q_coeffs[d]) <= 1e-12 * mag) --d;

    std::vector<cplx> zeros(n - 1 - d, cplx{0.0, 0.0});
    if (d == 0) return zeros;

    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                static_cast<Eigen::Index>(d));
    const cplx lead = rep.q_coeffs[d];
    for (std::size_t j = 0; j < d; ++j) {
        if (j + 1 < d) C(static_cast<Eigen::Index>(j) + 1, static_cast<Eigen::Index>(j)) = 1.0;
        C(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(d) - 1) =
            -rep.q_coeffs[j] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const cplx r = es.eigenvalues()(i);
        if (std::abs(r) <= 1.0)
            throw FactorisationFailed("projection polynomial has a root inside the closed disk");
        zeros.push_back(1.0 / std::conj(r));
    }
    return zeros;
}

// Herglotz parametrisation of a kernel multiplier. F is the analytic
// completion of |u|^2 (so Re F >= 0 and F(0) = ||u||^2), b = (F-1)/(F+1)
// maps the disk to itself, a = 2u/(F+1), and u_alpha = a/(1 - b alpha) is
// the multiplier the parameter alpha selects. Re(F+1) = 1 + |u|^2 >= 1
// keeps every division here away from zero at the nodes.
struct HerglotzParameters {
    HardyFunction F;
    HardyFunction b;
    HardyFunction a;
    HardyFunction u_alpha;
};

inline HerglotzParameters herglotz_parameters(const HardyFunction& u,
                                              const BoundaryFunction& alpha) {
    const GridConfig& cfg = u.config();
    if (!cfg.compatible(alpha.config()))
        throw ConfigInvalid("herglotz_parameters: operands live on different grids");
    if (alpha.unimodular_defect() > 1e-6)
        throw ConfigInvalid("herglotz_parameters: alpha must be unimodular");
    if (outer_test(u).verdict != Outerness::Outer)
        throw NotOuter("herglotz_parameters");
    const cplx u0 = u.coeff(0);
    if (!(u0.real() > cfg.tol_coeff) || std::abs(u0.imag()) > 1e-8 * std::abs(u0))
        throw NonpositiveAtZero("u(0) = " + std::to_string(u0.real()) +
                                (u0.imag() < 0 ? " - " : " + ") +
                                std::to_string(std::abs(u0.imag())) + "i");

    const long half = cfg.half_size();
    auto spec = mul(u, complex_conjugate(u)).spectrum();
    std::vector<cplx> fs(cfg.grid_size, cplx{0.0, 0.0});
    fs[static_cast<std::size_t>(half)] = spec[static_cast<std::size_t>(half)];
    for (long k = 1; k < half; ++k)
        fs[static_cast<std::size_t>(half + k)] = 2.0 * spec[static_cast<std::size_t>(half + k)];
    auto F = HardyFunction::trusted(BoundaryFunction::from_spectrum(std::move(fs), cfg));

    std::vector<cplx> bs(cfg.grid_size), asamp(cfg.grid_size), uas(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const cplx Fk = F.sample(k);
        const cplx den = Fk + 1.0;
        const cplx bk = (Fk - 1.0) / den;
        const cplx ak = 2.0 * u.sample(k) / den;
        const cplx dk = 1.0 - bk * alpha.sample(k);
        if (std::abs(dk) < 1e-13)
            throw FactorisationFailed("u_alpha denominator vanishes at a boundary node");
        bs[k] = bk;
        asamp[k] = ak;
        uas[k] = ak / dk;
    }
    return {std::move(F),
            HardyFunction::trusted(BoundaryFunction::from_samples(std::move(bs), cfg)),
            HardyFunction::trusted(BoundaryFunction::from_samples(std::move(asamp), cfg)),
            HardyFunction::trusted(BoundaryFunction::from_samples(std::move(uas), cfg))};
}

struct JumpExponent {
    cplx point;
    cplx exponent;
};

// regular2 records that no exponent has real part at -1/2: the borderline
// case in which the finite sections lose their spectral meaning.
struct JumpAnalysis {
    std::vector<JumpExponent> jumps;
    bool regular2 = true;
};

namespace detail {

// Neville extrapolation of (x_j, v_j) to x = 0; quartic minus cubic serves
// as the error estimate.
inline cplx neville_to_zero(const double* x, const cplx* v, std::size_t npts, double& err) {
    std::vector<cplx> p(v, v + npts);
    cplx prev{0.0, 0.0};
    for (std::size_t level = 1; level < npts; ++level) {
        if (level == npts - 1) prev = p[0];
        for (std::size_t i = 0; i + level < npts; ++i)
            p[i] = (p[i + 1] * (0.0 - x[i]) - p[i] * (0.0 - x[i + level])) /
                   (x[i + level] - x[i]);
    }
    err = std::abs(p[0] - prev);
    return p[0];
}

} // namespace detail

// One-sided limits at the declared jump points by four-node polynomial
// extrapolation along each side, and the exponent
//   alpha_c = log(g(c-)/g(c+)) / (2 pi i),
// real part normalised to [-1/2, 1/2). The minus side approaches c from
// below in angle. Vanishing or non-settling limits are estimation failures,
// not exponents.
inline JumpAnalysis piecewise_jump_exponents(const ToeplitzSymbol& g) {
    const GridConfig& cfg = g.config();
    const auto M = static_cast<long>(cfg.grid_size);
    const auto& s = g.boundary().samples();
    constexpr std::size_t kPts = 4;
    constexpr double kHalfTol = 1e-6;

    JumpAnalysis out;
    for (const cplx& c : g.jump_points()) {
        if (std::abs(std::abs(c) - 1.0) > 1e-9)
            throw ConfigInvalid("piecewise_jump_exponents: jump point off the circle");
        double theta = std::arg(c);
        if (theta < 0.0) theta += 2.0 * pi;

        // Node k sits at position k on this scale; a jump landing exactly on
        // a node leaves that sample sideless, so both stencils skip it.
        const double pos = theta * static_cast<double>(M) / (2.0 * pi) - 0.5;
        const bool on_node = std::abs(pos - std::round(pos)) < 1e-9;
        const long lo0 = on_node ? static_cast<long>(std::llround(pos)) - 1
                                 : static_cast<long>(std::floor(pos));
        const long hi0 = on_node ? static_cast<long>(std::llround(pos)) + 1 : lo0 + 1;

        auto side = [&](long k0, long dir) {
            double x[kPts];
            cplx v[kPts];
            for (std::size_t j = 0; j < kPts; ++j) {
                const long k = k0 + dir * static_cast<long>(j);
                const long km = ((k % M) + M) % M;
                // Unwrapped node angle: k may sit outside [0, M) so that the
                // distance to theta stays short across the 0/2pi seam.
                const double a =
                    2.0 * pi * (static_cast<double>(k) + 0.5) / static_cast<double>(M);
                x[j] = std::abs(theta - a);
                v[j] = s[static_cast<std::size_t>(km)];
            }
            double err = 0.0;
            const cplx lim = detail::neville_to_zero(x, v, kPts, err);
            if (err > 0.02 * std::max(std::abs(lim), 1e-2))
                throw LimitEstimationFailed("one-sided limit does not settle at " +
                                            std::to_string(theta));
            return lim;
        };
        const cplx lm = side(lo0, -1);
        const cplx lp = side(hi0, +1);
        if (std::abs(lm) < 1e-8 || std::abs(lp) < 1e-8)
            throw LimitEstimationFailed("one-sided limit vanishes at " + std::to_string(theta));

        const cplx ratio = lm / lp;
        double re = std::arg(ratio) / (2.0 * pi);
        const double im = -std::log(std::abs(ratio)) / (2.0 * pi);
        if (re >= 0.5 - kHalfTol) re -= 1.0;
        if (std::abs(re + 0.5) <= kHalfTol) out.regular2 = false;
        out.jumps.push_back({c, cplx{re, im}});
    }
    return out;
}

} // namespace tklab
