#pragma once

// Structured inner functions and the model-space toolkit: reproducing kernel
// pairs, model projection, the Crofoot transform, and Wiener-Hopf
// factorisation of finite Blaschke products.
//
// An InnerFunction keeps its construction data (Blaschke zeros, point atoms,
// monomial power, unimodular constant) alongside cached boundary samples.
// Closed-form evaluation from the structure is exact and is preferred over
// coefficient sums wherever a formula exists; for atom-type functions the
// coefficient view is unreliable (slow tails) while samples stay exact.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/errors.hpp"
#include "tklab/grid.hpp"

namespace tklab {

struct InnerSpec {
    std::vector<cplx> zeros;                      // Blaschke zeros, strictly inside the disk
    std::vector<std::pair<cplx, double>> atoms;   // (point on the circle, positive mass)
    unsigned power = 0;                           // monomial factor z^power
    cplx constant = cplx{1.0, 0.0};               // unimodular constant factor
};

class InnerFunction {
public:
    InnerFunction(InnerSpec spec, const GridConfig& cfg) : spec_(std::move(spec)), cfg_(cfg) {
        cfg_.validate();
        for (const cplx& a : spec_.zeros)
            if (std::abs(a) >= 1.0) throw ZeroOnOrOutsideDisk("|zero| = " + std::to_string(std::abs(a)));
        for (auto& [p, m] : spec_.atoms) {
            if (m <= 0.0) throw NonpositiveMass("atom mass " + std::to_string(m));
            const double r = std::abs(p);
            if (std::abs(r - 1.0) > 1e-9) throw ConfigInvalid("atom point must lie on the circle");
            p /= r;
        }
        const double c = std::abs(spec_.constant);
        if (c < 1e-12) throw ConfigInvalid("unimodular constant must be nonzero");
        spec_.constant /= c;

        std::vector<cplx> s(cfg_.grid_size);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = eval_unchecked(cfg_.node(k));
        boundary_ = BoundaryFunction::from_samples(std::move(s), cfg_);
    }

    const InnerSpec& structure() const noexcept { return spec_; }
    const GridConfig& config() const noexcept { return cfg_; }
    const BoundaryFunction& boundary() const noexcept { return boundary_; }

    bool finite_blaschke() const noexcept { return spec_.atoms.empty(); }
    bool has_atoms() const noexcept { return !spec_.atoms.empty(); }

    // Zero count with multiplicity, monomial power included.
    std::size_t blaschke_degree() const noexcept { return spec_.zeros.size() + spec_.power; }

    // Closed-form evaluation, exact for |z| < 1 (and on the circle away from atoms).
    cplx eval(cplx z) const {
        if (std::abs(z) >= 1.0 + 1e-12)
            throw LambdaOutsideDisk("inner-function evaluation outside closed disk");
        return eval_unchecked(z);
    }

private:
    cplx eval_unchecked(cplx z) const {
        cplx v = spec_.constant;
        for (unsigned j = 0; j < spec_.power; ++j) v *= z;
        for (const cplx& a : spec_.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
        for (const auto& [p, m] : spec_.atoms) v *= std::exp(-m * (p + z) / (p - z));
        return v;
    }

    InnerSpec spec_;
    GridConfig cfg_;
    BoundaryFunction boundary_;
};

inline InnerFunction make_inner(const InnerSpec& spec, const GridConfig& cfg) {
    return InnerFunction(spec, cfg);
}

struct ModelKernelPair {
    HardyFunction k;        // (1 - conj(theta(lambda)) theta) / (1 - conj(lambda) z)
    HardyFunction k_tilde;  // (theta - theta(lambda)) / (z - lambda)
    cplx lambda;
    cplx theta_at_lambda;
    double min_modulus_k;   // > 0 certifies k invertible in H^inf at grid scale
};

namespace detail {

// Analytic part p(z)/(z - lambda) by descending synthetic division; exact when
// p(lambda) = 0. Stable for |lambda| < 1.
inline HardyFunction divide_out_zero(const BoundaryFunction& p, cplx lambda) {
    const long half = p.config().half_size();
    std::vector<cplx> q(static_cast<std::size_t>(half), cplx{0.0, 0.0});
    cplx carry{0.0, 0.0};
    for (long n = half - 1; n >= 1; --n) {
        carry = p.coeff(n) + lambda * carry;
        q[static_cast<std::size_t>(n - 1)] = carry;
    }
    return HardyFunction::from_coeffs(q, p.config());
}

} // namespace detail

inline ModelKernelPair model_kernels(const InnerFunction& theta, cplx lambda) {
    const GridConfig& cfg = theta.config();
    if (std::abs(lambda) >= 1.0) throw LambdaOutsideDisk("model_kernels");
    const cplx tl = theta.eval(lambda);

    const auto& th = theta.boundary();
    std::vector<cplx> ks(cfg.grid_size);
    double min_mod = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ks.size(); ++j) {
        const cplx t = cfg.node(j);
        ks[j] = (1.0 - std::conj(tl) * th.sample(j)) / (1.0 - std::conj(lambda) * t);
        min_mod = std::min(min_mod, std::abs(ks[j]));
    }
    auto k = HardyFunction::trusted(BoundaryFunction::from_samples(std::move(ks), cfg));

    // Samplewise quotient is exact away from lambda; fall back to synthetic
    // division when lambda sits near the circle where a node could resonate.
    HardyFunction kt;
    if (1.0 - std::abs(lambda) > 1e-3) {
        std::vector<cplx> kts(cfg.grid_size);
        for (std::size_t j = 0; j < kts.size(); ++j)
            kts[j] = (th.sample(j) - tl) / (cfg.node(j) - lambda);
        kt = HardyFunction::trusted(BoundaryFunction::from_samples(std::move(kts), cfg));
    } else {
        kt = detail::divide_out_zero(th - BoundaryFunction::constant(tl, cfg), lambda);
    }
    return {std::move(k), std::move(kt), lambda, tl, min_mod};
}

// Orthogonal projection onto K_theta: f - theta P+(conj(theta) f).
inline HardyFunction model_projection(const InnerFunction& theta, const HardyFunction& f) {
    const auto& th = theta.boundary();
    auto tail = project_plus(mul(complex_conjugate(th), f));
    return HardyFunction::trusted(f - mul(th, tail));
}

struct CrofootPair {
    BoundaryFunction theta_lambda;  // (theta - theta(lambda)) / (1 - conj(theta(lambda)) theta)
    HardyFunction multiplier;       // (1 - conj(theta(lambda)) theta) / sqrt(1 - |theta(lambda)|^2)
    cplx lambda;
    cplx theta_at_lambda;
};

inline CrofootPair crofoot(const InnerFunction& theta, cplx lambda) {
    const GridConfig& cfg = theta.config();
    if (std::abs(lambda) >= 1.0) throw LambdaOutsideDisk("crofoot");
    const cplx c = theta.eval(lambda);
    if (std::abs(c) >= 1.0 - 1e-9)
        throw ThetaUnimodularAtLambda("|theta(lambda)| = " + std::to_string(std::abs(c)));
    const double norm = std::sqrt(1.0 - std::norm(c));

    const auto& th = theta.boundary();
    std::vector<cplx> ts(cfg.grid_size), ms(cfg.grid_size);
    for (std::size_t j = 0; j < cfg.grid_size; ++j) {
        const cplx d = 1.0 - std::conj(c) * th.sample(j);
        ts[j] = (th.sample(j) - c) / d;
        ms[j] = d / norm;
    }
    return {BoundaryFunction::from_samples(std::move(ts), cfg),
            HardyFunction::trusted(BoundaryFunction::from_samples(std::move(ms), cfg)), lambda, c};
}

// Value of the transformed inner function inside the disk, from the structure.
inline cplx crofoot_eval(const InnerFunction& theta, cplx theta_at_lambda, cplx z) {
    const cplx v = theta.eval(z);
    return (v - theta_at_lambda) / (1.0 - std::conj(theta_at_lambda) * v);
}

struct WienerHopf {
    BoundaryFunction B_minus;  // c * prod (1 - a_k conj(z)); carries the unimodular constant
    long n;                    // zero count with multiplicity
    HardyFunction B_plus;      // prod (1 - conj(a_k) z)^{-1}, invertible in H^inf
};

inline WienerHopf fbp_wiener_hopf(const InnerFunction& B) {
    if (B.has_atoms()) throw NotFiniteBlaschke("symbol has singular atoms");
    const GridConfig& cfg = B.config();

    std::vector<cplx> zeros = B.structure().zeros;
    zeros.insert(zeros.end(), B.structure().power, cplx{0.0, 0.0});

    std::vector<cplx> plus(cfg.grid_size), minus(cfg.grid_size);
    for (std::size_t j = 0; j < cfg.grid_size; ++j) {
        const cplx t = cfg.node(j);
        cplx p{1.0, 0.0}, m = B.structure().constant;
        for (const cplx& a : zeros) {
            p /= (1.0 - std::conj(a) * t);
            m *= (1.0 - a * std::conj(t));
        }
        plus[j] = p;
        minus[j] = m;
    }
    return {BoundaryFunction::from_samples(std::move(minus), cfg),
            static_cast<long>(zeros.size()),
            HardyFunction::trusted(BoundaryFunction::from_samples(std::move(plus), cfg))};
}

} // namespace tklab
