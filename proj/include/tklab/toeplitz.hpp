#pragma once

// Truncated Toeplitz matrices, numerical kernel computation with dimension
// certificates, residual membership tests, and kernel-comparison probes.
//
// Kernel dimensions are decided by a singular-value gap of the finite section
// (relative 10x rule), then every candidate vector is re-verified against the
// full-resolution symbol: a coarse residual screen rejects section artifacts
// (the truncated shift has an exact spurious null vector), and the survivors
// are refined on the half-spectrum band by iterating v <- v - T*(T v) with a
// collapse detector. Finite sections of non-Fredholm symbols (half-integer
// powers) have slowly decaying singular values; the relative gap plus
// full-symbol residuals is the stable signal, an absolute threshold is not.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/errors.hpp"
#include "tklab/fft.hpp"
#include "tklab/grid.hpp"
#include "tklab/inner_function.hpp"

namespace tklab {

class ToeplitzSymbol {
public:
    explicit ToeplitzSymbol(BoundaryFunction g, std::vector<cplx> jump_points = {},
                            bool singular_part = false, double construction_tol = 0.0)
        : boundary_(std::move(g)), jump_points_(std::move(jump_points)), singular_(singular_part),
          construction_tol_(construction_tol) {
        for (cplx& p : jump_points_) {
            const double r = std::abs(p);
            if (std::abs(r - 1.0) > 1e-9) throw ConfigInvalid("jump point must lie on the circle");
            p /= r;
        }
        unimodular_ = boundary_.unimodular_defect() <= 10.0 * boundary_.config().tol_coeff;
    }

    const BoundaryFunction& boundary() const noexcept { return boundary_; }
    const GridConfig& config() const noexcept { return boundary_.config(); }
    bool unimodular() const noexcept { return unimodular_; }
    const std::vector<cplx>& jump_points() const noexcept { return jump_points_; }
    bool has_jumps() const noexcept { return !jump_points_.empty(); }
    bool has_singular_part() const noexcept { return singular_; }
    double construction_tol() const noexcept { return construction_tol_; }

    // Residual tier a kernel basis can honestly reach: branch cuts cap the
    // coefficient decay at n^{-3/2}, so anything discontinuous gets the
    // relaxed tier. Symbols manufactured from a numerical factorisation carry
    // their construction error, which caps the tier from below.
    double basis_tol() const noexcept {
        const GridConfig& c = config();
        const double flag_tol = (has_jumps() || singular_)
                                    ? std::max(c.tol_residual, c.tol_branch)
                                    : c.tol_residual;
        return std::max(flag_tol, construction_tol_);
    }

private:
    BoundaryFunction boundary_;
    std::vector<cplx> jump_points_;
    bool singular_;
    bool unimodular_;
    double construction_tol_;
};

// Symbol conj(theta), the standard symbol whose kernel is the model space.
inline ToeplitzSymbol model_space_symbol(const InnerFunction& theta) {
    return ToeplitzSymbol(complex_conjugate(theta.boundary()), {}, theta.has_atoms());
}

inline Eigen::MatrixXcd toeplitz_matrix(const ToeplitzSymbol& g, std::size_t size) {
    const GridConfig& cfg = g.config();
    if (size > cfg.truncation)
        throw SizeExceedsTruncation("section size " + std::to_string(size));
    Eigen::MatrixXcd A(size, size);
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k)
            A(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                g.boundary().coeff(static_cast<long>(j) - static_cast<long>(k));
    return A;
}

// ||P+(g f)|| / ||f|| over the full spectrum.
inline double residual_in_kernel(const ToeplitzSymbol& g, const BoundaryFunction& f) {
    const double nf = f.sample_norm();
    if (nf <= g.config().tol_coeff) throw ZeroFunction("residual_in_kernel");
    return mul(g.boundary(), f).positive_energy() / nf;
}

// ||coefficients 0..band of P+(g f)|| / ||f||. For symbols with singular inner
// content the full projection carries fold-over of the slow coefficient tail;
// the low band is where genuine membership separates from non-membership.
inline double low_band_residual(const ToeplitzSymbol& g, const BoundaryFunction& f,
                                long band = 64) {
    const double nf = f.sample_norm();
    if (nf <= g.config().tol_coeff) throw ZeroFunction("low_band_residual");
    return mul(g.boundary(), f).window_energy(0, band + 1) / nf;
}

enum class Membership { In, NotIn, Uncertain };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::In: return "In";
        case Membership::NotIn: return "NotIn";
        default: return "Uncertain";
    }
}

// Tiered membership verdict. Thresholds per symbol class, each an order of
// magnitude below the measured non-member scale:
//   smooth:   full residual, In <= 10*tol_residual,  NotIn >= 1e-2
//   jump:     full residual, In <= 10*tol_branch,    NotIn >= 1e-2
//   singular: low-band residual, In <= 2e-2,         NotIn >= 2e-1
inline Membership membership_check(const ToeplitzSymbol& g, const BoundaryFunction& f) {
    if (g.has_singular_part()) {
        const double r = low_band_residual(g, f);
        if (r <= 2e-2) return Membership::In;
        if (r >= 2e-1) return Membership::NotIn;
        return Membership::Uncertain;
    }
    const double r = residual_in_kernel(g, f);
    const double in_tol = 10.0 * g.basis_tol();
    if (r <= in_tol) return Membership::In;
    if (r >= 1e-2) return Membership::NotIn;
    return Membership::Uncertain;
}

struct KernelBasis {
    std::vector<HardyFunction> vectors;          // orthonormal
    std::vector<double> residuals;               // ||P+(g v)|| per vector, full spectrum
    std::size_t dimension = 0;
    double gap = std::numeric_limits<double>::infinity();  // first rejected / last accepted
    bool certain = false;
    std::vector<double> section_singular_values; // ascending
    double basis_tol = 0.0;
};

namespace detail {

// P+(g v) truncated to coefficients [0, K), for coefficient vectors of length K.
inline std::vector<cplx> apply_compression(const std::vector<cplx>& gsamples,
                                           const std::vector<cplx>& coeffs, const GridConfig& cfg,
                                           bool conj_symbol) {
    const long half = cfg.half_size();
    const long K = static_cast<long>(coeffs.size());
    std::vector<cplx> spec(cfg.grid_size, cplx{0.0, 0.0});
    for (long j = 0; j < K; ++j)
        spec[static_cast<std::size_t>(half + j)] = coeffs[static_cast<std::size_t>(j)];
    auto samp = samples_from_spectrum(spec);
    if (conj_symbol)
        for (std::size_t i = 0; i < samp.size(); ++i) samp[i] *= std::conj(gsamples[i]);
    else
        for (std::size_t i = 0; i < samp.size(); ++i) samp[i] *= gsamples[i];
    auto out_spec = spectrum_from_samples(samp);
    std::vector<cplx> out(static_cast<std::size_t>(K));
    for (long j = 0; j < K; ++j)
        out[static_cast<std::size_t>(j)] = out_spec[static_cast<std::size_t>(half + j)];
    return out;
}

inline double vec_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline cplx vec_dot(const std::vector<cplx>& f, const std::vector<cplx>& g) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s;
}

// Modified Gram-Schmidt with one re-orthogonalisation pass; drops columns
// that lose rank.
inline void orthonormalise(std::vector<std::vector<cplx>>& V) {
    std::vector<std::vector<cplx>> out;
    for (auto& v : V) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : out) {
                const cplx c = vec_dot(v, u);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
            }
        const double n = vec_norm(v);
        if (n < 1e-12) continue;
        for (auto& x : v) x /= n;
        out.push_back(std::move(v));
    }
    V = std::move(out);
}

// Deterministic phase: largest-modulus coefficient made positive real.
inline void fix_phase(std::vector<cplx>& v) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > best) { best = std::abs(v[i]); imax = i; }
    if (best == 0.0) return;
    const cplx rot = std::abs(v[imax]) / v[imax];
    for (auto& x : v) x *= rot;
}

} // namespace detail

inline KernelBasis numerical_kernel(const ToeplitzSymbol& g, std::size_t size) {
    const GridConfig& cfg = g.config();
    if (size > cfg.truncation)
        throw SizeExceedsTruncation("section size " + std::to_string(size));
    if (size == 0) throw ConfigInvalid("section size must be positive");

    // The gap/screen constants presume |g| ~ 1; work with a sup-normalised
    // copy so the certificate is scale-invariant.
    const double scale = g.boundary().max_abs();
    if (scale <= cfg.tol_coeff) throw ZeroFunction("numerical_kernel");
    ToeplitzSymbol gn(g.boundary() * cplx{1.0 / scale, 0.0}, g.jump_points(),
                      g.has_singular_part(), g.construction_tol());

    KernelBasis out;
    out.basis_tol = g.basis_tol();

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toeplitz_matrix(gn, size),
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::vector<double> sigma(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        sigma[static_cast<std::size_t>(sv.size() - 1 - i)] = sv(i);  // ascending
    out.section_singular_values = sigma;

    constexpr double kSigmaFloor = 0.1;
    constexpr double kScreen = 0.1;
    constexpr double kCollapse = 0.2;
    constexpr int kRefineIters = 60;

    // Candidates: the below-floor prefix, cut at the last 10x ratio jump
    // inside it (the jump closest to the floor is the dimension signal).
    std::size_t below = 0;
    while (below < sigma.size() && sigma[below] < kSigmaFloor) ++below;
    std::size_t n_candidates = below;
    for (std::size_t j = below; j >= 1; --j) {
        const double lo = std::max(sigma[j - 1], 1e-300);
        if (j < sigma.size() && sigma[j] / lo >= 10.0) { n_candidates = j; break; }
    }

    auto finish = [&](std::size_t d) {
        out.dimension = d;
        if (d == 0) {
            out.gap = std::numeric_limits<double>::infinity();
        } else if (d < sigma.size()) {
            out.gap = sigma[d] / std::max(sigma[d - 1], 1e-300);
        } else {
            out.gap = std::numeric_limits<double>::infinity();
        }
        bool resid_ok = true;
        for (double r : out.residuals) resid_ok = resid_ok && r <= out.basis_tol;
        out.certain = resid_ok && (out.gap >= 10.0);
    };

    if (n_candidates == 0) {
        finish(0);
        return out;
    }

    // Coarse screen against the untruncated symbol; section artifacts (the
    // truncated shift's exact null vector) carry O(1) residuals here.
    const long K = cfg.half_size();
    std::vector<std::vector<cplx>> cols;
    for (std::size_t c = 0; c < n_candidates; ++c) {
        const Eigen::Index col = sv.size() - 1 - static_cast<Eigen::Index>(c);
        std::vector<cplx> coeffs(static_cast<std::size_t>(size));
        for (std::size_t j = 0; j < size; ++j)
            coeffs[j] = svd.matrixV()(static_cast<Eigen::Index>(j), col);
        auto h = HardyFunction::from_coeffs(coeffs, cfg);
        if (residual_in_kernel(gn, h) > kScreen) continue;  // spurious, decisively out
        coeffs.resize(static_cast<std::size_t>(K), cplx{0.0, 0.0});
        cols.push_back(std::move(coeffs));
    }

    // Half-spectrum refinement: power iteration on I - T*T with per-column
    // collapse detection. A column whose image shrinks below kCollapse has
    // residual >= sqrt(1 - kCollapse) under the symbol: decisively not kernel.
    const auto& gs = gn.boundary().samples();
    for (int it = 0; it < kRefineIters && !cols.empty(); ++it) {
        std::vector<std::vector<cplx>> next;
        for (auto& v : cols) {
            auto tv = detail::apply_compression(gs, v, cfg, false);
            auto ttv = detail::apply_compression(gs, tv, cfg, true);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= ttv[i];
            if (detail::vec_norm(v) < kCollapse) continue;
            next.push_back(std::move(v));
        }
        cols = std::move(next);
        detail::orthonormalise(cols);
    }

    // Final residuals at full resolution; drop anything decisively above tier.
    std::vector<std::pair<double, std::vector<cplx>>> kept;
    for (auto& v : cols) {
        detail::fix_phase(v);
        auto h = HardyFunction::from_coeffs(v, cfg);
        const double r = residual_in_kernel(gn, h);
        if (r >= 10.0 * out.basis_tol) continue;
        kept.emplace_back(r, std::move(v));
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [r, v] : kept) {
        out.residuals.push_back(r);
        out.vectors.push_back(HardyFunction::from_coeffs(v, cfg));
    }
    finish(out.vectors.size());
    return out;
}

enum class Inclusion { Included, NotIncluded, Uncertain };

inline const char* to_string(Inclusion v) {
    switch (v) {
        case Inclusion::Included: return "Included";
        case Inclusion::NotIncluded: return "NotIncluded";
        default: return "Uncertain";
    }
}

// Does ker T_h sit inside ker T_g? Decided by residuals of h's computed basis
// under g.
inline Inclusion kernel_inclusion_probe(const ToeplitzSymbol& h, const ToeplitzSymbol& g,
                                        std::size_t size) {
    auto kb = numerical_kernel(h, size);
    if (!kb.certain) return Inclusion::Uncertain;
    const double in_tol = 10.0 * std::max(g.basis_tol(), kb.basis_tol);
    bool all_in = true, any_out = false;
    for (const auto& v : kb.vectors) {
        const double r = residual_in_kernel(g, v);
        if (r > in_tol) all_in = false;
        if (r >= 1e-2) any_out = true;
    }
    if (all_in) return Inclusion::Included;
    if (any_out) return Inclusion::NotIncluded;
    return Inclusion::Uncertain;
}

// Largest principal-angle sine between the spans of two orthonormal families,
// max over both directions.
inline double basis_span_distance(const std::vector<HardyFunction>& A,
                                  const std::vector<HardyFunction>& B) {
    auto one_way = [](const std::vector<HardyFunction>& from,
                      const std::vector<HardyFunction>& onto) {
        double worst = 0.0;
        for (const auto& f : from) {
            double proj = 0.0;
            for (const auto& b : onto) proj += std::norm(sample_pairing(f, b));
            const double n2 = f.sample_norm() * f.sample_norm();
            worst = std::max(worst, std::sqrt(std::max(0.0, n2 - proj)) /
                                        std::max(std::sqrt(n2), 1e-300));
        }
        return worst;
    };
    return std::max(one_way(A, B), one_way(B, A));
}

// Distance of f to the span of an orthonormal family, relative to ||f||.
inline double distance_to_span(const BoundaryFunction& f, const std::vector<HardyFunction>& basis) {
    const double n2 = f.sample_norm() * f.sample_norm();
    if (n2 <= 0.0) return 0.0;
    double proj = 0.0;
    for (const auto& b : basis) proj += std::norm(sample_pairing(f, b));
    return std::sqrt(std::max(0.0, n2 - proj) / n2);
}

} // namespace tklab
