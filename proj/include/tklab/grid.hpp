#pragma once

// Sampling grid and tolerance configuration shared by every value type.
//
// All boundary functions are sampled at the midpoint-offset nodes
//   t_k = exp(i*theta_k),  theta_k = 2*pi*(k + 1/2)/M,  k = 0..M-1.
// The half-step offset keeps every node away from +1 and -1 (branch cuts,
// atom points, boundary zeros land between nodes) and makes the node set
// closed under conjugation: conj(t_k) = t_{M-1-k}.

#include <complex>
#include <cstddef>

#include "tklab/errors.hpp"

namespace tklab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

struct GridConfig {
    std::size_t grid_size = 4096;  // M, number of circle samples, power of two
    std::size_t truncation = 256;  // N, coefficient view holds indices -N..N
    double tol_coeff = 1e-10;      // coefficient zero-threshold
    double tol_residual = 1e-7;    // kernel residual threshold
    double tol_outer = 1e-3;       // outer-test gap threshold
    double tol_branch = 1e-4;      // relaxed tier for branch-cut symbols
    std::size_t section_size = 128; // default finite-section size
    unsigned seed = 987654321u;    // Monte-Carlo seed, echoed in reports

    void validate() const {
        if (grid_size == 0 || (grid_size & (grid_size - 1)) != 0)
            throw ConfigInvalid("grid_size must be a power of two");
        if (truncation == 0 || grid_size < 4 * truncation + 4)
            throw ConfigInvalid("grid_size must be at least 4*truncation + 4");
        if (tol_coeff <= 0 || tol_residual <= 0 || tol_outer <= 0 || tol_branch <= 0)
            throw ConfigInvalid("tolerances must be strictly positive");
        if (section_size == 0 || section_size > truncation)
            throw ConfigInvalid("section_size must lie in 1..truncation");
    }

    // Two functions interoperate iff their grids match; tolerances may differ.
    bool compatible(const GridConfig& o) const noexcept {
        return grid_size == o.grid_size && truncation == o.truncation;
    }

    double angle(std::size_t k) const noexcept {
        return 2.0 * pi * (static_cast<double>(k) + 0.5) / static_cast<double>(grid_size);
    }

    cplx node(std::size_t k) const noexcept {
        const double a = angle(k);
        return {std::cos(a), std::sin(a)};
    }

    // Principal angle in (-pi, pi); node angles never hit the endpoints.
    double signed_angle(std::size_t k) const noexcept {
        const double a = angle(k);
        return a > pi ? a - 2.0 * pi : a;
    }

    long half_size() const noexcept { return static_cast<long>(grid_size / 2); }
};

} // namespace tklab
