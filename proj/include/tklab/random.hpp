#pragma once

// Seeded random generators shared by the test suites and the experiment
// registry. Every draw goes through an explicitly seeded engine so runs are
// reproducible and reports can echo the seed they used.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/grid.hpp"
#include "tklab/inner_function.hpp"

namespace tklab::rnd {

inline std::mt19937 engine(unsigned seed) { return std::mt19937(seed); }

inline cplx gaussian(std::mt19937& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return cplx{d(rng), d(rng)};
}

// Uniform over the disk of the given radius (area measure).
inline cplx uniform_disk(std::mt19937& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double phi = 2.0 * pi * u(rng);
    return std::polar(r, phi);
}

inline std::vector<cplx> random_zeros(std::mt19937& rng, std::size_t count, double radius) {
    std::vector<cplx> zs(count);
    for (auto& z : zs) z = uniform_disk(rng, radius);
    return zs;
}

inline InnerFunction random_blaschke(std::mt19937& rng, std::size_t count, double radius,
                                     const GridConfig& cfg) {
    InnerSpec spec;
    spec.zeros = random_zeros(rng, count, radius);
    return InnerFunction(std::move(spec), cfg);
}

// Analytic polynomial with Gaussian coefficients c_0..c_{degree}.
inline HardyFunction random_polynomial(std::mt19937& rng, std::size_t degree, const GridConfig& cfg) {
    std::vector<cplx> c(degree + 1);
    for (auto& v : c) v = gaussian(rng);
    return HardyFunction::from_coeffs(c, cfg);
}

// Gaussian coefficients on the full band -N..N.
inline BoundaryFunction random_banded(std::mt19937& rng, const GridConfig& cfg) {
    std::vector<cplx> band(2 * cfg.truncation + 1);
    for (auto& v : band) v = gaussian(rng);
    return BoundaryFunction::from_band(band, cfg);
}

} // namespace tklab::rnd
