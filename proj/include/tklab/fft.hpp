#pragma once

// FFTW wrapper for the offset-grid transforms.
//
// With samples s_k at theta_k = 2*pi*(k+1/2)/M, the Fourier coefficients on
// the centered index window n in [-M/2, M/2) are
//   c_n = exp(-i*pi*n/M)/M * sum_k s_k exp(-2*pi*i*n*k/M),
// i.e. a plain DFT followed by a half-sample phase twist. Synthesis inverts
// both steps. Plans are cached per size; FFTW's new-array execute is
// thread-safe, plan creation is serialised by a mutex.

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "tklab/grid.hpp"

namespace tklab::detail {

inline fftw_plan fft_plan(std::size_t n, int sign) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> tmp(n);
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   reinterpret_cast<fftw_complex*>(tmp.data()),
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

inline void fft_run(std::vector<cplx>& data, int sign) {
    fftw_plan p = fft_plan(data.size(), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

// Full centered spectrum from offset-grid samples; result[i] is c_{i - M/2}.
inline std::vector<cplx> spectrum_from_samples(const std::vector<cplx>& samples) {
    const std::size_t M = samples.size();
    std::vector<cplx> work = samples;
    fft_run(work, FFTW_FORWARD);
    std::vector<cplx> spec(M);
    const long half = static_cast<long>(M / 2);
    for (std::size_t i = 0; i < M; ++i) {
        const long n = static_cast<long>(i) - half;
        const std::size_t m = static_cast<std::size_t>(n >= 0 ? n : n + static_cast<long>(M));
        const double ph = -pi * static_cast<double>(n) / static_cast<double>(M);
        spec[i] = work[m] / static_cast<double>(M) * cplx{std::cos(ph), std::sin(ph)};
    }
    return spec;
}

// Offset-grid samples from a full centered spectrum.
inline std::vector<cplx> samples_from_spectrum(const std::vector<cplx>& spec) {
    const std::size_t M = spec.size();
    const long half = static_cast<long>(M / 2);
    std::vector<cplx> work(M, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < M; ++i) {
        const long n = static_cast<long>(i) - half;
        const std::size_t m = static_cast<std::size_t>(n >= 0 ? n : n + static_cast<long>(M));
        const double ph = pi * static_cast<double>(n) / static_cast<double>(M);
        work[m] = spec[i] * cplx{std::cos(ph), std::sin(ph)};
    }
    fft_run(work, FFTW_BACKWARD);
    return work;
}

} // namespace tklab::detail
