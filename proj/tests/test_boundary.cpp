// Core boundary algebra: transforms, projection, pairings, disk evaluation,
// outerness. Oracles are independent of the library paths they check:
// an O(M^2) direct DFT for the transform, hand-summed coefficient pairings,
// and closed-form quadrature identities for the outer test.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tklab/boundary.hpp"

using namespace tklab;

namespace {

const GridConfig cfg{};

std::vector<cplx> random_samples(std::mt19937& rng, std::size_t m) {
    std::normal_distribution<double> g;
    std::vector<cplx> s(m);
    for (auto& v : s) v = cplx{g(rng), g(rng)};
    return s;
}

// Band-limited random function with smoothly decaying coefficients.
BoundaryFunction random_banded(std::mt19937& rng, const GridConfig& c, long width = 40) {
    std::normal_distribution<double> g;
    std::vector<cplx> spec(c.grid_size, cplx{0.0, 0.0});
    const long half = c.half_size();
    for (long n = -width; n <= width; ++n) {
        const double w = 1.0 / (1.0 + std::abs(static_cast<double>(n)));
        spec[static_cast<std::size_t>(n + half)] = w * cplx{g(rng), g(rng)};
    }
    return BoundaryFunction::from_spectrum(std::move(spec), c);
}

// Direct O(M^2) DFT on the offset grid; the oracle for the FFT path.
cplx direct_coeff(const std::vector<cplx>& samples, const GridConfig& c, long n) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double ph = -static_cast<double>(n) * c.angle(k);
        acc += samples[k] * cplx{std::cos(ph), std::sin(ph)};
    }
    return acc / static_cast<double>(samples.size());
}

BoundaryFunction blaschke_half(const GridConfig& c) {
    std::vector<cplx> s(c.grid_size);
    for (std::size_t k = 0; k < s.size(); ++k) {
        const cplx t = c.node(k);
        s[k] = (t - 0.5) / (1.0 - 0.5 * t);
    }
    return BoundaryFunction::from_samples(std::move(s), c);
}

} // namespace

TEST_CASE("grid config validation", "[boundary]") {
    GridConfig bad = cfg;
    bad.grid_size = 4095;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = cfg;
    bad.truncation = 2048;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = cfg;
    bad.tol_residual = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("offset grid avoids the real axis and closes under conjugation", "[boundary]") {
    double min_dist = 2.0;
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const cplx t = cfg.node(k);
        min_dist = std::min({min_dist, std::abs(t - 1.0), std::abs(t + 1.0)});
        const cplx partner = cfg.node(cfg.grid_size - 1 - k);
        REQUIRE(std::abs(std::conj(t) - partner) < 1e-14);
    }
    CHECK(min_dist > 1.0 / static_cast<double>(cfg.grid_size));
}

TEST_CASE("spectrum matches the direct DFT oracle", "[boundary]") {
    std::mt19937 rng(cfg.seed);
    auto samples = random_samples(rng, cfg.grid_size);
    auto f = BoundaryFunction::from_samples(samples, cfg);
    for (long n : {-2048L, -517L, -1L, 0L, 1L, 64L, 2047L}) {
        const cplx oracle = direct_coeff(samples, cfg, n);
        CAPTURE(n);
        CHECK(std::abs(f.coeff(n) - oracle) < 1e-11);
    }
}

TEST_CASE("synthesis inverts analysis exactly", "[boundary]") {
    std::mt19937 rng(cfg.seed + 1);
    auto f = BoundaryFunction::from_samples(random_samples(rng, cfg.grid_size), cfg);
    auto g = BoundaryFunction::from_spectrum(f.spectrum(), cfg);
    double worst = 0.0;
    for (std::size_t k = 0; k < cfg.grid_size; ++k)
        worst = std::max(worst, std::abs(f.sample(k) - g.sample(k)));
    CHECK(worst < 1e-12);
}

TEST_CASE("Parseval is exact at full resolution", "[boundary]") {
    std::mt19937 rng(cfg.seed + 2);
    auto f = BoundaryFunction::from_samples(random_samples(rng, cfg.grid_size), cfg);
    double spec_energy = 0.0;
    for (long n = -cfg.half_size(); n < cfg.half_size(); ++n) spec_energy += std::norm(f.coeff(n));
    CHECK(std::abs(f.sample_norm() - std::sqrt(spec_energy)) < 1e-12);
}

TEST_CASE("monomials and band round-trip", "[boundary]") {
    auto z5 = BoundaryFunction::monomial(5, cfg);
    CHECK(std::abs(z5.coeff(5) - 1.0) < 1e-14);
    CHECK(z5.window_energy(-cfg.half_size(), 5) < 1e-13);
    for (std::size_t k : {std::size_t{0}, std::size_t{100}}) {
        const cplx t = cfg.node(k);
        CHECK(std::abs(z5.sample(k) - std::pow(t, 5)) < 1e-13);
    }

    std::mt19937 rng(cfg.seed + 3);
    auto f = random_banded(rng, cfg);
    auto g = BoundaryFunction::from_band(f.band_coeffs(), cfg);
    CHECK((f - g).sample_norm() < 1e-12);
}

TEST_CASE("project_plus on monomial mixtures", "[boundary]") {
    auto z = BoundaryFunction::monomial(1, cfg);
    auto zbar = BoundaryFunction::monomial(-1, cfg);
    auto p = project_plus(z + zbar);
    CHECK((static_cast<const BoundaryFunction&>(p) - z).sample_norm() < 1e-13);

    auto one = BoundaryFunction::constant(1.0, cfg);
    CHECK((static_cast<const BoundaryFunction&>(project_plus(one)) - one).sample_norm() < 1e-13);

    auto zbar2 = BoundaryFunction::monomial(-2, cfg);
    CHECK(project_plus(zbar2).sample_norm() < 1e-13);
}

TEST_CASE("project_plus is idempotent and norm-nonincreasing", "[boundary]") {
    std::mt19937 rng(cfg.seed + 4);
    for (int i = 0; i < 1000; ++i) {
        GridConfig small = cfg;
        small.grid_size = 256;
        small.truncation = 32;
        small.section_size = 32;
        auto f = BoundaryFunction::from_samples(random_samples(rng, small.grid_size), small);
        auto p = project_plus(f);
        auto pp = project_plus(p);
        REQUIRE((static_cast<const BoundaryFunction&>(pp) - p).sample_norm() < small.tol_coeff);
        REQUIRE(p.sample_norm() <= f.sample_norm() + small.tol_coeff);
    }
}

TEST_CASE("pointwise products", "[boundary]") {
    auto z = BoundaryFunction::monomial(1, cfg);
    auto zbar = BoundaryFunction::monomial(-1, cfg);
    auto one = BoundaryFunction::constant(1.0, cfg);
    CHECK((pointwise_multiply(z, zbar) - one).sample_norm() < 1e-13);

    auto f = one + z;
    auto g = one - z;
    auto expect = one - BoundaryFunction::monomial(2, cfg);
    CHECK((pointwise_multiply(f, g) - expect).sample_norm() < 1e-13);

    auto B = blaschke_half(cfg);
    CHECK((pointwise_multiply(B, complex_conjugate(B)) - one).sample_norm() < 1e-12);
}

TEST_CASE("aliasing guard trips on out-of-band products", "[boundary]") {
    auto zn = BoundaryFunction::monomial(200, cfg);
    CHECK_THROWS_AS(pointwise_multiply(zn, zn), AliasingOverflow);
    CHECK_NOTHROW(mul(zn, zn));
}

TEST_CASE("complex conjugation", "[boundary]") {
    auto z = BoundaryFunction::monomial(1, cfg);
    auto c = complex_conjugate(z);
    CHECK(std::abs(c.coeff(-1) - 1.0) < 1e-14);
    CHECK(std::abs(c.coeff(1)) < 1e-14);

    auto f = BoundaryFunction::constant(1.0, cfg) + cplx{0.0, 1.0} * z;
    auto g = complex_conjugate(f);
    CHECK(std::abs(g.coeff(0) - 1.0) < 1e-13);
    CHECK(std::abs(g.coeff(-1) - cplx{0.0, -1.0}) < 1e-13);

    std::mt19937 rng(cfg.seed + 5);
    auto h = random_banded(rng, cfg);
    for (long n : {-7L, 0L, 13L})
        CHECK(std::abs(complex_conjugate(h).coeff(n) - std::conj(h.coeff(-n))) < 1e-12);

    std::vector<cplx> real_samples(cfg.grid_size);
    std::normal_distribution<double> gauss;
    for (auto& v : real_samples) v = cplx{gauss(rng), 0.0};
    auto r = BoundaryFunction::from_samples(real_samples, cfg);
    CHECK((complex_conjugate(r) - r).sample_norm() < 1e-13);
}

TEST_CASE("inner product goldens", "[boundary]") {
    for (long j : {0L, 1L, 5L}) {
        for (long k : {0L, 1L, 5L}) {
            auto zj = BoundaryFunction::monomial(j, cfg);
            auto zk = BoundaryFunction::monomial(k, cfg);
            const double expect = (j == k) ? 1.0 : 0.0;
            CHECK(std::abs(inner_product(zj, zk) - expect) < 1e-13);
        }
    }

    // (1-z)^4 has coefficients {1,-4,6,-4,1}; z - z^3 has {0,1,0,-1,0}.
    // Pairing sum: (-4)(1) + (-4)(-1) = 0, written out by hand.
    auto one = BoundaryFunction::constant(1.0, cfg);
    auto z = BoundaryFunction::monomial(1, cfg);
    auto f = mul(mul(one - z, one - z), mul(one - z, one - z));
    auto g = z - BoundaryFunction::monomial(3, cfg);
    cplx hand{0.0, 0.0};
    for (long n = 0; n <= 4; ++n) hand += f.coeff(n) * std::conj(g.coeff(n));
    CHECK(std::abs(hand) < 1e-13);
    CHECK(std::abs(inner_product(f, g)) < 1e-13);

    std::mt19937 rng(cfg.seed + 6);
    auto a = random_banded(rng, cfg);
    auto b = random_banded(rng, cfg);
    CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-12);
    CHECK(std::abs(inner_product(a, b) - sample_pairing(a, b)) < 1e-11);
    CHECK(std::abs(inner_product(a, a).real() - a.sample_norm() * a.sample_norm()) < 1e-11);
}

TEST_CASE("disk evaluation goldens", "[boundary]") {
    // h = 1/(1 - z/2): geometric coefficients.
    std::vector<cplx> geom(cfg.truncation + 1);
    for (std::size_t n = 0; n < geom.size(); ++n) geom[n] = std::pow(0.5, static_cast<double>(n));
    auto h = HardyFunction::from_coeffs(geom, cfg);
    auto v = evaluate_in_disk(h, cplx{0.2, 0.0});
    CHECK(std::abs(v.value - 10.0 / 9.0) < 1e-12);
    CHECK(v.error_bound < 1e-12);

    auto B = HardyFunction::validated(blaschke_half(cfg), 1e-12);
    CHECK(std::abs(evaluate_in_disk(B, cplx{0.5, 0.0}).value) < 1e-12);

    // E = exp((z+1)/(z-1)): E(0) = 1/e. Banded evaluation of an atom-type
    // function carries the measured alias floor near 1e-5, not tol_coeff.
    std::vector<cplx> es(cfg.grid_size);
    for (std::size_t k = 0; k < es.size(); ++k) {
        const cplx t = cfg.node(k);
        es[k] = std::exp((t + 1.0) / (t - 1.0));
    }
    auto E = HardyFunction::trusted(BoundaryFunction::from_samples(es, cfg));
    CHECK(std::abs(evaluate_in_disk(E, cplx{0.0, 0.0}).value - std::exp(-1.0)) < 5e-5);

    CHECK_THROWS_AS(evaluate_in_disk(h, cplx{0.9999999999, 0.0}), EvaluationTooCloseToBoundary);
}

TEST_CASE("hardy validation gates on negative coefficients", "[boundary]") {
    auto zbar = BoundaryFunction::monomial(-1, cfg);
    CHECK_THROWS_AS(HardyFunction::validated(zbar, 1e-10), NotAnalytic);
    auto z = BoundaryFunction::monomial(1, cfg);
    CHECK_NOTHROW(HardyFunction::validated(z, 1e-10));
}

TEST_CASE("outer test goldens", "[boundary]") {
    auto one = BoundaryFunction::constant(1.0, cfg);
    auto z = BoundaryFunction::monomial(1, cfg);

    auto two_plus_z = HardyFunction::validated(one * cplx{2.0, 0.0} + z, 1e-12);
    CHECK(outer_test(two_plus_z).verdict == Outerness::Outer);

    CHECK(outer_test(HardyFunction::validated(z, 1e-12)).verdict == Outerness::NotOuter);

    // 1+z has a boundary zero; prod_k |1 + t_k| = 2 on the offset grid, so the
    // clamped mean of log|1+z| is exactly (ln 2)/M. The outer gap must match.
    auto one_plus_z = HardyFunction::validated(one + z, 1e-12);
    auto cert = outer_test(one_plus_z);
    CHECK(cert.verdict == Outerness::Outer);
    const double expected_gap = std::log(2.0) / static_cast<double>(cfg.grid_size);
    CHECK(std::abs(cert.gap - expected_gap) < 1e-8);
}

TEST_CASE("inner factors break outerness", "[boundary]") {
    std::mt19937 rng(cfg.seed + 7);
    auto B = blaschke_half(cfg);
    for (int i = 0; i < 20; ++i) {
        auto h = project_plus(random_banded(rng, cfg));
        if (std::abs(h.coeff(0)) < 0.1) continue;
        auto hb = HardyFunction::trusted(mul(h, B));
        CHECK(outer_test(hb).verdict == Outerness::NotOuter);
    }
}

TEST_CASE("sample pairing is the exact quadrature", "[boundary]") {
    std::mt19937 rng(cfg.seed + 8);
    auto f = random_banded(rng, cfg);
    auto g = random_banded(rng, cfg);
    cplx direct{0.0, 0.0};
    for (long n = -cfg.half_size(); n < cfg.half_size(); ++n)
        direct += f.coeff(n) * std::conj(g.coeff(n));
    CHECK(std::abs(sample_pairing(f, g) - direct) < 1e-12);
}
