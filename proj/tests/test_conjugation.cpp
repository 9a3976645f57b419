#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tklab/boundary.hpp"
#include "tklab/conjugation.hpp"
#include "tklab/factorization.hpp"
#include "tklab/inner_function.hpp"
#include "tklab/random.hpp"
#include "tklab/toeplitz.hpp"

using namespace tklab;

namespace {

const GridConfig cfg{};

double max_sample_diff(const BoundaryFunction& f, const BoundaryFunction& g) {
    double m = 0.0;
    for (std::size_t k = 0; k < f.grid_size(); ++k)
        m = std::max(m, std::abs(f.sample(k) - g.sample(k)));
    return m;
}

HardyFunction poly(const std::vector<cplx>& c) { return HardyFunction::from_coeffs(c, cfg); }

ConjugationContext monomial_ctx(long n) {
    return conjugation_context(ToeplitzSymbol(BoundaryFunction::monomial(-n, cfg)),
                               cfg.section_size);
}

InnerFunction blaschke3() {
    InnerSpec s;
    s.zeros = {cplx{0.5, 0.0}, cplx{-0.3, 0.4}, cplx{0.2, -0.6}};
    return make_inner(s, cfg);
}

// theta = z * exp(-(1+z)/(1-z)), a monomial times a point mass at 1.
InnerFunction atom_theta() {
    InnerSpec s;
    s.power = 1;
    s.atoms = {{cplx{1.0, 0.0}, 1.0}};
    return make_inner(s, cfg);
}

BoundaryFunction two_plus_z() {
    return BoundaryFunction::constant(cplx{2.0, 0.0}, cfg) + BoundaryFunction::monomial(1, cfg);
}

InnerFunction power_inner(unsigned p) {
    InnerSpec s;
    s.power = p;
    return make_inner(s, cfg);
}

} // namespace

TEST_CASE("conjugation fixes the even boundary-zero polynomial") {
    auto ctx = monomial_ctx(5);
    auto f = poly({cplx{1.0, 0.0}, cplx{-4.0, 0.0}, cplx{6.0, 0.0}, cplx{-4.0, 0.0},
                   cplx{1.0, 0.0}});
    auto cf = conjugate_in_kernel(ctx, f);
    CHECK(max_sample_diff(cf, f) < 1e-11);
}

TEST_CASE("conjugation reflects the shifted square and certifies it maximal") {
    auto ctx = monomial_ctx(5);
    auto f = poly({cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{-2.0, 0.0},
                   cplx{1.0, 0.0}});
    auto cf = conjugate_in_kernel(ctx, f);
    CHECK(max_sample_diff(cf, poly({cplx{1.0, 0.0}, cplx{-2.0, 0.0}, cplx{1.0, 0.0}})) < 1e-11);
    CHECK(outer_test(cf).verdict == Outerness::Outer);
    CHECK(maximal_test(ctx.symbol, f).maximal);

    // The neighbouring odd combination lands on a difference of squares.
    auto g = poly({cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{0.0, 0.0},
                   cplx{-1.0, 0.0}});
    auto cg = conjugate_in_kernel(ctx, g);
    CHECK(max_sample_diff(cg, poly({cplx{-1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}})) < 1e-11);
}

TEST_CASE("conjugation swaps the reproducing kernel pair in model spaces") {
    auto B = blaschke3();
    auto ctx = conjugation_context(model_space_symbol(B), cfg.section_size);
    CHECK(ctx.kernel.dimension == 3);
    const cplx lam{0.3, 0.2};
    auto mk = model_kernels(B, lam);
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, mk.k_tilde), mk.k) < 1e-10);
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, mk.k), mk.k_tilde) < 1e-10);

    auto theta = atom_theta();
    auto actx = conjugation_context(model_space_symbol(theta), KernelBasis{});
    auto amk = model_kernels(theta, cplx{0.3, 0.0});
    CHECK(max_sample_diff(conjugate_in_kernel(actx, amk.k_tilde), amk.k) < 1e-9);
    CHECK(max_sample_diff(conjugate_in_kernel(actx, amk.k), amk.k_tilde) < 1e-9);
}

TEST_CASE("the conjugation is an antilinear isometric involution on sampled kernels") {
    auto check_family = [](const ConjugationContext& ctx, const std::vector<HardyFunction>& elems) {
        HardyFunction prev, cprev;
        bool have_prev = false;
        for (const auto& f : elems) {
            auto cf = conjugate_in_kernel(ctx, f);
            const double scale = f.max_abs();
            double mod = 0.0;
            for (std::size_t k = 0; k < f.grid_size(); ++k)
                mod = std::max(mod, std::abs(std::abs(cf.sample(k)) - std::abs(f.sample(k))));
            CHECK(mod <= 1e-10 * scale);
            auto ccf = conjugate_in_kernel(ctx, cf);
            CHECK(max_sample_diff(ccf, f) <= 1e-9 * scale);
            if (have_prev) {
                const cplx lhs = sample_pairing(cf, cprev);
                const cplx rhs = sample_pairing(prev, f);
                CHECK(std::abs(lhs - rhs) <= 1e-9 * scale * prev.max_abs());
            }
            prev = f;
            cprev = cf;
            have_prev = true;
        }
    };

    auto rng = rnd::engine(cfg.seed);

    // 100 elements split across the three symbol classes.
    std::vector<HardyFunction> polys;
    for (int i = 0; i < 34; ++i) polys.push_back(rnd::random_polynomial(rng, 4, cfg));
    check_family(monomial_ctx(5), polys);

    auto B = blaschke3();
    auto bctx = conjugation_context(model_space_symbol(B), cfg.section_size);
    std::vector<HardyFunction> belems;
    for (int i = 0; i < 33; ++i) {
        auto mk = model_kernels(B, rnd::uniform_disk(rng, 0.6));
        belems.push_back(HardyFunction::trusted(rnd::gaussian(rng) * mk.k +
                                                rnd::gaussian(rng) * mk.k_tilde));
    }
    check_family(bctx, belems);

    auto theta = atom_theta();
    auto actx = conjugation_context(model_space_symbol(theta), KernelBasis{});
    std::vector<HardyFunction> aelems;
    for (int i = 0; i < 33; ++i) {
        auto mk = model_kernels(theta, rnd::uniform_disk(rng, 0.5));
        aelems.push_back(HardyFunction::trusted(rnd::gaussian(rng) * mk.k +
                                                rnd::gaussian(rng) * mk.k_tilde));
    }
    check_family(actx, aelems);
}

TEST_CASE("maximality coincides with outerness of the conjugate") {
    auto ctx5 = monomial_ctx(5);
    auto ctx2 = monomial_ctx(2);
    auto B = blaschke3();
    auto bctx = conjugation_context(model_space_symbol(B), cfg.section_size);
    auto bmk = model_kernels(B, cplx{0.0, 0.0});

    struct Case {
        const ConjugationContext& ctx;
        HardyFunction f;
        bool maximal;
    };
    const Case cases[] = {
        {ctx5, poly({cplx{1, 0}, cplx{-4, 0}, cplx{6, 0}, cplx{-4, 0}, cplx{1, 0}}), true},
        {ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{-2, 0}, cplx{1, 0}}), true},
        {ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}), true},
        {ctx5, poly({cplx{0, 0}, cplx{1, 0}}), false},
        {ctx5, poly({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{-1, 0}}), false},
        {ctx2, poly({cplx{1, 0}}), false},
        {bctx, bmk.k_tilde, true},
        {bctx, bmk.k, false},
    };
    for (const auto& c : cases) {
        CHECK(maximal_test(c.ctx.symbol, c.f).maximal == c.maximal);
        const bool outer =
            outer_test(conjugate_in_kernel(c.ctx, c.f)).verdict == Outerness::Outer;
        CHECK(outer == c.maximal);
    }
}

TEST_CASE("the inner factor of a maximal function is the conjugation quotient") {
    auto ctx5 = monomial_ctx(5);
    auto B = blaschke3();
    auto bctx = conjugation_context(model_space_symbol(B), cfg.section_size);
    auto bmk = model_kernels(B, cplx{0.0, 0.0});

    struct Case {
        const ConjugationContext& ctx;
        HardyFunction f;
    };
    const Case cases[] = {
        {ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{-2, 0}, cplx{1, 0}})},
        {ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}})},
        {bctx, bmk.k_tilde},
    };
    for (const auto& c : cases) {
        auto q = divide(c.f, conjugate_in_kernel(c.ctx, c.f));
        auto io = inner_outer(c.f);
        // Both sides are unimodular, so the pairing estimates their constant ratio.
        const cplx r = sample_pairing(q, io.inner);
        CHECK(std::abs(std::abs(r) - 1.0) < 1e-4);
        CHECK((q - r * io.inner).sample_norm() < 1e-3);
    }
}

TEST_CASE("two maximal functions with one outer part differ by a constant") {
    auto ctx = monomial_ctx(5);
    auto f1 = poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{-2, 0}, cplx{1, 0}});
    const cplx c = std::polar(1.0, 0.9);
    auto f2 = HardyFunction::trusted(c * f1);
    CHECK(maximal_test(ctx.symbol, f1).maximal);
    CHECK(maximal_test(ctx.symbol, f2).maximal);
    auto io1 = inner_outer(f1);
    auto io2 = inner_outer(f2);
    CHECK(max_sample_diff(io1.outer, io2.outer) < 1e-10);
    auto ratio = divide(f2, f1);
    CHECK(max_sample_diff(ratio, BoundaryFunction::constant(c, cfg)) < 1e-11);
}

TEST_CASE("eigenfunction detection on polynomial kernels") {
    auto ctx5 = monomial_ctx(5);
    auto quartic = poly({cplx{1, 0}, cplx{-4, 0}, cplx{6, 0}, cplx{-4, 0}, cplx{1, 0}});
    auto v1 = eigenfunction_test(ctx5, quartic);
    REQUIRE(v1.has_value());
    CHECK(std::abs(*v1 - cplx{1.0, 0.0}) < 1e-8);

    auto odd = poly({cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{-1, 0}});
    auto v2 = eigenfunction_test(ctx5, odd);
    REQUIRE(v2.has_value());
    CHECK(std::abs(*v2 - cplx{-1.0, 0.0}) < 1e-8);

    CHECK(!eigenfunction_test(ctx5, poly({cplx{0, 0}, cplx{1, 0}})).has_value());
    CHECK(!eigenfunction_test(
               ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{-2, 0}, cplx{1, 0}}))
               .has_value());
    CHECK(!eigenfunction_test(ctx5, poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
                                          cplx{1, 0}}))
               .has_value());

    auto ctx2 = monomial_ctx(2);
    auto vm = eigenfunction_test(ctx2, poly({cplx{-1, 0}, cplx{1, 0}}));
    REQUIRE(vm.has_value());
    CHECK(std::abs(*vm - cplx{-1.0, 0.0}) < 1e-8);
    auto vp = eigenfunction_test(ctx2, poly({cplx{1, 0}, cplx{1, 0}}));
    REQUIRE(vp.has_value());
    CHECK(std::abs(*vp - cplx{1.0, 0.0}) < 1e-8);
}

TEST_CASE("outer maximal construction on the monomial kernel") {
    auto ctx = monomial_ctx(5);
    auto f = poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});

    auto om = outer_maximal(ctx, f, cplx{1.0, 0.0});
    CHECK(max_sample_diff(om, poly({cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
                                    cplx{1, 0}})) < 1e-12);
    CHECK(outer_test(om).verdict == Outerness::Outer);
    CHECK(maximal_test(ctx.symbol, om).maximal);
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, om), om) < 1e-11);
    auto ev = eigenfunction_test(ctx, om);
    REQUIRE(ev.has_value());
    CHECK(std::abs(*ev - cplx{1.0, 0.0}) < 1e-8);

    const cplx mu{0.0, 1.0};
    auto omi = outer_maximal(ctx, f, mu);
    CHECK(outer_test(omi).verdict == Outerness::Outer);
    auto comi = conjugate_in_kernel(ctx, omi);
    CHECK(max_sample_diff(comi, std::conj(mu) * omi) < 1e-11);
    auto evi = eigenfunction_test(ctx, omi);
    REQUIRE(evi.has_value());
    CHECK(std::abs(*evi - std::conj(mu)) < 1e-8);

    CHECK_THROWS_AS(outer_maximal(ctx, poly({cplx{0, 0}, cplx{1, 0}}), cplx{1.0, 0.0}),
                    NotMaximal);
    // A constant inner factor can be cancelled outright.
    auto quartic = poly({cplx{1, 0}, cplx{-4, 0}, cplx{6, 0}, cplx{-4, 0}, cplx{1, 0}});
    CHECK_THROWS_AS(outer_maximal(ctx, quartic, cplx{-1.0, 0.0}), ZeroFunction);
}

TEST_CASE("prescribed inner divisor on the monomial kernel") {
    auto ctx = monomial_ctx(5);
    auto f = poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}});

    auto pm = prescribed_inner_maximal(ctx, f, power_inner(2), cplx{1.0, 0.0});
    CHECK(max_sample_diff(pm, poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0},
                                    cplx{1, 0}})) < 1e-12);
    CHECK(maximal_test(ctx.symbol, pm).maximal);
    auto io = inner_outer(pm);
    CHECK((io.inner - BoundaryFunction::monomial(2, cfg)).sample_norm() < 1e-2);
    CHECK(max_order_compare(pm, f).relation == OrderRelation::Precedes);
    CHECK(max_order_compare(f, pm).relation == OrderRelation::Succeeds);

    // A trivial divisor reduces to the outer construction.
    const cplx lam{0.6, 0.8};
    CHECK(max_sample_diff(prescribed_inner_maximal(ctx, f, power_inner(0), lam),
                          outer_maximal(ctx, f, lam)) < 1e-13);

    // The full inner factor rescales the input.
    auto f2 = poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{-2, 0}, cplx{1, 0}});
    auto pm2 = prescribed_inner_maximal(ctx, f2, power_inner(2), cplx{0.0, 1.0});
    CHECK(max_sample_diff(pm2, HardyFunction::trusted(cplx{1.0, 1.0} * f2)) < 1e-11);

    CHECK_THROWS_AS(prescribed_inner_maximal(ctx, f2, power_inner(3), cplx{1.0, 0.0}),
                    AlphaDoesNotDivideInner);
    InnerSpec half;
    half.zeros = {cplx{0.5, 0.0}};
    CHECK_THROWS_AS(
        prescribed_inner_maximal(ctx, f2, make_inner(half, cfg), cplx{1.0, 0.0}),
        AlphaDoesNotDivideInner);
}

TEST_CASE("outer maximal functions in an atomic model space") {
    auto theta = atom_theta();
    auto ctx = conjugation_context(model_space_symbol(theta), KernelBasis{});
    auto mk = model_kernels(theta, cplx{0.0, 0.0});
    CHECK(maximal_test(ctx.symbol, mk.k_tilde).maximal);
    CHECK(!maximal_test(ctx.symbol, mk.k).maximal);

    // Gates sit above the modulus rounding of the atom samples nearest its
    // base point, where the exponent's argument is a large imaginary number.
    auto om = outer_maximal(ctx, mk.k_tilde, cplx{1.0, 0.0});
    CHECK(max_sample_diff(om, mk.k + mk.k_tilde) < 1e-9);
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, om), om) < 1e-9);

    const cplx mu{0.6, 0.8};
    auto om2 = outer_maximal(ctx, mk.k_tilde, mu);
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, om2), std::conj(mu) * om2) < 1e-9);
}

TEST_CASE("prescribed inner divisor with an atomic factor") {
    auto theta = atom_theta();
    auto f = HardyFunction::trusted(mul(theta.boundary(), two_plus_z()));
    auto g = minimal_kernel_symbol(f);
    CHECK(g.has_singular_part());
    auto ctx = conjugation_context(g, KernelBasis{});
    auto cf = conjugate_in_kernel(ctx, f);
    CHECK(outer_test(cf).verdict == Outerness::Outer);

    const cplx lam{0.0, 1.0};
    auto pm = prescribed_inner_maximal(ctx, f, power_inner(1), lam);
    CHECK(membership_check(ctx.symbol, pm) == Membership::In);
    // C(lam alpha C f + f) = conj(lam) conj(alpha) f + C f, exact samplewise.
    auto expected = std::conj(lam) * mul(complex_conjugate(BoundaryFunction::monomial(1, cfg)), f)
                  + cf;
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, pm), expected) < 1e-11);

    InnerSpec atom;
    atom.atoms = {{cplx{1.0, 0.0}, 1.0}};
    auto pm2 = prescribed_inner_maximal(ctx, f, make_inner(atom, cfg), lam);
    CHECK(membership_check(ctx.symbol, pm2) == Membership::In);
    auto expected2 = std::conj(lam) *
                         mul(complex_conjugate(make_inner(atom, cfg).boundary()), f)
                   + cf;
    CHECK(max_sample_diff(conjugate_in_kernel(ctx, pm2), expected2) < 1e-11);

    InnerSpec heavy;
    heavy.atoms = {{cplx{1.0, 0.0}, 2.0}};
    CHECK_THROWS_AS(prescribed_inner_maximal(ctx, f, make_inner(heavy, cfg), lam),
                    AlphaDoesNotDivideInner);
}

TEST_CASE("order comparison separates, equates and rejects") {
    auto opz = poly({cplx{1, 0}, cplx{1, 0}});
    auto f1 = HardyFunction::trusted(mul(BoundaryFunction::monomial(1, cfg), opz));
    auto f2 = HardyFunction::trusted(mul(BoundaryFunction::monomial(3, cfg), opz));
    CHECK(max_order_compare(f1, f2).relation == OrderRelation::Precedes);
    CHECK(max_order_compare(f2, f1).relation == OrderRelation::Succeeds);

    InnerSpec half;
    half.zeros = {cplx{0.5, 0.0}};
    auto b = make_inner(half, cfg);
    auto g1 = HardyFunction::trusted(mul(b.boundary(), two_plus_z()));
    auto g2 = HardyFunction::trusted(mul(BoundaryFunction::monomial(1, cfg), two_plus_z()));
    CHECK(max_order_compare(g1, g2).relation == OrderRelation::Incomparable);

    auto e1 = HardyFunction::trusted(mul(BoundaryFunction::monomial(2, cfg), two_plus_z()));
    auto e2 = HardyFunction::trusted(std::polar(1.0, 1.3) * e1);
    auto verdict = max_order_compare(e1, e2);
    CHECK(verdict.relation == OrderRelation::Equivalent);
    const cplx centre = sample_pairing(verdict.witness, BoundaryFunction::constant(cplx{1, 0}, cfg));
    CHECK(max_sample_diff(verdict.witness, BoundaryFunction::constant(centre, cfg)) < 1e-6);

    // Two maximal functions of one two-dimensional kernel, compared through
    // both the ratio and the kernel-inclusion route.
    CHECK(max_order_compare(poly({cplx{1, 0}, cplx{1, 0}}), poly({cplx{0, 0}, cplx{1, 0}}))
              .relation == OrderRelation::Precedes);

    std::vector<cplx> flat(cfg.grid_size, cplx{1.0, 0.0});
    for (std::size_t k = 0; k < 300; ++k) flat[k] = cplx{1e-12, 0.0};
    auto degenerate = HardyFunction::trusted(BoundaryFunction::from_samples(flat, cfg));
    CHECK_THROWS_AS(max_order_compare(degenerate, f1), FactorisationFailed);
}

TEST_CASE("order and kernel inclusion agree on a constructed family") {
    // Six maximal elements of one polynomial kernel whose inner factors run
    // through {1, z, B, z^2, zB, z} for the Blaschke factor B at 1/2.  Every
    // boundary zero sits at -1, midway between grid nodes.
    auto ctx = monomial_ctx(3);

    InnerSpec trivial, shift, bl, shift2, shiftbl;
    shift.power = 1;
    bl.zeros = {cplx{0.5, 0.0}};
    shift2.power = 2;
    shiftbl.power = 1;
    shiftbl.zeros = {cplx{0.5, 0.0}};

    std::vector<InnerFunction> alphas;
    alphas.push_back(make_inner(trivial, cfg));
    alphas.push_back(make_inner(shift, cfg));
    alphas.push_back(make_inner(bl, cfg));
    alphas.push_back(make_inner(shift2, cfg));
    alphas.push_back(make_inner(shiftbl, cfg));
    alphas.push_back(make_inner(shift, cfg));

    std::vector<HardyFunction> family;
    family.push_back(poly({cplx{1, 0}, cplx{0, 0}, cplx{-1, 0}}));
    family.push_back(poly({cplx{0, 0}, cplx{1, 0}, cplx{1, 0}}));
    family.push_back(poly({cplx{-0.5, 0}, cplx{0.5, 0}, cplx{1, 0}}));
    family.push_back(poly({cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}));
    family.push_back(poly({cplx{0, 0}, cplx{-0.5, 0}, cplx{1, 0}}));
    family.push_back(HardyFunction::trusted(std::polar(1.0, 1.1) * family[1]));

    std::vector<ToeplitzSymbol> conj_symbols;
    for (const auto& fj : family) {
        CHECK(maximal_test(ctx.symbol, fj).maximal);
        conj_symbols.push_back(minimal_kernel_symbol(conjugate_in_kernel(ctx, fj)));
    }

    for (std::size_t j = 0; j < family.size(); ++j) {
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (j == k) continue;
            const OrderRelation expected = inner_order(alphas[j], alphas[k]);
            CHECK(max_order_compare(family[j], family[k]).relation == expected);
            const bool included = kernel_inclusion_probe(conj_symbols[k], conj_symbols[j],
                                                         cfg.section_size) ==
                                  Inclusion::Included;
            CHECK(included == inner_divides(alphas[j], alphas[k]));
        }
    }
}

TEST_CASE("structured divisibility handles zeros, powers and atoms") {
    InnerSpec a, b;
    a.power = 1;
    a.zeros = {cplx{0.5, 0.0}};
    b.power = 2;
    b.zeros = {cplx{0.5, 0.0}, cplx{-0.3, 0.4}};
    CHECK(inner_divides(make_inner(a, cfg), make_inner(b, cfg)));
    CHECK(!inner_divides(make_inner(b, cfg), make_inner(a, cfg)));
    CHECK(inner_order(make_inner(a, cfg), make_inner(b, cfg)) == OrderRelation::Precedes);
    CHECK(inner_order(make_inner(a, cfg), make_inner(a, cfg)) == OrderRelation::Equivalent);

    InnerSpec light, heavy;
    light.atoms = {{cplx{1.0, 0.0}, 0.5}};
    heavy.atoms = {{cplx{1.0, 0.0}, 1.5}};
    CHECK(inner_divides(make_inner(light, cfg), make_inner(heavy, cfg)));
    CHECK(!inner_divides(make_inner(heavy, cfg), make_inner(light, cfg)));

    InnerSpec elsewhere;
    elsewhere.atoms = {{cplx{-1.0, 0.0}, 0.5}};
    CHECK(inner_order(make_inner(light, cfg), make_inner(elsewhere, cfg)) ==
          OrderRelation::Incomparable);
}

TEST_CASE("conjugation rejects functions outside the kernel") {
    auto ctx = monomial_ctx(5);
    auto outside = poly({cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
                         cplx{1, 0}});
    CHECK_THROWS_AS(conjugate_in_kernel(ctx, outside), NotInKernel);
    CHECK_THROWS_AS(eigenfunction_test(ctx, outside), NotInKernel);
    CHECK_THROWS_AS(conjugation_context(ToeplitzSymbol(two_plus_z()), cfg.section_size),
                    ConfigInvalid);
}
