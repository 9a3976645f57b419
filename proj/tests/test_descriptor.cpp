#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "tklab/descriptor.hpp"
#include "tklab/experiments.hpp"
#include "tklab/hayashi.hpp"
#include "tklab/inner_function.hpp"
#include "tklab/report.hpp"
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

} // namespace

TEST_CASE("constant and power descriptors sample exactly") {
    auto c = parse_symbol(R"({"const": [0.5, -1.5]})", cfg);
    CHECK(max_sample_diff(c.boundary(), BoundaryFunction::constant(cplx{0.5, -1.5}, cfg)) == 0.0);
    CHECK_FALSE(c.has_jumps());
    CHECK_FALSE(c.has_singular_part());

    auto p = parse_symbol(R"({"power": 3})", cfg);
    CHECK(max_sample_diff(p.boundary(), BoundaryFunction::monomial(3, cfg)) == 0.0);
    auto q = parse_symbol(R"({"power": -2})", cfg);
    CHECK(max_sample_diff(q.boundary(), BoundaryFunction::monomial(-2, cfg)) == 0.0);
}

TEST_CASE("the conjugate power descriptor spans the full polynomial kernel") {
    auto sym = parse_symbol(R"({"conj": {"power": 3}})", cfg);
    auto kb = numerical_kernel(sym, 32);
    REQUIRE(kb.dimension == 3);
    CHECK(kb.certain);
}

TEST_CASE("half-integer power descriptors match the branch symbol") {
    auto sym = parse_symbol(R"({"conj": {"power_half": {"n": 7, "cut": -1}}})", cfg);
    CHECK(max_sample_diff(sym.boundary(), halfinteger_symbol(7, cfg).boundary()) < 1e-12);
    REQUIRE(sym.has_jumps());
    CHECK_FALSE(sym.has_singular_part());

    CHECK_THROWS_AS(parse_symbol(R"({"power_half": {"n": 4}})", cfg), EvenN);
    CHECK_THROWS_AS(parse_symbol(R"({"power_half": {"n": 3, "cut": 1}})", cfg), ParseError);
}

TEST_CASE("inner and kernel descriptors reproduce model data") {
    InnerSpec spec;
    spec.zeros = {cplx{0.5, 0.0}};
    auto theta = make_inner(spec, cfg);
    auto mk = model_kernels(theta, cplx{0.0, 0.0});

    auto kt = parse_function(R"({"ktilde": {"theta": {"zeros": [[0.5, 0]]}, "lambda": 0}})", cfg);
    CHECK(max_sample_diff(kt, mk.k_tilde) < 1e-12);
    auto kf = parse_function(R"({"kfun": {"theta": {"zeros": [[0.5, 0]]}, "lambda": 0}})", cfg);
    CHECK(max_sample_diff(kf, mk.k) < 1e-12);

    auto atomic = parse_symbol(R"({"inner": {"atoms": [{"point": [1, 0], "mass": 1}]}})", cfg);
    CHECK(atomic.has_singular_part());
    CHECK(atomic.unimodular());
}

TEST_CASE("rational descriptors validate their poles") {
    auto r = parse_symbol(R"({"rational": {"zeros": [[1, 0]], "poles": [[0, 2]], "constant": 2}})",
                          cfg);
    std::vector<cplx> want(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const cplx t = cfg.node(k);
        want[k] = 2.0 * (t - 1.0) / (t - cplx{0.0, 2.0});
    }
    CHECK(max_sample_diff(r.boundary(), BoundaryFunction::from_samples(want, cfg)) < 1e-14);

    CHECK_THROWS_AS(parse_symbol(R"({"rational": {"poles": [[1, 0]]}})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"rational": {"poles": [[0.9999999995, 0]]}})", cfg),
                    ParseError);
}

TEST_CASE("plus-one-power descriptors flag fractional exponents") {
    auto frac = parse_symbol(R"({"plus_one_power": 0.5})", cfg);
    REQUIRE(frac.has_jumps());
    auto smooth = parse_symbol(R"({"plus_one_power": 2})", cfg);
    CHECK_FALSE(smooth.has_jumps());
    std::vector<cplx> want(cfg.grid_size);
    for (std::size_t k = 0; k < cfg.grid_size; ++k) {
        const cplx t = cfg.node(k);
        want[k] = (1.0 + t) * (1.0 + t);
    }
    CHECK(max_sample_diff(smooth.boundary(), BoundaryFunction::from_samples(want, cfg)) < 1e-14);
}

TEST_CASE("products multiply values and merge jumps") {
    auto p = parse_symbol(R"({"product": [{"power": 1}, {"const": [0, 1]}]})", cfg);
    CHECK(max_sample_diff(p.boundary(), BoundaryFunction::monomial(1, cfg) * cplx{0.0, 1.0}) <
          1e-15);

    // Shared cut point: the merged symbol records it once.
    auto b = parse_descriptor_text(
        R"({"product": [{"power_half": {"n": 1}}, {"power_half": {"n": 1}}]})");
    auto desc = parse_symbol_description(b, cfg);
    CHECK(desc.jump_points.size() == 1);

    CHECK_THROWS_AS(parse_symbol(R"({"product": []})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"product": 3})", cfg), ParseError);
}

TEST_CASE("malformed descriptors report what went wrong") {
    try {
        parse_descriptor_text(R"({"const": })");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() > 0);
    }

    CHECK_THROWS_AS(parse_symbol(R"({"const": 1, "power": 2})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"warp": 1})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"power": 2.5})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"power_half": {"n": 3, "x": 1}})", cfg), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"([1, 2])", cfg), ParseError);
}

TEST_CASE("descriptor functions validate analyticity") {
    auto f = parse_function(R"({"power": 2})", cfg);
    CHECK(std::abs(f.coeff(2) - cplx{1.0, 0.0}) < 1e-14);
    CHECK_THROWS_AS(parse_function(R"({"conj": {"power": 1}})", cfg), NotAnalytic);
}

TEST_CASE("reports round-trip through json exactly") {
    ExperimentReport r;
    r.experiment_id = "round_trip_fixture";
    r.status = Status::Fail;
    r.metrics = {{"alpha", 0.125}, {"beta_tol", 1e-7}};
    add_artifact(r, "basis_0", {cplx{1.0, -2.0}, cplx{0.0, 3.5}});
    r.config.seed = 42;
    r.config.truncation = 128;
    r.wall_time = 1.75;

    auto j = to_json(r);
    auto back = report_from_json(j);
    CHECK(back == r);

    auto bumped = j;
    bumped["schema_version"] = kReportSchemaVersion + 1;
    CHECK_THROWS_AS(report_from_json(bumped), ParseError);

    auto mangled = j;
    mangled["artifacts"]["basis_0"][0] = "wat";
    CHECK_THROWS_AS(report_from_json(mangled), ParseError);

    CHECK(status_from_string(to_string(Status::Uncertain)) == Status::Uncertain);
    CHECK_THROWS_AS(status_from_string("maybe"), ParseError);

    CHECK(exit_code(r) == 1);
    r.status = Status::Pass;
    CHECK(exit_code(r) == 0);
    r.status = Status::Uncertain;
    CHECK(exit_code(r) == 2);

    // Certification gaps with no competing scale are infinite; they pass
    // through the null encoding unchanged.
    ExperimentReport g;
    g.experiment_id = "gap_fixture";
    g.metrics["gap"] = std::numeric_limits<double>::infinity();
    CHECK(report_from_json(to_json(g)) == g);
}

TEST_CASE("artifacts cap at the documented size") {
    ExperimentReport r;
    std::vector<cplx> big(kArtifactCap + 512, cplx{1.0, 0.0});
    add_artifact(r, "big", big);
    CHECK(r.artifacts.at("big").size() == kArtifactCap);
}

TEST_CASE("the experiment registry is sorted and rejects unknown ids") {
    auto infos = list_experiments();
    REQUIRE(infos.size() == 26);
    for (std::size_t i = 1; i < infos.size(); ++i) CHECK(infos[i - 1].id < infos[i].id);
    for (const auto& info : infos) {
        CHECK_FALSE(info.description.empty());
        CHECK_FALSE(info.topic.empty());
    }

    CHECK_THROWS_AS(run_experiment("missing_experiment"), UnknownExperiment);
    GridConfig bad;
    bad.grid_size = 0;
    CHECK_THROWS_AS(run_experiment("pm_one_symbol", bad), ConfigInvalid);
}

TEST_CASE("experiment reports are deterministic") {
    auto a = run_experiment("toeplitz_matrix_entries");
    auto b = run_experiment("toeplitz_matrix_entries");
    a.wall_time = 0.0;
    b.wall_time = 0.0;
    CHECK(a == b);
    CHECK(a.status == Status::Pass);
}

TEST_CASE("quick experiments pass end to end") {
    for (const char* id : {"herglotz_golden", "jump_exponents_pm_one", "dim_K_zn",
                           "pm_one_symbol"}) {
        auto r = run_experiment(id);
        INFO(id);
        CHECK(r.status == Status::Pass);
        CHECK(r.experiment_id == id);
    }
}
