#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wcolab/dirichlet.hpp"
#include "wcolab/scenario.hpp"
#include "wcolab/theorems.hpp"

using namespace wcolab;

namespace {

bool has_failed_check(const ScenarioReport& r, const std::string& needle) {
    for (const auto& c : r.checks) {
        if (!c.pass && c.name.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("direct sum identity for a constant outer polynomial") {
    const auto r = run_direct_sum(2, TruncatedSeries::one(), 32, 180);
    CHECK(r.pass);
}

TEST_CASE("direct sum identity for random outer polynomials") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(6);
    for (auto& v : c) v = cplx{u(rng), u(rng)};
    const auto r = run_direct_sum(3, TruncatedSeries{c}, 64, 240);
    CHECK(r.pass);
    CHECK(r.boundary.samples.size() == 240);
}

TEST_CASE("rank one scenarios for all three trichotomy cases") {
    const std::size_t n = 256;
    CHECK(run_rank_one(kernel_series(cplx{0.5}, n), cplx{0.5}, n, 96).pass);
    CHECK(run_rank_one(TruncatedSeries{{cplx{-0.5}, cplx{1.0}}}, cplx{0.5}, n, 96).pass);
    const auto ell = run_rank_one(TruncatedSeries{{cplx{1.0}, cplx{1.0}}}, cplx{0.5}, n, 96);
    CHECK(ell.pass);
    REQUIRE(ell.has_predicted);
    CHECK(ell.predicted.kind == RegionKind::Ellipse);
}

TEST_CASE("zero interior certificate and proof compression") {
    // phi = z(1+z)/2
    const TruncatedSeries phi{{cplx{0.0}, cplx{0.5}, cplx{0.5}}};
    const auto r = run_zero_interior(TruncatedSeries::one(), phi, 64, 1e-6, 360);
    CHECK(r.pass);
    bool compression_checked = false;
    for (const auto& c : r.checks) {
        if (c.name == "compression_matches_er") {
            compression_checked = true;
            CHECK(c.pass);
        }
    }
    CHECK(compression_checked);

    // mu = i, b = 1/2, s = 1: phi = i z + (i/2) z^2
    const TruncatedSeries rot_phi{{cplx{0.0}, cplx{0.0, 1.0}, cplx{0.0, 0.5}}};
    CHECK(run_zero_interior(TruncatedSeries::one(), rot_phi, 64, 1e-6, 360).pass);
}

TEST_CASE("zero interior rejects dilations") {
    const auto phi = scale(TruncatedSeries::identity(), cplx{0.5});
    const auto r = run_zero_interior(TruncatedSeries::one(), phi, 32, 1e-6, 180);
    CHECK_FALSE(r.pass);
    CHECK(has_failed_check(r, "precondition_not_dilation"));
}

TEST_CASE("zero membership for a negative dilation") {
    const TruncatedSeries psi{{cplx{1.0}, cplx{1.0}}};
    CHECK(run_zero_membership(psi, -0.5, 64, 360).pass);
    CHECK(run_zero_membership(psi, 0.0, 64, 360).pass);
    const auto bad = run_zero_membership(TruncatedSeries::one(), -0.5, 32, 180);
    CHECK(has_failed_check(bad, "precondition_psi_nonconstant"));
    CHECK(has_failed_check(run_zero_membership(psi, 0.5, 32, 180),
                           "precondition_t_range"));
}

TEST_CASE("3x3 disk compression") {
    const auto psi = TruncatedSeries::monomial(2);
    const auto r = run_disk_3x3(2, 1, 2, psi, 64, 360);
    CHECK(r.pass);
    REQUIRE(r.has_predicted);
    CHECK(r.predicted.kind == RegionKind::Disk);
    CHECK(std::abs(r.predicted.radius - 0.5 * std::sqrt(14.0 / 3.0)) <= 1e-12);

    const auto bad = run_disk_3x3(2, 1, 2, TruncatedSeries::one(), 64, 180);
    CHECK(has_failed_check(bad, "precondition_coefficient_product"));
}

TEST_CASE("order-r zero disk identity") {
    const auto r1 = run_disk_order_r(1, TruncatedSeries::identity(),
                                     scale(TruncatedSeries::identity(), cplx{0.5}),
                                     16, 64, 360);
    CHECK(r1.pass);
    CHECK(std::abs(r1.predicted.radius - 2.0 / 3.0) <= 1e-12);

    const auto r2 = run_disk_order_r(2, TruncatedSeries::monomial(2, cplx{3.0}),
                                     TruncatedSeries::monomial(2, cplx{0.5}), 16,
                                     64, 360);
    CHECK(r2.pass);
    CHECK(std::abs(r2.predicted.radius - 2.25) <= 1e-12);

    const auto bad = run_disk_order_r(1, TruncatedSeries::one(),
                                      scale(TruncatedSeries::identity(), cplx{0.5}),
                                      8, 32, 180);
    CHECK(has_failed_check(bad, "precondition_zero_of_order_r"));
}

TEST_CASE("nilpotent compression disk") {
    const auto r = run_disk_nilpotent(2, TruncatedSeries::identity(), cplx{1.0}, 64, 360);
    CHECK(r.pass);
    CHECK(std::abs(r.predicted.radius - std::sqrt(3.0 / 8.0)) <= 1e-12);

    // rotating mu leaves the radius unchanged
    const auto ri = run_disk_nilpotent(2, TruncatedSeries::identity(), cplx{0.0, 1.0}, 64, 360);
    CHECK(ri.pass);
    CHECK(std::abs(ri.predicted.radius - r.predicted.radius) <= 1e-14);

    // psi_{r-1} = 0 degenerates to radius zero and still passes
    const auto degenerate =
        run_disk_nilpotent(3, TruncatedSeries::identity(), cplx{1.0}, 64, 360);
    CHECK(degenerate.pass);
    CHECK(degenerate.predicted.radius == 0.0);
}

TEST_CASE("irrational rotation ellipse") {
    const TruncatedSeries psi{{cplx{1.0}, cplx{1.0}}};
    const auto r = run_ellipse_irrational(0, 1, 0.7071067811865475, psi, 64, 360);
    CHECK(r.pass);
    REQUIRE(r.has_predicted);
    CHECK(r.predicted.kind == RegionKind::Ellipse);
    CHECK(std::abs(r.predicted.minor_axis - std::sqrt(2.0)) <= 1e-12);

    // psi_s = 0 degenerates to the focal segment
    const auto seg = run_ellipse_irrational(0, 1, 0.3, TruncatedSeries::one(), 64, 360);
    CHECK(seg.pass);
    CHECK(seg.predicted.kind == RegionKind::Segment);
}

TEST_CASE("containment verdicts are monotone in the truncation") {
    const auto small = run_disk_nilpotent(2, TruncatedSeries::identity(), cplx{1.0}, 32, 180);
    const auto large = run_disk_nilpotent(2, TruncatedSeries::identity(), cplx{1.0}, 64, 180);
    CHECK(small.pass);
    CHECK(large.pass);
    CHECK(large.worst_margin() >= small.worst_margin() - 1e-9);
}

TEST_CASE("scenario json ingestion") {
    const std::string text = R"([
      {"id": "b", "theorem": "DiskNilpotent", "psi_spec": "poly:0,1",
       "parameters": {"r": 2, "mu": "1"}, "truncation": 32, "angles": 180},
      {"id": "a", "theorem": "ZeroMembership", "psi_spec": "poly:1,1",
       "parameters": {"t": -0.5}, "truncation": 32, "angles": 180}
    ])";
    const auto scenarios = parse_scenarios(text);
    REQUIRE(scenarios.size() == 2);
    CHECK(scenarios[0].theorem == TheoremKind::DiskNilpotent);
    CHECK(scenarios[0].parameters.at("mu") == cplx{1.0});

    const auto reports = run_batch(scenarios);
    REQUIRE(reports.size() == 2);
    // ordered by id regardless of input order
    CHECK(reports[0].id == "a");
    CHECK(reports[1].id == "b");
    CHECK(reports[0].pass);
    CHECK(reports[1].pass);

    CHECK_THROWS_AS(parse_scenarios("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenarios("not json"), std::invalid_argument);
    CHECK_THROWS_AS(theorem_from_name("Nope"), std::invalid_argument);
}

TEST_CASE("batch runner reports exceptions per scenario") {
    Scenario bad;
    bad.id = "broken";
    bad.theorem = TheoremKind::RankOne;
    bad.psi_spec = "poly:1";
    // missing parameter w
    const auto reports = run_batch({bad});
    REQUIRE(reports.size() == 1);
    CHECK_FALSE(reports[0].pass);
    REQUIRE(reports[0].checks.size() == 1);
    CHECK(reports[0].checks[0].name == "exception");
}
