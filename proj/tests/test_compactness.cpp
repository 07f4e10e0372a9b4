#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "wcolab/compactness.hpp"

using namespace wcolab;

namespace {

Symbol sym(const std::string& text, std::size_t n = kDefaultOrder) {
    return realize(parse_symbol(text), n);
}

}  // namespace

TEST_CASE("tilde_f case values") {
    const Symbol one = sym("poly:1");
    const Symbol zero_map = sym("poly:0");
    // phi(0) = 0, z = 0: value |psi(0)|
    CHECK(tilde_f(one, zero_map, cplx{0.0}) == doctest::Approx(1.0));
    // phi == 0, z != 0: |psi(z)| |z| / sqrt(log(1/(1-|z|^2)))
    const double r = 0.5;
    const double expect = r / std::sqrt(std::log(1.0 / (1.0 - r * r)));
    CHECK(tilde_f(one, zero_map, cplx{r}) == doctest::Approx(expect).epsilon(1e-12));
    // full formula for phi = z^2/2
    const Symbol half_sq = sym("poly:0,0,0.5");
    const double rr = 0.8;
    const double p = rr * rr / 2.0;
    const double full = (rr / p) * std::sqrt(std::log(1.0 / (1.0 - p * p)) /
                                             std::log(1.0 / (1.0 - rr * rr)));
    CHECK(tilde_f(one, half_sq, cplx{rr}) == doctest::Approx(full).epsilon(1e-12));
}

TEST_CASE("tilde_f rejects bad arguments") {
    const Symbol one = sym("poly:1");
    CHECK_THROWS_AS(tilde_f(one, one, cplx{1.0}), std::invalid_argument);
    const Symbol big = sym("poly:2");  // |phi(z)| = 2 >= 1
    CHECK_THROWS_AS(tilde_f(one, big, cplx{0.5}), std::domain_error);
}

TEST_CASE("tilde_f scale covariance") {
    const Symbol psi = sym("poly:1,0.5");
    const Symbol phi = sym("poly:0,0.3,0.2");
    const cplx z{0.6, 0.2};
    const double base = tilde_f(psi, phi, z);
    Symbol scaled = psi;
    scaled.series = scale(psi.series, cplx{0.0, -2.0});
    CHECK(tilde_f(scaled, phi, z) == doctest::Approx(2.0 * base).epsilon(1e-14));
}

TEST_CASE("tilde_f is continuous across the phi-zero case boundary") {
    // phi(z) = z - 0.4: zero at z0 = 0.4, z0 != 0
    const Symbol psi = sym("poly:1,1");
    const Symbol phi = sym("poly:-0.4,1");
    const cplx z0{0.4};
    const double at_zero = tilde_f(psi, phi, z0);
    for (int k = 0; k < 8; ++k) {
        const cplx dir = std::polar(1.0, 2.0 * M_PI * double(k) / 8.0);
        const double nearby = tilde_f(psi, phi, z0 + 1e-9 * dir);
        CHECK(std::abs(nearby - at_zero) <= 1e-6);
    }
}

TEST_CASE("sqrt counterexample profile rises toward 1/sqrt(2)") {
    const Symbol psi = sym("sqrtweight");
    const Symbol phi = sym("sqrtmap");
    std::vector<double> radii;
    for (int j = 2; j <= 8; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
    const RadialProfile p = radial_profile(psi, phi, cplx{1.0}, radii);
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        REQUIRE(p.valid[i]);
        if (i > 0) CHECK(p.values[i] > p.values[i - 1]);
    }
    const double last = tilde_f(psi, phi, cplx{1.0 - 1e-8});
    CHECK(last >= 0.67);
    CHECK(last <= 0.72);
}

TEST_CASE("compact example profile decays") {
    const Symbol one = sym("poly:1");
    const Symbol half_sq = sym("poly:0,0,0.5");
    std::vector<double> radii;
    for (int j = 1; j <= 6; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
    const RadialProfile p = radial_profile(one, half_sq, cplx{1.0}, radii);
    for (std::size_t i = 2; i < p.values.size(); ++i) {
        CHECK(p.values[i] < p.values[i - 1]);
    }
    CHECK(tilde_f(one, half_sq, cplx{1.0 - 1e-6}) < 0.31);
}

TEST_CASE("radial profile is deterministic and flags invalid points") {
    const Symbol psi = sym("poly:1");
    const Symbol phi = sym("poly:0,1");  // identity: |phi(z)| -> 1, still < 1 inside
    const std::vector<double> radii = {0.5, 0.9, 0.99};
    const RadialProfile a = radial_profile(psi, phi, cplx{1.0}, radii);
    const RadialProfile b = radial_profile(psi, phi, cplx{1.0}, radii);
    CHECK(a.values == b.values);
    CHECK(a.valid == std::vector<bool>{true, true, true});
}

TEST_CASE("zero weight gives an all-zero profile") {
    const Symbol zero = sym("poly:0");
    const Symbol phi = sym("scale:0.5");
    const RadialProfile p = radial_profile(zero, phi, cplx{1.0}, {0.5, 0.9});
    for (double v : p.values) CHECK(v == 0.0);
}

TEST_CASE("sup norm estimates") {
    CHECK(sup_norm_estimate(sym("scale:0.5")).value == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(sup_norm_estimate(sym("poly:0,0,0.5")).value ==
          doctest::Approx(0.5).epsilon(1e-5));
    const SupNormEstimate s = sup_norm_estimate(sym("sqrtmap"));
    CHECK(s.value >= 0.99);
    CHECK(s.value <= 1.0 + 1e-9);
}

TEST_CASE("check_th1 outcomes") {
    const Symbol logw = sym("logweight");
    CHECK(check_th1(logw, sym("poly:0,0,0.5")).overall == CheckStatus::Pass);
    CHECK(check_th1(logw, sym("sqrtmap")).overall == CheckStatus::Fail);
    CHECK(check_th1(sym("poly:1"), sym("scale:0.5")).overall == CheckStatus::Pass);
}

TEST_CASE("check_th3 outcomes") {
    const auto grid = default_radial_grid();
    CHECK(check_th3(sym("poly:1,-2,1"), sym("halfmob"), grid).overall ==
          CheckStatus::Pass);

    const HypothesisReport identity =
        check_th3(sym("poly:1"), sym("poly:0,1"), grid);
    CHECK(identity.overall != CheckStatus::Pass);
    bool cond2_failed = false;
    for (const auto& c : identity.checks) {
        if (c.name.find("kernel_ratio") != std::string::npos &&
            c.status == CheckStatus::Fail) {
            cond2_failed = true;
        }
    }
    CHECK(cond2_failed);

    const HypothesisReport square = check_th3(sym("poly:1"), sym("poly:0,0,1"), grid);
    bool univalence_failed = false;
    for (const auto& c : square.checks) {
        if (c.name.find("univalen") != std::string::npos &&
            c.status == CheckStatus::Fail) {
            univalence_failed = true;
        }
    }
    CHECK(univalence_failed);
}

TEST_CASE("singular value decay for the diagonal example") {
    const auto rep = singular_value_decay(TruncatedSeries::one(),
                                          scale(TruncatedSeries::identity(), cplx{0.5}),
                                          {24, 32});
    for (std::size_t i = 0; i < rep.orders.size(); ++i) {
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(std::abs(rep.singular_values[i][n] - std::pow(0.5, double(n))) <=
                  1e-12);
        }
    }
    CHECK_THROWS_AS(singular_value_decay(TruncatedSeries::one(),
                                         TruncatedSeries::identity(), {32, 16}),
                    std::invalid_argument);
}

TEST_CASE("sqrt example singular values stay above the frozen floor") {
    const auto psi = sym("sqrtweight").series;
    const auto phi = sym("sqrtmap").series;
    const auto rep = singular_value_decay(psi, phi, {64, 128});
    for (const auto& sv : rep.singular_values) {
        CHECK(sv[32] >= 2e-10);
    }
    // and the tail index grows with N rather than collapsing
    CHECK(rep.singular_values[1][32] >= rep.singular_values[0][32]);
}

TEST_CASE("zero symbol has all-zero singular values") {
    const auto rep = singular_value_decay(TruncatedSeries::zero(),
                                          scale(TruncatedSeries::identity(), cplx{0.5}),
                                          {16});
    for (double s : rep.singular_values[0]) CHECK(s <= 1e-15);
}
