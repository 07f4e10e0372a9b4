#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wcolab/series.hpp"

using namespace wcolab;

namespace {

TruncatedSeries random_series(std::mt19937& rng, std::size_t deg) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> c(deg + 1);
    for (auto& v : c) v = cplx{u(rng), u(rng)};
    return TruncatedSeries{std::move(c)};
}

double coeff_distance(const TruncatedSeries& f, const TruncatedSeries& g) {
    double d = 0.0;
    const std::size_t n = std::max(f.order(), g.order());
    for (std::size_t k = 0; k <= n; ++k) d = std::max(d, std::abs(f.coeff(k) - g.coeff(k)));
    return d;
}

}  // namespace

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(TruncatedSeries{std::vector<cplx>{}}, std::invalid_argument);
    CHECK_THROWS_AS(
        TruncatedSeries{std::vector<cplx>{cplx{std::nan("")}}},
        std::invalid_argument);
    CHECK_THROWS_AS((TruncatedSeries{std::vector<cplx>{cplx{1.0}}, -0.5}),
                    std::invalid_argument);
    const TruncatedSeries f{{cplx{1.0}, cplx{2.0}}, 0.25};
    CHECK(f.order() == 1);
    CHECK(f.tail_hint().value() == 0.25);
}

TEST_CASE("factories") {
    CHECK(TruncatedSeries::one().coeff(0) == cplx{1.0});
    CHECK(TruncatedSeries::identity().coeff(1) == cplx{1.0});
    CHECK(TruncatedSeries::identity().coeff(0) == cplx{0.0});
    const auto m = TruncatedSeries::monomial(3, cplx{0.0, 2.0});
    CHECK(m.order() == 3);
    CHECK(m.coeff(3) == cplx{0.0, 2.0});
    CHECK(TruncatedSeries::zero(4).is_zero());
    CHECK(TruncatedSeries::constant(cplx{5.0}).coeff(0) == cplx{5.0});
}

TEST_CASE("coeff beyond stored order is zero") {
    const TruncatedSeries f{{cplx{1.0}, cplx{2.0}}};
    CHECK(f.coeff(2) == cplx{0.0});
    CHECK(f.coeff(1000) == cplx{0.0});
}

TEST_CASE("add and scale are coefficientwise") {
    const TruncatedSeries f{{cplx{1.0}, cplx{2.0}}};
    const TruncatedSeries g{{cplx{0.0}, cplx{1.0}, cplx{3.0}}};
    const auto s = add(f, g);
    CHECK(s.coeff(0) == cplx{1.0});
    CHECK(s.coeff(1) == cplx{3.0});
    CHECK(s.coeff(2) == cplx{3.0});
    const auto t = scale(f, cplx{0.0, 1.0});
    CHECK(t.coeff(1) == cplx{0.0, 2.0});
}

TEST_CASE("mul matches the Cauchy product and truncates") {
    const TruncatedSeries f{{cplx{1.0}, cplx{1.0}}};
    const auto sq = mul(f, f, 8);
    CHECK(sq.coeff(0) == cplx{1.0});
    CHECK(sq.coeff(1) == cplx{2.0});
    CHECK(sq.coeff(2) == cplx{1.0});
    const auto cut = mul(f, f, 1);
    CHECK(cut.order() <= 1);
    CHECK(cut.coeff(1) == cplx{2.0});
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        const auto f = random_series(rng, 9);
        const auto g = random_series(rng, 7);
        const auto h = random_series(rng, 5);
        CHECK(coeff_distance(mul(f, g, 20), mul(g, f, 20)) <= 1e-14);
        CHECK(coeff_distance(mul(mul(f, g, 21), h, 21), mul(f, mul(g, h, 21), 21)) <=
              1e-12);
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        const auto f = random_series(rng, 8);
        const auto g = random_series(rng, 8);
        const auto lhs = derivative(mul(f, g, 17));
        const auto rhs = add(mul(derivative(f), g, 15), mul(f, derivative(g), 15));
        CHECK(coeff_distance(lhs, rhs) <= 1e-12);
    }
    CHECK(derivative(TruncatedSeries::one()).is_zero());
}

TEST_CASE("pow by repeated multiplication") {
    const auto f = TruncatedSeries{{cplx{0.0}, cplx{0.5}}};
    CHECK(pow(f, 0, 8).coeff(0) == cplx{1.0});
    CHECK(pow(f, 3, 8).coeff(3) == cplx{0.125});
    CHECK(pow(f, 3, 8).coeff(2) == cplx{0.0});
}

TEST_CASE("evaluate uses every coefficient") {
    const TruncatedSeries f{{cplx{1.0}, cplx{-2.0}, cplx{3.0}}};
    const cplx z{0.5, 0.25};
    CHECK(std::abs(evaluate(f, z) - (cplx{1.0} - 2.0 * z + 3.0 * z * z)) <= 1e-15);
}

TEST_CASE("binomial series reproduces sqrt(1-z)") {
    const auto b = binomial_series(0.5, 8);
    CHECK(b.coeff(0) == cplx{1.0});
    CHECK(b.coeff(1) == cplx{-0.5});
    CHECK(b.coeff(2) == cplx{-0.125});
    CHECK(b.coeff(3) == cplx{-0.0625});
    const double z = 0.3;
    double sum = 0.0;
    for (std::size_t k = 0; k <= 8; ++k) sum += b.coeff(k).real() * std::pow(z, double(k));
    CHECK(std::abs(sum - std::sqrt(1.0 - z)) <= 1e-6);
}

TEST_CASE("log weight series") {
    CHECK_THROWS_AS(log_weight_series(1), std::invalid_argument);
    const auto w = log_weight_series(16);
    CHECK(w.coeff(0) == cplx{0.0});
    CHECK(w.coeff(1) == cplx{0.0});
    CHECK(std::abs(w.coeff(2) - cplx{1.0 / (2.0 * std::log(2.0))}) <= 1e-15);
    CHECK(std::abs(w.coeff(5) - cplx{1.0 / (5.0 * std::log(5.0))}) <= 1e-15);
}

TEST_CASE("compose matches direct substitution") {
    std::mt19937 rng(13);
    for (int t = 0; t < 10; ++t) {
        const auto f = random_series(rng, 6);
        std::vector<cplx> pc(4);
        std::uniform_real_distribution<double> u(-0.2, 0.2);
        for (auto& v : pc) v = cplx{u(rng), u(rng)};
        const TruncatedSeries phi{pc};
        const auto comp = compose(f, phi, 0.8, 24);
        const cplx z{0.3, -0.2};
        const cplx direct = evaluate(f, evaluate(phi, z));
        CHECK(std::abs(evaluate(comp, z) - direct) <= 1e-9);
    }
}

TEST_CASE("compose rejects rho at or above one") {
    const auto f = TruncatedSeries::identity();
    CHECK_THROWS_AS(compose(f, f, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(compose(f, f, 1.5, 8), std::invalid_argument);
}

TEST_CASE("compose scales the tail hint by rho^(deg+1)") {
    const TruncatedSeries f{{cplx{1.0}, cplx{1.0}}, 0.5};
    const auto comp = compose(f, scale(TruncatedSeries::identity(), cplx{0.5}), 0.5, 4);
    REQUIRE(comp.tail_hint().has_value());
    CHECK(comp.tail_hint().value() <= 0.5);
}
