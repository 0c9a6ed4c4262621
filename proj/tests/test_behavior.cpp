#include "helpers.hpp"

#include "twitdyn/behavior.hpp"
#include "twitdyn/errors.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace twitdyn;
using Catch::Matchers::WithinAbs;

TEST_CASE("activeness", "[behavior]") {
    CHECK(activeness(100, 0, 100, 50) == 1.0);
    CHECK(activeness(0, 30, 100, 50) == 0.0);
    CHECK_THAT(activeness(50, 25, 100, 50), WithinAbs(0.375, 1e-12));
    // l_max + f == 0: second factor is 1, first factor already 0.
    CHECK(activeness(0, 0, 5, 0) == 0.0);
    CHECK_THROWS_AS(activeness(0, 0, 0, 3), DomainError);
}

TEST_CASE("activeness bounds and monotonicity", "[behavior][property]") {
    std::mt19937_64 gen(7);
    for (int k = 0; k < 5000; ++k) {
        const std::int64_t f_max = std::uniform_int_distribution<std::int64_t>(1, 500)(gen);
        const std::int64_t l_max = std::uniform_int_distribution<std::int64_t>(0, 500)(gen);
        const std::int64_t f = std::uniform_int_distribution<std::int64_t>(0, f_max)(gen);
        const std::int64_t l = std::uniform_int_distribution<std::int64_t>(0, l_max)(gen);
        const double a = activeness(f, l, f_max, l_max);
        REQUIRE(a >= 0.0);
        REQUIRE(a <= 1.0);
        if (f < f_max)
            REQUIRE(activeness(f + 1, l, f_max, l_max) >= a);
        if (l < l_max)
            REQUIRE(activeness(f, l + 1, f_max, l_max) <= a);
    }
}

TEST_CASE("hesitancy", "[behavior]") {
    CHECK(hesitancy(0, 0) == 1.0);
    CHECK_THAT(hesitancy(4, 5), WithinAbs(0.1, 1e-12));
    CHECK(hesitancy(1'000'000'000, 0) > 0.0);
    CHECK(hesitancy(1'000'000'000, 0) < 1e-8);
    for (std::int64_t s = 0; s < 2000; ++s)
        REQUIRE(hesitancy(s + 1, 0) < hesitancy(s, 0));
    // Depends only on l + f.
    CHECK(hesitancy(3, 7) == hesitancy(7, 3));
}

TEST_CASE("interest", "[behavior]") {
    CHECK(interest(-3.0, 2.0) == 1.0);
    CHECK(interest(0.0, 17.0) == 1.0);
    CHECK_THAT(interest(2.0, 0.5), WithinAbs(0.36787944117144233, 1e-12));
    for (double x = -7.0; x <= 7.0; x += 1.0) {
        REQUIRE(interest(x, 0.0) == 1.0);
        for (double lambda : {0.1, 1.0, 4.0})
            REQUIRE(interest(x + 1.0, lambda) <= interest(x, lambda));
    }
}

TEST_CASE("exposure probability with default coverage", "[behavior]") {
    const ModelParams params;
    CHECK(exposure_probability(0.375, 0.0, params) == 0.375);
    CHECK(exposure_probability(0.0, 2.0, params) == 0.0);
    CHECK(exposure_probability(1.0, 5.0, params) == 1.0);

    ModelParams half;
    half.media_coverage = [](double x) { return x < 0 ? 0.5 : 1.0; };
    CHECK(exposure_probability(0.8, -1.0, half) == 0.4);
    CHECK(exposure_probability(0.8, 1.0, half) == 0.8);
}

TEST_CASE("action probability", "[behavior]") {
    CHECK_THAT(action_probability(1.0, 1.0, 0.1), WithinAbs(0.9, 1e-12));
    CHECK(action_probability(1.0, 0.05, 0.1) == 0.0);
    CHECK(action_probability(0.0, 1.0, 0.01) == 0.0);
    CHECK(action_probability(0.0, 0.3, 1.0) == 0.0);
}

TEST_CASE("exposure mass", "[behavior]") {
    const auto star = generate_synthetic(SyntheticKind::star, 11, 0.0, 0);
    const std::vector<UserId> none;
    const std::vector<UserId> hub{0};
    CHECK(exposure_mass(star, 3, none) == 0.0);
    CHECK(exposure_mass(star, 3, hub) == 10.0);

    // User 0 follows 1 (3 followers) and 2 (4 followers).
    const auto net = twitdyn::test::from_text("0 1\n0 2\n3 1\n4 1\n5 2\n6 2\n7 2\n");
    const std::vector<UserId> both{1, 2};
    CHECK(exposure_mass(net, 0, both) == 7.0);
    const std::vector<UserId> stranger{3};
    CHECK_THROWS_AS(exposure_mass(net, 0, stranger), ContractViolation);
}

TEST_CASE("retweet gate", "[behavior]") {
    CHECK(retweet_gate(12.0, 3.0, 4.0));
    CHECK_FALSE(retweet_gate(11.9, 3.0, 4.0));
    CHECK_FALSE(retweet_gate(0.0, 1.0, 0.0));
    CHECK(retweet_gate(0.5, 60.0, 0.0));
}

TEST_CASE("retweet count", "[behavior]") {
    const double influence = 5.0;
    CHECK(retweet_count(3, 3.0 * influence, 3.0, influence) == 1);
    CHECK(retweet_count(8, 4.0 * (2.0 * influence), 2.0, influence) == 4);
    CHECK(retweet_count(2, 0.25 * (8.0 * influence), 8.0, influence) == 1);
    CHECK(retweet_count(10, 3.0, 1.0, 0.0) == 1);
}

TEST_CASE("retweet count is at least one and monotone", "[behavior][property]") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 5000; ++k) {
        const double eta_star = 1.0 + std::floor(59.0 * unit(gen));
        const double influence = 0.5 + 100.0 * unit(gen);
        const std::int64_t eta_i = 1 + static_cast<std::int64_t>(80 * unit(gen));
        const double y = eta_star * influence * (1.0 + 10.0 * unit(gen));
        const auto n = retweet_count(eta_i, y, eta_star, influence);
        REQUIRE(n >= 1);
        REQUIRE(retweet_count(eta_i + 1, y, eta_star, influence) >= n);
        REQUIRE(retweet_count(eta_i, y * 1.5, eta_star, influence) >= n);
    }
}

TEST_CASE("per-retweet probability", "[behavior]") {
    CHECK(per_retweet_probability(0.37, 1) == 0.37);
    CHECK_THAT(per_retweet_probability(0.75, 2), WithinAbs(0.5, 1e-12));
    CHECK(per_retweet_probability(0.0, 9) == 0.0);
    CHECK(per_retweet_probability(1.0, 9) == 1.0);
}

TEST_CASE("per-retweet probability round trip", "[behavior][property]") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 10000; ++k) {
        const double r_total = unit(gen);
        const std::int64_t n = 1 + static_cast<std::int64_t>(100 * unit(gen));
        const double r = per_retweet_probability(r_total, n);
        REQUIRE(r >= 0.0);
        REQUIRE(r <= r_total + 1e-15);
        REQUIRE(std::abs(1.0 - std::pow(1.0 - r, static_cast<double>(n)) - r_total) <= 1e-12);
    }
}

TEST_CASE("user traits on the star", "[behavior]") {
    const auto star = generate_synthetic(SyntheticKind::star, 11, 0.0, 0);
    const auto hub = user_traits(star, 0);
    CHECK(hub.activeness == 1.0);
    CHECK(hub.hesitancy == 1.0 / 11.0);
    CHECK(hub.influence == 0.0);
    const auto spoke = user_traits(star, 4);
    CHECK(spoke.activeness == 0.0);
    CHECK(spoke.hesitancy == 0.5);
    CHECK(spoke.influence == 10.0);

    const auto edgeless = twitdyn::test::from_text("0 0\n1 1\n");
    CHECK(user_traits(edgeless, 1).activeness == 0.0);
}

TEST_CASE("parameter validation", "[behavior]") {
    ModelParams p;
    CHECK_NOTHROW(validate(p));
    p.lambda = -0.1;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = {};
    p.eta_star = 0.5;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = {};
    p.delta_t = 8;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = {};
    p.sigma = 1.5;
    CHECK_THROWS_AS(validate(p), DomainError);
}
