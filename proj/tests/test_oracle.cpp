#include "khovanskii/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

TEST_CASE("bisect_root brackets the cube root of 2") {
    FixedReal r = bisect_root({{-2, 0, 0, 1}, 1, 2, 64});
    ExactRational v = r.value();
    ExactRational ulp(1, ExactInteger(1) << 64);
    CHECK((v - ulp) * (v - ulp) * (v - ulp) < 2);
    CHECK((v + ulp) * (v + ulp) * (v + ulp) > 2);
}

TEST_CASE("bisect_root residual on x^3 - x - 1") {
    FixedReal r = bisect_root({{-1, -1, 0, 1}, 1, 2, 128});
    ExactRational res = abs(eval_poly({-1, -1, 0, 1}, r.value()));
    // |f'| < 5 near the root, so the residual reflects the 128-bit accuracy
    CHECK(res < ExactRational(1, ExactInteger(1) << 125));
}

TEST_CASE("bisect_root terminates exactly on a rational hit") {
    FixedReal r = bisect_root({{-5, 1}, 0, 10, 64});
    CHECK(r.value() == 5);
}

TEST_CASE("bisect_root requires a sign change") {
    CHECK_THROWS_AS(bisect_root({{1, 0, 1}, 0, 1, 32}), domain_error);
}

TEST_CASE("bracket_real_root") {
    auto b = bracket_real_root({-1, -1, 0, 1});  // x^3 - x - 1
    REQUIRE(b);
    CHECK(eval_poly({-1, -1, 0, 1}, b->first) < 0);
    CHECK(eval_poly({-1, -1, 0, 1}, b->second) > 0);
    CHECK(b->first < ExactRational(13248, 10000));
    CHECK(b->second > ExactRational(13247, 10000));

    CHECK_FALSE(bracket_real_root({1, 0, 1}));  // x^2 + 1: inconclusive

    auto b8 = bracket_real_root({-8, 0, 0, 1});  // x^3 - 8
    REQUIRE(b8);
    CHECK(b8->first < 2);
    CHECK(b8->second > 2);

    CHECK_THROWS_AS(bracket_real_root({1, 1, 0}), domain_error);
}

TEST_CASE("oracle precision consistency") {
    for (auto coeffs : {std::vector<ExactInteger>{-2, 0, 0, 1}, {-1, -1, 0, 1}}) {
        auto b = bracket_real_root(coeffs);
        REQUIRE(b);
        ExactRational lo = bisect_root({coeffs, b->first, b->second, 96}).value();
        ExactRational hi = bisect_root({coeffs, b->first, b->second, 160}).value();
        CHECK(abs(lo - hi) < ExactRational(1, ExactInteger(1) << 96));
    }
}

TEST_CASE("perfect powers: oracle equals the integer root exactly") {
    auto b = bracket_real_root({-8, 0, 0, 1});
    REQUIRE(b);
    FixedReal r = bisect_root({{-8, 0, 0, 1}, b->first, b->second, 128});
    CHECK(r.value() == integer_root_floor(8, 3));
}
