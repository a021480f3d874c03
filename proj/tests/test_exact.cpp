#include "khovanskii/exact.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

TEST_CASE("integer_root_floor on perfect and non-perfect powers") {
    CHECK(integer_root_floor(8, 3) == 2);
    CHECK(integer_root_floor(0, 5) == 0);
    CHECK(integer_root_floor(17, 3) == 2);  // 2^3 <= 17 < 3^3
    CHECK(integer_root_floor(1, 2) == 1);
    CHECK(integer_root_floor(ExactInteger("1000000000000000000000000"), 2) ==
          ExactInteger("1000000000000"));
}

TEST_CASE("integer_root_floor sign handling") {
    CHECK_THROWS_AS(integer_root_floor(-4, 2), domain_error);
    // odd order: r^m <= x < (r+1)^m with negative x
    ExactInteger r = integer_root_floor(-17, 3);
    CHECK(r == -3);
    CHECK(pow_int(r, 3) <= -17);
    CHECK(pow_int(r + 1, 3) > -17);
    CHECK(integer_root_floor(-8, 3) == -2);
}

TEST_CASE("integer_root_floor exhaustive at desk scale") {
    // For every x up to 10^6 and m in 2..5 the floor property holds exactly.
    for (int m = 2; m <= 5; ++m) {
        ExactInteger r = 0;
        ExactInteger next_boundary = 1;  // (r+1)^m
        long mismatches = 0;
        for (long x = 0; x <= 1000000; ++x) {
            if (x >= next_boundary) {
                ++r;
                next_boundary = pow_int(r + 1, m);
            }
            if (integer_root_floor(x, m) != r) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("fixed_nth_root is correctly rounded to the stated width") {
    FixedReal v = fixed_nth_root(8, 3, 64);
    CHECK(abs(v.value() - 2) < ExactRational(1, ExactInteger(1) << 64));

    FixedReal w = fixed_nth_root(2, 3, 32);
    // w^3 must bracket 2 at the 32-bit scale
    ExactRational lo = w.value(), hi = lo + ExactRational(1, ExactInteger(1) << 32);
    CHECK(lo * lo * lo <= 2);
    CHECK(hi * hi * hi > 2);

    FixedReal s = fixed_nth_root(4, 2, 16);
    CHECK(abs(s.value() - 2) < ExactRational(1, 1 << 16));

    CHECK_THROWS_AS(fixed_nth_root(0, 3, 16), domain_error);
}

TEST_CASE("fixed_nth_root agrees across precisions") {
    for (long alpha : {2L, 7L, 100L, 12345L}) {
        for (int m : {2, 3, 5}) {
            FixedReal a = fixed_nth_root(alpha, m, 96);
            FixedReal b = fixed_nth_root(alpha, m, 160);
            CHECK(abs(a.value() - b.value()) < ExactRational(1, ExactInteger(1) << 96));
        }
    }
}

TEST_CASE("FixedReal round trip") {
    FixedReal f = FixedReal::from_rational(ExactRational(29, 23), 64);
    CHECK(abs(f.value() - ExactRational(29, 23)) < ExactRational(1, ExactInteger(1) << 64));
    FixedReal neg = FixedReal::from_rational(ExactRational(-7, 3), 32);
    CHECK(abs(neg.value() + ExactRational(7, 3)) < ExactRational(1, ExactInteger(1) << 32));
    CHECK(FixedReal::from_rational(ExactRational(5), 16).value() == 5);
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(40, 20) == ExactInteger("137846528820"));
}

TEST_CASE("log2_abs handles magnitudes past double range") {
    ExactInteger big = pow_int(ExactInteger(3), 1000);
    double l = log2_abs(ExactRational(big));
    CHECK(l == Catch::Approx(1000 * std::log2(3.0)).epsilon(1e-12));
    CHECK(log2_abs(ExactRational(1, big)) == Catch::Approx(-1000 * std::log2(3.0)).epsilon(1e-12));
    CHECK(std::isinf(log2_abs(ExactRational(0))));
}
