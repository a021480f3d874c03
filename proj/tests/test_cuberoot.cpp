#include "khovanskii/cuberoot.hpp"
#include "khovanskii/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

TEST_CASE("make_cuberoot_iter seeds and admissibility") {
    CubeRootIterState st = make_cuberoot_iter(2, 1);
    CHECK(st.w0 == 1);
    CHECK(st.w1 == 3);
    CHECK(st.w2 == 12);
    CHECK(st.n == 2);

    // alpha = 8 puts the bound at exactly -4/3, so a = -2 is out of range
    CHECK_THROWS_AS(make_cuberoot_iter(8, -2), domain_error);
    CHECK_NOTHROW(make_cuberoot_iter(8, -1));
    CHECK_NOTHROW(make_cuberoot_iter(2, 0));
    CHECK_THROWS_AS(make_cuberoot_iter(1, 1), domain_error);
}

TEST_CASE("step produces the exact approximant stream") {
    CubeRootIterState st = make_cuberoot_iter(2, 1);
    CubeRootStep s2 = step(st);
    REQUIRE(s2.approximant);
    CHECK(*s2.approximant == ExactRational(5, 4));
    CubeRootStep s3 = step(s2.next);
    REQUIRE(s3.approximant);
    CHECK(*s3.approximant == ExactRational(29, 23));
}

TEST_CASE("perfect cube: iteration reaches the root exactly at times") {
    CubeRootIterState st = make_cuberoot_iter(8, 3);
    // a_3 = 9 a_2 exactly, so r_3 = 2 as a rational identity
    CubeRootStep s = step(st);            // r_2
    s = step(s.next);                     // r_3
    REQUIRE(s.approximant);
    CHECK(*s.approximant == 2);
    // later approximants wander off the exact value but stay close
    s = step(s.next);
    REQUIRE(s.approximant);
    CHECK(*s.approximant != 2);
    CHECK(abs(*s.approximant - 2) < ExactRational(1, 100));
}

TEST_CASE("power_matrix_form equals brute-force powers") {
    CHECK(power_matrix_form(2, 1, 2) == SquareMatrix{{5, 6, 8}, {4, 5, 6}, {3, 4, 5}});
    SquareMatrix a = cuberoot_matrix(2, 1);
    for (long n = 1; n <= 30; ++n) CHECK(power_matrix_form(2, 1, n) == mat_pow(a, n));
    SquareMatrix b = cuberoot_matrix(5, 0);
    for (long n = 1; n <= 20; ++n) CHECK(power_matrix_form(5, 0, n) == mat_pow(b, n));
}

TEST_CASE("entry ratios tend to powers of the root") {
    // (2,1)/(3,1) -> alpha^{1/3}
    ExactRational theta = fixed_nth_root(5, 3, 128).value();
    auto r = ratio_limit_general(5, 3, {2, 1}, {3, 1}, 60);
    REQUIRE(r);
    CHECK(abs(*r - theta) < ExactRational(1, ExactInteger(1) << 40));
    // (1,1)/(3,1) -> alpha^{2/3}
    ExactRational theta2 = fixed_nth_root(25, 3, 128).value();
    auto r2 = ratio_limit_general(5, 3, {1, 1}, {3, 1}, 60);
    REQUIRE(r2);
    CHECK(abs(*r2 - theta2) < ExactRational(1, ExactInteger(1) << 38));
    // identical index pairs give exactly 1
    auto r3 = ratio_limit_general(5, 3, {2, 2}, {2, 2}, 9);
    REQUIRE(r3);
    CHECK(*r3 == 1);
}

TEST_CASE("optimal parameter selection") {
    OptimalParamReport r8 = optimal_a(8);
    CHECK(r8.candidates.first == 3);
    CHECK(r8.candidates.second == 4);
    CHECK(r8.chosen == 3);
    // h(3) = 1/27 exactly; predicted rate = 1/sqrt(27)
    CHECK(abs(r8.h_at_chosen.value() - ExactRational(1, 27)) <
          ExactRational(1, ExactInteger(1) << 120));
    ExactRational rate = r8.predicted_rate.value();
    CHECK(abs(rate * rate - ExactRational(1, 27)) < ExactRational(1, ExactInteger(1) << 100));

    OptimalParamReport r27 = optimal_a(27);
    CHECK(r27.candidates.first == 7);
    CHECK(r27.candidates.second == 8);
    CHECK(r27.chosen == 8);  // 28*400 > 31*361

    // alpha = 2: h(1) = h(2) exactly; the tie goes to the smaller integer
    OptimalParamReport r2 = optimal_a(2);
    CHECK(r2.candidates.first == 1);
    CHECK(r2.candidates.second == 2);
    CHECK(r2.chosen == 1);
}

TEST_CASE("error model: signature cases and bounds") {
    // n = 3 mod 6: the conjugate powers cancel, main term is zero
    CHECK(mod6_signature(3) == 0);
    CHECK(mod6_signature(6) == 0);
    CHECK(mod6_signature(7) == -3);
    CHECK(mod6_signature(8) == -3);
    CHECK(mod6_signature(10) == 3);
    CHECK(mod6_signature(11) == 3);

    ErrorModelReport r1 = error_model_check(ExactInteger(1) << 13, 3);
    CHECK(r1.signature == 0);
    CHECK(r1.main_term.value() == 0);
    CHECK(r1.within_bound);
    CHECK(abs(r1.k_n.value()) < 61);

    for (long n : {4L, 5L}) {
        ErrorModelReport r = error_model_check(1000003, n);
        CHECK(r.signature == 3);
        CHECK(r.within_bound);
        CHECK(abs(r.k_n.value()) < 61);
    }
}

TEST_CASE("corollary with a = 1") {
    CHECK(corollary_a1(2, 3) == ExactRational(29, 23));
    CHECK(corollary_a1(1, 7) == 1);
    ExactRational theta10 = fixed_nth_root(10, 3, 96).value();
    CHECK(abs(corollary_a1(10, 50) - theta10) < ExactRational(1, ExactInteger(1) << 30));
}

TEST_CASE("corollary with a = 0 at index 6n") {
    CHECK(corollary_a0(1, 2) == 1);
    // equality with the a = 0 iteration at index 6n
    CubeRootIterState st = make_cuberoot_iter(2, 0);
    std::vector<ExactRational> approx(14);
    for (long n = 2; n <= 13; ++n) {
        CubeRootStep s = step(st);
        if (s.approximant) approx[static_cast<size_t>(n)] = *s.approximant;
        st = s.next;
    }
    CHECK(corollary_a0(2, 1) == approx[6]);
    CHECK(corollary_a0(2, 2) == approx[12]);
    ExactRational theta5 = fixed_nth_root(5, 3, 64).value();
    CHECK(abs(corollary_a0(5, 2) - theta5) < ExactRational(1, 100));
}

TEST_CASE("corollary with alpha squared") {
    CHECK(corollary_alpha_sq(1, 3) == 1);
    CHECK(abs(corollary_alpha_sq(8, 30) - 4) < ExactRational(1, ExactInteger(1) << 20));
    ExactRational two_thirds = fixed_nth_root(4, 3, 96).value();
    CHECK(abs(corollary_alpha_sq(2, 20) - two_thirds) < ExactRational(1, 1000));
}

TEST_CASE("dominance margin is positive under the admissibility condition") {
    for (long alpha : {2L, 8L, 100L}) {
        OptimalParamReport opt = optimal_a(alpha);
        FixedReal m = dominance_margin(CubeRootProblem{alpha, opt.chosen});
        CHECK(m.value() > 0);
    }
    FixedReal m0 = dominance_margin(CubeRootProblem{2, 0});
    CHECK(m0.value() > 0);
}
