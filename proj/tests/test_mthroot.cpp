#include "khovanskii/mthroot.hpp"
#include "khovanskii/cuberoot.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

TEST_CASE("matrix construction") {
    MthRootProblem p2 = make_mthroot_problem(4, 2, 1);
    CHECK(build_matrix(p2) == SquareMatrix{{1, 4}, {1, 1}});

    MthRootProblem p3 = make_mthroot_problem(7, 3, 2);
    CHECK(build_matrix(p3) == cuberoot_matrix(7, 2));

    MthRootProblem p4 = make_mthroot_problem(2, 4, 3);
    CHECK(build_matrix(p4) ==
          SquareMatrix{{3, 2, 2, 2}, {1, 3, 2, 2}, {1, 1, 3, 2}, {1, 1, 1, 3}});

    CHECK_THROWS_AS(make_mthroot_problem(4, 2, 0), domain_error);
    CHECK_THROWS_AS(make_mthroot_problem(4, 2, -1), domain_error);
    CHECK_THROWS_AS(make_mthroot_problem(4, 1, 1), domain_error);
    CHECK_THROWS_AS(make_mthroot_problem(0, 2, 1), domain_error);
}

TEST_CASE("entry ratios") {
    MthRootProblem p = make_mthroot_problem(4, 2, 1);
    auto r2 = ratio(p, {1, 2}, {1, 1}, 2);
    REQUIRE(r2);
    CHECK(*r2 == ExactRational(8, 5));  // A^2 = [[5,8],[2,5]]
    auto r4 = ratio(p, {1, 2}, {1, 1}, 4);
    REQUIRE(r4);
    CHECK(*r4 == ExactRational(80, 41));
    auto same = ratio(p, {2, 1}, {2, 1}, 6);
    REQUIRE(same);
    CHECK(*same == 1);
    CHECK_THROWS_AS(ratio(p, {0, 1}, {1, 1}, 2), domain_error);
}

TEST_CASE("certified roots of unity") {
    for (int m = 2; m <= 8; ++m) {
        ComplexBox w = root_of_unity(m, 128);
        ComplexBox wm = cpow(w, static_cast<unsigned long>(m));
        // the certified enclosure of omega^m must contain 1
        CHECK(wm.re.to_rat().lo <= 1);
        CHECK(wm.re.to_rat().hi >= 1);
        CHECK(wm.im.to_rat().lo <= 0);
        CHECK(wm.im.to_rat().hi >= 0);
        CHECK(wm.re.to_rat().width() < ExactRational(1, ExactInteger(1) << 100));
    }
}

TEST_CASE("eigen diagnostics") {
    MthRootProblem p = make_mthroot_problem(4, 2, 1);
    MthRootDiag diag = diagnose(p);
    REQUIRE(diag.eigenvalues.size() == 2);
    // beta_1 = 1 + 2 = 3, beta_2 = 1 - 2 = -1
    CHECK(abs(diag.eigenvalues[0].first.value() - 3) < ExactRational(1, 1 << 30));
    CHECK(abs(diag.eigenvalues[1].first.value() + 1) < ExactRational(1, 1 << 30));
    CHECK(abs(diag.dominance_margin.value() - 2) < ExactRational(1, 1 << 30));
    CHECK(diag.dominant);

    for (int m : {2, 3, 4, 5, 6}) {
        MthRootDiag d = diagnose(make_mthroot_problem(10, m, 1));
        CHECK(d.dominant);
        CHECK(d.dominance_margin.value() > 0);
    }
}

TEST_CASE("eigen-sum closed form reproduces exact entries") {
    // m = 2, n = 2, entry (1,1): (beta_1^2 + beta_2^2)/2 = (9 + 1)/2 = 5
    MthRootProblem p = make_mthroot_problem(4, 2, 1);
    EntryCheckReport rep = entry_closed_form_check(p, 2, 64);
    CHECK(rep.ok);
    CHECK(rep.inverse_ok);
    CHECK(rep.entries_checked == 4);

    // n = 1 reproduces the matrix itself
    MthRootProblem p5 = make_mthroot_problem(3, 5, 2);
    EntryCheckReport r1 = entry_closed_form_check(p5, 1, 96);
    CHECK(r1.ok);

    // m = 3 reduces to the cube-root display
    MthRootProblem p3 = make_mthroot_problem(2, 3, 1);
    EntryCheckReport r3 = entry_closed_form_check(p3, 17, 128);
    CHECK(r3.ok);
}

TEST_CASE("m = 3 ratios agree with the cube-root module exactly") {
    MthRootProblem p = make_mthroot_problem(5, 3, 2);
    for (long long n = 3; n <= 15; ++n) {
        auto a = ratio(p, {2, 1}, {3, 1}, n);
        auto b = ratio_limit_general(5, 2, {2, 1}, {3, 1}, n);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a == *b);
    }
}

TEST_CASE("approximate_root") {
    auto exact = approximate_root(make_mthroot_problem(4, 2, 1), 64);
    CHECK(exact.exact);
    CHECK(exact.converged);
    CHECK(exact.value == 2);

    auto fifth = approximate_root(make_mthroot_problem(2, 5, 1), 40);
    REQUIRE(fifth.converged);
    ExactRational oracle = fixed_nth_root(2, 5, 96).value();
    CHECK(abs(fifth.value - oracle) < ExactRational(1, 1000000));

    auto fourth = approximate_root(make_mthroot_problem(10, 4, 2), 40);
    REQUIRE(fourth.converged);
    ExactRational oracle4 = fixed_nth_root(10, 4, 96).value();
    CHECK(abs(fourth.value - oracle4) < ExactRational(1, 1000000));

    // cap exhaustion reports honestly instead of guessing
    auto capped = approximate_root(make_mthroot_problem(2, 5, 1), 4000, 64);
    CHECK_FALSE(capped.converged);
}
