#include "khovanskii/polyroot.hpp"
#include "khovanskii/report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace khovanskii;

namespace {
const std::vector<ExactInteger> kCubic{-1, -1, 0, 1};  // x^3 - x - 1
}

TEST_CASE("matrix construction from the fixed-point equations") {
    GeneralPolyProblem p = make_general_poly_problem(kCubic, 3, 1);
    CHECK(build_general_matrix(p) == SquareMatrix{{3, 0, 1}, {1, 3, 1}, {0, 1, 3}});

    // m = 2 keeps only the last two row rules
    GeneralPolyProblem p2 = make_general_poly_problem({1, 0, 1}, 2, 1);  // x^2 + 1
    CHECK(build_general_matrix(p2) == SquareMatrix{{2, -1}, {1, 2}});

    // scaling (k, l) -> (2k, 2l) scales the whole matrix
    GeneralPolyProblem ps = make_general_poly_problem(kCubic, 6, 2);
    CHECK(build_general_matrix(ps) == ExactInteger(2) * build_general_matrix(p));

    CHECK_THROWS_AS(make_general_poly_problem(kCubic, 0, 1), domain_error);
    CHECK_THROWS_AS(make_general_poly_problem(kCubic, 1, 0), domain_error);
    CHECK_THROWS_AS(make_general_poly_problem({1, 1, 0}, 1, 1), domain_error);  // a_m = 0
    CHECK_THROWS_AS(make_general_poly_problem({1, 1}, 1, 1), domain_error);     // degree 1
}

TEST_CASE("m = 4 and m = 5 row layout") {
    GeneralPolyProblem q = make_general_poly_problem({-1, -1, 0, 0, 1}, 3, 1);  // x^4 - x - 1
    SquareMatrix m = build_general_matrix(q);
    CHECK(m == SquareMatrix{{3, 1, 0, 0}, {0, 3, 0, 1}, {1, 1, 3, 0}, {0, 0, 1, 3}});
    // row 3 is the coefficient row: -l a_0 = 1, -l a_1 = 1, k - l a_3 = 3, -l a_2 = 0
}

TEST_CASE("convergence on x^3 - x - 1") {
    GeneralPolyProblem p = make_general_poly_problem(kCubic, 3, 1);
    LimitVector lv = iterate_general(p, 512, 48);
    REQUIRE(lv.converged);
    CHECK(lv.outcome == IterOutcome::Converged);
    REQUIRE(lv.betas.size() == 3);
    CHECK(lv.betas[2] == 1);
    CHECK(decimal_string(lv.betas[1], 5).substr(0, 7) == "1.32472");
    ExactRational residual = abs(eval_poly(kCubic, lv.betas[1]));
    CHECK(residual < ExactRational(1, 1000000));
    // beta_2 * beta_1 = 1 within tolerance
    CHECK(abs(lv.betas[1] * lv.betas[0] - 1) < ExactRational(1, ExactInteger(1) << 40));
}

TEST_CASE("no real roots: reported without error") {
    const std::vector<ExactInteger> no_real{1, 0, 1};  // x^2 + 1
    for (long k : {1L, 2L, 5L}) {
        GeneralPolyProblem p = make_general_poly_problem(no_real, k, 1);
        LimitVector lv = iterate_general(p, 256, 48);
        CHECK_FALSE(lv.converged);
        CHECK(lv.outcome != IterOutcome::Converged);
    }
}

TEST_CASE("parameter scan tabulates outcomes") {
    auto table = parameter_scan(kCubic, 1, 8, 1, 2, 512, 48);
    CHECK(table.size() == 16);
    int converged = 0;
    for (const auto& cell : table)
        if (cell.outcome == IterOutcome::Converged) {
            ++converged;
            REQUIRE(cell.root);
            CHECK(abs(eval_poly(kCubic, *cell.root)) < ExactRational(1, 1000000));
        }
    CHECK(converged >= 1);

    auto none = parameter_scan({1, 0, 1}, 1, 4, 1, 1, 128, 48);
    for (const auto& cell : none) CHECK(cell.outcome != IterOutcome::Converged);
}

TEST_CASE("ratios are homogeneous in (k, l)") {
    GeneralPolyProblem a = make_general_poly_problem(kCubic, 2, 1);
    GeneralPolyProblem b = make_general_poly_problem(kCubic, 6, 3);
    for (long long n : {5LL, 9LL, 33LL}) {
        SquareMatrix pa = mat_pow(build_general_matrix(a), n);
        SquareMatrix pb = mat_pow(build_general_matrix(b), n);
        REQUIRE(pa.at(2, 0) != 0);
        REQUIRE(pb.at(2, 0) != 0);
        for (int i = 0; i < 3; ++i)
            CHECK(ExactRational(pa.at(i, 0)) / ExactRational(pa.at(2, 0)) ==
                  ExactRational(pb.at(i, 0)) / ExactRational(pb.at(2, 0)));
    }
}

TEST_CASE("quartic converges and satisfies the system") {
    const std::vector<ExactInteger> quartic{-1, -1, 0, 0, 1};  // x^4 - x - 1
    GeneralPolyProblem p = make_general_poly_problem(quartic, 3, 1);
    LimitVector lv = iterate_general(p, 2048, 48);
    REQUIRE(lv.converged);
    const ExactRational& b1 = lv.betas[0];
    const ExactRational& b2 = lv.betas[1];
    const ExactRational& b3 = lv.betas[2];
    ExactRational tol(1, ExactInteger(1) << 40);
    CHECK(lv.betas[3] == 1);
    CHECK(abs(b3 * b2 - 1) < tol);        // beta_{m-1} beta_{m-2} = 1
    CHECK(abs(b2 - b3 * b1) < tol);       // beta_{i+1} = beta_{m-1} beta_i
    CHECK(abs(eval_poly(quartic, b3)) < ExactRational(1, 1000000));
}
