#include "khovanskii/matrix.hpp"
#include "khovanskii/sequences.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace khovanskii;

TEST_CASE("mat_pow by repeated squaring") {
    CHECK(mat_pow(SquareMatrix::identity(3), 7) == SquareMatrix::identity(3));
    SquareMatrix a{{1, 2, 2}, {1, 1, 2}, {1, 1, 1}};
    CHECK(mat_pow(a, 2) == SquareMatrix{{5, 6, 8}, {4, 5, 6}, {3, 4, 5}});
    SquareMatrix b{{1, 4}, {1, 1}};
    CHECK(mat_pow(b, 4) == SquareMatrix{{41, 80}, {20, 41}});
    CHECK(mat_pow(a, 0) == SquareMatrix::identity(3));
    CHECK_THROWS_AS(mat_pow(a, -1), domain_error);
}

TEST_CASE("char_poly_3: trace, principal minors, determinant") {
    // matrix with a on the diagonal, alpha above, 1 below
    auto khov = [](long a, long alpha) {
        SquareMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.at(i, j) = i == j ? a : (j > i ? alpha : 1);
        return m;
    };
    for (long a : {1L, -2L, 5L})
        for (long alpha : {2L, 3L, 10L}) {
            CharPoly3 cp = char_poly_3(khov(a, alpha));
            CHECK(cp.t == 3 * a);
            CHECK(cp.s == 3 * a * a - 3 * alpha);
            CHECK(cp.d == a * a * a + alpha - 3 * a * alpha + alpha * alpha);
        }

    for (long p : {1L, 2L, 9L})
        for (long q : {1L, 3L, 27L}) {
            SquareMatrix m(3);
            m.at(0, 0) = 1; m.at(0, 1) = p; m.at(0, 2) = q;
            m.at(1, 0) = 1; m.at(1, 1) = 1; m.at(1, 2) = 0;
            m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 1;
            CharPoly3 cp = char_poly_3(m);
            CHECK(cp.t == 3);
            CHECK(cp.s == 3 - p);
            CHECK(cp.d == q + 1 - p);
        }

    CharPoly3 id = char_poly_3(SquareMatrix::identity(3));
    CHECK((id.t == 3 && id.s == 3 && id.d == 1));
}

TEST_CASE("adjugate_3") {
    CHECK(adjugate_3(SquareMatrix::identity(3)) == SquareMatrix::identity(3));
    SquareMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    CHECK(adjugate_3(d) == SquareMatrix{{6, 0, 0}, {0, 3, 0}, {0, 0, 2}});

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        SquareMatrix a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                a.at(i, j) = static_cast<long>(rng() % 11) - 5;
        CHECK(a * adjugate_3(a) == det_3(a) * SquareMatrix::identity(3));
    }
}

TEST_CASE("a_seq_closed_form matches the hand-derived values") {
    CharPoly3 cp{3, -3, 1};  // alpha = 2, a = 1
    CHECK(a_seq_closed_form(cp, 0) == 1);
    CHECK(a_seq_closed_form(cp, 2) == 12);
    CHECK(a_seq_closed_form(cp, 3) == 46);
    CHECK(a_seq_closed_form(CharPoly3{7, -2, 5}, 0) == 1);
}

TEST_CASE("a_seq_extend recurrence") {
    CoefficientSequence s1 = make_sequence(CharPoly3{3, -3, 1});
    a_seq_extend(s1, 3);
    CHECK(s1.values == std::vector<ExactInteger>{1, 3, 12, 46});

    CoefficientSequence s2 = make_sequence(CharPoly3{3, 2, 1});  // p = q = 1 cubic
    a_seq_extend(s2, 3);
    CHECK(s2.values == std::vector<ExactInteger>{1, 3, 7, 16});

    CoefficientSequence s3 = make_sequence(CharPoly3{5, 0, 0});
    a_seq_extend(s3, 6);
    for (long n = 0; n <= 6; ++n)
        CHECK(s3.values[static_cast<size_t>(n)] == pow_int(ExactInteger(5), n));
}

TEST_CASE("closed form equals recurrence on a random sample") {
    std::mt19937_64 rng(77);
    auto rnd = [&] { return static_cast<long>(rng() % 11) - 5; };
    for (int t = 0; t < 40; ++t) {
        CharPoly3 cp{rnd(), rnd(), rnd()};
        CoefficientSequence seq = make_sequence(cp);
        a_seq_extend(seq, 40);
        std::vector<ExactInteger> closed = a_seq_closed_form_all(cp, 40);
        for (long n = 0; n <= 40; ++n) {
            REQUIRE(closed[static_cast<size_t>(n)] == seq.values[static_cast<size_t>(n)]);
            if (n <= 12)
                REQUIRE(a_seq_closed_form(cp, n) == seq.values[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("general_a_n") {
    CHECK(general_a_n(CharPolyK{3, {3, -3, 1}}, 3) == 46);
    CHECK(general_a_n(CharPolyK{3, {3, -3, 1}}, 3) == a_seq_closed_form(CharPoly3{3, -3, 1}, 3));
    // X^2 = 2X - 1: a_n = 1, 2, 3, 4, 5, ...
    CHECK(general_a_n(CharPolyK{2, {2, 1}}, 4) == 5);
    CHECK(general_a_n(CharPolyK{2, {2, 1}}, 0) == 1);
    CHECK(general_a_n(CharPolyK{4, {1, 2, 3, 4}}, 0) == 1);
}

TEST_CASE("general_a_n matches the order-k recurrence") {
    std::mt19937_64 rng(1234);
    auto rnd = [&] { return static_cast<long>(rng() % 9) - 4; };
    for (int k = 2; k <= 4; ++k) {
        for (int t = 0; t < 8; ++t) {
            CharPolyK cp;
            cp.k = k;
            for (int i = 0; i < k; ++i) cp.s.push_back(rnd());
            CoefficientSequence seq = make_sequence(cp);
            a_seq_extend(seq, 25);
            for (long n = 0; n <= 25; ++n)
                REQUIRE(general_a_n(cp, n) == seq.values[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("char_poly_k agrees with char_poly_3 on 3x3") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        SquareMatrix a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                a.at(i, j) = static_cast<long>(rng() % 15) - 7;
        CharPoly3 c3 = char_poly_3(a);
        CharPolyK ck = char_poly_k(a);
        REQUIRE(ck.k == 3);
        CHECK(ck.s[0] == c3.t);
        CHECK(ck.s[1] == c3.s);
        CHECK(ck.s[2] == c3.d);
    }
    // 2x2: s1 = trace, s2 = det
    SquareMatrix b{{3, 4}, {5, 6}};
    CharPolyK ck = char_poly_k(b);
    CHECK(ck.s[0] == 9);
    CHECK(ck.s[1] == -2);
}

TEST_CASE("power_via_cayley equals mat_pow") {
    SquareMatrix a{{1, 2, 2}, {1, 1, 2}, {1, 1, 1}};
    CHECK(power_via_cayley(a, 3) == mat_pow(a, 3));
    CHECK(power_via_cayley(SquareMatrix::identity(3), 5) == SquareMatrix::identity(3));
    CHECK_THROWS_AS(power_via_cayley(a, 2), domain_error);

    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        SquareMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.at(i, j) = static_cast<long>(rng() % 11) - 5;
        for (long n = 3; n <= 12; ++n) REQUIRE(power_via_cayley(m, n) == mat_pow(m, n));
    }
    for (int t = 0; t < 10; ++t) {
        SquareMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m.at(i, j) = static_cast<long>(rng() % 7) - 3;
        CHECK(power_via_cayley(m, 6) == mat_pow(m, 6));
        CHECK(power_via_cayley(m, 9) == mat_pow(m, 9));
    }
    for (int t = 0; t < 6; ++t) {
        SquareMatrix m(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                m.at(i, j) = static_cast<long>(rng() % 9) - 4;
        CHECK(power_via_cayley(m, 5) == mat_pow(m, 5));
    }
}

TEST_CASE("cayley_coefficients reconstruct the power") {
    SquareMatrix a{{1, 2, 0, 1}, {0, 1, 2, 0}, {1, 0, 1, 1}, {2, 1, 0, 1}};
    CharPolyK cp = char_poly_k(a);
    CayleyCoefficients cc = cayley_coefficients(cp, 7);
    REQUIRE(cc.k == 4);
    SquareMatrix acc = cc.b[0] * SquareMatrix::identity(4);
    SquareMatrix p = SquareMatrix::identity(4);
    for (int i = 1; i < 4; ++i) {
        p = p * a;
        acc = acc + cc.b[static_cast<size_t>(i)] * p;
    }
    CHECK(acc == mat_pow(a, 7));
}
