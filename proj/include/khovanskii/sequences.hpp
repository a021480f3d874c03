#pragma once

// Coefficient sequences attached to a characteristic polynomial: the O(n)
// linear recurrence used for iteration, the closed-form binomial sums kept
// for cross-validation, and matrix powers assembled from them without any
// matrix multiplication.

#include "khovanskii/exact.hpp"
#include "khovanskii/matrix.hpp"

#include <array>
#include <vector>

namespace khovanskii {

namespace detail {

// Pascal triangle in int64; rows up to 66 stay below 2^63.
inline long long binomial_small(int n, int k) {
    static constexpr int kMaxRow = 66;
    static const auto table = [] {
        std::array<std::array<long long, kMaxRow + 1>, kMaxRow + 1> t{};
        for (int i = 0; i <= kMaxRow; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || n < 0 || k > n) return 0;
    if (n <= kMaxRow) return table[n][k];
    return -1;  // caller falls back to exact binomial
}

inline ExactInteger binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long small = n <= 66 ? binomial_small(static_cast<int>(n), static_cast<int>(k)) : -1;
    if (small >= 0) return ExactInteger(small);
    return binomial(n, k);
}

}  // namespace detail

// a_n = sum over 2i+3j <= n of (-1)^i C(i+j,j) C(n-i-2j,i+j) t^{n-2i-3j} s^i d^j,
// with a_0 = 1. Kept as an independent route; iteration uses a_seq_extend.
inline ExactInteger a_seq_closed_form(const CharPoly3& cp, long n) {
    if (n < 0) throw domain_error("a_seq_closed_form: negative index");
    if (n == 0) return 1;
    std::vector<ExactInteger> tp(static_cast<size_t>(n) + 1), sp(n / 2 + 1), dp(n / 3 + 1);
    tp[0] = sp[0] = dp[0] = 1;
    for (long e = 1; e <= n; ++e) tp[e] = tp[e - 1] * cp.t;
    for (long e = 1; e <= n / 2; ++e) sp[e] = sp[e - 1] * cp.s;
    for (long e = 1; e <= n / 3; ++e) dp[e] = dp[e - 1] * cp.d;
    ExactInteger total = 0;
    for (long j = 0; 3 * j <= n; ++j) {
        for (long i = 0; 2 * i + 3 * j <= n; ++i) {
            ExactInteger term = detail::binom(i + j, j) * detail::binom(n - i - 2 * j, i + j);
            term *= tp[n - 2 * i - 3 * j];
            if (i) term *= sp[i];
            if (j) term *= dp[j];
            if (i & 1) total -= term; else total += term;
        }
    }
    return total;
}

// All of a_0..a_N through the closed form, sharing the power tables.
inline std::vector<ExactInteger> a_seq_closed_form_all(const CharPoly3& cp, long upto) {
    std::vector<ExactInteger> tp(static_cast<size_t>(upto) + 1), sp(upto / 2 + 1), dp(upto / 3 + 1);
    tp[0] = sp[0] = dp[0] = 1;
    for (long e = 1; e <= upto; ++e) tp[e] = tp[e - 1] * cp.t;
    for (long e = 1; e <= upto / 2; ++e) sp[e] = sp[e - 1] * cp.s;
    for (long e = 1; e <= upto / 3; ++e) dp[e] = dp[e - 1] * cp.d;
    std::vector<ExactInteger> out(static_cast<size_t>(upto) + 1);
    out[0] = 1;
    for (long n = 1; n <= upto; ++n) {
        ExactInteger total = 0;
        for (long j = 0; 3 * j <= n; ++j) {
            for (long i = 0; 2 * i + 3 * j <= n; ++i) {
                ExactInteger term = detail::binom(i + j, j) * detail::binom(n - i - 2 * j, i + j);
                term *= tp[n - 2 * i - 3 * j];
                if (i) term *= sp[i];
                if (j) term *= dp[j];
                if (i & 1) total -= term; else total += term;
            }
        }
        out[static_cast<size_t>(n)] = std::move(total);
    }
    return out;
}

struct CoefficientSequence {
    CharPolyK params;
    std::vector<ExactInteger> values;  // values[n] = a_n, a_0 = 1
};

inline CoefficientSequence make_sequence(const CharPolyK& cp) {
    return CoefficientSequence{cp, {ExactInteger(1)}};
}

inline CharPolyK as_char_poly_k(const CharPoly3& cp) {
    return CharPolyK{3, {cp.t, cp.s, cp.d}};
}

inline CoefficientSequence make_sequence(const CharPoly3& cp) {
    return make_sequence(as_char_poly_k(cp));
}

// Order-k recurrence a_n = s1 a_{n-1} - s2 a_{n-2} + ... + (-1)^{k-1} s_k a_{n-k},
// seeded by a_0 = 1 and a_{j<0} = 0.
inline void a_seq_extend(CoefficientSequence& seq, long upto) {
    const int k = seq.params.k;
    for (long n = static_cast<long>(seq.values.size()); n <= upto; ++n) {
        ExactInteger v = 0;
        for (int i = 1; i <= k && i <= n; ++i) {
            const ExactInteger& prev = seq.values[static_cast<size_t>(n - i)];
            if (i % 2 == 1) v += seq.params.s[static_cast<size_t>(i - 1)] * prev;
            else            v -= seq.params.s[static_cast<size_t>(i - 1)] * prev;
        }
        seq.values.push_back(std::move(v));
    }
}

// Closed-form a(n) for arbitrary order: sum over tuples (i2,...,ik) >= 0 with
// n - 2 i2 - 3 i3 - ... - k ik >= 0 of the multinomial
//   (n - i2 - 2 i3 - ... - (k-1) ik)! / (i2! ... ik! (n - 2 i2 - ... - k ik)!)
// times s1^{n - 2 i2 - ... - k ik} (-s2)^{i2} s3^{i3} ... ((-1)^{k-1} s_k)^{ik}.
// The s1 exponent equals the last factorial argument, which is the reading
// consistent with the order-3 sum and with the recurrence for every k.
inline ExactInteger general_a_n(const CharPolyK& cp, long n) {
    if (n < 0) throw domain_error("general_a_n: negative index");
    if (cp.k < 2) throw domain_error("general_a_n: order must be >= 2");
    if (n == 0) return 1;
    const int k = cp.k;
    std::vector<ExactInteger> s1p(static_cast<size_t>(n) + 1);
    s1p[0] = 1;
    for (long e = 1; e <= n; ++e) s1p[e] = s1p[e - 1] * cp.s[0];

    ExactInteger total = 0;
    std::vector<long> idx(static_cast<size_t>(k) + 1, 0);  // idx[j] = i_j, j = 2..k
    // Depth-first over exponent tuples; `weight` tracks 2 i2 + 3 i3 + ... so far.
    auto rec = [&](auto&& self, int j, long weight, long plain) -> void {
        // plain = i2 + i3 + ... accumulated, used for the multinomial arguments
        if (j > k) {
            const long top = n - (weight - plain);   // n - i2 - 2 i3 - ...
            const long s1e = n - weight;             // also last factorial argument
            ExactInteger c = 1;
            long consumed = top;
            // multinomial: top! / (i2! ... ik! s1e!) as a product of binomials
            for (int t = 2; t <= k; ++t) {
                c *= detail::binom(consumed, idx[static_cast<size_t>(t)]);
                consumed -= idx[static_cast<size_t>(t)];
            }
            ExactInteger term = c * s1p[s1e];
            for (int t = 2; t <= k; ++t) {
                long it = idx[static_cast<size_t>(t)];
                if (!it) continue;
                ExactInteger f = pow_int(cp.s[static_cast<size_t>(t - 1)], it);
                if (t % 2 == 0 && it % 2 == 1) f = -f;  // ((-1)^{t-1} s_t)^{i_t}
                term *= f;
            }
            total += term;
            return;
        }
        for (long i = 0; weight + j * i <= n; ++i) {
            idx[static_cast<size_t>(j)] = i;
            self(self, j + 1, weight + j * i, plain + i);
        }
        idx[static_cast<size_t>(j)] = 0;
    };
    rec(rec, 2, 0, 0);
    return total;
}

struct CayleyCoefficients {
    int k = 0;
    std::vector<ExactInteger> b;  // b[0] = b_0, ..., b[k-1] = b_{k-1}
    long n = 0;
};

// b_{k-1-r} = sum_{i=0}^{r} (-1)^i s_i a(n-k+1+r-i), with s_0 = 1.
inline CayleyCoefficients cayley_coefficients(const CharPolyK& cp, long n) {
    const int k = cp.k;
    if (n < k) throw domain_error("cayley_coefficients: exponent below dimension");
    CoefficientSequence seq = make_sequence(cp);
    a_seq_extend(seq, n);
    CayleyCoefficients out;
    out.k = k;
    out.n = n;
    out.b.assign(static_cast<size_t>(k), ExactInteger(0));
    for (int r = 0; r <= k - 1; ++r) {
        ExactInteger v = seq.values[static_cast<size_t>(n - k + 1 + r)];
        for (int i = 1; i <= r; ++i) {
            const ExactInteger& a_val = seq.values[static_cast<size_t>(n - k + 1 + r - i)];
            if (i % 2 == 1) v -= cp.s[static_cast<size_t>(i - 1)] * a_val;
            else            v += cp.s[static_cast<size_t>(i - 1)] * a_val;
        }
        out.b[static_cast<size_t>(k - 1 - r)] = std::move(v);
    }
    return out;
}

// A^n from the characteristic polynomial alone. Dimension 3 uses
// A^n = a_{n-1} A + a_{n-2} Adj(A) + (a_n - t a_{n-1}) I; other dimensions
// combine A^0..A^{k-1} with the Cayley coefficients.
inline SquareMatrix power_via_cayley(const SquareMatrix& a, long n) {
    const int k = a.dim();
    if (n < k) throw domain_error("power_via_cayley: exponent below dimension");
    if (k == 3) {
        CharPoly3 cp = char_poly_3(a);
        CoefficientSequence seq = make_sequence(cp);
        a_seq_extend(seq, n);
        const ExactInteger& an = seq.values[static_cast<size_t>(n)];
        const ExactInteger& an1 = seq.values[static_cast<size_t>(n - 1)];
        const ExactInteger& an2 = seq.values[static_cast<size_t>(n - 2)];
        return an1 * a + an2 * adjugate_3(a) + (an - cp.t * an1) * SquareMatrix::identity(3);
    }
    CharPolyK cp = char_poly_k(a);
    CayleyCoefficients cc = cayley_coefficients(cp, n);
    SquareMatrix acc = cc.b[0] * SquareMatrix::identity(k);
    SquareMatrix power = SquareMatrix::identity(k);
    for (int i = 1; i < k; ++i) {
        power = power * a;
        acc = acc + cc.b[static_cast<size_t>(i)] * power;
    }
    return acc;
}

}  // namespace khovanskii
