#pragma once

// Khovanskii cube-root iteration. A 3x3 matrix with parameter a has a
// dominant eigenvalue a + alpha^{1/3} + alpha^{2/3} whenever
// a > -alpha^{2/3} / (1 + alpha^{1/3}); ratios of entries of its powers then
// converge to powers of alpha^{1/3}. The power entries themselves reduce to
// one integer sequence a_n driven by an order-3 recurrence, so no matrix
// multiplication is ever needed. Includes the optimal-parameter rule, the
// quantitative error model at that parameter, and three fixed-parameter
// specializations with independent closed forms.

#include "khovanskii/algebraic.hpp"
#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"
#include "khovanskii/matrix.hpp"
#include "khovanskii/sequences.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace khovanskii {

struct CubeRootProblem {
    ExactInteger alpha;
    ExactInteger a;

    CharPoly3 char_poly() const {
        return CharPoly3{3 * a, 3 * a * a - 3 * alpha,
                         a * a * a + alpha - 3 * a * alpha + alpha * alpha};
    }
    std::optional<ExactInteger> perfect_root() const { return exact_root(alpha, 3); }
};

namespace detail {

inline RootContext cbrt_ctx(const ExactInteger& alpha) { return RootContext{alpha, 3}; }

// -theta^2 / (1 + theta), the admissibility bound on a.
inline RootExpr cbrt_param_bound(const ExactInteger& alpha) {
    RootContext ctx = cbrt_ctx(alpha);
    return RootExpr(ctx, {ExactRational(0), ExactRational(0), ExactRational(-1)},
                    {ExactRational(1), ExactRational(1)});
}

// h(a) = |beta_2 / beta_1|^2 as an expression in theta.
inline RootExpr cbrt_h(const ExactInteger& alpha, const ExactInteger& a) {
    RootContext ctx = cbrt_ctx(alpha);
    RootExpr num(ctx,
                 {ExactRational(a * a - alpha), ExactRational(alpha - a), ExactRational(1 - a)},
                 {ExactRational(1)});
    RootExpr lin(ctx, {ExactRational(a), ExactRational(1), ExactRational(1)}, {ExactRational(1)});
    return num / (lin * lin);
}

}  // namespace detail

inline CubeRootProblem make_cuberoot_problem(const ExactInteger& alpha, const ExactInteger& a) {
    if (alpha <= 1) throw domain_error("cuberoot: alpha must exceed 1");
    if (adaptive_compare(a, detail::cbrt_param_bound(alpha)) != Ordering::Greater)
        throw domain_error("cuberoot: parameter must exceed -alpha^(2/3)/(1+alpha^(1/3))");
    return CubeRootProblem{alpha, a};
}

struct CubeRootIterState {
    CubeRootProblem problem;
    long n = 2;
    // (a_{n-2}, a_{n-1}, a_n)
    ExactInteger w0, w1, w2;
};

inline CubeRootIterState make_cuberoot_iter(const ExactInteger& alpha, const ExactInteger& a) {
    CubeRootProblem p = make_cuberoot_problem(alpha, a);
    CharPoly3 cp = p.char_poly();
    CubeRootIterState st;
    st.w0 = 1;
    st.w1 = cp.t;
    st.w2 = cp.t * cp.t - cp.s;
    st.n = 2;
    st.problem = std::move(p);
    return st;
}

struct CubeRootStep {
    CubeRootIterState next;
    // r_n = 1 + (alpha - 1) a_{n-1} / (a_n - (a - 1) a_{n-1}); absent when
    // the denominator vanishes (transient, skipped).
    std::optional<ExactRational> approximant;
};

inline CubeRootStep step(const CubeRootIterState& st) {
    const ExactInteger& alpha = st.problem.alpha;
    const ExactInteger& a = st.problem.a;
    CubeRootStep out;
    ExactInteger den = st.w2 - (a - 1) * st.w1;
    if (den != 0)
        out.approximant = 1 + ExactRational((alpha - 1) * st.w1) / ExactRational(den);
    CharPoly3 cp = st.problem.char_poly();
    out.next.problem = st.problem;
    out.next.n = st.n + 1;
    out.next.w0 = st.w1;
    out.next.w1 = st.w2;
    out.next.w2 = cp.t * st.w2 - cp.s * st.w1 + cp.d * st.w0;
    return out;
}

// The defining matrix: a on the diagonal, alpha above, 1 below.
inline SquareMatrix cuberoot_matrix(const ExactInteger& alpha, const ExactInteger& a) {
    SquareMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = i == j ? a : (j > i ? alpha : ExactInteger(1));
    return m;
}

// A^n assembled from the coefficient sequence:
//   gamma_n = d a_{n-3} - 2 (a^2 - alpha) a_{n-2} + a a_{n-1}
//   delta_n = (alpha - a) a_{n-2} + a_{n-1}
//   rho_n   = (1 - a)     a_{n-2} + a_{n-1}
// arranged as rows (gamma, alpha rho, alpha delta / delta, gamma, alpha rho /
// rho, delta, gamma). Valid for n >= 1 with a_{j<0} = 0.
inline SquareMatrix power_matrix_form(const ExactInteger& alpha, const ExactInteger& a, long n) {
    if (n < 1) throw domain_error("power_matrix_form: n must be >= 1");
    CubeRootProblem p{alpha, a};
    CharPoly3 cp = p.char_poly();
    CoefficientSequence seq = make_sequence(cp);
    a_seq_extend(seq, n - 1);
    auto at = [&](long i) { return i < 0 ? ExactInteger(0) : seq.values[static_cast<size_t>(i)]; };
    ExactInteger gamma = cp.d * at(n - 3) - 2 * (a * a - alpha) * at(n - 2) + a * at(n - 1);
    ExactInteger delta = (alpha - a) * at(n - 2) + at(n - 1);
    ExactInteger rho = (1 - a) * at(n - 2) + at(n - 1);
    SquareMatrix m(3);
    m.at(0, 0) = gamma;          m.at(0, 1) = alpha * rho;   m.at(0, 2) = alpha * delta;
    m.at(1, 0) = delta;          m.at(1, 1) = gamma;         m.at(1, 2) = alpha * rho;
    m.at(2, 0) = rho;            m.at(2, 1) = delta;         m.at(2, 2) = gamma;
    return m;
}

// Entry ratio A_{n,i,j} / A_{n,u,v} (1-based indices); tends to
// alpha^{(j+u-i-v)/3}. Absent on a zero denominator entry.
inline std::optional<ExactRational> ratio_limit_general(const ExactInteger& alpha,
                                                        const ExactInteger& a,
                                                        std::pair<int, int> ij,
                                                        std::pair<int, int> uv, long n) {
    auto valid = [](std::pair<int, int> p) {
        return p.first >= 1 && p.first <= 3 && p.second >= 1 && p.second <= 3;
    };
    if (!valid(ij) || !valid(uv)) throw domain_error("ratio_limit_general: indices must be 1..3");
    make_cuberoot_problem(alpha, a);
    SquareMatrix m = power_matrix_form(alpha, a, n);
    const ExactInteger& den = m.at(uv.first - 1, uv.second - 1);
    if (den == 0) return std::nullopt;
    return ExactRational(m.at(ij.first - 1, ij.second - 1)) / ExactRational(den);
}

struct OptimalParamReport {
    ExactInteger alpha;
    FixedReal a_bar;                           // (theta + alpha) / (1 + theta)
    std::pair<ExactInteger, ExactInteger> candidates;  // floor and ceil of a_bar
    ExactInteger chosen;
    FixedReal h_at_chosen;
    FixedReal predicted_rate;                  // sqrt(h(chosen))
};

namespace detail {

// Enclosure of an expression, tightened until `bits` of width are reached.
inline RatInterval eval_tight(const RootExpr& e, int bits,
                              int precision_cap = default_precision_cap()) {
    const RootContext& ctx = e.ctx();
    if (auto r = exact_root(ctx.alpha, ctx.m))
        return RatInterval(e.eval_exact(ExactRational(*r)));
    ExactRational target(1, ExactInteger(1) << (bits + 1));
    for (int w = bits + 16; w <= precision_cap || w == bits + 16; w *= 2) {
        RatInterval v = e.eval(nth_root_interval(ctx.alpha, ctx.m, w));
        if (v.width() <= target) return v;
    }
    throw unresolved_comparison("eval_tight: cap reached before target width");
}

}  // namespace detail

// Fastest-converging integer parameter: one of the two integers around
// a_bar = (theta + alpha)/(1 + theta), decided by exact comparison of
// h; ties go to the smaller integer.
inline OptimalParamReport optimal_a(const ExactInteger& alpha, int report_bits = 128) {
    if (alpha <= 1) throw domain_error("optimal_a: alpha must exceed 1");
    RootContext ctx = detail::cbrt_ctx(alpha);
    RootExpr a_bar(ctx, {ExactRational(alpha), ExactRational(1)},
                   {ExactRational(1), ExactRational(1)});
    bool exact = false;
    ExactInteger c1 = floor_of(a_bar, &exact);
    ExactInteger c2 = exact ? c1 : c1 + 1;

    ExactInteger chosen = c1;
    if (c1 != c2) {
        Sign3 cmp = sign_of(detail::cbrt_h(alpha, c1) - detail::cbrt_h(alpha, c2));
        chosen = cmp == Sign3::Positive ? c2 : c1;
    }

    OptimalParamReport rep;
    rep.alpha = alpha;
    rep.a_bar = to_fixed(detail::eval_tight(a_bar, report_bits + 8), report_bits);
    rep.candidates = {c1, c2};
    rep.chosen = chosen;
    RatInterval h_iv = detail::eval_tight(detail::cbrt_h(alpha, chosen), report_bits + 8);
    rep.h_at_chosen = to_fixed(h_iv, report_bits);
    rep.predicted_rate = to_fixed(sqrt_interval(h_iv, report_bits + 8), report_bits);
    return rep;
}

// beta_1 - |beta_2| = beta_1 (1 - sqrt(h)); positive means the entry ratios
// converge. Monitored per instance rather than assumed from the parameter
// condition.
inline FixedReal dominance_margin(const CubeRootProblem& p, int bits = 64) {
    RootContext ctx = detail::cbrt_ctx(p.alpha);
    RootExpr beta1(ctx, {ExactRational(p.a), ExactRational(1), ExactRational(1)},
                   {ExactRational(1)});
    RatInterval b1 = detail::eval_tight(beta1, bits + 16);
    RatInterval h = detail::eval_tight(detail::cbrt_h(p.alpha, p.a), bits + 16);
    if (h.lo < 0) h.lo = 0;  // h is a squared modulus; clamp enclosure noise
    RatInterval margin = b1 - sqrt_interval(h, bits + 16) * b1;
    return to_fixed(margin, bits);
}

struct ErrorModelReport {
    ExactInteger alpha;
    ExactInteger a;
    long n = 0;
    FixedReal lhs;             // A_{n,2,1}/A_{n,3,1} - theta
    FixedReal main_term;       // 0 or (+-3/2^n) theta, by n mod 6
    FixedReal residual_bound;  // 8 n / 2^n + 48 theta / 4^n
    int signature = 0;         // -3, 0, +3
    FixedReal k_n;             // 2^n (2^n (q/theta - 1) - signature)
    bool within_bound = false;
};

inline int mod6_signature(long n) {
    switch (n % 6) {
        case 1: case 2: return -3;
        case 4: case 5: return 3;
        default: return 0;
    }
}

inline ErrorModelReport error_model_check(const ExactInteger& alpha, const ExactInteger& a,
                                          long n, int eval_bits = 256) {
    if (n < 3) throw domain_error("error_model_check: n must be >= 3");
    CubeRootProblem p{alpha, a};
    CoefficientSequence seq = make_sequence(p.char_poly());
    a_seq_extend(seq, n - 1);
    ExactInteger delta = (alpha - a) * seq.values[static_cast<size_t>(n - 2)] +
                         seq.values[static_cast<size_t>(n - 1)];
    ExactInteger rho = (1 - a) * seq.values[static_cast<size_t>(n - 2)] +
                       seq.values[static_cast<size_t>(n - 1)];
    if (rho == 0) throw domain_error("error_model_check: zero denominator entry");
    ExactRational q(delta, rho);

    RatInterval theta = nth_root_interval(alpha, 3, eval_bits);
    RatInterval lhs = RatInterval(q) - theta;
    const int sig = mod6_signature(n);
    ExactRational two_n = pow_rat(ExactRational(2), static_cast<unsigned long>(n));
    RatInterval main = ExactRational(sig) / two_n * theta;
    RatInterval bound = RatInterval(ExactRational(8 * n) / two_n) +
                        ExactRational(48) / (two_n * two_n) * theta;
    RatInterval resid = abs_iv(lhs - main);

    ErrorModelReport rep;
    rep.alpha = alpha;
    rep.a = a;
    rep.n = n;
    rep.signature = sig;
    rep.within_bound = resid.hi <= bound.lo;
    rep.lhs = to_fixed(lhs, eval_bits - 8);
    rep.main_term = to_fixed(main, eval_bits - 8);
    rep.residual_bound = to_fixed(bound, eval_bits - 8);
    RatInterval scaled = two_n * (RatInterval(q) / theta - RatInterval(ExactRational(1)));
    RatInterval k = two_n * (scaled - RatInterval(ExactRational(sig)));
    int k_bits = std::max(32, eval_bits - 2 * static_cast<int>(n) - 32);
    rep.k_n = to_fixed(k, k_bits);
    return rep;
}

inline ErrorModelReport error_model_check(const ExactInteger& alpha, long n,
                                          int eval_bits = 256) {
    return error_model_check(alpha, optimal_a(alpha).chosen, n, eval_bits);
}

// Fixed parameter a = 1: single closed-form sum, approximant
// 1 + (alpha - 1) a_{n-1} / a_n.
inline ExactRational corollary_a1(const ExactInteger& alpha, long n) {
    if (alpha < 1) throw domain_error("corollary_a1: alpha must be >= 1");
    if (n < 1) throw domain_error("corollary_a1: n must be >= 1");
    if (alpha == 1) return ExactRational(1);
    auto sum = [&](long nn) {
        ExactInteger total = 0;
        for (long j = 0; 3 * j <= nn; ++j)
            for (long i = 0; 2 * i + 3 * j <= nn; ++i) {
                ExactInteger term = detail::binom(i + j, j) * detail::binom(nn - i - 2 * j, i + j);
                term *= pow_int(ExactInteger(3), static_cast<unsigned long>(nn - i - 3 * j));
                term *= pow_int(alpha - 1, static_cast<unsigned long>(i + 2 * j));
                total += term;
            }
        return total;
    };
    return 1 + ExactRational((alpha - 1) * sum(n - 1)) / ExactRational(sum(n));
}

// Fixed parameter a = 0 at index 6n: two split sums a_n, b_n and approximant
// 1 + (alpha - 1) / (a_n / b_n + 1).
inline ExactRational corollary_a0(const ExactInteger& alpha, long n) {
    if (alpha < 1) throw domain_error("corollary_a0: alpha must be >= 1");
    if (n < 1) throw domain_error("corollary_a0: n must be >= 1");
    if (alpha == 1) return ExactRational(1);
    ExactInteger a_sum = 0, b_sum = 0;
    for (long i = 0; i <= n; ++i) {
        ExactInteger term = detail::binom(2 * n + i, 2 * n - 2 * i);
        term *= pow_int(ExactInteger(3), static_cast<unsigned long>(3 * i));
        term *= pow_int(alpha, static_cast<unsigned long>(2 * n + i));
        term *= pow_int(alpha + 1, static_cast<unsigned long>(2 * n - 2 * i));
        a_sum += term;
    }
    for (long i = 0; i <= n - 1; ++i) {
        ExactInteger term = detail::binom(2 * n + i, 2 * n - 2 * i - 1);
        term *= pow_int(ExactInteger(3), static_cast<unsigned long>(3 * i + 1));
        term *= pow_int(alpha, static_cast<unsigned long>(2 * n + i));
        term *= pow_int(alpha + 1, static_cast<unsigned long>(2 * n - 2 * i - 1));
        b_sum += term;
    }
    return 1 + ExactRational((alpha - 1) * b_sum) / ExactRational(a_sum + b_sum);
}

// alpha replaced by alpha^2 with a = alpha: approximant tends to alpha^{2/3}.
inline ExactRational corollary_alpha_sq(const ExactInteger& alpha, long n) {
    if (alpha < 1) throw domain_error("corollary_alpha_sq: alpha must be >= 1");
    if (n < 1) throw domain_error("corollary_alpha_sq: n must be >= 1");
    if (alpha == 1) return ExactRational(1);
    auto sum = [&](long nn) {
        ExactInteger total = 0;
        for (long i = 0; 3 * i <= nn; ++i) {
            ExactInteger term = detail::binom(nn - 2 * i, i);
            term *= pow_int(ExactInteger(3), static_cast<unsigned long>(nn - 3 * i));
            term *= pow_int(alpha, static_cast<unsigned long>(nn - i));
            term *= pow_int(alpha - 1, static_cast<unsigned long>(2 * i));
            total += term;
        }
        return total;
    };
    ExactInteger an = sum(n), an1 = sum(n - 1);
    ExactInteger den = an - (alpha - 1) * an1;
    if (den == 0) throw domain_error("corollary_alpha_sq: zero denominator");
    return 1 + ExactRational((alpha * alpha - 1) * an1) / ExactRational(den);
}

}  // namespace khovanskii
