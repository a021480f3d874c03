#pragma once

// Real-root iteration for x^3 - p x - q (p, q > 0, 27 q^2 > 4 p^3, so there
// is exactly one real root and it dominates). The companion-style matrix
// [[1,p,q],[1,1,0],[0,1,1]] has characteristic polynomial
// X^3 = 3 X^2 - (3-p) X + (q+1-p); its power entries come from one integer
// sequence, and -1 + a_n/a_{n-1} converges to the real root. A general cubic
// reduces to this form by the usual affine substitution, with an optional
// sign flip to land in the supported quadrant.

#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"
#include "khovanskii/matrix.hpp"
#include "khovanskii/sequences.hpp"

#include <optional>
#include <utility>

namespace khovanskii {

struct unsupported_regime : std::runtime_error {
    explicit unsupported_regime(const std::string& what) : std::runtime_error(what) {}
};

struct CubicProblem {
    ExactInteger p, q;

    // X^3 = 3 X^2 - (3-p) X + (q+1-p)
    CharPoly3 char_poly() const { return CharPoly3{3, 3 - p, q + 1 - p}; }
};

inline CubicProblem make_cubic_problem(const ExactInteger& p, const ExactInteger& q) {
    if (p <= 0 || q <= 0)
        throw unsupported_regime("cubic: requires p > 0 and q > 0");
    if (27 * q * q - 4 * p * p * p <= 0)
        throw unsupported_regime("cubic: requires 27 q^2 - 4 p^3 > 0 (one real root)");
    return CubicProblem{p, q};
}

struct GeneralCubic {
    ExactInteger a, b, c, d;  // a x^3 + b x^2 + c x + d, a != 0
};

// Depressed form x^3 + P x + Q plus the map back to roots of the original:
// a depressed root y corresponds to ((negated ? -y : y) - b) / (3a).
struct DepressedForm {
    ExactInteger big_p, big_q;
    CubicProblem problem;  // the x^3 - p x - q instance actually iterated
    bool negated = false;
    ExactInteger shift_b, scale_3a;

    ExactRational back_map(const ExactRational& y) const {
        ExactRational z = negated ? -y : y;
        return (z - ExactRational(shift_b)) / ExactRational(scale_3a);
    }
};

inline DepressedForm depress(const GeneralCubic& g) {
    if (g.a == 0) throw domain_error("depress: leading coefficient must be nonzero");
    ExactInteger P = 9 * g.a * g.c - 3 * g.b * g.b;
    ExactInteger Q = 2 * g.b * g.b * g.b - 9 * g.a * g.b * g.c + 27 * g.a * g.a * g.d;
    ExactInteger p = -P;
    ExactInteger q = -Q;
    bool negated = false;
    if (p > 0 && q < 0) {
        // x -> -x maps x^3 - p x - q to (minus) x^3 - p x + q.
        q = -q;
        negated = true;
    }
    if (p <= 0 || q <= 0)
        throw unsupported_regime("depress: depressed cubic leaves the p > 0, q > 0 regime");
    DepressedForm out{P, Q, make_cubic_problem(p, q), negated, g.b, 3 * g.a};
    return out;
}

struct CubicIterState {
    CubicProblem problem;
    long n = 2;
    ExactInteger w0, w1, w2;  // (a_{n-2}, a_{n-1}, a_n)
};

inline CubicIterState make_cubic_iter(const CubicProblem& prob) {
    CubicIterState st;
    st.problem = prob;
    st.n = 2;
    st.w0 = 1;
    st.w1 = 3;
    st.w2 = 6 + prob.p;  // 3*3 - (3-p)
    return st;
}

struct CubicStep {
    CubicIterState next;
    std::optional<ExactRational> approximant;  // r_n = -1 + a_n / a_{n-1}
};

inline CubicStep step(const CubicIterState& st) {
    CubicStep out;
    if (st.w1 != 0) out.approximant = ExactRational(st.w2) / ExactRational(st.w1) - 1;
    CharPoly3 cp = st.problem.char_poly();
    out.next.problem = st.problem;
    out.next.n = st.n + 1;
    out.next.w0 = st.w1;
    out.next.w1 = st.w2;
    out.next.w2 = cp.t * st.w2 - cp.s * st.w1 + cp.d * st.w0;
    return out;
}

inline SquareMatrix cubic_matrix(const CubicProblem& prob) {
    SquareMatrix m(3);
    m.at(0, 0) = 1; m.at(0, 1) = prob.p; m.at(0, 2) = prob.q;
    m.at(1, 0) = 1; m.at(1, 1) = 1;      m.at(1, 2) = 0;
    m.at(2, 0) = 0; m.at(2, 1) = 1;      m.at(2, 2) = 1;
    return m;
}

// A^n from the sequence:
//   eps_n = (1-p+q) a_{n-3} + (p-2) a_{n-2} + a_{n-1}
// with rows (eps, (q-p) a_{n-2} + p a_{n-1}, q (a_{n-1}-a_{n-2}) /
// a_{n-1}-a_{n-2}, eps, q a_{n-2} / a_{n-2}, a_{n-1}-a_{n-2}, eps - p a_{n-2}).
inline SquareMatrix cubic_power_matrix(const CubicProblem& prob, long n) {
    if (n < 1) throw domain_error("cubic_power_matrix: n must be >= 1");
    CoefficientSequence seq = make_sequence(prob.char_poly());
    a_seq_extend(seq, n - 1);
    auto at = [&](long i) { return i < 0 ? ExactInteger(0) : seq.values[static_cast<size_t>(i)]; };
    const ExactInteger& p = prob.p;
    const ExactInteger& q = prob.q;
    ExactInteger eps = (1 - p + q) * at(n - 3) + (p - 2) * at(n - 2) + at(n - 1);
    SquareMatrix m(3);
    m.at(0, 0) = eps;
    m.at(0, 1) = (q - p) * at(n - 2) + p * at(n - 1);
    m.at(0, 2) = q * (at(n - 1) - at(n - 2));
    m.at(1, 0) = at(n - 1) - at(n - 2);
    m.at(1, 1) = eps;
    m.at(1, 2) = q * at(n - 2);
    m.at(2, 0) = at(n - 2);
    m.at(2, 1) = at(n - 1) - at(n - 2);
    m.at(2, 2) = eps - p * at(n - 2);
    return m;
}

// The two cube-root pieces of the closed-form real root: with
// s = sqrt(81 q^2 - 12 p^3),
//   alpha_part = (2/3)^{1/3} p / (9q - s)^{1/3},  beta_part = ((9q - s)/18)^{1/3};
// they satisfy alpha_part^3 + beta_part^3 = q and 3 alpha_part beta_part = p,
// and their sum is the real root.
struct CubicCardano {
    FixedReal alpha_part, beta_part;
};

namespace detail {

// Enclosure of the real cube root of a positive rational, width 2^-bits.
inline RatInterval cbrt_interval_rat(const ExactRational& x, int bits) {
    if (x <= 0) throw domain_error("cbrt_interval_rat: positive values only");
    ExactInteger scaled = (numerator(x) << (3UL * bits)) / denominator(x);
    ExactInteger lo = integer_root_floor(scaled, 3);
    ExactInteger den = ExactInteger(1) << bits;
    return {ExactRational(lo, den), ExactRational(lo + 2, den)};
}

// Enclosures of (alpha_part, beta_part) at working precision w.
inline std::pair<RatInterval, RatInterval> cardano_part_intervals(const CubicProblem& prob,
                                                                  int w) {
    ExactInteger disc = 81 * prob.q * prob.q - 12 * prob.p * prob.p * prob.p;
    RatInterval s = sqrt_interval(RatInterval(ExactRational(disc)), w);
    RatInterval nine_q_minus{ExactRational(9 * prob.q) - s.hi, ExactRational(9 * prob.q) - s.lo};
    // (2/3)^{1/3} p / u^{1/3} = (2 p^3 / (3 u))^{1/3}
    ExactRational p3 = ExactRational(2 * prob.p * prob.p * prob.p) / 3;
    RatInterval alpha_part{cbrt_interval_rat(p3 / nine_q_minus.hi, w).lo,
                           cbrt_interval_rat(p3 / nine_q_minus.lo, w).hi};
    RatInterval beta_part{cbrt_interval_rat(nine_q_minus.lo / 18, w).lo,
                          cbrt_interval_rat(nine_q_minus.hi / 18, w).hi};
    return {alpha_part, beta_part};
}

}  // namespace detail

inline CubicCardano cardano_parts(const CubicProblem& prob, int bits = 128) {
    auto [a_iv, b_iv] = detail::cardano_part_intervals(prob, bits + 32);
    return CubicCardano{to_fixed(a_iv, bits), to_fixed(b_iv, bits)};
}

// The closed-form real root, evaluated through the plus-branch:
//   (2/3)^{1/3} p / (9q + s)^{1/3} + ((9q + s)/18)^{1/3}.
inline FixedReal cardano_reference(const CubicProblem& prob, int bits = 128) {
    const int w = bits + 32;
    ExactInteger disc = 81 * prob.q * prob.q - 12 * prob.p * prob.p * prob.p;
    RatInterval s = sqrt_interval(RatInterval(ExactRational(disc)), w);
    RatInterval nine_q_plus = RatInterval(ExactRational(9 * prob.q)) + s;
    ExactRational p3 = ExactRational(2 * prob.p * prob.p * prob.p) / 3;
    RatInterval term1{detail::cbrt_interval_rat(p3 / nine_q_plus.hi, w).lo,
                      detail::cbrt_interval_rat(p3 / nine_q_plus.lo, w).hi};
    RatInterval term2{detail::cbrt_interval_rat(nine_q_plus.lo / 18, w).lo,
                      detail::cbrt_interval_rat(nine_q_plus.hi / 18, w).hi};
    return to_fixed(term1 + term2, bits);
}

// |gamma_2 / gamma_1|, the geometric rate of the iteration: with the parts
// above, gamma_1 = 1 + alpha_part + beta_part and
// |gamma_2|^2 = (1 - (alpha_part+beta_part)/2)^2 + (3/4)(alpha_part-beta_part)^2.
inline FixedReal cubic_subdominant_ratio(const CubicProblem& prob, int bits = 64) {
    const int w = bits + 48;
    auto [a_iv, b_iv] = detail::cardano_part_intervals(prob, w);
    RatInterval sum = a_iv + b_iv;
    RatInterval diff = a_iv - b_iv;
    RatInterval re = RatInterval(ExactRational(1)) - ExactRational(1, 2) * sum;
    RatInterval mod2 = re * re + ExactRational(3, 4) * (diff * diff);
    if (mod2.lo < 0) mod2.lo = 0;
    RatInterval g2 = sqrt_interval(mod2, w);
    RatInterval g1 = RatInterval(ExactRational(1)) + sum;
    return to_fixed(g2 / g1, bits);
}

}  // namespace khovanskii
