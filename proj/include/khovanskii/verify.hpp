#pragma once

// Verification suites behind `verify --suite ...` and the acceptance
// harness. Every suite is deterministic for a fixed seed; randomized grids
// draw from a seeded engine with plain modulo mapping (never the standard
// distributions, whose output is implementation-defined).

#include "khovanskii/cuberoot.hpp"
#include "khovanskii/cubic.hpp"
#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"
#include "khovanskii/matrix.hpp"
#include "khovanskii/mthroot.hpp"
#include "khovanskii/oracle.hpp"
#include "khovanskii/polyroot.hpp"
#include "khovanskii/report.hpp"
#include "khovanskii/sequences.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace khovanskii::verify {

struct Result {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 20) notes.push_back(what);
        }
    }
    bool passed() const { return failures == 0; }
};

class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}
    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

// --- matpow ---------------------------------------------------------------

// Random 3x3 matrices: closed-form power identity against repeated squaring,
// and the adjugate identity.
inline Result cayley_identities(std::uint64_t seed, int matrices = 200) {
    Result r{"cayley-3x3"};
    DetRng rng(seed);
    for (int t = 0; t < matrices; ++t) {
        SquareMatrix a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = rng.range(-5, 5);
        SquareMatrix adj = adjugate_3(a);
        r.expect(a * adj == det_3(a) * SquareMatrix::identity(3), "A*Adj(A) != det(A)*I");
        for (long n = 3; n <= 12; ++n) {
            std::ostringstream what;
            bool ok = power_via_cayley(a, n) == mat_pow(a, n);
            if (!ok) what << "cayley power mismatch at n=" << n;
            r.expect(ok, what.str());
        }
    }
    return r;
}

// Random 4x4 matrices through the general coefficient path.
inline Result cayley_general_dim(std::uint64_t seed, int matrices = 40) {
    Result r{"cayley-4x4"};
    DetRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < matrices; ++t) {
        SquareMatrix a(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a.at(i, j) = rng.range(-3, 3);
        for (long n = 4; n <= 8; ++n)
            r.expect(power_via_cayley(a, n) == mat_pow(a, n), "4x4 cayley power mismatch");
    }
    return r;
}

// Exhaustive (t,s,d) grid: closed form equals the recurrence.
inline Result closed_form_grid(int bound = 5, long n_max = 40) {
    Result r{"closed-form-vs-recurrence"};
    for (int t = -bound; t <= bound; ++t)
        for (int s = -bound; s <= bound; ++s)
            for (int d = -bound; d <= bound; ++d) {
                CharPoly3 cp{t, s, d};
                CoefficientSequence seq = make_sequence(cp);
                a_seq_extend(seq, n_max);
                std::vector<ExactInteger> closed = a_seq_closed_form_all(cp, n_max);
                for (long n = 0; n <= n_max; ++n) {
                    bool ok = closed[static_cast<size_t>(n)] == seq.values[static_cast<size_t>(n)];
                    if (!ok) {
                        std::ostringstream what;
                        what << "closed form != recurrence at (" << t << "," << s << "," << d
                             << "), n=" << n;
                        r.expect(false, what.str());
                    } else {
                        r.expect(true, "");
                    }
                }
            }
    return r;
}

// Order-k closed form against the order-k recurrence; k = 3 cross-checked
// against the order-3 closed form.
inline Result general_order_recurrence(std::uint64_t seed, int vectors_per_k = 25,
                                       long n_max = 25) {
    Result r{"general-order-closed-form"};
    DetRng rng(seed ^ 0xda942042e4dd58b5ull);
    for (int k = 2; k <= 4; ++k) {
        for (int t = 0; t < vectors_per_k; ++t) {
            CharPolyK cp;
            cp.k = k;
            for (int i = 0; i < k; ++i) cp.s.push_back(rng.range(-4, 4));
            CoefficientSequence seq = make_sequence(cp);
            a_seq_extend(seq, n_max);
            for (long n = 0; n <= n_max; ++n) {
                ExactInteger got = general_a_n(cp, n);
                r.expect(got == seq.values[static_cast<size_t>(n)],
                         "general_a_n != recurrence (k=" + std::to_string(k) + ")");
                if (k == 3)
                    r.expect(got == a_seq_closed_form(CharPoly3{cp.s[0], cp.s[1], cp.s[2]}, n),
                             "general_a_n != order-3 closed form");
            }
        }
    }
    return r;
}

// --- cuberoot ---------------------------------------------------------------

inline const std::vector<long>& cuberoot_alpha_grid() {
    static const std::vector<long> grid{2, 3, 5, 10, 100, 1000};
    return grid;
}

// Convergence to the oracle root by n = 80 and the fitted geometric rate
// over n in [24, 60] against sqrt(h) at the optimal parameter.
inline Result cuberoot_convergence(int err_bits = 256) {
    Result r{"cuberoot-convergence-rate"};
    for (long alpha : cuberoot_alpha_grid()) {
        OptimalParamReport opt = optimal_a(alpha);
        ExactRational oracle = fixed_nth_root(alpha, 3, err_bits).value();
        CubeRootIterState st = make_cuberoot_iter(alpha, opt.chosen);
        std::vector<RatePoint> pts;
        ExactRational e80;
        for (long n = 2; n <= 80; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant) {
                ExactRational e = abs(*stp.approximant - oracle);
                if (n >= 24 && n <= 60 && e != 0) pts.push_back({n, log2_abs(e)});
                if (n == 80) e80 = e;
            }
            st = stp.next;
        }
        r.expect(e80 < ExactRational(1, 100000000),
                 "alpha=" + std::to_string(alpha) + ": |r_80 - root| >= 1e-8");
        auto rate = fit_geometric_rate(pts);
        double predicted = opt.predicted_rate.value().convert_to<double>();
        bool ok = rate && std::abs(*rate - predicted) / predicted <= 0.10;
        std::ostringstream what;
        if (!ok)
            what << "alpha=" << alpha << ": fitted rate "
                 << (rate ? std::to_string(*rate) : std::string("none")) << " not within 10% of "
                 << predicted;
        r.expect(ok, what.str());
    }
    return r;
}

// Residual bound |lhs - main_term| <= 8n/2^n + 48 alpha^{1/3}/4^n over the
// alpha grid, n in [3, 40].
inline Result cuberoot_error_model() {
    Result r{"cuberoot-error-model"};
    for (long alpha : cuberoot_alpha_grid()) {
        ExactInteger a = optimal_a(alpha).chosen;
        for (long n = 3; n <= 40; ++n) {
            ErrorModelReport rep = error_model_check(alpha, a, n);
            std::ostringstream what;
            if (!rep.within_bound)
                what << "bound violated at alpha=" << alpha << ", n=" << n;
            r.expect(rep.within_bound, what.str());
        }
    }
    return r;
}

// 2^n (A_{n,2,1} / (A_{n,3,1} alpha^{1/3}) - 1) within 61/2^n of the mod-6
// signature for alpha = 2^{4n} + 1, n = 3..8, at >= 192-bit evaluation.
inline Result cuberoot_mod6_signature(int eval_bits = 192) {
    Result r{"cuberoot-mod6-signature"};
    for (long n = 3; n <= 8; ++n) {
        ExactInteger alpha = (ExactInteger(1) << (4 * n)) + 1;
        ExactInteger a = optimal_a(alpha).chosen;
        CubeRootProblem prob{alpha, a};
        CoefficientSequence seq = make_sequence(prob.char_poly());
        a_seq_extend(seq, n - 1);
        ExactInteger delta = (alpha - a) * seq.values[static_cast<size_t>(n - 2)] +
                             seq.values[static_cast<size_t>(n - 1)];
        ExactInteger rho = (1 - a) * seq.values[static_cast<size_t>(n - 2)] +
                           seq.values[static_cast<size_t>(n - 1)];
        RatInterval theta = nth_root_interval(alpha, 3, eval_bits);
        ExactRational two_n = pow_rat(ExactRational(2), static_cast<unsigned long>(n));
        RatInterval q = RatInterval(ExactRational(delta, rho)) / theta;
        RatInterval quantity = two_n * (q - RatInterval(ExactRational(1)));
        RatInterval dist = abs_iv(quantity - RatInterval(ExactRational(mod6_signature(n))));
        bool ok = dist.hi < ExactRational(61) / two_n;
        std::ostringstream what;
        if (!ok) what << "mod-6 signature out of range at n=" << n;
        r.expect(ok, what.str());
    }
    return r;
}

// Exact structure: sequence-assembled powers equal repeated squaring, the
// iteration approximant equals the entry ratio one index up, parameter
// independence of the limit, and perfect-cube behavior.
inline Result cuberoot_identities() {
    Result r{"cuberoot-identities"};
    const std::vector<std::pair<long, long>> probs{{2, 1}, {2, 0}, {5, 3}, {8, 3},
                                                   {10, 4}, {100, 19}};
    for (auto [alpha, a] : probs) {
        SquareMatrix base = cuberoot_matrix(alpha, a);
        CubeRootIterState st = make_cuberoot_iter(alpha, a);
        std::vector<ExactRational> approx(81);
        for (long n = 2; n <= 80; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant) approx[static_cast<size_t>(n)] = *stp.approximant;
            st = stp.next;
        }
        for (long n = 3; n <= 30; ++n) {
            r.expect(power_matrix_form(alpha, a, n) == mat_pow(base, n),
                     "power_matrix_form != mat_pow");
            auto ratio = ratio_limit_general(alpha, a, {2, 1}, {3, 1}, n);
            r.expect(ratio && *ratio == approx[static_cast<size_t>(n - 1)],
                     "entry ratio != approximant at shifted index");
        }
    }
    // Limit independent of a (alpha = 5).
    ExactRational oracle5 = fixed_nth_root(5, 3, 256).value();
    for (long a : {1L, 2L, 3L, 5L}) {
        CubeRootIterState st = make_cuberoot_iter(5, a);
        ExactRational last;
        for (long n = 2; n <= 80; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant) last = *stp.approximant;
            st = stp.next;
        }
        r.expect(abs(last - oracle5) < ExactRational(1, 100000000),
                 "alpha=5 iteration depends on a beyond 1e-8");
    }
    // Perfect cube: the approximant stream hits the exact root.
    {
        CubeRootProblem prob{8, 3};
        r.expect(prob.perfect_root() && *prob.perfect_root() == 2, "perfect_root(8) != 2");
        CubeRootIterState st = make_cuberoot_iter(8, 3);
        bool exact_hit = false;
        ExactRational last;
        for (long n = 2; n <= 40; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant) {
                last = *stp.approximant;
                if (last == 2) exact_hit = true;
            }
            st = stp.next;
        }
        r.expect(exact_hit, "alpha=8: no exact rational hit of the root");
        r.expect(abs(last - 2) < ExactRational(1, 1 << 30), "alpha=8: r_40 not near 2");
    }
    // Dominance margin is certified positive on the grid.
    for (long alpha : cuberoot_alpha_grid()) {
        ExactInteger a = optimal_a(alpha).chosen;
        FixedReal margin = dominance_margin(CubeRootProblem{alpha, a});
        r.expect(margin.value() > 0, "dominance margin not positive");
    }
    return r;
}

// The three fixed-parameter specializations against the main iteration and
// the oracle.
inline Result cuberoot_corollaries() {
    Result r{"cuberoot-corollaries"};
    for (long alpha : {2L, 10L}) {
        CubeRootIterState st = make_cuberoot_iter(alpha, 1);
        for (long n = 2; n <= 20; ++n) {
            CubeRootStep stp = step(st);
            r.expect(stp.approximant && *stp.approximant == corollary_a1(alpha, n),
                     "corollary a=1 mismatch with iteration");
            st = stp.next;
        }
    }
    r.expect(corollary_a1(1, 5) == 1, "corollary a=1 at alpha=1");
    r.expect(abs(corollary_a1(10, 60) - fixed_nth_root(10, 3, 128).value()) <
                 ExactRational(1, ExactInteger(1) << 40),
             "corollary a=1 far from oracle at n=60");
    for (long alpha : {2L, 5L}) {
        CubeRootIterState st = make_cuberoot_iter(alpha, 0);
        std::vector<ExactRational> approx(20);
        for (long n = 2; n < 20; ++n) {
            CubeRootStep stp = step(st);
            if (stp.approximant) approx[static_cast<size_t>(n)] = *stp.approximant;
            st = stp.next;
        }
        for (long n = 1; n <= 3; ++n)
            r.expect(corollary_a0(alpha, n) == approx[static_cast<size_t>(6 * n)],
                     "corollary a=0 mismatch with index-6n iteration");
    }
    r.expect(corollary_a0(1, 3) == 1, "corollary a=0 at alpha=1");
    r.expect(abs(corollary_a0(5, 2) - fixed_nth_root(5, 3, 64).value()) < ExactRational(1, 100),
             "corollary a=0 not within 1e-2 at n=2");
    for (long alpha : {2L, 8L}) {
        CubeRootIterState st = make_cuberoot_iter(alpha * alpha, alpha);
        for (long n = 2; n <= 20; ++n) {
            CubeRootStep stp = step(st);
            r.expect(stp.approximant && *stp.approximant == corollary_alpha_sq(alpha, n),
                     "corollary alpha^2 mismatch with iteration");
            st = stp.next;
        }
    }
    r.expect(corollary_alpha_sq(1, 4) == 1, "corollary alpha^2 at alpha=1");
    r.expect(abs(corollary_alpha_sq(8, 40) - 4) < ExactRational(1, ExactInteger(1) << 30),
             "corollary alpha^2: alpha=8 not near 4");
    ExactRational two_thirds = fixed_nth_root(4, 3, 128).value();  // 2^{2/3} = 4^{1/3}
    r.expect(abs(corollary_alpha_sq(2, 20) - two_thirds) < ExactRational(1, 1000),
             "corollary alpha^2: alpha=2, n=20 not within 1e-3");
    return r;
}

// --- cubic ------------------------------------------------------------------

inline const std::vector<std::pair<long, long>>& cubic_pq_grid() {
    static const std::vector<std::pair<long, long>> grid{{1, 1}, {2, 3}, {5, 7}, {9, 27}};
    return grid;
}

inline Result cubic_suite() {
    Result r{"cubic"};
    for (auto [p, q] : cubic_pq_grid()) {
        CubicProblem prob = make_cubic_problem(p, q);
        SquareMatrix base = cubic_matrix(prob);
        for (long n = 1; n <= 25; ++n)
            r.expect(cubic_power_matrix(prob, n) == mat_pow(base, n),
                     "cubic_power_matrix != mat_pow");

        auto bracket = bracket_real_root({ExactInteger(-q), ExactInteger(-p), 0, 1});
        r.expect(bracket.has_value(), "no bracket for cubic");
        if (!bracket) continue;
        FixedReal oracle = bisect_root({{ExactInteger(-q), ExactInteger(-p), 0, 1},
                                        bracket->first, bracket->second, 256});
        ExactRational oracle_v = oracle.value();

        CubicIterState st = make_cubic_iter(prob);
        std::vector<RatePoint> pts;
        std::vector<ExactRational> approx(81);
        for (long n = 2; n <= 80; ++n) {
            CubicStep stp = step(st);
            if (stp.approximant) {
                approx[static_cast<size_t>(n)] = *stp.approximant;
                ExactRational e = abs(*stp.approximant - oracle_v);
                if (n >= 30 && e != 0) pts.push_back({n, log2_abs(e)});
            }
            st = stp.next;
        }
        r.expect(abs(approx[80] - oracle_v) < ExactRational(1, 1000000),
                 "cubic iteration not within 1e-6 of oracle by n=80");

        // Approximant equals the entry ratio at the next power.
        for (long n = 2; n <= 25; ++n) {
            SquareMatrix pw = cubic_power_matrix(prob, n + 1);
            r.expect(ExactRational(pw.at(1, 0)) / ExactRational(pw.at(2, 0)) ==
                         approx[static_cast<size_t>(n)],
                     "cubic entry ratio != approximant");
        }

        FixedReal cardano = cardano_reference(prob, 128);
        r.expect(abs(cardano.value() - oracle_v) < ExactRational(1, ExactInteger(1) << 100),
                 "cardano_reference differs from oracle beyond 2^-100");
        CubicCardano parts = cardano_parts(prob, 128);
        ExactRational ap = parts.alpha_part.value(), bp = parts.beta_part.value();
        r.expect(abs(ap * ap * ap + bp * bp * bp - q) < ExactRational(1, ExactInteger(1) << 90),
                 "cardano parts: alpha^3 + beta^3 != q");
        r.expect(abs(3 * ap * bp - p) < ExactRational(1, ExactInteger(1) << 90),
                 "cardano parts: 3 alpha beta != p");

        auto rate = fit_geometric_rate(pts);
        double predicted = cubic_subdominant_ratio(prob).value().convert_to<double>();
        bool ok = rate && std::abs(*rate - predicted) / predicted <= 0.10;
        std::ostringstream what;
        if (!ok) what << "cubic rate off at p=" << p << ", q=" << q;
        r.expect(ok, what.str());
    }

    // Reduction of general cubics, including the sign-flip path.
    {
        DepressedForm dep = depress({1, 0, -1, -1});  // x^3 - x - 1
        r.expect(dep.problem.p == 9 && dep.problem.q == 27 && !dep.negated,
                 "depress(x^3 - x - 1) != (9, 27)");
        CubicIterState st = make_cubic_iter(dep.problem);
        ExactRational last;
        for (long n = 2; n <= 90; ++n) {
            CubicStep stp = step(st);
            if (stp.approximant) last = *stp.approximant;
            st = stp.next;
        }
        ExactRational mapped = dep.back_map(last);
        ExactRational residual = abs(eval_poly({ExactInteger(-1), ExactInteger(-1), 0, 1}, mapped));
        r.expect(residual < ExactRational(1, ExactInteger(1) << 64),
                 "depress round trip residual >= 2^-64");
    }
    {
        DepressedForm dep = depress({1, 0, -1, 1});  // x^3 - x + 1, needs the flip
        r.expect(dep.negated, "depress(x^3 - x + 1) should sign-flip");
        CubicIterState st = make_cubic_iter(dep.problem);
        ExactRational last;
        for (long n = 2; n <= 90; ++n) {
            CubicStep stp = step(st);
            if (stp.approximant) last = *stp.approximant;
            st = stp.next;
        }
        ExactRational mapped = dep.back_map(last);
        ExactRational residual = abs(eval_poly({ExactInteger(1), ExactInteger(-1), 0, 1}, mapped));
        r.expect(residual < ExactRational(1, ExactInteger(1) << 64),
                 "sign-flipped round trip residual >= 2^-64");
        r.expect(mapped < 0, "root of x^3 - x + 1 should be negative");
    }
    {
        bool threw = false;
        try {
            depress({1, 0, 0, -8});  // p = 0: outside the supported regime
        } catch (const unsupported_regime&) {
            threw = true;
        }
        r.expect(threw, "depress(x^3 - 8) should be unsupported");
        threw = false;
        try {
            depress({1, 3, 3, 1});  // (x+1)^3: triple root
        } catch (const unsupported_regime&) {
            threw = true;
        }
        r.expect(threw, "depress((x+1)^3) should be unsupported");
    }
    return r;
}

// --- mthroot ----------------------------------------------------------------

inline Result mthroot_suite(bool full) {
    Result r{"mthroot"};
    for (int m = 2; m <= 6; ++m) {
        for (long alpha : {2L, 10L, 50L}) {
            ExactInteger ceil_root = integer_root_floor(alpha, m);
            if (pow_int(ceil_root, m) != alpha) ++ceil_root;
            std::vector<ExactInteger> a_values{1};
            if (ceil_root != 1) a_values.push_back(ceil_root);
            for (const ExactInteger& a : a_values) {
                MthRootProblem prob = make_mthroot_problem(alpha, m, a);
                MthRootDiag diag = diagnose(prob);
                std::ostringstream ctx;
                ctx << " (m=" << m << ", alpha=" << alpha << ", a=" << a << ")";
                r.expect(diag.dominant && diag.dominance_margin.value() > 0,
                         "dominance margin not positive" + ctx.str());

                // Entry ratio reaches the oracle within 1e-4 for some n <= 1024.
                RatInterval theta = nth_root_interval(alpha, m, 80);
                auto ij = m >= 3 ? std::make_pair(2, 1) : std::make_pair(1, 2);
                auto uv = m >= 3 ? std::make_pair(3, 1) : std::make_pair(1, 1);
                bool close = false;
                SquareMatrix power = mat_pow(build_matrix(prob), 8);
                for (long long n = 8; n <= 1024 && !close; n *= 2) {
                    const ExactInteger& den = power.at(uv.first - 1, uv.second - 1);
                    if (den != 0) {
                        ExactRational ratio_v =
                            ExactRational(power.at(ij.first - 1, ij.second - 1)) /
                            ExactRational(den);
                        close = abs_iv(RatInterval(ratio_v) - theta).hi <
                                ExactRational(1, 10000);
                    }
                    if (!close) power = power * power;
                }
                r.expect(close, "entry ratio never within 1e-4 of root" + ctx.str());

                // Eigen-sum reproduces the exact entries.
                std::vector<long long> ns;
                if (full)
                    for (long long n = 1; n <= 64; ++n) ns.push_back(n);
                else
                    ns = {1, 2, 3, 8, 29, 64};
                for (long long n : ns) {
                    EntryCheckReport rep = entry_closed_form_check(prob, n, 192);
                    std::ostringstream what;
                    if (!rep.ok) what << "entry closed form failed at n=" << n << ctx.str();
                    r.expect(rep.ok && rep.inverse_ok, what.str());
                }
            }
        }
    }

    // m = 3 coincides with the cube-root module entry ratios exactly.
    for (long alpha : {2L, 10L, 50L}) {
        MthRootProblem prob = make_mthroot_problem(alpha, 3, 1);
        for (long long n = 3; n <= 20; ++n) {
            auto lhs = ratio(prob, {2, 1}, {3, 1}, n);
            auto rhs = ratio_limit_general(alpha, 1, {2, 1}, {3, 1}, n);
            r.expect(lhs && rhs && *lhs == *rhs, "m=3 ratio != cuberoot ratio");
        }
    }

    // Equal-exponent ratios share a limit (checked pairwise at matched n).
    {
        MthRootProblem prob = make_mthroot_problem(7, 4, 2);
        long long n = 256;
        auto r1 = ratio(prob, {1, 2}, {1, 1}, n);
        auto r2 = ratio(prob, {2, 3}, {2, 2}, n);
        auto r3 = ratio(prob, {2, 1}, {3, 1}, n);
        r.expect(r1 && r2 && r3, "exponent-law ratios unavailable");
        if (r1 && r2 && r3) {
            r.expect(abs(*r1 - *r2) < ExactRational(2, 10000), "exponent law: (1,2)/(1,1) vs (2,3)/(2,2)");
            r.expect(abs(*r1 - *r3) < ExactRational(2, 10000), "exponent law: (1,2)/(1,1) vs (2,1)/(3,1)");
        }
    }

    // Perfect-power short circuit and oracle agreement of approximate_root.
    {
        auto res = approximate_root(make_mthroot_problem(4, 2, 1), 64);
        r.expect(res.exact && res.value == 2, "approximate_root(4, 2) not exact 2");
        auto res2 = approximate_root(make_mthroot_problem(2, 5, 1), 30);
        ExactRational oracle = fixed_nth_root(2, 5, 64).value();
        r.expect(res2.converged && abs(res2.value - oracle) < ExactRational(1, 1000000),
                 "approximate_root(2, 5) not within 1e-6");
        auto res3 = approximate_root(make_mthroot_problem(10, 4, 2), 30);
        ExactRational oracle3 = fixed_nth_root(10, 4, 64).value();
        r.expect(res3.converged && abs(res3.value - oracle3) < ExactRational(1, 1000000),
                 "approximate_root(10, 4) not within 1e-6");
    }
    return r;
}

// --- polyroot ---------------------------------------------------------------

inline Result polyroot_suite() {
    Result r{"polyroot"};
    const std::vector<ExactInteger> cubic{-1, -1, 0, 1};  // x^3 - x - 1
    auto table = parameter_scan(cubic, 1, 8, 1, 2, 512, 48);
    int converged = 0;
    for (const auto& cell : table) {
        if (cell.outcome != IterOutcome::Converged) continue;
        ++converged;
        ExactRational residual = abs(eval_poly(cubic, *cell.root));
        r.expect(residual < ExactRational(1, 1000000), "converged cell residual >= 1e-6");
    }
    r.expect(converged >= 1, "no converged cell for x^3 - x - 1");

    // Converged instance satisfies the fixed-point system of the matrix.
    {
        GeneralPolyProblem prob = make_general_poly_problem(cubic, 3, 1);
        LimitVector lv = iterate_general(prob, 512, 48);
        r.expect(lv.converged, "x^3 - x - 1 with (k,l)=(3,1) should converge");
        if (lv.converged) {
            const ExactRational& b1 = lv.betas[0];
            const ExactRational& b2 = lv.betas[1];
            ExactRational lambda = ExactRational(prob.l * prob.coeffs[3]) * b2 + prob.k;
            ExactRational tol(1, ExactInteger(1) << 40);
            r.expect(lv.betas[2] == 1, "beta_m != 1");
            r.expect(abs(b2 * b1 - 1) < tol, "beta_{m-1} beta_{m-2} != 1");
            // row m-2 fixed point: beta_{m-2} lambda = k beta_{m-2} + l a_m
            r.expect(abs(b1 * lambda - (prob.k * b1 + prob.l * prob.coeffs[3])) < tol,
                     "row m-2 fixed point violated");
            // row m-1 fixed point
            ExactRational rhs = -ExactRational(prob.l * prob.coeffs[0]) * b1 +
                                ExactRational(prob.k - prob.l * prob.coeffs[2]) * b2 -
                                ExactRational(prob.l * prob.coeffs[1]);
            r.expect(abs(b2 * lambda - rhs) < tol, "row m-1 fixed point violated");
        }
    }
    // Quartic and quintic instances validate the general row layout.
    {
        const std::vector<ExactInteger> quartic{-1, -1, 0, 0, 1};  // x^4 - x - 1
        GeneralPolyProblem prob = make_general_poly_problem(quartic, 3, 1);
        LimitVector lv = iterate_general(prob, 2048, 48);
        r.expect(lv.converged, "x^4 - x - 1 with (k,l)=(3,1) should converge");
        if (lv.converged) {
            ExactRational tol(1, ExactInteger(1) << 40);
            const ExactRational& b1 = lv.betas[0];
            const ExactRational& b2 = lv.betas[1];
            const ExactRational& b3 = lv.betas[2];
            ExactRational lambda = ExactRational(prob.l * prob.coeffs[4]) * b3 + prob.k;
            r.expect(abs(eval_poly(quartic, b3)) < ExactRational(1, 1000000),
                     "beta_{m-1} not a root of the quartic");
            // rows 1..m-3 (here just i=1): beta_1 lambda = k beta_1 + l a_m beta_2
            r.expect(abs(b1 * lambda - (prob.k * b1 + prob.l * prob.coeffs[4] * b2)) < tol,
                     "quartic row 1 fixed point violated");
            // row m-2 (i=2): beta_2 lambda = k beta_2 + l a_m
            r.expect(abs(b2 * lambda - (prob.k * b2 + prob.l * prob.coeffs[4])) < tol,
                     "quartic row m-2 fixed point violated");
            r.expect(abs(b3 * b2 - 1) < tol, "quartic beta_3 beta_2 != 1");
            r.expect(abs(b2 - b3 * b1) < tol, "quartic beta_2 != beta_3 beta_1");
        }
        const std::vector<ExactInteger> quintic{-1, -1, 0, 0, 0, 1};  // x^5 - x - 1
        GeneralPolyProblem prob5 = make_general_poly_problem(quintic, 2, 1);
        LimitVector lv5 = iterate_general(prob5, 4096, 48);
        r.expect(lv5.converged, "x^5 - x - 1 with (k,l)=(2,1) should converge");
        if (lv5.converged)
            r.expect(abs(eval_poly(quintic, lv5.betas[3])) < ExactRational(1, 1000000),
                     "beta_{m-1} not a root of the quintic");
    }
    // No real roots: every cell must report non-convergence without error.
    {
        const std::vector<ExactInteger> no_real{1, 0, 1};  // x^2 + 1
        auto t2 = parameter_scan(no_real, 1, 8, 1, 2, 512, 48);
        r.expect(t2.size() == 16, "x^2 + 1 scan size");
        for (const auto& cell : t2)
            r.expect(cell.outcome != IterOutcome::Converged, "x^2 + 1 cell converged");
    }
    // Ratio homogeneity under (k, l) -> (c k, c l).
    {
        GeneralPolyProblem p1 = make_general_poly_problem(cubic, 2, 1);
        GeneralPolyProblem p2 = make_general_poly_problem(cubic, 6, 3);
        for (long long n : {4LL, 16LL, 64LL}) {
            SquareMatrix a1 = mat_pow(build_general_matrix(p1), n);
            SquareMatrix a2 = mat_pow(build_general_matrix(p2), n);
            bool same = true;
            for (int i = 0; i < 3; ++i) {
                if (a1.at(2, 0) == 0 || a2.at(2, 0) == 0) continue;
                same = same && ExactRational(a1.at(i, 0)) / ExactRational(a1.at(2, 0)) ==
                                   ExactRational(a2.at(i, 0)) / ExactRational(a2.at(2, 0));
            }
            r.expect(same, "ratios not homogeneous under (k,l) scaling");
        }
    }
    return r;
}

// --- suite wiring -----------------------------------------------------------

struct SuiteOptions {
    std::uint64_t seed = 7;
    bool full = false;  // acceptance-scale grids
};

inline std::vector<Result> run_suite(const std::string& name, const SuiteOptions& opt) {
    std::vector<Result> out;
    auto add = [&](Result r) { out.push_back(std::move(r)); };
    if (name == "cayley" || name == "all") {
        add(cayley_identities(opt.seed, opt.full ? 200 : 80));
        add(cayley_general_dim(opt.seed, opt.full ? 40 : 15));
        add(closed_form_grid(opt.full ? 5 : 3, opt.full ? 40 : 25));
        add(general_order_recurrence(opt.seed, opt.full ? 25 : 10));
    }
    if (name == "cuberoot" || name == "all") {
        add(cuberoot_convergence());
        add(cuberoot_error_model());
        add(cuberoot_mod6_signature());
        add(cuberoot_identities());
        add(cuberoot_corollaries());
    }
    if (name == "cubic" || name == "all") add(cubic_suite());
    if (name == "mthroot" || name == "all") add(mthroot_suite(opt.full));
    if (name == "polyroot" || name == "all") add(polyroot_suite());
    if (out.empty()) throw domain_error("unknown suite: " + name);
    return out;
}

}  // namespace khovanskii::verify
