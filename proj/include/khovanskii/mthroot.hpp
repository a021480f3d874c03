#pragma once

// m-th roots of positive integers from the m x m matrix with a on the
// diagonal, alpha strictly above and 1 strictly below. For a > 0 the real
// eigenvalue a + sum_j alpha^{j/m} dominates, so entry ratios of powers
// converge to alpha^{(j+u-i-v)/m}. Powers are taken by exact repeated
// squaring; the eigen-decomposition is used only as a verification surface.

#include "khovanskii/dyadic.hpp"
#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"
#include "khovanskii/matrix.hpp"

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace khovanskii {

struct MthRootProblem {
    ExactInteger alpha;
    int m = 2;
    ExactInteger a;

    std::optional<ExactInteger> perfect_root() const { return exact_root(alpha, m); }
};

inline MthRootProblem make_mthroot_problem(const ExactInteger& alpha, int m,
                                           const ExactInteger& a) {
    if (alpha < 1) throw domain_error("mthroot: alpha must be >= 1");
    if (m < 2) throw domain_error("mthroot: order must be >= 2");
    if (a <= 0) throw domain_error("mthroot: parameter a must be positive");
    return MthRootProblem{alpha, m, a};
}

inline SquareMatrix build_matrix(const MthRootProblem& prob) {
    SquareMatrix mat(prob.m);
    for (int i = 0; i < prob.m; ++i)
        for (int j = 0; j < prob.m; ++j)
            mat.at(i, j) = i == j ? prob.a : (j > i ? prob.alpha : ExactInteger(1));
    return mat;
}

// A_{n,i,j} / A_{n,u,v} with 1-based indices; tends to alpha^{(j+u-i-v)/m}.
inline std::optional<ExactRational> ratio(const MthRootProblem& prob, std::pair<int, int> ij,
                                          std::pair<int, int> uv, long long n) {
    auto valid = [&](std::pair<int, int> p) {
        return p.first >= 1 && p.first <= prob.m && p.second >= 1 && p.second <= prob.m;
    };
    if (!valid(ij) || !valid(uv)) throw domain_error("ratio: indices out of range");
    SquareMatrix p = mat_pow(build_matrix(prob), n);
    const ExactInteger& den = p.at(uv.first - 1, uv.second - 1);
    if (den == 0) return std::nullopt;
    return ExactRational(p.at(ij.first - 1, ij.second - 1)) / ExactRational(den);
}

namespace detail {

// Eigenvalue boxes beta_k = a + sum_{j=1}^{m-1} (omega^{k-1} theta)^j, k = 1..m.
inline std::vector<ComplexBox> eigenvalue_boxes(const MthRootProblem& prob, int bits) {
    ComplexBox omega = root_of_unity(prob.m, bits);
    DyInterval theta =
        DyInterval::from_rat_interval(nth_root_interval(prob.alpha, prob.m, bits), bits);
    std::vector<ComplexBox> betas;
    betas.reserve(static_cast<size_t>(prob.m));
    ComplexBox omega_pow = ComplexBox::real(DyInterval::from_integer(1, bits));
    for (int k = 1; k <= prob.m; ++k) {
        ComplexBox x{omega_pow.re * theta, omega_pow.im * theta};
        ComplexBox acc = ComplexBox::real(DyInterval::from_integer(prob.a, bits));
        ComplexBox xp = x;
        for (int j = 1; j <= prob.m - 1; ++j) {
            acc = acc + xp;
            xp = xp * x;
        }
        betas.push_back(acc);
        omega_pow = omega_pow * omega;
    }
    return betas;
}

}  // namespace detail

struct MthRootDiag {
    std::vector<std::pair<FixedReal, FixedReal>> eigenvalues;  // (re, im) midpoints
    FixedReal dominance_margin;  // beta_1 - max_{k >= 2} |beta_k|
    bool dominant = false;       // margin certified positive
};

inline MthRootDiag diagnose(const MthRootProblem& prob, int bits = 64) {
    const int w = bits + 64;
    auto betas = detail::eigenvalue_boxes(prob, w);
    MthRootDiag diag;
    RatInterval max_mod(ExactRational(0));
    for (size_t k = 0; k < betas.size(); ++k) {
        RatInterval re = betas[k].re.to_rat(), im = betas[k].im.to_rat();
        diag.eigenvalues.emplace_back(to_fixed(re, bits), to_fixed(im, bits));
        if (k > 0) {
            RatInterval mod = modulus(betas[k]).to_rat();
            if (mod.hi > max_mod.hi) max_mod.hi = mod.hi;
            if (mod.lo > max_mod.lo) max_mod.lo = mod.lo;
        }
    }
    RatInterval margin = betas[0].re.to_rat() - max_mod;
    diag.dominance_margin = to_fixed(margin, bits);
    diag.dominant = margin.lo > 0;
    return diag;
}

struct EntryCheckReport {
    long long n = 0;
    int tolerance_bits = 0;
    bool ok = false;
    int entries_checked = 0;
    bool inverse_ok = false;  // M * M^{-1} = I numerically
};

// Checks every entry of exact A^n against the eigen-sum
//   A_{n,i,j} = (theta^{j-i} / m) sum_k omega^{(m-k+1)(i-j)} beta_k^n
// within 2^-tolerance_bits, and the diagonalizer inverse identity.
inline EntryCheckReport entry_closed_form_check(const MthRootProblem& prob, long long n,
                                                int tolerance_bits) {
    if (n < 1) throw domain_error("entry_closed_form_check: n must be >= 1");
    const int m = prob.m;
    SquareMatrix exact_power = mat_pow(build_matrix(prob), n);

    // Working precision: room for beta_1^n above the tolerance plus slack.
    double beta1_log2 = std::log2(std::max(2.0, prob.a.convert_to<double>() +
                                                    (m - 1) * prob.alpha.convert_to<double>()));
    int w = tolerance_bits + static_cast<int>(static_cast<double>(n) * beta1_log2) + 96;

    EntryCheckReport rep;
    rep.n = n;
    rep.tolerance_bits = tolerance_bits;
    const ExactRational tol(1, ExactInteger(1) << tolerance_bits);

    for (int attempt = 0; attempt < 3; ++attempt, w *= 2) {
        auto betas = detail::eigenvalue_boxes(prob, w);
        std::vector<ComplexBox> beta_pow;
        beta_pow.reserve(static_cast<size_t>(m));
        for (const auto& b : betas) beta_pow.push_back(cpow(b, static_cast<unsigned long>(n)));

        ComplexBox omega = root_of_unity(m, w);
        std::vector<ComplexBox> omega_pow(static_cast<size_t>(m),
                                          ComplexBox::real(DyInterval::from_integer(1, w)));
        for (int e = 1; e < m; ++e) omega_pow[static_cast<size_t>(e)] =
            omega_pow[static_cast<size_t>(e - 1)] * omega;

        DyInterval theta =
            DyInterval::from_rat_interval(nth_root_interval(prob.alpha, prob.m, w), w);
        std::vector<DyInterval> theta_pow(static_cast<size_t>(m),
                                          DyInterval::from_integer(1, w));
        for (int e = 1; e < m; ++e)
            theta_pow[static_cast<size_t>(e)] = theta_pow[static_cast<size_t>(e - 1)] * theta;
        DyInterval inv_m = DyInterval::from_rational(ExactRational(1, m), w);

        bool all_ok = true, wide = false;
        rep.entries_checked = 0;
        for (int i = 1; i <= m && all_ok; ++i) {
            for (int j = 1; j <= m && all_ok; ++j) {
                ComplexBox sum = ComplexBox::real(DyInterval::from_integer(0, w));
                for (int k = 1; k <= m; ++k) {
                    long e = static_cast<long>(m - k + 1) * (i - j);
                    int em = static_cast<int>(((e % m) + m) % m);
                    sum = sum + omega_pow[static_cast<size_t>(em)] *
                                    beta_pow[static_cast<size_t>(k - 1)];
                }
                // scale by theta^{j-i} / m
                DyInterval scale = theta_pow[static_cast<size_t>(std::abs(j - i))];
                ComplexBox scaled = j >= i
                                        ? ComplexBox{sum.re * scale, sum.im * scale}
                                        : ComplexBox{sum.re / scale, sum.im / scale};
                scaled = ComplexBox{scaled.re * inv_m, scaled.im * inv_m};
                RatInterval re = scaled.re.to_rat(), im = scaled.im.to_rat();
                if (re.width() > tol || im.width() > tol) {
                    wide = true;
                    all_ok = false;
                    break;
                }
                ExactRational entry(exact_power.at(i - 1, j - 1));
                ExactRational dist =
                    std::max(ExactRational(abs(re.lo - entry)), ExactRational(abs(re.hi - entry)));
                ExactRational imag_mag = std::max(ExactRational(abs(im.lo)), ExactRational(abs(im.hi)));
                if (dist > tol || imag_mag > tol) {
                    all_ok = false;
                    break;
                }
                ++rep.entries_checked;
            }
        }
        if (wide) continue;  // retry at doubled precision

        // M M^{-1} = I with M_{i,j} = theta^{m-i} omega^{(m-j+1) i} and
        // (M^{-1})_{i,j} = 1 / (m M_{j,i}).
        bool inv_ok = true;
        std::vector<std::vector<ComplexBox>> M(static_cast<size_t>(m)), Minv(
            static_cast<size_t>(m));
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                int e = static_cast<int>((static_cast<long>(m - j + 1) * i) % m);
                ComplexBox mij{theta_pow[static_cast<size_t>(m - i)] *
                                   omega_pow[static_cast<size_t>(e)].re,
                               theta_pow[static_cast<size_t>(m - i)] *
                                   omega_pow[static_cast<size_t>(e)].im};
                M[static_cast<size_t>(i - 1)].push_back(mij);
            }
        }
        ComplexBox one = ComplexBox::real(DyInterval::from_integer(1, w));
        DyInterval m_iv = DyInterval::from_integer(m, w);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                const ComplexBox& mji = M[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)];
                Minv[static_cast<size_t>(i - 1)].push_back(
                    one / ComplexBox{m_iv * mji.re, m_iv * mji.im});
            }
        for (int i = 0; i < m && inv_ok; ++i)
            for (int j = 0; j < m && inv_ok; ++j) {
                ComplexBox acc = ComplexBox::real(DyInterval::from_integer(0, w));
                for (int k = 0; k < m; ++k)
                    acc = acc + M[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    Minv[static_cast<size_t>(k)][static_cast<size_t>(j)];
                ExactRational expect = i == j ? 1 : 0;
                RatInterval re = acc.re.to_rat(), im = acc.im.to_rat();
                ExactRational dist = std::max(ExactRational(abs(re.lo - expect)),
                                              ExactRational(abs(re.hi - expect)));
                ExactRational imag_mag = std::max(ExactRational(abs(im.lo)), ExactRational(abs(im.hi)));
                if (dist > tol || imag_mag > tol) inv_ok = false;
            }
        rep.inverse_ok = inv_ok;
        rep.ok = all_ok && inv_ok;
        return rep;
    }
    rep.ok = false;
    return rep;
}

struct ApproximateRootResult {
    ExactRational value;
    bool converged = false;
    bool exact = false;       // perfect-power short circuit
    long long n_reached = 0;
    int achieved_bits = 0;    // agreement of the last two approximants
    std::vector<std::pair<long long, ExactRational>> samples;
};

// Doubles n until successive entry-ratio approximants agree to target_bits.
// The reported precision is the observed agreement, not a promise about the
// distance to the limit.
inline ApproximateRootResult approximate_root(const MthRootProblem& prob, int target_bits,
                                              long long n_cap = 4096) {
    ApproximateRootResult res;
    if (auto r = prob.perfect_root()) {
        res.value = ExactRational(*r);
        res.converged = true;
        res.exact = true;
        res.achieved_bits = target_bits;
        return res;
    }
    const std::pair<int, int> ij = prob.m >= 3 ? std::make_pair(2, 1) : std::make_pair(1, 2);
    const std::pair<int, int> uv = prob.m >= 3 ? std::make_pair(3, 1) : std::make_pair(1, 1);
    const ExactRational target(1, ExactInteger(1) << target_bits);
    SquareMatrix base = build_matrix(prob);
    SquareMatrix power = mat_pow(base, 8);
    long long n = 8;
    std::optional<ExactRational> prev;
    while (n <= n_cap) {
        const ExactInteger& den = power.at(uv.first - 1, uv.second - 1);
        if (den != 0) {
            ExactRational cur =
                ExactRational(power.at(ij.first - 1, ij.second - 1)) / ExactRational(den);
            res.samples.emplace_back(n, cur);
            if (prev) {
                ExactRational diff = abs(cur - *prev);
                res.achieved_bits = diff == 0 ? target_bits
                                              : static_cast<int>(std::max(0.0, -log2_abs(diff)));
                if (diff < target) {
                    res.value = cur;
                    res.converged = true;
                    res.n_reached = n;
                    return res;
                }
            }
            prev = cur;
            res.value = cur;
        }
        power = power * power;
        n *= 2;
        res.n_reached = n;
    }
    res.converged = false;
    return res;
}

}  // namespace khovanskii
