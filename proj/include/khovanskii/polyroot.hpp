#pragma once

// General-polynomial construction: an m x m matrix parameterized by nonzero
// integers (k, l) whose entry ratios A_{n,i,1}/A_{n,m,1}, when they settle,
// give a vector (beta_1, ..., beta_m) with beta_m = 1, beta_{m-1} beta_{m-2}
// = 1, beta_{i+1} = beta_{m-1} beta_i, and beta_{m-1} a root of the input
// polynomial. No convergence criterion exists in general, so detection is
// empirical: doubling-index agreement plus the system identities.
//
// The matrix is built from the fixed-point equations the construction has
// to satisfy, not from any schematic picture:
//   rows 1..m-3:  k at (i,i), l a_m at (i,i+1)
//   row  m-2:     k at (m-2,m-2), l a_m at (m-2,m)
//   row  m-1:     -l a_{j-1} at column j for j = 1..m-2,
//                 k - l a_{m-1} at (m-1,m-1), -l a_{m-2} at (m-1,m)
//   row  m:       l a_m at (m,m-1), k at (m,m)

#include "khovanskii/exact.hpp"
#include "khovanskii/matrix.hpp"
#include "khovanskii/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace khovanskii {

struct GeneralPolyProblem {
    int m = 2;                         // degree
    std::vector<ExactInteger> coeffs;  // a_0 .. a_m, a_m != 0
    ExactInteger k, l;                 // both nonzero
};

inline GeneralPolyProblem make_general_poly_problem(std::vector<ExactInteger> coeffs,
                                                    const ExactInteger& k,
                                                    const ExactInteger& l) {
    if (coeffs.size() < 3) throw domain_error("polyroot: degree must be >= 2");
    if (coeffs.back() == 0) throw domain_error("polyroot: leading coefficient must be nonzero");
    if (k == 0 || l == 0) throw domain_error("polyroot: k and l must be nonzero");
    GeneralPolyProblem p;
    p.m = static_cast<int>(coeffs.size()) - 1;
    p.coeffs = std::move(coeffs);
    p.k = k;
    p.l = l;
    return p;
}

inline SquareMatrix build_general_matrix(const GeneralPolyProblem& prob) {
    const int m = prob.m;
    const ExactInteger& k = prob.k;
    const ExactInteger& l = prob.l;
    const ExactInteger lam = l * prob.coeffs[static_cast<size_t>(m)];
    SquareMatrix mat(m);
    for (int i = 1; i <= m - 3; ++i) {
        mat.at(i - 1, i - 1) = k;
        mat.at(i - 1, i) = lam;
    }
    if (m >= 3) {
        mat.at(m - 3, m - 3) = k;      // row m-2
        mat.at(m - 3, m - 1) = lam;
    }
    for (int j = 1; j <= m - 2; ++j)   // row m-1
        mat.at(m - 2, j - 1) = -l * prob.coeffs[static_cast<size_t>(j - 1)];
    mat.at(m - 2, m - 2) = k - l * prob.coeffs[static_cast<size_t>(m - 1)];
    if (m >= 3)
        mat.at(m - 2, m - 1) = -l * prob.coeffs[static_cast<size_t>(m - 2)];
    else
        mat.at(m - 2, m - 1) = -l * prob.coeffs[0];  // m = 2: only a_0 remains
    mat.at(m - 1, m - 2) = lam;        // row m
    mat.at(m - 1, m - 1) = k;
    return mat;
}

enum class IterOutcome { Converged, Diverged, Oscillating, DegenerateDenominator };

inline const char* to_string(IterOutcome o) {
    switch (o) {
        case IterOutcome::Converged: return "converged";
        case IterOutcome::Diverged: return "diverged";
        case IterOutcome::Oscillating: return "oscillating";
        default: return "degenerate-denominator";
    }
}

struct LimitVector {
    std::vector<ExactRational> betas;  // beta_1 .. beta_m (beta_m = 1 when present)
    bool converged = false;
    IterOutcome outcome = IterOutcome::Diverged;
    FixedReal residual;  // |f(beta_{m-1})| at the agreement precision
    long long n_reached = 0;
};

// Convergence criterion (empirical by necessity): all m ratios agree between
// samples at n and 2n to agree_bits, the system identities hold at that
// tolerance, and |f(beta_{m-1})| < 2^-(agree_bits/2). Samples with a zero
// denominator entry are nudged forward; four consecutive zeros end the run.
inline LimitVector iterate_general(const GeneralPolyProblem& prob, long long max_n,
                                   int agree_bits) {
    if (max_n < 4) throw domain_error("iterate_general: max_n must be >= 4");
    const int m = prob.m;
    const ExactRational tol(1, ExactInteger(1) << agree_bits);
    const ExactRational res_tol(1, ExactInteger(1) << (agree_bits / 2));
    SquareMatrix base = build_general_matrix(prob);

    LimitVector out;
    std::vector<std::vector<ExactRational>> history;
    std::vector<ExactRational> prev;
    long long n = 4;
    bool ever_zero_run = false;
    while (n <= max_n) {
        SquareMatrix p = mat_pow(base, n);
        long long used = n;
        int nudges = 0;
        while (p.at(m - 1, 0) == 0 && nudges < 4) {
            ++used;
            ++nudges;
            p = p * base;
        }
        if (p.at(m - 1, 0) == 0) {
            ever_zero_run = true;
            break;
        }
        std::vector<ExactRational> cur;
        cur.reserve(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            cur.emplace_back(ExactRational(p.at(i, 0)) / ExactRational(p.at(m - 1, 0)));
        out.n_reached = used;
        if (!prev.empty()) {
            bool agree = true;
            for (int i = 0; i < m; ++i)
                if (abs(cur[static_cast<size_t>(i)] - prev[static_cast<size_t>(i)]) >= tol) {
                    agree = false;
                    break;
                }
            if (agree) {
                const ExactRational& beta_m1 = cur[static_cast<size_t>(m - 2)];
                bool identities = cur.back() == 1;
                if (m >= 3)
                    identities = identities &&
                                 abs(beta_m1 * cur[static_cast<size_t>(m - 3)] - 1) < tol;
                for (int i = 1; i <= m - 3 && identities; ++i)
                    identities = abs(cur[static_cast<size_t>(i)] -
                                     beta_m1 * cur[static_cast<size_t>(i - 1)]) < tol;
                ExactRational residual = abs(eval_poly(prob.coeffs, beta_m1));
                if (identities && residual < res_tol) {
                    out.betas = cur;
                    out.converged = true;
                    out.outcome = IterOutcome::Converged;
                    out.residual = FixedReal::from_rational(residual, agree_bits);
                    return out;
                }
            }
        }
        history.push_back(cur);
        prev = std::move(cur);
        n = 2 * used;
    }

    // No convergence: classify. Revisits at coarse tolerance without
    // stabilizing read as oscillation; unbounded or degenerate runs as
    // divergence.
    out.converged = false;
    if (!prev.empty()) {
        out.betas = prev;
        ExactRational residual = abs(eval_poly(prob.coeffs, prev[static_cast<size_t>(m - 2)]));
        out.residual = FixedReal::from_rational(residual, agree_bits);
    }
    if (ever_zero_run) {
        out.outcome = IterOutcome::DegenerateDenominator;
        return out;
    }
    const ExactRational coarse(1, ExactInteger(1) << 8);
    ExactRational huge = pow_rat(ExactRational(2), 64);
    bool unbounded = false;
    for (const auto& b : prev)
        if (abs(b) > huge) unbounded = true;
    bool revisit = false;
    for (size_t s = 0; s + 1 < history.size() && !revisit; ++s) {
        bool match = true;
        for (int i = 0; i < m; ++i)
            if (abs(history[s][static_cast<size_t>(i)] - prev[static_cast<size_t>(i)]) >= coarse) {
                match = false;
                break;
            }
        revisit = match;
    }
    out.outcome = unbounded ? IterOutcome::Diverged
                            : (revisit ? IterOutcome::Oscillating : IterOutcome::Diverged);
    return out;
}

struct ScanEntry {
    ExactInteger k, l;
    IterOutcome outcome = IterOutcome::Diverged;
    std::optional<ExactRational> root;  // beta_{m-1} when converged
};

// Empirical sweep over a (k, l) grid; the construction has no known a priori
// criterion for which cells converge.
inline std::vector<ScanEntry> parameter_scan(const std::vector<ExactInteger>& coeffs,
                                             long k_min, long k_max, long l_min, long l_max,
                                             long long budget_n = 512, int agree_bits = 48) {
    std::vector<ScanEntry> table;
    for (long k = k_min; k <= k_max; ++k) {
        for (long l = l_min; l <= l_max; ++l) {
            if (k == 0 || l == 0) continue;
            GeneralPolyProblem prob =
                make_general_poly_problem(coeffs, ExactInteger(k), ExactInteger(l));
            LimitVector lv = iterate_general(prob, budget_n, agree_bits);
            ScanEntry entry;
            entry.k = k;
            entry.l = l;
            entry.outcome = lv.outcome;
            if (lv.converged) entry.root = lv.betas[static_cast<size_t>(prob.m - 2)];
            table.push_back(std::move(entry));
        }
    }
    return table;
}

}  // namespace khovanskii
