#pragma once

// Independent reference roots by bisection in exact rational arithmetic.
// Deliberately shares no code with the iteration paths it is used to check.

#include "khovanskii/exact.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace khovanskii {

// Exact polynomial evaluation; coeffs[i] multiplies x^i.
inline ExactRational eval_poly(const std::vector<ExactInteger>& coeffs, const ExactRational& x) {
    ExactRational r = 0;
    for (size_t i = coeffs.size(); i-- > 0;) r = r * x + ExactRational(coeffs[i]);
    return r;
}

struct RootQuery {
    std::vector<ExactInteger> coeffs;
    ExactRational lo, hi;  // f(lo) * f(hi) < 0
    int bits = 128;
};

// Plain bisection; every sign evaluation is exact, so the returned value is
// within 2^-bits of the root unconditionally. Terminates early on an exact
// rational hit.
inline FixedReal bisect_root(const RootQuery& q) {
    ExactRational lo = q.lo, hi = q.hi;
    ExactRational flo = eval_poly(q.coeffs, lo);
    ExactRational fhi = eval_poly(q.coeffs, hi);
    if (flo == 0) return FixedReal::from_rational(lo, q.bits);
    if (fhi == 0) return FixedReal::from_rational(hi, q.bits);
    if ((flo > 0) == (fhi > 0)) throw domain_error("bisect_root: no sign change on bracket");
    const ExactRational target(1, ExactInteger(1) << (q.bits + 2));
    while (hi - lo > target) {
        ExactRational mid = (lo + hi) / 2;
        ExactRational fmid = eval_poly(q.coeffs, mid);
        if (fmid == 0) return FixedReal::from_rational(mid, q.bits);
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return FixedReal::from_rational((lo + hi) / 2, q.bits);
}

// Scan [-B, B], B = 1 + max |a_i / a_m|, at resolution B * 2^-10 for a sign
// change. Returns nothing when sampling stays one-signed (inconclusive, not
// proof of nonexistence).
inline std::optional<std::pair<ExactRational, ExactRational>> bracket_real_root(
    const std::vector<ExactInteger>& coeffs) {
    if (coeffs.empty() || coeffs.back() == 0)
        throw domain_error("bracket_real_root: zero leading coefficient");
    ExactInteger max_abs = 0;
    for (size_t i = 0; i + 1 < coeffs.size(); ++i)
        max_abs = std::max(max_abs, ExactInteger(abs(coeffs[i])));
    ExactInteger lead = abs(coeffs.back());
    ExactInteger bound = 1 + (max_abs + lead - 1) / lead;  // >= 1 + max|a_i/a_m|
    const long steps = 1 << 11;                            // resolution B * 2^-10 over [-B, B]
    ExactRational h = ExactRational(2 * bound) / steps;
    ExactRational prev_x = -ExactRational(bound);
    ExactRational prev_f = eval_poly(coeffs, prev_x);
    for (long i = 1; i <= steps; ++i) {
        ExactRational x = -ExactRational(bound) + i * h;
        ExactRational f = eval_poly(coeffs, x);
        if (prev_f == 0) {
            // Exact hit at a sample: widen one step on each side if the
            // signs there differ, so the bracket invariant holds strictly.
            ExactRational l = prev_x - h, r = x;
            if (eval_poly(coeffs, l) != 0 && f != 0 &&
                (eval_poly(coeffs, l) > 0) != (f > 0))
                return std::make_pair(l, r);
        } else if (f != 0 && (f > 0) != (prev_f > 0)) {
            return std::make_pair(prev_x, x);
        }
        prev_x = x;
        prev_f = f;
    }
    return std::nullopt;
}

}  // namespace khovanskii
