#pragma once

// Fixed-grid dyadic interval arithmetic: endpoints are integer multiples of
// 2^-bits and every operation rounds outward to the grid, so denominators
// never grow under repeated multiplication. Complex boxes on top, plus a
// certified primitive root of unity via an interval Newton contraction.

#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace khovanskii {

namespace detail {
inline ExactInteger floor_div(const ExactInteger& a, const ExactInteger& b) {
    ExactInteger q = a / b;
    if ((a < 0) != (b < 0) && q * b != a) --q;
    return q;
}
inline ExactInteger ceil_div(const ExactInteger& a, const ExactInteger& b) {
    ExactInteger q = a / b;
    if ((a < 0) == (b < 0) && q * b != a) ++q;
    return q;
}
}  // namespace detail

struct DyInterval {
    ExactInteger lo, hi;  // value in [lo, hi] * 2^-bits
    int bits = 0;

    static DyInterval from_integer(const ExactInteger& v, int bits) {
        return {v << bits, v << bits, bits};
    }
    static DyInterval from_rational(const ExactRational& r, int bits) {
        ExactInteger num = numerator(r) << bits;
        return {detail::floor_div(num, denominator(r)), detail::ceil_div(num, denominator(r)),
                bits};
    }
    static DyInterval from_rat_interval(const RatInterval& iv, int bits) {
        ExactInteger lo = detail::floor_div(numerator(iv.lo) << bits, denominator(iv.lo));
        ExactInteger hi = detail::ceil_div(numerator(iv.hi) << bits, denominator(iv.hi));
        return {std::move(lo), std::move(hi), bits};
    }

    RatInterval to_rat() const {
        ExactInteger den = ExactInteger(1) << bits;
        return {ExactRational(lo, den), ExactRational(hi, den)};
    }
    ExactRational width() const { return ExactRational(hi - lo, ExactInteger(1) << bits); }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline void check_bits(const DyInterval& a, const DyInterval& b) {
    if (a.bits != b.bits) throw domain_error("DyInterval: mixed precision grids");
}

inline DyInterval operator+(const DyInterval& a, const DyInterval& b) {
    check_bits(a, b);
    return {a.lo + b.lo, a.hi + b.hi, a.bits};
}
inline DyInterval operator-(const DyInterval& a, const DyInterval& b) {
    check_bits(a, b);
    return {a.lo - b.hi, a.hi - b.lo, a.bits};
}
inline DyInterval operator-(const DyInterval& a) { return {-a.hi, -a.lo, a.bits}; }

inline DyInterval operator*(const DyInterval& a, const DyInterval& b) {
    check_bits(a, b);
    ExactInteger p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    ExactInteger lo = std::min(std::min(p1, p2), std::min(p3, p4));
    ExactInteger hi = std::max(std::max(p1, p2), std::max(p3, p4));
    ExactInteger unit = ExactInteger(1) << a.bits;
    return {detail::floor_div(lo, unit), detail::ceil_div(hi, unit), a.bits};
}

// Division by an interval of definite sign.
inline DyInterval operator/(const DyInterval& a, const DyInterval& b) {
    check_bits(a, b);
    if (b.contains_zero()) throw domain_error("DyInterval: division by interval spanning zero");
    ExactInteger lo, hi;
    bool first = true;
    for (const ExactInteger* x : {&a.lo, &a.hi})
        for (const ExactInteger* y : {&b.lo, &b.hi}) {
            ExactInteger num = *x << a.bits;
            ExactInteger qlo = detail::floor_div(num, *y);
            ExactInteger qhi = detail::ceil_div(num, *y);
            if (first) {
                lo = qlo;
                hi = qhi;
                first = false;
            } else {
                lo = std::min(lo, qlo);
                hi = std::max(hi, qhi);
            }
        }
    return {lo, hi, a.bits};
}

// sqrt over a non-negative interval.
inline DyInterval dy_sqrt(const DyInterval& a) {
    ExactInteger lo = a.lo < 0 ? ExactInteger(0) : a.lo;
    ExactInteger slo = boost::multiprecision::sqrt(ExactInteger(lo << a.bits));
    ExactInteger shi = boost::multiprecision::sqrt(ExactInteger(a.hi << a.bits)) + 1;
    return {slo, shi, a.bits};
}

struct ComplexBox {
    DyInterval re, im;

    static ComplexBox real(const DyInterval& r) {
        return {r, DyInterval{0, 0, r.bits}};
    }
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re + b.re, a.im + b.im};
}
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return {a.re - b.re, a.im - b.im};
}
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexBox conj(const ComplexBox& a) { return {a.re, -a.im}; }

inline DyInterval norm2(const ComplexBox& a) {
    DyInterval rr = a.re * a.re, ii = a.im * a.im;
    if (rr.lo < 0) rr.lo = 0;  // squares; enclosure noise only
    if (ii.lo < 0) ii.lo = 0;
    return rr + ii;
}

inline ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
    DyInterval n2 = norm2(b);
    ComplexBox num = a * conj(b);
    return {num.re / n2, num.im / n2};
}

inline ComplexBox cpow(const ComplexBox& a, unsigned long e) {
    ComplexBox r = ComplexBox::real(DyInterval::from_integer(1, a.re.bits));
    ComplexBox b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline DyInterval modulus(const ComplexBox& a) { return dy_sqrt(norm2(a)); }

// Certified enclosure of the primitive m-th root of unity exp(2 pi i / m).
// Newton on the double seed refines the midpoint; an interval Newton step
// N(Z) contained in Z then certifies a unique root inside N(Z).
inline ComplexBox root_of_unity(int m, int bits) {
    if (m < 1) throw domain_error("root_of_unity: order must be >= 1");
    if (m == 1) return ComplexBox::real(DyInterval::from_integer(1, bits));
    if (m == 2) return ComplexBox::real(DyInterval::from_integer(-1, bits));

    const int w = bits + 64;
    const ExactInteger unit = ExactInteger(1) << w;
    const double angle = 2.0 * 3.14159265358979323846 / m;
    // Midpoint iterates as exact rationals on the 2^-w grid.
    auto to_grid = [&](const ExactRational& v) {
        return ExactRational(detail::floor_div(numerator(v) << w, denominator(v)), unit);
    };
    ExactRational zr = to_grid(ExactRational(static_cast<long long>(std::cos(angle) * (1LL << 52)),
                                             ExactInteger(1) << 52));
    ExactRational zi = to_grid(ExactRational(static_cast<long long>(std::sin(angle) * (1LL << 52)),
                                             ExactInteger(1) << 52));
    using CMid = std::pair<ExactRational, ExactRational>;
    auto cmul = [](const CMid& a, const CMid& b) -> CMid {
        return {ExactRational(a.first * b.first - a.second * b.second),
                ExactRational(a.first * b.second + a.second * b.first)};
    };
    auto cpow_mid = [&](CMid z, int e) -> CMid {
        CMid r{1, 0};
        while (e) {
            if (e & 1) r = cmul(r, z);
            z = cmul(z, z);
            e >>= 1;
        }
        return r;
    };
    for (int it = 0; it < 64; ++it) {
        auto zm1 = cpow_mid({zr, zi}, m - 1);
        auto zm = cmul(zm1, {zr, zi});
        ExactRational fr = zm.first - 1, fi = zm.second;
        // f / f' with f' = m z^{m-1}
        ExactRational dr = m * zm1.first, di = m * zm1.second;
        ExactRational d2 = dr * dr + di * di;
        ExactRational sr = (fr * dr + fi * di) / d2;
        ExactRational si = (fi * dr - fr * di) / d2;
        zr = to_grid(zr - sr);
        zi = to_grid(zi - si);
        ExactRational ulp(1, unit);
        if (abs(sr) < ulp && abs(si) < ulp) break;  // step below one grid ulp
    }

    // Interval Newton certification around the refined midpoint.
    for (int pad = w - bits - 8; pad >= 4; pad -= 12) {
        ExactRational rad(1, ExactInteger(1) << (bits + pad));
        ComplexBox z{DyInterval::from_rat_interval({zr - rad, zr + rad}, w),
                     DyInterval::from_rat_interval({zi - rad, zi + rad}, w)};
        ComplexBox mid{DyInterval::from_rational(zr, w), DyInterval::from_rational(zi, w)};
        ComplexBox fmid = cpow(mid, static_cast<unsigned long>(m)) -
                          ComplexBox::real(DyInterval::from_integer(1, w));
        ComplexBox dz = cpow(z, static_cast<unsigned long>(m - 1));
        DyInterval m_iv = DyInterval::from_integer(m, w);
        ComplexBox deriv{m_iv * dz.re, m_iv * dz.im};
        ComplexBox n = mid - fmid / deriv;
        bool inside = n.re.lo > z.re.lo && n.re.hi < z.re.hi && n.im.lo > z.im.lo &&
                      n.im.hi < z.im.hi;
        if (inside) {
            ExactInteger down = ExactInteger(1) << (w - bits);
            return ComplexBox{DyInterval{detail::floor_div(n.re.lo, down),
                                         detail::ceil_div(n.re.hi, down), bits},
                              DyInterval{detail::floor_div(n.im.lo, down),
                                         detail::ceil_div(n.im.hi, down), bits}};
        }
    }
    throw domain_error("root_of_unity: interval Newton failed to certify");
}

}  // namespace khovanskii
