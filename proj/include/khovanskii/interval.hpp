#pragma once

// Exact rational interval arithmetic. Endpoints are exact, so every
// operation here is conservative without any rounding bookkeeping.

#include "khovanskii/exact.hpp"

#include <algorithm>

namespace khovanskii {

struct RatInterval {
    ExactRational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(ExactRational l, ExactRational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit RatInterval(const ExactRational& point) : lo(point), hi(point) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    ExactRational width() const { return hi - lo; }
    ExactRational mid() const { return (lo + hi) / 2; }

    // Sign when the interval excludes zero; 0 when undecided.
    int definite_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    ExactRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RatInterval operator*(const ExactRational& c, const RatInterval& a) {
    return c >= 0 ? RatInterval{c * a.lo, c * a.hi} : RatInterval{c * a.hi, c * a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw domain_error("interval division by interval containing zero");
    RatInterval inv{ExactRational(1) / b.hi, ExactRational(1) / b.lo};
    return a * inv;
}

inline RatInterval pow_iv(const RatInterval& a, unsigned long e) {
    RatInterval r{ExactRational(1)};
    RatInterval b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline RatInterval abs_iv(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {ExactRational(0), std::max(ExactRational(-a.lo), a.hi)};
}

// Collapse an enclosure to a FixedReal whose stated precision is honest:
// requires the interval width to leave room for the rounding step.
inline FixedReal to_fixed(const RatInterval& iv, int bits) {
    if (iv.width() > ExactRational(1, ExactInteger(1) << (bits + 1)))
        throw domain_error("to_fixed: interval too wide for requested precision");
    return FixedReal::from_rational(iv.mid(), bits);
}

// Enclosure of alpha^{1/m} of width 2^-bits.
inline RatInterval nth_root_interval(const ExactInteger& alpha, int m, int bits) {
    FixedReal f = fixed_nth_root(alpha, m, bits);
    ExactInteger den = ExactInteger(1) << bits;
    return {ExactRational(f.mantissa, den), ExactRational(f.mantissa + 1, den)};
}

// Enclosure of sqrt over a non-negative interval, grid 2^-bits.
inline RatInterval sqrt_interval(const RatInterval& a, int bits) {
    if (a.lo < 0) throw domain_error("sqrt_interval: negative interval");
    ExactInteger den = ExactInteger(1) << bits;
    ExactInteger lo_scaled = (numerator(a.lo) << (2 * bits)) / denominator(a.lo);
    ExactInteger hi_scaled = (numerator(a.hi) << (2 * bits)) / denominator(a.hi) + 1;
    ExactInteger slo = boost::multiprecision::sqrt(lo_scaled);
    ExactInteger shi = boost::multiprecision::sqrt(hi_scaled) + 1;
    return {ExactRational(slo, den), ExactRational(shi, den)};
}

}  // namespace khovanskii
