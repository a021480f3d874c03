#pragma once

// Exact arithmetic substrate: unbounded integers, exact rationals and a
// fixed-point real type whose stated precision is a hard error bound.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace khovanskii {

using ExactInteger  = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const ExactInteger& x) { return x.sign(); }

inline ExactInteger pow_int(const ExactInteger& base, unsigned long e) {
    ExactInteger r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline ExactRational pow_rat(const ExactRational& base, unsigned long e) {
    ExactRational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// C(n, k), exact. The running product base is divisible by i at every step.
inline ExactInteger binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ExactInteger r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Floor of the m-th root. Negative x is meaningful only for odd m.
inline ExactInteger integer_root_floor(const ExactInteger& x, int m) {
    if (m < 2) throw domain_error("integer_root_floor: order must be >= 2");
    if (x < 0) {
        if (m % 2 == 0) throw domain_error("integer_root_floor: negative radicand with even order");
        ExactInteger y = -x;
        ExactInteger f = integer_root_floor(y, m);
        // ceil(y^{1/m}), negated
        return pow_int(f, m) == y ? ExactInteger(-f) : ExactInteger(-(f + 1));
    }
    if (x <= 1) return x;
    // Newton from an over-estimate; strictly decreasing until it crosses the root.
    const unsigned long bl = boost::multiprecision::msb(x) + 1;
    ExactInteger r = ExactInteger(1) << ((bl + m - 1) / m);
    for (;;) {
        ExactInteger next = ((m - 1) * r + x / pow_int(r, m - 1)) / m;
        if (next >= r) break;
        r = next;
    }
    while (pow_int(r, m) > x) --r;
    while (pow_int(r + 1, m) <= x) ++r;
    return r;
}

// Exact m-th root when x is a perfect m-th power.
inline std::optional<ExactInteger> exact_root(const ExactInteger& x, int m) {
    if (x < 0 && m % 2 == 0) return std::nullopt;
    ExactInteger r = integer_root_floor(x, m);
    if (pow_int(r, m) == x) return r;
    return std::nullopt;
}

// Binary fixed point: value = mantissa * 2^(-precision_bits), with the
// guarantee |value - true| < 2^(-precision_bits) wherever one is produced.
struct FixedReal {
    ExactInteger mantissa;
    int precision_bits = 0;

    FixedReal() = default;
    FixedReal(ExactInteger m, int bits) : mantissa(std::move(m)), precision_bits(bits) {}

    ExactRational value() const {
        return ExactRational(mantissa, ExactInteger(1) << precision_bits);
    }

    // Nearest representable value; off by at most 2^-(bits+1).
    static FixedReal from_rational(const ExactRational& r, int bits) {
        ExactInteger num = numerator(r) << (bits + 1);
        ExactInteger den = denominator(r);
        ExactInteger twice = num / den;   // truncates toward zero
        ExactInteger m = (twice + (twice < 0 ? -1 : 1)) / 2;
        return FixedReal(m, bits);
    }

    FixedReal operator-() const { return FixedReal(-mantissa, precision_bits); }

    bool operator==(const FixedReal& o) const {
        return mantissa == o.mantissa && precision_bits == o.precision_bits;
    }
};

// log2 |r| as a double, safe for magnitudes far outside double range.
inline double log2_abs(const ExactRational& r) {
    if (r == 0) return -std::numeric_limits<double>::infinity();
    auto part = [](const ExactInteger& x) {
        unsigned long b = boost::multiprecision::msb(x);
        double top = b <= 62 ? x.convert_to<double>() : (x >> (b - 62)).convert_to<double>();
        return std::log2(top) + (b <= 62 ? 0.0 : static_cast<double>(b - 62));
    };
    return part(abs(numerator(r))) - part(denominator(r));
}

// floor(alpha^{1/m} * 2^bits) / 2^bits; one-sided error < 2^-bits.
inline FixedReal fixed_nth_root(const ExactInteger& alpha, int m, int bits) {
    if (alpha <= 0) throw domain_error("fixed_nth_root: radicand must be positive");
    if (bits <= 0) throw domain_error("fixed_nth_root: bits must be positive");
    ExactInteger scaled = alpha << (static_cast<unsigned long>(m) * bits);
    return FixedReal(integer_root_floor(scaled, m), bits);
}

}  // namespace khovanskii
