#pragma once

// Convergence reporting: exact decimal rendering (no floating-point
// formatting in any output path) and geometric-rate fitting from error
// sequences.

#include "khovanskii/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace khovanskii {

// Fixed-point decimal, round-half-away-from-zero at the last digit.
inline std::string decimal_string(const ExactRational& r, int frac_digits) {
    ExactInteger scale = pow_int(ExactInteger(10), static_cast<unsigned long>(frac_digits));
    ExactInteger num = abs(numerator(r)) * scale * 2 + denominator(r);
    ExactInteger scaled = num / (denominator(r) * 2);
    std::string digits = scaled.convert_to<std::string>();
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, static_cast<size_t>(frac_digits) + 1 - digits.size(), '0');
    std::string out;
    if (r < 0 && scaled != 0) out += '-';
    out += digits.substr(0, digits.size() - static_cast<size_t>(frac_digits));
    if (frac_digits > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<size_t>(frac_digits));
    }
    return out;
}

// Scientific form d.ddd...e(+|-)XX with sig_digits significant digits,
// computed exactly; "0" for zero.
inline std::string sci_string(const ExactRational& r, int sig_digits) {
    if (r == 0) return "0";
    ExactRational a = abs(r);
    long e10 = static_cast<long>(std::floor(log2_abs(a) * 0.3010299956639812));
    auto pow10 = [](long e) {
        ExactRational p = pow_rat(ExactRational(10), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? 1 / p : p;
    };
    while (a < pow10(e10)) --e10;
    while (a >= pow10(e10 + 1)) ++e10;
    ExactRational mant = a / pow10(e10 - sig_digits + 1);
    ExactInteger digits = (numerator(mant) * 2 + denominator(mant)) / (denominator(mant) * 2);
    std::string ds = digits.convert_to<std::string>();
    if (static_cast<int>(ds.size()) > sig_digits) {  // rounding carried over
        ds = ds.substr(0, static_cast<size_t>(sig_digits));
        ++e10;
    }
    std::string out = r < 0 ? "-" : "";
    out += ds.substr(0, 1);
    if (sig_digits > 1) out += "." + ds.substr(1);
    out += "e";
    out += e10 < 0 ? "-" : "+";
    long ae = e10 < 0 ? -e10 : e10;
    if (ae < 10) out += "0";
    out += std::to_string(ae);
    return out;
}

inline std::string fixed_real_string(const FixedReal& f, int frac_digits = 20) {
    return decimal_string(f.value(), frac_digits);
}

struct RatePoint {
    long long n;
    double log2_err;
};

// Least-squares slope of log2|error| against n; the geometric rate is
// 2^slope. Needs at least three usable points.
inline std::optional<double> fit_geometric_rate(const std::vector<RatePoint>& pts) {
    std::vector<RatePoint> usable;
    for (const auto& p : pts)
        if (std::isfinite(p.log2_err)) usable.push_back(p);
    if (usable.size() < 3) return std::nullopt;
    double nbar = 0, ybar = 0;
    for (const auto& p : usable) {
        nbar += static_cast<double>(p.n);
        ybar += p.log2_err;
    }
    nbar /= static_cast<double>(usable.size());
    ybar /= static_cast<double>(usable.size());
    double num = 0, den = 0;
    for (const auto& p : usable) {
        double dn = static_cast<double>(p.n) - nbar;
        num += dn * (p.log2_err - ybar);
        den += dn * dn;
    }
    if (den == 0) return std::nullopt;
    return std::exp2(num / den);
}

struct ReportRow {
    long long n = 0;
    ExactRational approximant;
    FixedReal abs_error;
};

struct ConvergenceReport {
    std::vector<ReportRow> rows;
    std::optional<FixedReal> rate_estimate;
    std::optional<FixedReal> predicted_rate;
    int precision_bits = 256;
    std::string status = "ok";
};

// Rate fitted over the final third of the rows (geometric regression on
// log |error|); absent when there are too few usable rows.
inline std::optional<FixedReal> estimate_report_rate(const std::vector<ReportRow>& rows) {
    if (rows.size() < 6) return std::nullopt;
    std::vector<RatePoint> pts;
    for (size_t i = rows.size() - rows.size() / 3; i < rows.size(); ++i) {
        ExactRational e = rows[i].abs_error.value();
        if (e == 0) continue;
        pts.push_back({rows[i].n, log2_abs(e)});
    }
    auto rate = fit_geometric_rate(pts);
    if (!rate) return std::nullopt;
    // doubles are dyadic, so the conversion is exact
    ExactRational as_rat(*rate);
    return FixedReal::from_rational(as_rat, 48);
}

}  // namespace khovanskii
