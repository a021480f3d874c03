#pragma once

// Expressions over theta = alpha^{1/m} with rational coefficients, and an
// adaptive three-way comparison against exact integers/rationals.
//
// Comparison strategy: when alpha is a perfect m-th power the expression is
// evaluated exactly over the rationals. Otherwise the numerator is reduced
// mod theta^m - alpha; a reduction to the zero polynomial establishes
// equality exactly, and anything else is separated by interval evaluation
// at doubling precision up to a cap.

#include "khovanskii/exact.hpp"
#include "khovanskii/interval.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace khovanskii {

struct unresolved_comparison : std::runtime_error {
    explicit unresolved_comparison(const std::string& what) : std::runtime_error(what) {}
};

enum class Ordering { Less, Equal, Greater };
enum class Sign3 { Negative, Zero, Positive };

// Adaptive precision cap in bits; KHOVANSKII_PRECISION_CAP overrides.
inline int default_precision_cap() {
    if (const char* env = std::getenv("KHOVANSKII_PRECISION_CAP")) {
        int v = std::atoi(env);
        if (v >= 128) return v;
    }
    return 4096;
}

struct RootContext {
    ExactInteger alpha;
    int m = 3;

    bool operator==(const RootContext& o) const { return alpha == o.alpha && m == o.m; }
};

// Ratio of polynomials in theta, both kept reduced mod theta^m - alpha.
class RootExpr {
  public:
    RootExpr(RootContext ctx, std::vector<ExactRational> num, std::vector<ExactRational> den)
        : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
        reduce(num_);
        reduce(den_);
        if (is_zero(den_)) throw domain_error("RootExpr: zero denominator polynomial");
    }

    static RootExpr constant(RootContext ctx, const ExactRational& c) {
        return RootExpr(std::move(ctx), {c}, {ExactRational(1)});
    }
    // theta^k as an expression.
    static RootExpr root_power(RootContext ctx, int k) {
        std::vector<ExactRational> num(static_cast<size_t>(k) + 1, ExactRational(0));
        num.back() = 1;
        return RootExpr(std::move(ctx), std::move(num), {ExactRational(1)});
    }

    const RootContext& ctx() const { return ctx_; }
    const std::vector<ExactRational>& num() const { return num_; }
    const std::vector<ExactRational>& den() const { return den_; }

    friend RootExpr operator+(const RootExpr& a, const RootExpr& b) {
        a.check(b);
        return RootExpr(a.ctx_,
                        poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                        poly_mul(a.den_, b.den_));
    }
    friend RootExpr operator-(const RootExpr& a, const RootExpr& b) {
        a.check(b);
        return RootExpr(a.ctx_,
                        poly_sub(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                        poly_mul(a.den_, b.den_));
    }
    friend RootExpr operator*(const RootExpr& a, const RootExpr& b) {
        a.check(b);
        return RootExpr(a.ctx_, poly_mul(a.num_, b.num_), poly_mul(a.den_, b.den_));
    }
    friend RootExpr operator/(const RootExpr& a, const RootExpr& b) {
        a.check(b);
        return RootExpr(a.ctx_, poly_mul(a.num_, b.den_), poly_mul(a.den_, b.num_));
    }
    RootExpr operator-() const {
        std::vector<ExactRational> n = num_;
        for (auto& c : n) c = -c;
        return RootExpr(ctx_, std::move(n), den_);
    }

    bool num_identically_zero() const { return is_zero(num_); }

    // Evaluate at an enclosure of theta.
    RatInterval eval(const RatInterval& theta) const {
        return eval_poly(num_, theta) / eval_poly(den_, theta);
    }
    RatInterval eval_num(const RatInterval& theta) const { return eval_poly(num_, theta); }
    RatInterval eval_den(const RatInterval& theta) const { return eval_poly(den_, theta); }

    // Exact value when theta itself is rational.
    ExactRational eval_exact(const ExactRational& theta) const {
        ExactRational d = eval_poly_exact(den_, theta);
        if (d == 0) throw domain_error("RootExpr: denominator vanished at rational root");
        return eval_poly_exact(num_, theta) / d;
    }

  private:
    RootContext ctx_;
    std::vector<ExactRational> num_, den_;

    void check(const RootExpr& o) const {
        if (!(ctx_ == o.ctx_)) throw domain_error("RootExpr: mixed root contexts");
    }

    static bool is_zero(const std::vector<ExactRational>& p) {
        for (const auto& c : p)
            if (c != 0) return false;
        return true;
    }

    // Fold theta^m down using theta^m = alpha, then trim.
    void reduce(std::vector<ExactRational>& p) const {
        const size_t m = static_cast<size_t>(ctx_.m);
        if (p.size() > m) {
            for (size_t d = p.size(); d-- > m;) {
                if (p[d] != 0) {
                    p[d - m] += p[d] * ExactRational(ctx_.alpha);
                    p[d] = 0;
                }
            }
        }
        while (p.size() > 1 && p.back() == 0) p.pop_back();
        if (p.empty()) p.push_back(ExactRational(0));
    }

    static std::vector<ExactRational> poly_add(std::vector<ExactRational> a,
                                               const std::vector<ExactRational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), ExactRational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        return a;
    }
    static std::vector<ExactRational> poly_sub(std::vector<ExactRational> a,
                                               const std::vector<ExactRational>& b) {
        if (a.size() < b.size()) a.resize(b.size(), ExactRational(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return a;
    }
    static std::vector<ExactRational> poly_mul(const std::vector<ExactRational>& a,
                                               const std::vector<ExactRational>& b) {
        std::vector<ExactRational> r(a.size() + b.size() - 1, ExactRational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    static RatInterval eval_poly(const std::vector<ExactRational>& p, const RatInterval& x) {
        RatInterval r{p.back()};
        for (size_t i = p.size() - 1; i-- > 0;) r = r * x + RatInterval{p[i]};
        return r;
    }
    static ExactRational eval_poly_exact(const std::vector<ExactRational>& p,
                                         const ExactRational& x) {
        ExactRational r = p.back();
        for (size_t i = p.size() - 1; i-- > 0;) r = r * x + p[i];
        return r;
    }
};

// Sign of an expression, never guessed: exact when alpha is a perfect power
// or the reduced numerator vanishes identically, otherwise separated by
// doubling-precision enclosures up to the cap.
inline Sign3 sign_of(const RootExpr& e, int precision_cap = default_precision_cap()) {
    const RootContext& ctx = e.ctx();
    if (auto r = exact_root(ctx.alpha, ctx.m)) {
        ExactRational v = e.eval_exact(ExactRational(*r));
        if (v == 0) return Sign3::Zero;
        return v > 0 ? Sign3::Positive : Sign3::Negative;
    }
    if (e.num_identically_zero()) return Sign3::Zero;
    for (int bits = 128; bits <= precision_cap; bits *= 2) {
        RatInterval theta = nth_root_interval(ctx.alpha, ctx.m, bits);
        RatInterval num = e.eval_num(theta);
        RatInterval den = e.eval_den(theta);
        int sn = num.definite_sign(), sd = den.definite_sign();
        if (sn != 0 && sd != 0) return sn * sd > 0 ? Sign3::Positive : Sign3::Negative;
    }
    throw unresolved_comparison("sign_of: precision cap reached without separation");
}

inline Ordering adaptive_compare(const ExactRational& lhs, const RootExpr& rhs,
                                 int precision_cap = default_precision_cap()) {
    Sign3 s = sign_of(RootExpr::constant(rhs.ctx(), lhs) - rhs, precision_cap);
    switch (s) {
        case Sign3::Negative: return Ordering::Less;
        case Sign3::Zero: return Ordering::Equal;
        default: return Ordering::Greater;
    }
}

inline Ordering adaptive_compare(const ExactInteger& lhs, const RootExpr& rhs,
                                 int precision_cap = default_precision_cap()) {
    return adaptive_compare(ExactRational(lhs), rhs, precision_cap);
}

// Floor of the expression's value; reports whether the value is that
// integer exactly. Decides boundary straddles with sign_of.
inline ExactInteger floor_of(const RootExpr& e, bool* exact = nullptr,
                             int precision_cap = default_precision_cap()) {
    auto rational_floor = [](const ExactRational& r) -> ExactInteger {
        ExactInteger q = numerator(r) / denominator(r);
        if (r < 0 && q * denominator(r) != numerator(r)) --q;
        return q;
    };
    const RootContext& ctx = e.ctx();
    if (auto r = exact_root(ctx.alpha, ctx.m)) {
        ExactRational v = e.eval_exact(ExactRational(*r));
        ExactInteger f = rational_floor(v);
        if (exact) *exact = (ExactRational(f) == v);
        return f;
    }
    for (int bits = 128; bits <= precision_cap; bits *= 2) {
        RatInterval theta = nth_root_interval(ctx.alpha, ctx.m, bits);
        RatInterval v = e.eval(theta);
        ExactInteger flo = rational_floor(v.lo), fhi = rational_floor(v.hi);
        if (flo == fhi && v.lo > ExactRational(flo)) {
            if (exact) *exact = false;  // enclosure strictly inside (flo, flo+1)
            return flo;
        }
        if (fhi - flo > 1) continue;  // still too wide
        // The enclosure touches or straddles the integer boundary at fhi
        // (or sits on flo itself when flo == fhi == v.lo); one exact
        // comparison settles it.
        const ExactInteger& k = fhi;
        switch (adaptive_compare(k, e, precision_cap)) {
            case Ordering::Equal:
                if (exact) *exact = true;
                return k;
            case Ordering::Less:  // k < value < k+1
                if (exact) *exact = false;
                return k;
            case Ordering::Greater:  // k-1 <= value < k
                if (exact) *exact = false;
                return k - 1;
        }
    }
    throw unresolved_comparison("floor_of: precision cap reached without separation");
}

}  // namespace khovanskii
