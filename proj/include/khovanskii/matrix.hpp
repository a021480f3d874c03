#pragma once

// Dense square matrices over the exact integers: products, powers by
// repeated squaring, 3x3 characteristic data and adjugates, and the
// Faddeev-LeVerrier characteristic polynomial for general dimension.

#include "khovanskii/exact.hpp"

#include <initializer_list>
#include <vector>

namespace khovanskii {

class SquareMatrix {
  public:
    explicit SquareMatrix(int dim)
        : dim_(dim), e_(static_cast<size_t>(dim) * dim, ExactInteger(0)) {
        if (dim < 1) throw domain_error("SquareMatrix: dimension must be >= 1");
    }

    SquareMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : SquareMatrix(static_cast<int>(rows.size())) {
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim_)
                throw domain_error("SquareMatrix: ragged initializer");
            int j = 0;
            for (long long v : row) at(i, j++) = v;
            ++i;
        }
    }

    static SquareMatrix identity(int dim) {
        SquareMatrix I(dim);
        for (int i = 0; i < dim; ++i) I.at(i, i) = 1;
        return I;
    }

    int dim() const { return dim_; }
    ExactInteger& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const ExactInteger& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    bool operator==(const SquareMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    ExactInteger trace() const {
        ExactInteger t = 0;
        for (int i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

  private:
    int dim_;
    std::vector<ExactInteger> e_;
};

inline SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("matrix product: dimension mismatch");
    const int n = a.dim();
    SquareMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const ExactInteger& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

inline SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim() != b.dim()) throw domain_error("matrix sum: dimension mismatch");
    SquareMatrix r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

inline SquareMatrix operator*(const ExactInteger& c, const SquareMatrix& a) {
    SquareMatrix r = a;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) *= c;
    return r;
}

// Exact A^n by repeated squaring; A^0 is the identity.
inline SquareMatrix mat_pow(const SquareMatrix& a, long long n) {
    if (n < 0) throw domain_error("mat_pow: negative exponent");
    SquareMatrix result = SquareMatrix::identity(a.dim());
    SquareMatrix base = a;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

inline ExactInteger det_3(const SquareMatrix& a) {
    if (a.dim() != 3) throw domain_error("det_3: dimension must be 3");
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

// Transpose of the cofactor matrix; A * Adj(A) = det(A) * I.
inline SquareMatrix adjugate_3(const SquareMatrix& a) {
    if (a.dim() != 3) throw domain_error("adjugate_3: dimension must be 3");
    SquareMatrix r(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // Cofactor of (j, i), arranged so no explicit sign is needed.
            r.at(i, j) = a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
        }
    return r;
}

// X^3 = t X^2 - s X + d.
struct CharPoly3 {
    ExactInteger t, s, d;
};

// T^k - s1 T^{k-1} + s2 T^{k-2} - ... + (-1)^k s_k; s[i] stores s_{i+1}.
struct CharPolyK {
    int k = 0;
    std::vector<ExactInteger> s;
};

inline CharPoly3 char_poly_3(const SquareMatrix& a) {
    if (a.dim() != 3) throw domain_error("char_poly_3: dimension must be 3");
    ExactInteger t = a.trace();
    ExactInteger s = a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1) +
                     a.at(0, 0) * a.at(2, 2) - a.at(0, 2) * a.at(2, 0) +
                     a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    return CharPoly3{t, s, det_3(a)};
}

// Faddeev-LeVerrier; all divisions are exact over the integers.
inline CharPolyK char_poly_k(const SquareMatrix& a) {
    const int k = a.dim();
    CharPolyK cp;
    cp.k = k;
    cp.s.reserve(k);
    SquareMatrix b = SquareMatrix::identity(k);
    int sign = 1;
    for (int i = 1; i <= k; ++i) {
        SquareMatrix m = a * b;
        ExactInteger c = m.trace() / i;
        cp.s.push_back(sign * c);  // s_i = (-1)^{i-1} c_i
        sign = -sign;
        if (i < k) b = m + (-c) * SquareMatrix::identity(k);
    }
    return cp;
}

}  // namespace khovanskii
