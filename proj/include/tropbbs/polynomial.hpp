#pragma once

// Sparse bivariate polynomials in q and y over arbitrary-precision integers,
// and the 2x2 Lax matrices built from them. Products of O(L) factor matrices
// stay exact; coefficients grow combinatorially and need big integers.

#include "tropbbs/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tropbbs {

// Exponent pair (q-degree, y-degree). Nonnegative for everything built from
// H/T products; kept signed for generality.
using QYDeg = std::pair<long, long>;

class BivarPoly {
public:
    BivarPoly() = default;
    static BivarPoly monomial(long qdeg, long ydeg, Int coeff = 1);
    static BivarPoly constant(Int c) { return monomial(0, 0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<QYDeg, Int>& terms() const { return terms_; }

    void add_term(long qdeg, long ydeg, const Int& c);

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly operator-() const;
    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

    // Coefficient of y^d as a sparse q-polynomial (qdeg -> coeff).
    std::map<long, Int> y_coefficient(long d) const;
    // All y-degrees with nonzero coefficient, ascending.
    std::vector<long> y_degrees() const;
    // min over monomials of (qdeg); +inf for the zero polynomial.
    ExtRat q_valuation() const;

    std::string str() const;  // human-readable, deterministic term order

private:
    std::map<QYDeg, Int> terms_;
};

// (q - y)^n expanded exactly.
BivarPoly q_minus_y_pow(long n);

// 2x2 matrix over Z[q,y]; row-major entries.
struct LaxMatrix {
    BivarPoly a11, a12, a21, a22;

    BivarPoly trace() const { return a11 + a22; }
    BivarPoly det() const { return a11 * a22 - a12 * a21; }

    friend LaxMatrix operator*(const LaxMatrix& a, const LaxMatrix& b);
};

LaxMatrix lax_identity();
LaxMatrix lax_H();  // empty box:  [[1, 1], [y, q]]
LaxMatrix lax_T();  // ball:       [[q, 1], [y, 1]]

}  // namespace tropbbs
