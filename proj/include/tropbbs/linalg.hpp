#pragma once

// Small dense exact-rational vectors and matrices (size = curve genus, so
// tiny), with the square-root-free Cholesky (LDL^T) factorization used to
// certify positive definiteness and to drive the theta lattice search.

#include "tropbbs/rational.hpp"

#include <vector>

namespace tropbbs {

using RatVec = std::vector<Rat>;

class RatMat {
public:
    RatMat() : n_(0) {}
    explicit RatMat(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}

    std::size_t size() const { return n_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool operator==(const RatMat& o) const { return n_ == o.n_ && a_ == o.a_; }

    bool is_symmetric() const;

private:
    std::size_t n_;
    std::vector<Rat> a_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& a);
RatVec matvec(const RatMat& m, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);

// <v, M v> / 2 + <v, z>, the theta summand.
Rat quadratic_half_form(const RatMat& m, const RatVec& v, const RatVec& z);

// B = L D L^T with L unit lower triangular and D diagonal, all rational.
// Positive definite iff every pivot d_i > 0.
struct Ldlt {
    RatMat lower;  // unit diagonal
    RatVec diag;   // pivots

    // Solves B x = b via the factorization.
    RatVec solve(const RatVec& b) const;
};

// Throws std::domain_error if b is not symmetric or a pivot is <= 0
// ("matrix not positive definite").
Ldlt exact_ldlt(const RatMat& b);

// True iff symmetric positive definite (LDL^T pivots all positive).
bool is_positive_definite(const RatMat& b);

}  // namespace tropbbs
