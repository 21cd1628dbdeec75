#include "tropbbs/linalg.hpp"

#include <stdexcept>

namespace tropbbs {

bool RatMat::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator*(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

RatVec matvec(const RatMat& m, const RatVec& v) {
    RatVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat quadratic_half_form(const RatMat& m, const RatVec& v, const RatVec& z) {
    return dot(v, matvec(m, v)) / 2 + dot(v, z);
}

RatVec Ldlt::solve(const RatVec& b) const {
    const std::size_t n = diag.size();
    RatVec y(b);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) y[i] -= lower(i, j) * y[j];
    for (std::size_t i = 0; i < n; ++i) y[i] /= diag[i];
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j) y[i] -= lower(j, i) * y[j];
    return y;
}

Ldlt exact_ldlt(const RatMat& b) {
    if (!b.is_symmetric()) throw std::domain_error("matrix not symmetric");
    const std::size_t n = b.size();
    Ldlt f{RatMat(n), RatVec(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = b(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= f.lower(j, k) * f.lower(j, k) * f.diag[k];
        if (d <= 0) throw std::domain_error("matrix not positive definite");
        f.diag[j] = d;
        f.lower(j, j) = 1;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat s = b(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= f.lower(i, k) * f.lower(j, k) * f.diag[k];
            f.lower(i, j) = s / d;
        }
    }
    return f;
}

bool is_positive_definite(const RatMat& b) {
    if (!b.is_symmetric()) return false;
    try {
        exact_ldlt(b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace tropbbs
