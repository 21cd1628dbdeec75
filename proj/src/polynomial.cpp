#include "tropbbs/polynomial.hpp"

#include <set>
#include <sstream>

namespace tropbbs {

BivarPoly BivarPoly::monomial(long qdeg, long ydeg, Int coeff) {
    BivarPoly p;
    if (coeff != 0) p.terms_[{qdeg, ydeg}] = std::move(coeff);
    return p;
}

void BivarPoly::add_term(long qdeg, long ydeg, const Int& c) {
    if (c == 0) return;
    auto key = QYDeg{qdeg, ydeg};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [deg, c] : b.terms_) r.add_term(deg.first, deg.second, c);
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [deg, c] : b.terms_) r.add_term(deg.first, deg.second, Int(-c));
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [deg, c] : terms_) r.terms_[deg] = -c;
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_)
            r.add_term(da.first + db.first, da.second + db.second, ca * cb);
    return r;
}

std::map<long, Int> BivarPoly::y_coefficient(long d) const {
    std::map<long, Int> out;
    for (const auto& [deg, c] : terms_)
        if (deg.second == d) out[deg.first] = c;
    return out;
}

std::vector<long> BivarPoly::y_degrees() const {
    std::set<long> degs;
    for (const auto& [deg, c] : terms_) degs.insert(deg.second);
    return {degs.begin(), degs.end()};
}

ExtRat BivarPoly::q_valuation() const {
    if (terms_.empty()) return ExtRat::infinity();
    bool first = true;
    long best = 0;
    for (const auto& [deg, c] : terms_)
        if (first || deg.first < best) {
            best = deg.first;
            first = false;
        }
    return ExtRat(Rat(best));
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        bool unit = (a == 1) && (deg.first != 0 || deg.second != 0);
        if (!unit) os << a.get_str();
        if (deg.first) os << "q" << (deg.first != 1 ? "^" + std::to_string(deg.first) : "");
        if (deg.second) os << "y" << (deg.second != 1 ? "^" + std::to_string(deg.second) : "");
    }
    return os.str();
}

BivarPoly q_minus_y_pow(long n) {
    BivarPoly p;
    Int binom;
    for (long k = 0; k <= n; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        // (q - y)^n = sum_k C(n,k) q^{n-k} (-y)^k
        p.add_term(n - k, k, (k % 2 == 0) ? binom : Int(-binom));
    }
    return p;
}

LaxMatrix operator*(const LaxMatrix& a, const LaxMatrix& b) {
    return LaxMatrix{
        a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
        a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22,
    };
}

LaxMatrix lax_identity() {
    return LaxMatrix{BivarPoly::constant(1), BivarPoly(), BivarPoly(), BivarPoly::constant(1)};
}

LaxMatrix lax_H() {
    return LaxMatrix{BivarPoly::monomial(0, 0), BivarPoly::monomial(0, 0),
                     BivarPoly::monomial(0, 1), BivarPoly::monomial(1, 0)};
}

LaxMatrix lax_T() {
    return LaxMatrix{BivarPoly::monomial(1, 0), BivarPoly::monomial(0, 0),
                     BivarPoly::monomial(0, 1), BivarPoly::monomial(0, 0)};
}

}  // namespace tropbbs
