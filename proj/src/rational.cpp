#include "tropbbs/rational.hpp"

#include <ostream>

namespace tropbbs {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int round_half_to_zero(const Rat& r) {
    // floor(r + 1/2), except exact .5 magnitudes pull toward zero
    Rat shifted = r + Rat(1, 2);
    Int f = floor_int(shifted);
    if (shifted == Rat(f) && r > 0) f -= 1;  // r = k + 1/2, k >= 0: choose k
    return f;
}

std::string to_string(const ExtRat& e) {
    return e.is_inf() ? "inf" : to_string(e.finite());
}

std::ostream& operator<<(std::ostream& os, const ExtRat& e) {
    return os << to_string(e);
}

}  // namespace tropbbs
