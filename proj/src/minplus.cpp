#include "tropbbs/minplus.hpp"

#include <stdexcept>

namespace tropbbs {

TropMin min_plus_eval(const std::vector<TropTerm>& terms, const RatVec& point) {
    if (terms.empty()) throw std::invalid_argument("empty tropical polynomial");
    TropMin best;
    bool first = true;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Rat v = terms[i].coeff + dot(terms[i].slope, point);
        if (first || v < best.value) {
            best = TropMin{std::move(v), i, 1};
            first = false;
        } else if (v == best.value) {
            ++best.support;
        }
    }
    return best;
}

}  // namespace tropbbs
