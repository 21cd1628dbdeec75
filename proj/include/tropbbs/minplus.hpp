#pragma once

// Min-plus evaluation of tropical polynomials: terms are (constant, slope
// vector) pairs and evaluation takes the min of affine functions.

#include "tropbbs/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tropbbs {

struct TropTerm {
    Rat coeff;
    RatVec slope;
};

struct TropMin {
    Rat value;
    std::size_t argmin;        // smallest index attaining the min
    std::size_t support = 1;   // number of terms attaining it
};

// min_i [coeff_i + <slope_i, point>], ties broken by smallest index.
// Throws std::invalid_argument("empty tropical polynomial") on no terms.
TropMin min_plus_eval(const std::vector<TropTerm>& terms, const RatVec& point);

}  // namespace tropbbs
