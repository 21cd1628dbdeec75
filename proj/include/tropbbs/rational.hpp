#pragma once

// Exact arithmetic base layer: arbitrary-precision rationals (GMP) plus the
// extended rationals Q ∪ {+inf} used as the value range of valuations.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tropbbs {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Renders canonical "p" or "p/q".
std::string to_string(const Rat& r);

// floor(r) as an exact integer.
Int floor_int(const Rat& r);

// Nearest integer to r; exact half ties round toward zero.
Int round_half_to_zero(const Rat& r);

// A rational extended with +inf. +inf is absorbing for addition and the
// neutral element of min; it arises only as the valuation of zero.
class ExtRat {
public:
    ExtRat() : inf_(false), v_(0) {}
    ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
    ExtRat(long v) : inf_(false), v_(v) {}

    static ExtRat infinity() {
        ExtRat e;
        e.inf_ = true;
        return e;
    }

    bool is_inf() const { return inf_; }

    const Rat& finite() const {
        if (inf_) throw std::domain_error("ExtRat: +inf has no finite value");
        return v_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.v_ + b.v_);
    }

    friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }

    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

private:
    bool inf_;
    Rat v_;
};

std::string to_string(const ExtRat& e);
std::ostream& operator<<(std::ostream& os, const ExtRat& e);

}  // namespace tropbbs
