#pragma once

#include "quadric/chow.hpp"
#include "quadric/rational.hpp"

namespace quadric {

// Chern character of a sheaf on Q, truncated at degree 3, in (h, l, p)
// units. Round-trips exactly with ChernData:
//   ch1 = c1
//   ch2 = c1^2 - c2              (since (c1 h)^2 = 2 c1^2 l)
//   ch3 = (2c1^3 - 3c1c2 + 3c3)/6
struct ChernCharacter {
    Rat ch0; // rank
    Rat ch1; // h units
    Rat ch2; // l units
    Rat ch3; // p units

    ChowClass as_class() const { return ChowClass(ch0, ch1, ch2, ch3); }

    friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
        return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2 && a.ch3 == b.ch3;
    }
};

// Todd class of Q, fixed once and for all:
//
//     td(Q) = 1 + (3/2) h + (13/6) l + p.
//
// Derived from c(TQ) = (1+h)^5 / (1+2h) = 1 + 3h + 8l + 4p via
// td1 = c1/2, td2 = (c1^2 + c2)/12, td3 = c1 c2 / 24; the deg-3
// coefficient 1 forces chi(O_Q) = 1. The derivation is replayed in the
// test suite.
const ChowClass& todd_class();

ChernCharacter chern_character(const ChernData& c);

// Exact inverse of chern_character. Throws NonIntegerResult when ch is not
// in the image of integral Chern data.
ChernData chern_from_character(const ChernCharacter& ch);

// Euler characteristic by the closed cubic polynomial
//
//   chi(E) = (2c1^3 - 3c1c2 + 3c3)/6 + 3(c1^2 - c2)/2 + 13c1/6 + r.
Rat chi_formula(const ChernData& c);

// Euler characteristic by Hirzebruch-Riemann-Roch: the degree-3 coefficient
// of ch(E) * td(Q). Equals chi_formula identically.
Rat chi_hrr(const ChernData& c);

} // namespace quadric
