#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadric {

// A (possibly disconnected) smooth curve, given by the degree and genus of
// its components. The arithmetic genus of the union of disjoint components
// is 1 - #components + sum of genera.
struct CurveData {
    std::vector<std::pair<long long, long long>> components; // (degree, genus)

    static CurveData irreducible(long long d, long long g) { return CurveData{{{d, g}}}; }
    static CurveData two_conics() { return CurveData{{{2, 0}, {2, 0}}}; }

    long long degree() const;
    long long arithmetic_genus() const;
    std::string to_string() const;

    friend bool operator==(const CurveData& a, const CurveData& b) {
        return a.components == b.components;
    }
};

// Third Chern class of the rank-3 bundle attached to a curve of degree d
// and arithmetic genus g: c3 = 2g - 2 + d(3 - c1). The classification uses
// c1 in {1, 2}; other values are accepted (callers flag them).
long long c3_from_curve(const CurveData& c, long long c1);
inline bool c1_in_classification_range(long long c1) { return c1 == 1 || c1 == 2; }

// Number of trisecant lines of a general smooth connected curve of degree d
// and genus g in P^4:
//
//   t(d,g) = (d-2)(d-3)(d-4)/6 - g(d-4).
//
// A negative value means infinitely many trisecants; it is returned as-is
// and annotated downstream.
long long trisecant(long long d, long long g);

// The alpha invariant h^1(F^v) of the rank-3 bundle F attached to a curve:
// it bounds the rank of indecomposable extensions by trivial bundles
// (maximal rank 3 + alpha). Exact values are known for the realized curve
// types; otherwise only the bounds
//
//   (3-c1) d + g - 3  <=  alpha  <=  (3-c1) d + g - 1
//
// are available.
struct AlphaResult {
    std::optional<long long> exact;
    long long lower = 0;
    long long upper = 0;
};
AlphaResult alpha(const CurveData& c, long long c1);

// --- Degree-4 del Pezzo lattice classes -------------------------------------

// Class (a; b1..b5) on the blow-up of P^2 at five points, b1 >= ... >= b5 >= 0.
struct DelPezzoClass {
    long long a = 0;
    std::array<long long, 5> b{0, 0, 0, 0, 0};

    std::string to_string() const; // "(a; b1,b2,b3,b4,b5)"
    friend bool operator==(const DelPezzoClass& x, const DelPezzoClass& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const DelPezzoClass& x, const DelPezzoClass& y);
};

// Which inequalities cut down the raw lattice solutions:
//   Raw      : ordering only (b1 >= ... >= b5 >= 0, a >= 1)
//   Positive : Raw plus strict positivity against the two line families,
//              a > b1 + b2 and 2a > b1+...+b5 (the default; reproduces the
//              published solution lists for (5,1) and (6,2))
//   Standard : Positive plus the Cremona-standard form a >= b1+b2+b3
enum class DelPezzoFilter { Raw, Positive, Standard };

// All classes with 3a - sum(b) = d and a^2 = (2g - 2 + d) + sum(b^2) under
// the chosen filter, in lexicographic (a, b) order. The a-range is finite:
// Cauchy-Schwarz on sum(b) = 3a - d gives 4a^2 - 6ad + d^2 + 5(2g-2+d) <= 0.
std::vector<DelPezzoClass> delpezzo_classes(long long d, long long g,
                                            DelPezzoFilter filter = DelPezzoFilter::Positive);

} // namespace quadric
