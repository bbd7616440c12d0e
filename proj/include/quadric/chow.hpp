#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "quadric/rational.hpp"

namespace quadric {

// Degree-truncated class on the smooth quadric threefold Q in P^4, written
// over the basis (1, h, l, p): h the hyperplane section, l the class of a
// line, p the class of a point. Multiplication obeys
//
//     h*h = 2l,   h*l = p,   l*l = h*p = l*p = p*p = 0,
//
// everything above degree 3 truncated. Coefficients are exact rationals.
class ChowClass {
  public:
    ChowClass() : c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
    ChowClass(Rat a0, Rat a1, Rat a2, Rat a3) : c_{a0, a1, a2, a3} {}

    static ChowClass one() { return ChowClass(Rat(1), Rat(0), Rat(0), Rat(0)); }
    static ChowClass h() { return ChowClass(Rat(0), Rat(1), Rat(0), Rat(0)); }
    static ChowClass l() { return ChowClass(Rat(0), Rat(0), Rat(1), Rat(0)); }
    static ChowClass p() { return ChowClass(Rat(0), Rat(0), Rat(0), Rat(1)); }

    const Rat& operator[](int deg) const { return c_[static_cast<size_t>(deg)]; }
    Rat& operator[](int deg) { return c_[static_cast<size_t>(deg)]; }

    friend ChowClass operator+(const ChowClass& x, const ChowClass& y);
    friend ChowClass operator-(const ChowClass& x, const ChowClass& y);
    friend ChowClass operator*(const ChowClass& x, const ChowClass& y);
    friend ChowClass operator*(const Rat& s, const ChowClass& x);
    friend bool operator==(const ChowClass& x, const ChowClass& y);
    friend bool operator!=(const ChowClass& x, const ChowClass& y) { return !(x == y); }

    bool is_integral() const;

    // Renders like "1 + 2h + 3l + p"; zero class renders as "0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const ChowClass& x);

  private:
    std::array<Rat, 4> c_;
};

// Integer power x^n in the truncated ring, n >= 0.
ChowClass chow_pow(const ChowClass& x, int n);

// Chern data of a sheaf on Q: rank together with (c1, c2, c3) in integer
// (h, l, p) units. This is the universal currency of the bundle calculus;
// c2 equals the degree of the curve associated to a globally generated
// rank-3 bundle, c3 its Hartshorne invariant.
struct ChernData {
    long long rank = 0;
    long long c1 = 0;
    long long c2 = 0;
    long long c3 = 0;

    friend bool operator==(const ChernData& a, const ChernData& b) {
        return a.rank == b.rank && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
    }
    friend bool operator!=(const ChernData& a, const ChernData& b) { return !(a == b); }
    friend bool operator<(const ChernData& a, const ChernData& b);

    std::string to_string() const; // "(r; c1, c2, c3)"
    friend std::ostream& operator<<(std::ostream& os, const ChernData& c);
};

// Chern data of O_Q(t).
inline ChernData line(long long t) { return ChernData{1, t, 0, 0}; }
inline ChernData trivial(long long r) { return ChernData{r, 0, 0, 0}; }

// Total Chern class 1 + c1*h + c2*l + c3*p.
ChowClass total_chern(const ChernData& c);

// Inverse of total_chern for a class with constant term 1 and integral
// coefficients. Throws NonIntegerResult otherwise.
ChernData chern_from_class(const ChowClass& x, long long rank);

// Chern data of E(k) = E tensor O_Q(k). Expanded from the Chern roots
// x_i -> x_i + k h:
//   c1' = c1 + r k
//   c2' = c2 + 2k(r-1)c1 + 2k^2 C(r,2)
//   c3' = c3 + k(r-2)c2 + 2k^2 C(r-1,2) c1 + 2k^3 C(r,3)
// The k^2 term of c3' carries a factor c1; see verify-paper for the
// flagged discrepancy with the published closed form.
ChernData twist(const ChernData& c, long long k);

// Chern data of the dual: (r, -c1, c2, -c3).
ChernData dual(const ChernData& c);

// Whitney quotient: given c(sub) and c(total) for a short exact sequence
// 0 -> S -> E -> F -> 0, returns the Chern data of F by power-series
// division of total Chern classes, truncated at degree 3.
// Throws NonIntegerQuotient if the division is not integral.
ChernData whitney_quotient(const ChernData& sub, const ChernData& total);

// Whitney sum: Chern data of the middle term from sub and quotient,
// c(E) = c(S) * c(F). Inverse of whitney_quotient on its domain.
ChernData whitney_sum(const ChernData& sub, const ChernData& quot);

// Chern data of the tensor product, via Chern characters multiplied in the
// Chow ring and converted back. Integral Chern data always tensors to
// integral data; NonIntegerResult marks an internal inconsistency.
ChernData tensor(const ChernData& a, const ChernData& b);

} // namespace quadric
