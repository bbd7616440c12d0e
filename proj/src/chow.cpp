#include "quadric/chow.hpp"

#include <sstream>

#include "quadric/bott.hpp"
#include "quadric/errors.hpp"
#include "quadric/hrr.hpp"

namespace quadric {

long long to_integer(const Rat& r) {
    if (r.denominator() != 1)
        throw NonIntegerResult("expected an integer, got " + to_string(r));
    return r.numerator();
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << '/' << r.denominator();
    return os.str();
}

ChowClass operator+(const ChowClass& x, const ChowClass& y) {
    return ChowClass(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
}

ChowClass operator-(const ChowClass& x, const ChowClass& y) {
    return ChowClass(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]);
}

ChowClass operator*(const ChowClass& x, const ChowClass& y) {
    // Structure constants of the basis (1, h, l, p):
    // h*h = 2l, h*l = p, everything above degree 3 dies.
    const auto& a = x.c_;
    const auto& b = y.c_;
    return ChowClass(a[0] * b[0],
                     a[0] * b[1] + a[1] * b[0],
                     a[0] * b[2] + a[2] * b[0] + Rat(2) * a[1] * b[1],
                     a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]);
}

ChowClass operator*(const Rat& s, const ChowClass& x) {
    return ChowClass(s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
}

bool operator==(const ChowClass& x, const ChowClass& y) { return x.c_ == y.c_; }

bool ChowClass::is_integral() const {
    for (const auto& v : c_)
        if (v.denominator() != 1)
            return false;
    return true;
}

std::string ChowClass::to_string() const {
    static const char* names[4] = {"", "h", "l", "p"};
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d < 4; ++d) {
        const Rat& v = c_[static_cast<size_t>(d)];
        if (v == Rat(0))
            continue;
        Rat mag = v < Rat(0) ? -v : v;
        if (first) {
            if (v < Rat(0))
                os << '-';
            first = false;
        } else {
            os << (v < Rat(0) ? " - " : " + ");
        }
        if (d == 0 || mag != Rat(1))
            os << quadric::to_string(mag);
        os << names[d];
    }
    if (first)
        os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChowClass& x) { return os << x.to_string(); }

ChowClass chow_pow(const ChowClass& x, int n) {
    ChowClass r = ChowClass::one();
    for (int i = 0; i < n; ++i)
        r = r * x;
    return r;
}

bool operator<(const ChernData& a, const ChernData& b) {
    if (a.c1 != b.c1) return a.c1 < b.c1;
    if (a.c2 != b.c2) return a.c2 < b.c2;
    if (a.c3 != b.c3) return a.c3 < b.c3;
    return a.rank < b.rank;
}

std::string ChernData::to_string() const {
    std::ostringstream os;
    os << '(' << rank << "; " << c1 << ", " << c2 << ", " << c3 << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChernData& c) { return os << c.to_string(); }

ChowClass total_chern(const ChernData& c) {
    return ChowClass(Rat(1), Rat(c.c1), Rat(c.c2), Rat(c.c3));
}

ChernData chern_from_class(const ChowClass& x, long long rank) {
    if (x[0] != Rat(1))
        throw NonIntegerResult("total Chern class must have constant term 1");
    if (!x.is_integral())
        throw NonIntegerResult("total Chern class has non-integer coefficients: " + x.to_string());
    return ChernData{rank, num(x[1]), num(x[2]), num(x[3])};
}

ChernData twist(const ChernData& c, long long k) {
    const long long r = c.rank;
    ChernData t;
    t.rank = r;
    t.c1 = c.c1 + k * r;
    t.c2 = c.c2 + 2 * k * (r - 1) * c.c1 + 2 * k * k * binom(r, 2);
    t.c3 = c.c3 + k * (r - 2) * c.c2 + 2 * k * k * binom(r - 1, 2) * c.c1 +
           2 * k * k * k * binom(r, 3);
    return t;
}

ChernData dual(const ChernData& c) { return ChernData{c.rank, -c.c1, c.c2, -c.c3}; }

ChernData whitney_quotient(const ChernData& sub, const ChernData& total) {
    if (sub.rank > total.rank)
        throw NonIntegerQuotient("sub rank exceeds total rank");
    // Solve c(sub) * q = c(total) degree by degree; the leading 1 makes the
    // division exact over the rationals, integrality is asserted after.
    const ChowClass s = total_chern(sub);
    const ChowClass t = total_chern(total);
    ChowClass q = ChowClass::one();
    q[1] = t[1] - s[1];
    q[2] = t[2] - s[2] - Rat(2) * s[1] * q[1];
    q[3] = t[3] - s[3] - s[1] * q[2] - s[2] * q[1];
    if (!q.is_integral())
        throw NonIntegerQuotient("quotient class is not integral: " + q.to_string());
    return chern_from_class(q, total.rank - sub.rank);
}

ChernData whitney_sum(const ChernData& sub, const ChernData& quot) {
    return chern_from_class(total_chern(sub) * total_chern(quot), sub.rank + quot.rank);
}

ChernData tensor(const ChernData& a, const ChernData& b) {
    const ChowClass prod = chern_character(a).as_class() * chern_character(b).as_class();
    return chern_from_character(ChernCharacter{prod[0], prod[1], prod[2], prod[3]});
}

} // namespace quadric
