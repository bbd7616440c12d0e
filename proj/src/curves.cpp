#include "quadric/curves.hpp"

#include <algorithm>
#include <sstream>

namespace quadric {

long long CurveData::degree() const {
    long long d = 0;
    for (const auto& [di, gi] : components)
        d += di;
    return d;
}

long long CurveData::arithmetic_genus() const {
    long long g = 1 - static_cast<long long>(components.size());
    for (const auto& [di, gi] : components)
        g += gi;
    return g;
}

std::string CurveData::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, g] : components) {
        if (!first)
            os << " u ";
        first = false;
        os << '(' << d << ',' << g << ')';
    }
    return os.str();
}

long long c3_from_curve(const CurveData& c, long long c1) {
    return 2 * c.arithmetic_genus() - 2 + c.degree() * (3 - c1);
}

long long trisecant(long long d, long long g) {
    return (d - 2) * (d - 3) * (d - 4) / 6 - g * (d - 4);
}

AlphaResult alpha(const CurveData& c, long long c1) {
    const long long d = c.degree();
    const long long g = c.arithmetic_genus();
    AlphaResult r;
    r.lower = (3 - c1) * d + g - 3;
    r.upper = (3 - c1) * d + g - 1;

    if (c1 == 2) {
        // alpha = h^0(omega_C(1)) - 2 = sum_i (d_i + g_i - 1) - 2, exact for
        // every realized type of the c1 = 2 catalogue (each component has
        // omega(1) nonspecial). A single conic falls outside: its bundle is
        // split with alpha = 0.
        static const std::vector<CurveData> realized = {
            CurveData::two_conics(),          CurveData::irreducible(3, 0),
            CurveData::irreducible(4, 0),     CurveData::irreducible(4, 1),
            CurveData::irreducible(5, 1),     CurveData::irreducible(6, 2),
            CurveData::irreducible(8, 5),
        };
        if (std::find(realized.begin(), realized.end(), c) != realized.end()) {
            long long sum = 0;
            for (const auto& [di, gi] : c.components)
                sum += di + gi - 1;
            r.exact = sum - 2;
        } else if (c == CurveData::irreducible(2, 0)) {
            r.exact = 0; // O + O(1)^2; the dual has no intermediate cohomology
        }
    } else if (c1 == 1) {
        if (c == CurveData::irreducible(1, 0))
            r.exact = 0; // O + Sigma splits off every trivial extension
        else if (c == CurveData::irreducible(2, 0))
            r.exact = 1; // A, with h^1(A^v) = 1
    }
    return r;
}

bool operator<(const DelPezzoClass& x, const DelPezzoClass& y) {
    if (x.a != y.a)
        return x.a < y.a;
    return x.b < y.b;
}

std::string DelPezzoClass::to_string() const {
    std::ostringstream os;
    os << '(' << a << "; ";
    for (int i = 0; i < 5; ++i)
        os << b[static_cast<size_t>(i)] << (i + 1 < 5 ? "," : ")");
    return os.str();
}

namespace {

bool admits(const DelPezzoClass& c, DelPezzoFilter filter) {
    const long long sum = c.b[0] + c.b[1] + c.b[2] + c.b[3] + c.b[4];
    switch (filter) {
    case DelPezzoFilter::Raw:
        return true;
    case DelPezzoFilter::Positive:
        // Strict positivity against the two line families of the degree-4
        // surface: the lines through two of the five points and the conic
        // through all five. Reproduces the published lists for (5,1), (6,2).
        return c.a > c.b[0] + c.b[1] && 2 * c.a > sum;
    case DelPezzoFilter::Standard:
        return c.a > c.b[0] + c.b[1] && 2 * c.a > sum && c.a >= c.b[0] + c.b[1] + c.b[2];
    }
    return false;
}

} // namespace

std::vector<DelPezzoClass> delpezzo_classes(long long d, long long g, DelPezzoFilter filter) {
    std::vector<DelPezzoClass> out;
    const long long k = 2 * g - 2 + d; // a^2 - sum(b^2)
    // Cauchy-Schwarz bound: (3a-d)^2 <= 5(a^2-k) gives 4a^2 - 6ad + d^2 + 5k <= 0.
    for (long long a = 1;; ++a) {
        if (4 * a * a - 6 * a * d + d * d + 5 * k > 0) {
            if (4 * a >= 3 * d)
                break;    // past the vertex, the window is behind us
            continue;
        }
        const long long sb = 3 * a - d;
        const long long sb2 = a * a - k;
        if (sb < 0 || sb2 < 0)
            continue;
        DelPezzoClass c;
        c.a = a;
        // b1 >= b2 >= ... >= b5 >= 0 with prescribed sum and sum of squares.
        for (long long b1 = sb; b1 >= 0; --b1) {
            if (b1 * b1 > sb2) continue;
            for (long long b2 = std::min(b1, sb - b1); b2 >= 0; --b2) {
                if (b1 * b1 + b2 * b2 > sb2) continue;
                for (long long b3 = std::min(b2, sb - b1 - b2); b3 >= 0; --b3) {
                    const long long q3 = b1 * b1 + b2 * b2 + b3 * b3;
                    if (q3 > sb2) continue;
                    for (long long b4 = std::min(b3, sb - b1 - b2 - b3); b4 >= 0; --b4) {
                        const long long b5 = sb - b1 - b2 - b3 - b4;
                        if (b5 < 0 || b5 > b4) continue;
                        if (q3 + b4 * b4 + b5 * b5 != sb2) continue;
                        c.b = {b1, b2, b3, b4, b5};
                        if (admits(c, filter))
                            out.push_back(c);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace quadric
