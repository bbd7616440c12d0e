#pragma once

#include <cstdint>

namespace quadric {

// Binomial coefficient with the combinatorial convention: zero whenever
// n < 0, k < 0 or k > n. One closed form then covers every Bott range.
long long binom(long long n, long long k);

// Dimensions of the twisted holomorphic forms on projective space,
// h^q(Omega^p_{P^n}(t)), by the Bott formula:
//
//   q = 0, t > p      : C(t+n-p, t) * C(t-1, p)
//   q = p, t = 0      : 1
//   q = n, t < p - n  : C(p-t, -t) * C(-t-1, n-p)
//   otherwise         : 0
//
// n is capped at 6; p and q must lie in [0, n]. Throws IndexOutOfRange.
long long bott(int n, int p, long long t, int q);

// h^q(TP^n(t)), computed as bott on Omega^{n-1}(t+n+1) through the
// perfect pairing Omega^{n-1} x Omega^1 -> Omega^n = O(-n-1).
long long tangent_coh(int n, long long t, int q);

// chi(O_{P^n}(t)) = (t+1)(t+2)...(t+n)/n!, exact at every integer t.
long long chi_proj_line(int n, long long t);

} // namespace quadric
