#include "quadric/bott.hpp"

#include <string>

#include "quadric/errors.hpp"

namespace quadric {

long long binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: prefix products of C(n,k)
    }
    return r;
}

long long bott(int n, int p, long long t, int q) {
    if (n < 1 || n > 6)
        throw IndexOutOfRange("bott: n = " + std::to_string(n) + " outside [1,6]");
    if (p < 0 || p > n || q < 0 || q > n)
        throw IndexOutOfRange("bott: p or q outside [0,n]");
    if (q == 0 && t > p)
        return binom(t + n - p, t) * binom(t - 1, p);
    if (q == p && t == 0)
        return 1;
    if (q == n && t < p - n)
        return binom(p - t, -t) * binom(-t - 1, n - p);
    return 0;
}

long long tangent_coh(int n, long long t, int q) {
    return bott(n, n - 1, t + n + 1, q);
}

long long chi_proj_line(int n, long long t) {
    // (t+1)...(t+n)/n!, an integer for every integer t.
    long long nume = 1, deno = 1;
    for (int i = 1; i <= n; ++i) {
        nume *= t + i;
        deno *= i;
    }
    return nume / deno;
}

} // namespace quadric
