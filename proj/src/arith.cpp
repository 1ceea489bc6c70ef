#include "sqtransfer/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqt {

std::vector<long long> primes_upto(long long w) {
    if (w < 0) throw std::invalid_argument("primes_upto: w must be >= 0");
    std::vector<long long> out;
    if (w < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(w) + 1, false);
    for (long long p = 2; p <= w; ++p) {
        if (composite[p]) continue;
        out.push_back(p);
        for (long long m = p * p; m <= w; m += p) composite[m] = true;
    }
    return out;
}

long long compute_W(long long w) {
    if (w < 2) throw std::invalid_argument("compute_W: w must be >= 2");
    int128 W = 8;
    for (long long p : primes_upto(w)) {
        if (p == 2) continue;
        W *= p;
        if (W > std::numeric_limits<long long>::max())
            throw std::overflow_error("compute_W: W exceeds 63 bits");
    }
    return static_cast<long long>(W);
}

SmoothnessContext make_context(long long w) {
    SmoothnessContext ctx;
    ctx.w = w;
    ctx.primes = primes_upto(w);
    ctx.W = compute_W(w);
    return ctx;
}

bool is_smooth(long long n, long long w) {
    if (n < 1) throw std::invalid_argument("is_smooth: n must be >= 1");
    for (long long p : primes_upto(w))
        while (n % p == 0) n /= p;
    return n == 1;
}

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::vector<long long> sqrt_classes(long long W, long long b2) {
    if (b2 < 1 || b2 > W)
        throw std::invalid_argument("sqrt_classes: b2 must lie in [1, W]");
    if (gcd_ll(b2, W) != 1)
        throw std::invalid_argument("sqrt_classes: b2 must be coprime to W");
    std::vector<long long> zs;
    for (long long z = 1; z <= W; ++z)
        if (((int128)z * z + b2) % W == 0) zs.push_back(z);
    return zs;
}

long long sigma_count(long long W, long long b2) {
    return static_cast<long long>(sqrt_classes(W, b2).size());
}

long long divisor_count(long long k) {
    if (k == 0) throw std::invalid_argument("divisor_count: k must be nonzero");
    if (k < 0) k = -k;
    long long count = 1;
    for (long long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        long long e = 0;
        while (k % p == 0) {
            k /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (k > 1) count *= 2;
    return count;
}

long long default_w(long long X) {
    if (X < 1) throw std::invalid_argument("default_w: X must be >= 1");
    long long floor_sqrt_log = static_cast<long long>(std::sqrt(std::log((double)X)));
    return std::max<long long>(3, floor_sqrt_log);
}

long long isqrt64(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt64: n must be >= 0");
    long long r = static_cast<long long>(std::sqrt((double)n));
    while (r > 0 && (int128)r * r > n) --r;
    while ((int128)(r + 1) * (r + 1) <= n) ++r;
    return r;
}

int128 isqrt128(int128 n) {
    if (n < 0) throw std::invalid_argument("isqrt128: n must be >= 0");
    int128 r = static_cast<int128>(std::sqrt((double)n));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace sqt
