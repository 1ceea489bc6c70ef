#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sqt {

using int128 = __int128;

/// Smoothness cutoff w together with the primes up to w and the modulus
/// W = 8 * prod of odd primes <= w.
struct SmoothnessContext {
    long long w = 0;
    std::vector<long long> primes;
    long long W = 0;
};

std::vector<long long> primes_upto(long long w);

// Throws std::overflow_error if the product leaves 63 bits (w far beyond
// anything this toolkit targets).
long long compute_W(long long w);

SmoothnessContext make_context(long long w);

// Every prime factor of n is <= w.  Trial division by the primes <= w only.
bool is_smooth(long long n, long long w);

// All z in [1, W] with z^2 + b2 == 0 mod W, ascending.  Requires gcd(b2, W) = 1.
std::vector<long long> sqrt_classes(long long W, long long b2);

// #\{z in [1, W] : z^2 + b2 == 0 mod W\}; either 0 or 2^(pi(w)+1).
long long sigma_count(long long W, long long b2);

// Number of positive divisors of |k|.  Rejects k = 0.
long long divisor_count(long long k);

// The paper's default cutoff sqrt(log X) degenerates at desk scale, so the
// helper clamps from below: max(3, floor(sqrt(log X))).
long long default_w(long long X);

long long gcd_ll(long long a, long long b);

// floor(sqrt(n)) for n >= 0, exact.
long long isqrt64(long long n);
int128 isqrt128(int128 n);

inline bool is_square(long long n, long long* root = nullptr) {
    if (n < 0) return false;
    long long r = isqrt64(n);
    if (root) *root = r;
    return r * r == n;
}

}  // namespace sqt
