#pragma once

#include <optional>
#include <vector>

#include "sqtransfer/arith.hpp"

namespace sqt {

/// Non-negative weighted function of finite support in [1, N].  Weights are
/// stored exactly as an integer numerator per point with one global rational
/// scale, so mass identities can be checked without rounding.
struct Majorant {
    long long support_len = 0;                              // N
    long long scale_num = 1, scale_den = 1;                 // weight = numer * scale
    std::vector<std::pair<long long, long long>> entries;   // sorted (n, numer)

    double scale() const { return (double)scale_num / (double)scale_den; }
    long long numer_at(long long n) const;
    double weight(long long n) const { return numer_at(n) * scale(); }
    int128 mass_numer() const;
    double mass() const { return (double)mass_numer() * scale(); }
};

/// The residue data (X, w, b1, b2) of the W-trick, with sigma and the support
/// length N_b = floor(X^2 / (b1^2 W)) + 1 derived on construction.
struct WParams {
    long long X = 0;
    SmoothnessContext ctx;
    long long b1 = 1;
    long long b2 = 0;
    long long sigma = 0;
    long long Nb = 0;
};

WParams make_wparams(long long X, long long w, long long b1, long long b2);

// Smallest admissible b2 for the given w (exists for every w >= 2: -(W-1) is
// a square mod W).
long long default_b2(long long W);

// Support \{x^2 : x in [1, X]\}, weight 2x at x^2; total mass X(X+1).
Majorant plain_majorant(long long X);

// Weight 2*sqrt(W n - b2)/sigma(b2) at n whenever b1^2 (W n - b2) is the
// square of some x in [1, X]; support inside [1, N_b].
Majorant wtricked_majorant(const WParams& p);

// A_b = \{n : b1^2 (W n - b2) = x^2 for some x in A\}, ascending.
std::vector<long long> lift_set(const std::vector<long long>& A, const WParams& p);

struct SelectResult {
    WParams params;
    double statistic = 0;    // sum over A_b of nu_b
    double normalized = 0;   // statistic / N_b
    double delta = 0;        // |A| / X
};

// Exhaustive scan over w-smooth b1 <= sqrt(X) and admissible b2, maximizing
// the normalized statistic; ties broken by lexicographically smallest (b1, b2).
SelectResult select_b(const std::vector<long long>& A, long long X, long long w);

// All w-smooth integers <= limit, ascending.
std::vector<long long> smooth_numbers_upto(long long limit, long long w);

// Parameters at the scale W <= X^(1/4), taking b1 = W^2 and the smallest X
// whose support length N_b is a multiple of 2^pow2.  The power-of-two factor
// keeps the Fourier-grid sweeps at this scale affordable (see decay_sup).
WParams scaled_wparams(long long w, int pow2 = 12);

}  // namespace sqt
