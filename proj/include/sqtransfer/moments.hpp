#pragma once

#include <vector>

#include "sqtransfer/counting.hpp"

namespace sqt {

/// Exact even moment: integral of |f^|^(2k) as a 2k-fold additive energy.
struct MomentValue {
    int128 numer = 0;
    long long scale_num = 1, scale_den = 1;  // = (f scale)^(2k)
    double value() const { return (double)numer * (double)scale_num / (double)scale_den; }
};

// Integer convolution of the weight vector, k folds, then sum of squares.
MomentValue moment_even(const WeightedFn& f, int k);

struct QuadratureResult {
    double value = 0;
    double slack = 0;  // pi p N mass^p / M, from the derivative bound on |f^|^p
    long long grid_points = 0;
};

// (1/M) sum_t |f^(t/M)|^p.  Requires M >= 8 * support length.
QuadratureResult moment_quadrature(const WeightedFn& f, double p, long long M);

// max over sampled |phi| <= nu_b of moment_quadrature(phi, p) / N^(p-1).
// Trial 0 is nu_b itself; later trials flip independent signs and apply a
// random subset mask at density 1/4, 1/2 or 1.  Deterministic in the seed.
double restriction_ratio(const WParams& p_params, double p, int trials,
                         unsigned long long seed);

struct FourthMomentReport {
    double ratio = 0;  // moment_even(nu_b, 2) / N^3
    // reference curves N^(C/log log N) for C = 1, 2, 4
    double curve_c1 = 0, curve_c2 = 0, curve_c4 = 0;
};

FourthMomentReport fourth_moment_ratio(const WParams& p_params);

struct SpectrumReport {
    double delta = 0;
    std::vector<double> points;   // 1/N-separated alpha with |phi^(alpha)| > delta N
    long long R = 0;              // points.size()
    double measure_estimate = 0;  // 2 R / N
};

// Greedy 1/N-separated selection on the 16N grid.
SpectrumReport large_spectrum(const WeightedFn& phi, double delta, long long N);

}  // namespace sqt
