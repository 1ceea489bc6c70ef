#pragma once

#include <complex>
#include <vector>

#include "sqtransfer/majorant.hpp"

namespace sqt {

using cd = std::complex<double>;

// \hat f(alpha) = sum_n f(n) e(alpha n), compensated accumulation.
cd fourier_at(const Majorant& f, double alpha);

struct FourierGrid {
    long long M = 0;
    std::vector<cd> values;  // values[t] = \hat f(t / M)
};

// Exact DFT of the zero-padded weight vector; rejects M < support length.
FourierGrid fourier_grid(const Majorant& f, long long M);

// S_q(a, z) = sum_{r=1}^q e(a (W r^2 + 2 z r + (z^2 + b2)/W) / q).
// Requires z^2 + b2 == 0 mod W.  Evaluated on exact roots of unity.
cd gauss_sum(long long q, long long a, long long z, const WParams& p);

// I(beta) = int_0^N e(beta t) dt, closed form.
cd integral_I(double beta, long long N);

// (1/sigma) sum_z q^{-1} S_q(a, z) I(alpha - a/q) over z^2 + b2 == 0 mod W.
cd major_arc_main(double alpha, long long q, long long a, const WParams& p);

// |nu^(alpha) - main term| / (sqrt(N W) (q + N ||q alpha||)) with
// ||q alpha|| = |q alpha - a|.
double major_arc_error(double alpha, long long q, long long a, const WParams& p,
                       const Majorant& nu);

// |nu^(alpha)| over the Weyl-bound right-hand side.  Requires b1 W <= X.
double weyl_ratio(double alpha, long long q, long long a, const WParams& p,
                  const Majorant& nu);

struct DecayResult {
    double sup_ratio = 0;        // max over the grid of |nu^ - 1^_[N]| / N
    double bernstein_slack = 0;  // pi mass / (grid_factor N), same units as sup_ratio
    long long grid_points = 0;
};

// Sup-norm of nu^ - 1^_[N] on the grid \{t / (grid_factor N)\}.  Large grids
// are swept in passes of length M1 | M, each a zero-padded FFT, so N with a
// decent power-of-two factor keeps the big-X sweeps cheap.  pass_len forces
// that pass length (a power of two dividing the grid size) on small grids too.
DecayResult decay_sup(const Majorant& nu, long long grid_factor, long long pass_len = 0);

struct Arc {
    long long q = 1, a = 0;
    double center = 0, radius = 0;
};

struct ArcDecomposition {
    double tau = 0;
    long long N = 0;
    std::vector<Arc> arcs;
};

// Major arcs |alpha - a/q| <= N^(tau-1) for 0 <= a < q <= N^tau, gcd(a,q)=1.
ArcDecomposition arcs(long long N, double tau);

}  // namespace sqt
