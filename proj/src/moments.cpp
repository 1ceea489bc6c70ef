#include "sqtransfer/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sqtransfer/expsum.hpp"
#include "sqtransfer/fft.hpp"

namespace sqt {

namespace {

constexpr double kPi = std::numbers::pi;

long long ipow_checked(long long base, int e) {
    int128 v = 1;
    for (int i = 0; i < e; ++i) {
        v *= base;
        if (v > (int128)4e18) throw std::overflow_error("moment_even: scale overflow");
    }
    return (long long)v;
}

}  // namespace

MomentValue moment_even(const WeightedFn& f, int k) {
    if (k < 1) throw std::invalid_argument("moment_even: k must be >= 1");
    MomentValue out;
    out.scale_num = ipow_checked(f.scale_num, 2 * k);
    out.scale_den = ipow_checked(f.scale_den, 2 * k);
    long long g = gcd_ll(out.scale_num, out.scale_den);
    out.scale_num /= g;
    out.scale_den /= g;
    if (f.entries.empty()) return out;

    const long long maxn = f.entries.back().first;
    if ((int128)maxn * k > (1LL << 26))
        throw std::invalid_argument("moment_even: support too long for dense convolution");

    // dense k-fold convolution C(s) = sum over x_1+...+x_k = s of prod f(x_i)
    std::vector<int128> conv(maxn + 1, 0);
    for (const auto& [n, numer] : f.entries) conv[n] = numer;
    for (int fold = 2; fold <= k; ++fold) {
        std::vector<int128> next((size_t)maxn * fold + 1, 0);
        for (const auto& [n, numer] : f.entries) {
            if (numer == 0) continue;
            for (size_t s = 0; s < conv.size(); ++s)
                if (conv[s]) next[s + n] += conv[s] * numer;
        }
        conv.swap(next);
    }
    int128 energy = 0;
    for (int128 c : conv) energy += c * c;
    out.numer = energy;
    return out;
}

QuadratureResult moment_quadrature(const WeightedFn& f, double p, long long M) {
    if (p < 1) throw std::invalid_argument("moment_quadrature: p must be >= 1");
    long long maxn = f.entries.empty() ? 0 : f.entries.back().first;
    long long span = std::max(f.support_len, maxn);
    if (M < 8 * span)
        throw std::invalid_argument("moment_quadrature: M must be >= 8 * support length");
    QuadratureResult out;
    out.grid_points = M;
    if (f.entries.empty()) return out;
    FourierGrid g = fourier_grid(f, M);
    long double acc = 0;
    for (const auto& z : g.values) acc += std::pow((long double)std::abs(z), (long double)p);
    out.value = (double)(acc / M);
    double mass = 0;
    for (const auto& [n, numer] : f.entries) mass += std::abs(numer * f.scale());
    out.slack = kPi * p * (double)span * std::pow(mass, p) / (double)M;
    return out;
}

double restriction_ratio(const WParams& p_params, double p, int trials,
                         unsigned long long seed) {
    if (p <= 4) throw std::invalid_argument("restriction_ratio: p must exceed 4");
    if (trials < 1) throw std::invalid_argument("restriction_ratio: trials must be >= 1");
    Majorant nu = wtricked_majorant(p_params);
    const long long N = p_params.Nb;
    const long long M = 8 * std::max(N, nu.entries.empty() ? 0 : nu.entries.back().first);
    const double ref = std::pow((double)N, p - 1.0);
    const double densities[3] = {0.25, 0.5, 1.0};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double best = 0;
    for (int t = 0; t < trials; ++t) {
        WeightedFn phi = nu;
        if (t > 0) {
            double density = densities[(t - 1) % 3];
            for (auto& [n, numer] : phi.entries) {
                (void)n;
                if (unif(rng) >= density)
                    numer = 0;
                else if (unif(rng) < 0.5)
                    numer = -numer;
            }
        }
        best = std::max(best, moment_quadrature(phi, p, M).value / ref);
    }
    return best;
}

FourthMomentReport fourth_moment_ratio(const WParams& p_params) {
    Majorant nu = wtricked_majorant(p_params);
    const double N = (double)p_params.Nb;
    FourthMomentReport r;
    r.ratio = moment_even(nu, 2).value() / (N * N * N);
    double ll = std::log(std::log(N));
    r.curve_c1 = std::pow(N, 1.0 / ll);
    r.curve_c2 = std::pow(N, 2.0 / ll);
    r.curve_c4 = std::pow(N, 4.0 / ll);
    return r;
}

SpectrumReport large_spectrum(const WeightedFn& phi, double delta, long long N) {
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("large_spectrum: delta must lie in (0, 1)");
    if (N < 1) throw std::invalid_argument("large_spectrum: N must be >= 1");
    SpectrumReport rep;
    rep.delta = delta;
    const long long M = 16 * N;
    if (!phi.entries.empty() && phi.entries.back().first > M)
        throw std::invalid_argument("large_spectrum: phi support exceeds the 16N grid");
    FourierGrid g = fourier_grid(phi, M);
    const double threshold = delta * (double)N;
    const long long sep = 16;  // 1/N on the 16N grid
    std::vector<long long> chosen;
    for (long long t = 0; t < (long long)g.values.size(); ++t) {
        if (std::abs(g.values[t]) <= threshold) continue;
        if (!chosen.empty() && t - chosen.back() < sep) continue;
        chosen.push_back(t);
    }
    // circular separation between the last and first chosen points
    while (chosen.size() > 1 &&
           (long long)g.values.size() - chosen.back() + chosen.front() < sep)
        chosen.pop_back();
    for (long long t : chosen) rep.points.push_back((double)t / (double)g.M);
    rep.R = (long long)rep.points.size();
    rep.measure_estimate = 2.0 * (double)rep.R / (double)N;
    return rep;
}

}  // namespace sqt
