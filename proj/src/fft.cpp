#include "sqtransfer/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace sqt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(size_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

void fft_pow2(std::vector<cd>& v) {
    const size_t n = v.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: length must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = kTwoPi / (double)len;
        const cd wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (size_t j = 0; j < len / 2; ++j) {
                cd u = v[i + j];
                cd t = v[i + j + len / 2] * w;
                v[i + j] = u + t;
                v[i + j + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

void dft_any(std::vector<cd>& v) {
    const size_t m = v.size();
    if (m == 0) return;
    if (m == 1) return;
    size_t l = 1;
    while (l < 2 * m - 1) l <<= 1;
    // chirp[k] = e(k^2 / (2m)), with k^2 reduced mod 2m to keep the angle small
    std::vector<cd> chirp(m);
    for (size_t k = 0; k < m; ++k) {
        unsigned long long r = (unsigned long long)((__uint128_t)k * k % (2 * m));
        double ang = kTwoPi * (double)r / (double)(2 * m);
        chirp[k] = cd(std::cos(ang), std::sin(ang));
    }
    std::vector<cd> a(l, cd(0, 0)), b(l, cd(0, 0));
    for (size_t k = 0; k < m; ++k) a[k] = v[k] * chirp[k];
    b[0] = cd(1, 0);
    for (size_t k = 1; k < m; ++k) b[k] = b[l - k] = std::conj(chirp[k]);
    fft_pow2(a);
    fft_pow2(b);
    for (size_t k = 0; k < l; ++k) a[k] *= b[k];
    // inverse power-of-two transform
    for (auto& x : a) x = std::conj(x);
    fft_pow2(a);
    const double inv = 1.0 / (double)l;
    for (size_t k = 0; k < m; ++k) v[k] = std::conj(a[k]) * inv * chirp[k];
}

FftPlan::FftPlan(size_t n) : n_(n) {
    if (!is_pow2(n)) throw std::invalid_argument("FftPlan: length must be a power of two");
    rev_.resize(n);
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        rev_[i] = (uint32_t)j;
    }
    roots_.resize(n / 2);
    for (size_t j = 0; j < n / 2; ++j) {
        double ang = kTwoPi * (double)j / (double)n;
        roots_[j] = cd(std::cos(ang), std::sin(ang));
    }
}

void FftPlan::run(std::vector<cd>& v) const {
    if (v.size() != n_) throw std::invalid_argument("FftPlan: length mismatch");
    for (size_t i = 1; i < n_; ++i)
        if (i < rev_[i]) std::swap(v[i], v[rev_[i]]);
    for (size_t len = 2; len <= n_; len <<= 1) {
        const size_t stride = n_ / len;
        for (size_t i = 0; i < n_; i += len) {
            for (size_t j = 0; j < len / 2; ++j) {
                cd u = v[i + j];
                cd t = v[i + j + len / 2] * roots_[j * stride];
                v[i + j] = u + t;
                v[i + j + len / 2] = u - t;
            }
        }
    }
}

void dft(std::vector<cd>& v) {
    if (is_pow2(v.size()))
        fft_pow2(v);
    else
        dft_any(v);
}

}  // namespace sqt
