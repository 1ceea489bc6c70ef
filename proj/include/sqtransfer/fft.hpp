#pragma once

#include <complex>
#include <vector>

namespace sqt {

using cd = std::complex<double>;

// In-place power-of-two transform with kernel e(+2*pi*i*n*t/M).
void fft_pow2(std::vector<cd>& v);

// Same kernel, arbitrary length, via Bluestein's chirp transform.
void dft_any(std::vector<cd>& v);

// dft[t] = sum_n v[n] e(n t / M) for M = v.size(); dispatches on length.
void dft(std::vector<cd>& v);

// Reusable power-of-two plan (bit-reversal + twiddle tables) for repeated
// transforms of the same length.
class FftPlan {
  public:
    explicit FftPlan(size_t n);
    void run(std::vector<cd>& v) const;
    size_t size() const { return n_; }

  private:
    size_t n_;
    std::vector<uint32_t> rev_;
    std::vector<cd> roots_;  // roots_[j] = e(j / n), j < n/2
};

}  // namespace sqt
