#include "sqtransfer/majorant.hpp"

#include <algorithm>
#include <map>

namespace sqt {

long long Majorant::numer_at(long long n) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), n,
                               [](const auto& e, long long key) { return e.first < key; });
    return (it != entries.end() && it->first == n) ? it->second : 0;
}

int128 Majorant::mass_numer() const {
    int128 s = 0;
    for (const auto& [n, x] : entries) {
        (void)n;
        s += x;
    }
    return s;
}

WParams make_wparams(long long X, long long w, long long b1, long long b2) {
    if (X < 1) throw std::invalid_argument("make_wparams: X must be >= 1");
    WParams p;
    p.X = X;
    p.ctx = make_context(w);
    if (b1 < 1 || !is_smooth(b1, w))
        throw std::invalid_argument("make_wparams: b1 must be a positive w-smooth integer");
    if ((int128)b1 * b1 > X)
        throw std::invalid_argument("make_wparams: b1^2 must not exceed X");
    p.b1 = b1;
    p.b2 = b2;
    p.sigma = sigma_count(p.ctx.W, b2);  // validates range and coprimality
    if (p.sigma == 0)
        throw std::invalid_argument("make_wparams: -b2 is not a square mod W (sigma = 0)");
    int128 nb = (int128)X * X / ((int128)b1 * b1 * p.ctx.W) + 1;
    p.Nb = static_cast<long long>(nb);
    return p;
}

long long default_b2(long long W) {
    for (long long b2 = 1; b2 <= W; ++b2) {
        if (gcd_ll(b2, W) != 1) continue;
        bool any = false;
        for (long long z = 1; z <= W && !any; ++z)
            if (((int128)z * z + b2) % W == 0) any = true;
        if (any) return b2;
    }
    throw std::logic_error("default_b2: no admissible b2 (unreachable for W >= 8)");
}

Majorant plain_majorant(long long X) {
    if (X < 1) throw std::invalid_argument("plain_majorant: X must be >= 1");
    if (X > 3000000000LL) throw std::overflow_error("plain_majorant: X^2 exceeds 63 bits");
    Majorant m;
    m.support_len = X * X;
    m.scale_num = 2;
    m.scale_den = 1;
    m.entries.reserve(X);
    for (long long x = 1; x <= X; ++x) m.entries.emplace_back(x * x, x);
    return m;
}

Majorant wtricked_majorant(const WParams& p) {
    if (p.sigma <= 0)
        throw std::invalid_argument("wtricked_majorant: sigma must be positive");
    const long long W = p.ctx.W;
    Majorant m;
    m.support_len = p.Nb;
    m.scale_num = 2;
    m.scale_den = p.sigma;
    const long long Y = p.X / p.b1;  // b1^2 (Wn - b2) = (b1 y)^2 with b1 y <= X
    for (long long y = 1; y <= Y; ++y) {
        int128 t = (int128)y * y + p.b2;
        if (t % W) continue;
        m.entries.emplace_back(static_cast<long long>(t / W), y);
    }
    return m;
}

std::vector<long long> lift_set(const std::vector<long long>& A, const WParams& p) {
    const long long W = p.ctx.W;
    std::vector<long long> out;
    for (long long x : A) {
        if (x < 1 || x > p.X)
            throw std::invalid_argument("lift_set: A must be contained in [1, X]");
        if (x % p.b1) continue;
        long long y = x / p.b1;
        int128 t = (int128)y * y + p.b2;
        if (t % W) continue;
        out.push_back(static_cast<long long>(t / W));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long long> smooth_numbers_upto(long long limit, long long w) {
    std::vector<long long> out{1};
    for (long long p : primes_upto(w)) {
        size_t cur = out.size();
        for (size_t i = 0; i < cur; ++i) {
            int128 v = out[i];
            while ((v *= p) <= limit) out.push_back(static_cast<long long>(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

WParams scaled_wparams(long long w, int pow2) {
    if (pow2 < 0 || pow2 > 40) throw std::invalid_argument("scaled_wparams: bad pow2");
    const long long W = compute_W(w);
    const int128 W3 = (int128)W * W * W;
    const int128 W5 = W3 * W * W;
    const long long step = 1LL << pow2;
    int128 N0 = ((W3 + step) / step) * step;  // smallest multiple of 2^pow2 > W^3
    for (;;) {
        int128 X = isqrt128(N0 * W5 - 1);
        if (X * X >= (N0 - 1) * W5)
            return make_wparams((long long)X, w, W * W, default_b2(W));
        N0 += step;  // empty X-interval, take the next multiple
    }
}

SelectResult select_b(const std::vector<long long>& A, long long X, long long w) {
    if (A.empty()) throw std::invalid_argument("select_b: A must be nonempty");
    for (long long x : A)
        if (x < 1 || x > X)
            throw std::invalid_argument("select_b: A must be contained in [1, X]");
    SmoothnessContext ctx = make_context(w);
    const long long W = ctx.W;

    // admissible b2 and the shared sigma value
    std::vector<char> admissible(W + 1, 0);
    long long sigma = 0;
    for (long long b2 = 1; b2 <= W; ++b2) {
        if (gcd_ll(b2, W) != 1) continue;
        long long s = 0;
        for (long long z = 1; z <= W; ++z)
            if (((int128)z * z + b2) % W == 0) ++s;
        if (s > 0) {
            admissible[b2] = 1;
            sigma = s;
        }
    }
    if (sigma == 0)
        throw std::logic_error("select_b: no admissible b2 for this w");

    SelectResult best;
    bool have = false;
    for (long long b1 : smooth_numbers_upto(isqrt64(X), w)) {
        // bucket sum of y = x/b1 by the class b2 = (-y^2) mod W it lands in
        std::map<long long, int128> cls;
        for (long long x : A) {
            if (x % b1) continue;
            long long y = x / b1;
            long long r = (W - (long long)(((int128)y * y) % W)) % W;
            if (r == 0) continue;  // gcd(b2, W) > 1, inadmissible class
            cls[r] += y;
        }
        int128 nb = (int128)X * X / ((int128)b1 * b1 * W) + 1;
        for (long long b2 = 1; b2 <= W; ++b2) {
            if (!admissible[b2]) continue;
            auto it = cls.find(b2);
            int128 num = (it == cls.end()) ? 0 : it->second;
            double stat = 2.0 * (double)num / (double)sigma;
            double norm = stat / (double)nb;
            if (!have || norm > best.normalized) {
                have = true;
                best.params.X = X;
                best.params.ctx = ctx;
                best.params.b1 = b1;
                best.params.b2 = b2;
                best.params.sigma = sigma;
                best.params.Nb = (long long)nb;
                best.statistic = stat;
                best.normalized = norm;
            }
        }
    }
    best.delta = (double)A.size() / (double)X;
    return best;
}

}  // namespace sqt
