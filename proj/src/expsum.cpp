#include "sqtransfer/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sqtransfer/fft.hpp"

namespace sqt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

struct KahanC {
    double re = 0, im = 0, cre = 0, cim = 0;
    void add(cd v) {
        double yr = v.real() - cre;
        double tr = re + yr;
        cre = (tr - re) - yr;
        re = tr;
        double yi = v.imag() - cim;
        double ti = im + yi;
        cim = (ti - im) - yi;
        im = ti;
    }
    cd value() const { return {re, im}; }
};

cd unit(double turns) {
    double ang = kTwoPi * turns;
    return {std::cos(ang), std::sin(ang)};
}

// e(alpha n) with the product reduced mod 1 in extended precision
cd unit_ln(double alpha, long long n) {
    long double t = std::fmod((long double)alpha * (long double)n, 1.0L);
    double ang = (double)(kTwoPi * t);
    return {std::cos(ang), std::sin(ang)};
}

// 1^_[N](alpha) at alpha = t/M, exact phase bookkeeping done by the caller
// via tN = (N t) mod 2M and tph = ((N+1) t) mod 2M (both arguments of
// sin/e have period 2M in t).
cd interval_hat(long long t, long long M, long long N, long long tN, long long tph) {
    if (t == 0) return {(double)N, 0.0};
    double s0 = std::sin(kPi * (double)t / (double)M);
    double s1 = std::sin(kPi * (double)tN / (double)M);
    double ratio = s1 / s0;
    double ang = kPi * (double)tph / (double)M;
    return cd(std::cos(ang), std::sin(ang)) * ratio;
}

}  // namespace

cd fourier_at(const Majorant& f, double alpha) {
    KahanC acc;
    const double sc = f.scale();
    for (const auto& [n, numer] : f.entries) acc.add(unit_ln(alpha, n) * (numer * sc));
    return acc.value();
}

FourierGrid fourier_grid(const Majorant& f, long long M) {
    long long maxn = f.entries.empty() ? 0 : f.entries.back().first;
    if (M < std::max(f.support_len, maxn))
        throw std::invalid_argument("fourier_grid: M must be >= the support length");
    if (M > (1LL << 25))
        throw std::invalid_argument("fourier_grid: M too large; use decay_sup for big sweeps");
    FourierGrid g;
    g.M = M;
    g.values.assign(M, cd(0, 0));
    const double sc = f.scale();
    for (const auto& [n, numer] : f.entries) g.values[n % M] += cd(numer * sc, 0);
    dft(g.values);
    return g;
}

cd gauss_sum(long long q, long long a, long long z, const WParams& p) {
    if (q < 1) throw std::invalid_argument("gauss_sum: q must be >= 1");
    const long long W = p.ctx.W;
    int128 zz = (int128)z * z + p.b2;
    if (zz % W) throw std::invalid_argument("gauss_sum: z^2 + b2 must vanish mod W");
    const long long c = (long long)(zz / W);
    std::vector<cd> roots(q);
    for (long long k = 0; k < q; ++k) roots[k] = unit((double)k / (double)q);
    KahanC acc;
    for (long long r = 1; r <= q; ++r) {
        int128 m = ((int128)W * r % q) * r + 2 * (int128)z * r + c;
        long long mr = (long long)((((int128)a * (m % q)) % q + q) % q);
        acc.add(roots[mr]);
    }
    return acc.value();
}

cd integral_I(double beta, long long N) {
    if (beta == 0.0) return {(double)N, 0.0};
    // (e(beta N) - 1) / (2 pi i beta)
    cd num = unit_ln(beta, N) - cd(1.0, 0.0);
    return num / cd(0.0, kTwoPi * beta);
}

cd major_arc_main(double alpha, long long q, long long a, const WParams& p) {
    cd I = integral_I(alpha - (double)a / (double)q, p.Nb);
    KahanC acc;
    for (long long z : sqrt_classes(p.ctx.W, p.b2)) acc.add(gauss_sum(q, a, z, p));
    return acc.value() * I / (double)(q * p.sigma);
}

double major_arc_error(double alpha, long long q, long long a, const WParams& p,
                       const Majorant& nu) {
    if (q < 1) throw std::invalid_argument("major_arc_error: q must be >= 1");
    double nq = std::abs(q * alpha - a);
    double denom = std::sqrt((double)p.Nb * (double)p.ctx.W) * ((double)q + p.Nb * nq);
    return std::abs(fourier_at(nu, alpha) - major_arc_main(alpha, q, a, p)) / denom;
}

double weyl_ratio(double alpha, long long q, long long a, const WParams& p,
                  const Majorant& nu) {
    if ((int128)p.b1 * p.ctx.W > p.X)
        throw std::invalid_argument("weyl_ratio: requires b1 W <= X");
    if (q < 1 || gcd_ll(a, q) != 1)
        throw std::invalid_argument("weyl_ratio: a, q must be coprime with q >= 1");
    const double N = (double)p.Nb;
    const double W = (double)p.ctx.W;
    double nq = std::abs(q * alpha - a);
    double inner = 1.0 / std::sqrt(W * N) + nq + (double)q / N;
    double rec = nq > 0 ? 1.0 / (nq * N) : std::numeric_limits<double>::infinity();
    inner += std::min(1.0 / (double)q, rec);
    double rhs = N * std::sqrt(W * std::log(N)) * std::sqrt(inner);
    return std::abs(fourier_at(nu, alpha)) / rhs;
}

DecayResult decay_sup(const Majorant& nu, long long grid_factor, long long pass_len) {
    if (grid_factor < 8)
        throw std::invalid_argument("decay_sup: grid_factor must be >= 8");
    const long long N = nu.support_len;
    const long long M = grid_factor * N;
    const double sc = nu.scale();

    DecayResult res;
    res.grid_points = M;
    res.bernstein_slack = kPi * nu.mass() / ((double)grid_factor * (double)N);

    // scan one pass of grid values nu^((t0 + K t1)/M), t1 = 0..M1-1
    double best = 0;
    auto scan = [&](const std::vector<cd>& vals, long long t0, long long K) {
        const long long M1 = (long long)vals.size();
        long long t = t0;
        long long tN = (long long)(((int128)N * t0) % (2 * M));
        long long tph = (long long)(((int128)(N + 1) * t0) % (2 * M));
        const long long dN = (long long)(((int128)N * K) % (2 * M));
        const long long dph = (long long)(((int128)(N + 1) * K) % (2 * M));
        for (long long t1 = 0; t1 < M1; ++t1) {
            // |1^| <= 1/(2||t/M||); skip the exact evaluation when even
            // |nu^| + that bound cannot beat the current maximum
            double va = std::abs(vals[t1]);
            long long dist = std::min(t, M - t);
            double cap = dist > 0 ? va + 0.5 * (double)M / (double)dist : va + (double)N;
            if (cap > best) {
                double d = std::abs(vals[t1] - interval_hat(t, M, N, tN, tph));
                if (d > best) best = d;
            }
            t += K;
            tN += dN;
            if (tN >= 2 * M) tN -= 2 * M;
            tph += dph;
            if (tph >= 2 * M) tph -= 2 * M;
        }
    };

    if (pass_len > 0) {
        if (pass_len & (pass_len - 1) || M % pass_len)
            throw std::invalid_argument("decay_sup: pass_len must be a power of two dividing the grid");
        const long long M1 = pass_len;
        const long long K = M / M1;
        FftPlan plan((size_t)M1);
        std::vector<cd> v((size_t)M1);
        for (long long t0 = 0; t0 < K; ++t0) {
            std::fill(v.begin(), v.end(), cd(0, 0));
            for (const auto& [n, numer] : nu.entries) {
                long long r = (long long)(((int128)n * t0) % M);
                v[n % M1] += unit((double)r / (double)M) * (numer * sc);
            }
            plan.run(v);
            scan(v, t0, K);
        }
    } else if (M <= (1LL << 22)) {
        std::vector<cd> v(M, cd(0, 0));
        for (const auto& [n, numer] : nu.entries) v[n % M] += cd(numer * sc, 0);
        dft(v);
        scan(v, 0, 1);
    } else {
        // factor M and pick a pass length M1 | M
        long long m = M;
        long long p2 = 1;
        while (m % 2 == 0 && p2 < (1LL << 19)) {
            m /= 2;
            p2 *= 2;
        }
        if (p2 < (1LL << 10))
            throw std::invalid_argument(
                "decay_sup: grid too large and support length lacks a power-of-two "
                "factor; pick parameters via scaled_wparams");
        const long long M1 = p2;
        const long long K = M / M1;
        FftPlan plan((size_t)M1);
        std::vector<cd> v((size_t)M1);
        for (long long t0 = 0; t0 < K; ++t0) {
            std::fill(v.begin(), v.end(), cd(0, 0));
            for (const auto& [n, numer] : nu.entries) {
                long long r = (long long)(((int128)n * t0) % M);
                v[n % M1] += unit((double)r / (double)M) * (numer * sc);
            }
            plan.run(v);
            scan(v, t0, K);
        }
    }
    res.sup_ratio = best / (double)N;
    return res;
}

ArcDecomposition arcs(long long N, double tau) {
    if (!(tau > 0 && tau < 0.5))
        throw std::invalid_argument("arcs: tau must lie in (0, 1/2)");
    ArcDecomposition d;
    d.tau = tau;
    d.N = N;
    long long qmax = (long long)std::pow((double)N, tau);
    double radius = std::pow((double)N, -1.0 + tau);
    for (long long q = 1; q <= qmax; ++q)
        for (long long a = 0; a < q; ++a)
            if (gcd_ll(a, q) == 1 || (q == 1 && a == 0))
                d.arcs.push_back({q, a, (double)a / (double)q, radius});
    return d;
}

}  // namespace sqt
