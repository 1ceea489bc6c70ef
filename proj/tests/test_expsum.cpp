#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sqtransfer/expsum.hpp"

using namespace sqt;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cd naive_fourier(const Majorant& f, double alpha) {
    cd s(0, 0);
    for (const auto& [n, numer] : f.entries) {
        double ang = kTwoPi * alpha * (double)n;
        s += cd(std::cos(ang), std::sin(ang)) * (numer * f.scale());
    }
    return s;
}

cd naive_gauss(long long q, long long a, long long z, const WParams& p) {
    cd s(0, 0);
    long long c = (z * z + p.b2) / p.ctx.W;
    for (long long r = 1; r <= q; ++r) {
        double m = (double)(a % q) * (double)((p.ctx.W % q) * r % q * r % q +
                                              2 * z % q * r % q + c % q);
        double ang = kTwoPi * std::fmod(m, (double)q) / (double)q;
        s += cd(std::cos(ang), std::sin(ang));
    }
    return s;
}

Majorant interval_indicator(long long N) {
    Majorant m;
    m.support_len = N;
    for (long long n = 1; n <= N; ++n) m.entries.emplace_back(n, 1);
    return m;
}

}  // namespace

TEST_CASE("fourier_at matches the direct sum") {
    WParams p = make_wparams(80, 3, 1, 23);
    Majorant nu = wtricked_majorant(p);
    for (double alpha : {0.0, 0.1, 1.0 / 3.0, 0.72, 0.999}) {
        cd expect = naive_fourier(nu, alpha);
        CHECK(std::abs(fourier_at(nu, alpha) - expect) < 1e-7);
    }
    CHECK(std::abs(fourier_at(nu, 0.0) - cd(nu.mass(), 0)) < 1e-9);
}

TEST_CASE("fourier_grid agrees with fourier_at on grid points") {
    Majorant m = interval_indicator(20);
    FourierGrid g = fourier_grid(m, 64);
    for (long long t : {0LL, 1LL, 17LL, 63LL})
        CHECK(std::abs(g.values[t] - fourier_at(m, (double)t / 64.0)) < 1e-9);
    CHECK_THROWS_AS(fourier_grid(m, 10), std::invalid_argument);
}

TEST_CASE("gauss_sum: direct evaluation, S_1 = 1, magnitude bound") {
    WParams p = make_wparams(100, 3, 1, 23);
    auto zs = sqrt_classes(p.ctx.W, p.b2);
    REQUIRE(!zs.empty());
    for (long long z : zs) {
        CHECK(std::abs(gauss_sum(1, 1, z, p) - cd(1, 0)) < 1e-12);
        for (long long q : {2LL, 3LL, 5LL, 7LL, 12LL, 25LL, 49LL}) {
            for (long long a = 1; a <= q; ++a) {
                if (gcd_ll(a, q) != 1) continue;
                cd v = gauss_sum(q, a, z, p);
                CHECK(std::abs(v) <= 2.0 * std::sqrt((double)q) + 1e-9);
                CHECK(std::abs(v - naive_gauss(q, a, z, p)) < 1e-6);
            }
        }
    }
    CHECK_THROWS_AS(gauss_sum(5, 1, 2, p), std::invalid_argument);  // 2^2+23 != 0 mod 24
    CHECK_THROWS_AS(gauss_sum(0, 1, zs[0], p), std::invalid_argument);
}

TEST_CASE("smooth vanishing of the z-averaged Gauss sum") {
    WParams p = make_wparams(100, 3, 1, 23);
    auto zs = sqrt_classes(p.ctx.W, p.b2);
    for (long long q : {2LL, 3LL, 4LL, 6LL, 8LL, 9LL, 12LL, 16LL, 24LL, 48LL}) {
        for (long long a = 1; a <= q; ++a) {
            if (gcd_ll(a, q) != 1) continue;
            cd total(0, 0);
            for (long long z : zs) total += gauss_sum(q, a, z, p);
            CHECK(std::abs(total) / (double)q < 1e-9);
        }
    }
}

TEST_CASE("integral_I closed form") {
    CHECK(std::abs(integral_I(0.0, 100) - cd(100, 0)) < 1e-12);
    for (double beta : {0.001, 0.01, -0.02, 0.3}) {
        // Riemann check
        cd riemann(0, 0);
        const int steps = 20000;
        for (int i = 0; i < steps; ++i) {
            double t = 100.0 * (i + 0.5) / steps;
            riemann += cd(std::cos(kTwoPi * beta * t), std::sin(kTwoPi * beta * t));
        }
        riemann *= 100.0 / steps;
        CHECK(std::abs(integral_I(beta, 100) - riemann) < 1e-3);
        double norm = std::abs(beta - std::round(beta));
        CHECK(std::abs(integral_I(beta, 100)) <= std::min(100.0, 1.0 / (kTwoPi / 2 * norm)) + 1e-9);
    }
}

TEST_CASE("major_arc_error is small near rational points with smooth q") {
    WParams p = make_wparams(300, 3, 1, 23);
    Majorant nu = wtricked_majorant(p);
    // alpha near 0 (q = 1): the main term should capture nu^ well
    for (double off : {0.0, 0.2 / (double)p.Nb, -0.4 / (double)p.Nb}) {
        double e = major_arc_error(off, 1, 0, p, nu);
        CHECK(e < 1.0);
    }
}

TEST_CASE("weyl_ratio contract checks") {
    WParams p = make_wparams(100, 3, 1, 23);  // b1 W = 24 <= 100
    Majorant nu = wtricked_majorant(p);
    double v = weyl_ratio(0.5, 2, 1, p, nu);
    CHECK(v >= 0);
    CHECK_THROWS_AS(weyl_ratio(0.5, 4, 2, p, nu), std::invalid_argument);  // not coprime
    WParams bad = make_wparams(100, 3, 9, 23);  // b1 W = 216 > 100
    Majorant nub = wtricked_majorant(bad);
    CHECK_THROWS_AS(weyl_ratio(0.5, 2, 1, bad, nub), std::invalid_argument);
}

TEST_CASE("decay_sup vanishes for the exact interval indicator") {
    Majorant m = interval_indicator(32);
    DecayResult d = decay_sup(m, 8);
    CHECK(d.grid_points == 256);
    CHECK(d.sup_ratio < 1e-12);
}

TEST_CASE("decay_sup against a direct grid maximum") {
    WParams p = make_wparams(50, 3, 1, 23);
    Majorant nu = wtricked_majorant(p);
    const long long N = nu.support_len;
    const long long M = 8 * N;
    Majorant ind = interval_indicator(N);
    double direct = 0;
    for (long long t = 0; t < M; ++t) {
        double a = (double)t / (double)M;
        direct = std::max(direct, std::abs(fourier_at(nu, a) - fourier_at(ind, a)));
    }
    DecayResult d = decay_sup(nu, 8);
    CHECK(d.sup_ratio == doctest::Approx(direct / (double)N).epsilon(1e-7));
}

TEST_CASE("decay_sup pass decomposition equals the dense path") {
    WParams p = make_wparams(70, 3, 1, 23);
    Majorant nu = wtricked_majorant(p);
    DecayResult dense = decay_sup(nu, 8);
    for (long long pass_len : {8LL, 64LL}) {
        if ((8 * nu.support_len) % pass_len) continue;
        DecayResult chunked = decay_sup(nu, 8, pass_len);
        CHECK(chunked.sup_ratio == doctest::Approx(dense.sup_ratio).epsilon(1e-9));
    }
    CHECK_THROWS_AS(decay_sup(nu, 8, 3), std::invalid_argument);  // not a power of two
    CHECK_THROWS_AS(decay_sup(nu, 4), std::invalid_argument);     // grid_factor < 8
}

TEST_CASE("arcs enumerate coprime centers inside the unit interval") {
    ArcDecomposition d = arcs(10000, 0.25);
    long long qmax = (long long)std::pow(10000.0, 0.25);
    long long expect = 1;  // q = 1, a = 0
    for (long long q = 2; q <= qmax; ++q)
        for (long long a = 1; a < q; ++a)
            if (gcd_ll(a, q) == 1) ++expect;
    // a = 0 appears only for q = 1; every arc has the common radius
    long long zero_center = 0;
    for (const auto& arc : d.arcs) {
        if (arc.a == 0) ++zero_center;
        CHECK(arc.radius == doctest::Approx(std::pow(10000.0, -0.75)));
        CHECK(arc.center < 1.0);
    }
    CHECK(zero_center == 1);
    CHECK((long long)d.arcs.size() == expect);
    CHECK_THROWS_AS(arcs(100, 0.6), std::invalid_argument);
}
