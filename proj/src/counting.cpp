#include "sqtransfer/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqtransfer/fft.hpp"

namespace sqt {

namespace {

using boost::multiprecision::cpp_rational;

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    int128 num = 0, den = 1;
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.normalize();
        return r;
    }
    Frac operator-(const Frac& o) const {
        Frac r{num * o.den - o.num * den, den * o.den};
        r.normalize();
        return r;
    }
    Frac operator/(const Frac& o) const {
        Frac r{num * o.den, den * o.num};
        r.normalize();
        return r;
    }
    bool zero() const { return num == 0; }
};

/// Exact parameterization of \{y : c.y = 0, D y = 0\}: each pivot coordinate
/// as an integer linear combination of the free coordinates over a common
/// denominator.
struct SubspaceSolve {
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    std::vector<std::vector<long long>> coef;  // [pivot row][free col index]
    std::vector<long long> den;                // y_pivot = (sum coef y_free) / den
};

SubspaceSolve solve_subspace(const Equation& eq, const Subspace& sub) {
    const int s = eq.s();
    std::vector<std::vector<Frac>> m;
    m.push_back({});
    for (long long c : eq.coeffs) m.back().push_back({c, 1});
    for (const auto& d : sub.forms) {
        if ((int)d.size() != s)
            throw std::invalid_argument("subspace form has wrong arity");
        m.push_back({});
        for (long long v : d) m.back().push_back({v, 1});
    }
    // RREF
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < s && row < (int)m.size(); ++col) {
        int sel = -1;
        for (int i = row; i < (int)m.size(); ++i)
            if (!m[i][col].zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Frac inv = m[row][col];
        for (int j = col; j < s; ++j) m[row][j] = m[row][j] / inv;
        for (int i = 0; i < (int)m.size(); ++i) {
            if (i == row || m[i][col].zero()) continue;
            Frac f = m[i][col];
            for (int j = col; j < s; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    SubspaceSolve out;
    out.pivot_cols = pivots;
    std::vector<char> is_pivot(s, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int c = 0; c < s; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    for (int i = 0; i < (int)pivots.size(); ++i) {
        int128 l = 1;
        for (int c : out.free_cols) l = l / gcd128(l, m[i][c].den) * m[i][c].den;
        std::vector<long long> row_coef;
        for (int c : out.free_cols)
            row_coef.push_back((long long)(-m[i][c].num * (l / m[i][c].den)));
        out.coef.push_back(std::move(row_coef));
        out.den.push_back((long long)l);
    }
    return out;
}

void validate_form(const Equation& eq, const std::vector<long long>& d) {
    const int s = eq.s();
    if ((int)d.size() != s)
        throw std::invalid_argument("subspace form has wrong arity");
    bool proportional = true;
    for (int i = 0; i < s && proportional; ++i)
        for (int j = i + 1; j < s && proportional; ++j)
            if ((int128)eq.coeffs[i] * d[j] != (int128)eq.coeffs[j] * d[i])
                proportional = false;
    if (proportional)
        throw std::invalid_argument("subspace form is proportional to the equation");
}

}  // namespace

Equation make_equation(std::vector<long long> coeffs) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("equation needs at least two coefficients");
    Equation eq;
    long long sum = 0;
    for (long long c : coeffs) {
        if (c == 0) throw std::invalid_argument("equation coefficients must be nonzero");
        sum += c;
        (c > 0 ? eq.n_pos : eq.n_neg)++;
    }
    eq.coeffs = std::move(coeffs);
    eq.sum_zero = sum == 0;
    return eq;
}

SubspaceFamily make_family(Equation eq, std::vector<std::vector<std::vector<long long>>> forms) {
    SubspaceFamily fam;
    fam.eq = std::move(eq);
    for (auto& sub_forms : forms) {
        if (sub_forms.empty())
            throw std::invalid_argument("subspace needs at least one extra form");
        Subspace sub;
        sub.contains_diagonal = true;
        for (auto& d : sub_forms) {
            validate_form(fam.eq, d);
            long long sum = 0;
            for (long long v : d) sum += v;
            if (sum != 0) sub.contains_diagonal = false;
            sub.forms.push_back(std::move(d));
        }
        fam.subs.push_back(std::move(sub));
    }
    return fam;
}

SubspaceFamily pairs_equal_family(const Equation& eq) {
    const int s = eq.s();
    std::vector<std::vector<std::vector<long long>>> forms;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            std::vector<long long> d(s, 0);
            d[i] = 1;
            d[j] = -1;
            forms.push_back({d});
        }
    return make_family(eq, std::move(forms));
}

SubspaceFamily diagonal_family(const Equation& eq) {
    const int s = eq.s();
    std::vector<std::vector<long long>> sub;
    for (int i = 0; i + 1 < s; ++i) {
        std::vector<long long> d(s, 0);
        d[i] = 1;
        d[i + 1] = -1;
        sub.push_back(std::move(d));
    }
    return make_family(eq, {sub});
}

CountValue count_brute(const std::vector<WeightedFn>& fs, const Equation& eq) {
    const int s = eq.s();
    if ((int)fs.size() != s)
        throw std::invalid_argument("count_brute: needs one function per coordinate");
    CountValue out;
    for (const auto& f : fs) {
        if (f.entries.empty()) return out;
        out.scale_num *= f.scale_num;
        out.scale_den *= f.scale_den;
    }
    long long g = gcd_ll(out.scale_num, out.scale_den);
    out.scale_num /= g;
    out.scale_den /= g;

    // balance prod |support| across the two sides
    std::vector<int> order(s);
    for (int i = 0; i < s; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a].entries.size() > fs[b].entries.size(); });
    std::vector<int> left, right;
    double ll_ = 0, lr = 0;
    for (int i : order) {
        double lg = std::log((double)fs[i].entries.size() + 1);
        if (ll_ <= lr) {
            left.push_back(i);
            ll_ += lg;
        } else {
            right.push_back(i);
            lr += lg;
        }
    }

    std::unordered_map<long long, int128> half;
    auto enumerate = [&](const std::vector<int>& idx, auto&& sink) {
        std::vector<size_t> pos(idx.size(), 0);
        auto rec = [&](auto&& self, size_t d, long long sum, int128 prod) -> void {
            if (d == idx.size()) {
                sink(sum, prod);
                return;
            }
            const auto& f = fs[idx[d]];
            const long long c = eq.coeffs[idx[d]];
            for (const auto& [x, numer] : f.entries) {
                if (numer == 0) continue;
                self(self, d + 1, sum + c * x, prod * numer);
            }
        };
        rec(rec, 0, 0, 1);
    };
    enumerate(left, [&](long long sum, int128 prod) { half[sum] += prod; });
    int128 total = 0;
    enumerate(right, [&](long long sum, int128 prod) {
        auto it = half.find(-sum);
        if (it != half.end()) total += prod * it->second;
    });
    out.numer = total;
    return out;
}

double count_dft(const std::vector<WeightedFn>& fs, const Equation& eq, long long M) {
    const int s = eq.s();
    if ((int)fs.size() != s)
        throw std::invalid_argument("count_dft: needs one function per coordinate");
    long long lo = 0, hi = 0;
    for (int i = 0; i < s; ++i) {
        if (fs[i].entries.empty()) return 0.0;
        long long mx = fs[i].entries.back().first;
        if (eq.coeffs[i] > 0)
            hi += eq.coeffs[i] * mx;
        else
            lo += eq.coeffs[i] * mx;
    }
    long long required = std::max(hi, -lo) + 1;
    if (M < required)
        throw std::invalid_argument("count_dft: modulus " + std::to_string(M) +
                                    " inadmissible; minimum is " + std::to_string(required));
    if (M > (1LL << 22)) throw std::invalid_argument("count_dft: modulus too large");

    std::vector<std::vector<cd>> grids;
    for (const auto& f : fs) {
        std::vector<cd> v(M, cd(0, 0));
        const double sc = f.scale();
        for (const auto& [x, numer] : f.entries) v[x % M] += cd(numer * sc, 0);
        dft(v);
        grids.push_back(std::move(v));
    }
    long double acc = 0, comp = 0;
    for (long long t = 0; t < M; ++t) {
        cd prod(1, 0);
        for (int i = 0; i < s; ++i) {
            long long ct = ((eq.coeffs[i] % M) * t % M + M) % M;
            prod *= grids[i][ct];
        }
        long double y = (long double)prod.real() - comp;
        long double tt = acc + y;
        comp = (tt - acc) - y;
        acc = tt;
    }
    return (double)(acc / M);
}

long long count_ktrivial(long long X, const SubspaceFamily& K) {
    if (K.subs.empty()) throw std::invalid_argument("count_ktrivial: empty family");
    const int s = K.eq.s();
    const bool packable = s <= 5 && X <= 4095;
    std::vector<unsigned long long> packed;
    std::set<std::vector<long long>> fallback;
    std::vector<long long> x(s);

    for (const auto& sub : K.subs) {
        SubspaceSolve sol = solve_subspace(K.eq, sub);
        const auto& F = sol.free_cols;
        const auto& P = sol.pivot_cols;
        if (F.empty()) continue;  // only y = 0, no x in [1,X]^s
        std::vector<int128> partial(P.size(), 0);
        auto rec = [&](auto&& self, size_t d) -> void {
            if (d == F.size()) {
                for (size_t i = 0; i < P.size(); ++i) {
                    int128 num = partial[i];
                    if (num <= 0 || num % sol.den[i]) return;
                    int128 y = num / sol.den[i];
                    if (y > (int128)X * X) return;
                    long long r;
                    if (!is_square((long long)y, &r) || r > X) return;
                    x[P[i]] = r;
                }
                if (packable) {
                    unsigned long long key = 0;
                    for (int i = 0; i < s; ++i) key = key << 12 | (unsigned long long)x[i];
                    packed.push_back(key);
                } else {
                    fallback.insert(x);
                }
                return;
            }
            for (long long v = 1; v <= X; ++v) {
                x[F[d]] = v;
                int128 y = (int128)v * v;
                for (size_t i = 0; i < P.size(); ++i) partial[i] += sol.coef[i][d] * y;
                self(self, d + 1);
                for (size_t i = 0; i < P.size(); ++i) partial[i] -= sol.coef[i][d] * y;
            }
        };
        rec(rec, 0);
    }
    if (packable) {
        std::sort(packed.begin(), packed.end());
        packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
        return (long long)packed.size();
    }
    return (long long)fallback.size();
}

KWeightedValue ktrivial_weighted(const Majorant& nu, const WParams& p, const SubspaceFamily& K) {
    KWeightedValue out;
    const int s = K.eq.s();
    out.count.scale_num = 1;
    out.count.scale_den = 1;
    for (int i = 0; i < s; ++i) {
        out.count.scale_num *= nu.scale_num;
        out.count.scale_den *= nu.scale_den;
    }
    long long g = gcd_ll(out.count.scale_num, out.count.scale_den);
    out.count.scale_num /= g;
    out.count.scale_den /= g;

    std::unordered_map<long long, long long> weight;
    for (const auto& [n, numer] : nu.entries) weight[n] = numer;

    std::set<std::vector<long long>> seen;
    std::vector<long long> n(s);
    for (const auto& sub : K.subs) {
        SubspaceSolve sol = solve_subspace(K.eq, sub);
        const auto& F = sol.free_cols;
        const auto& P = sol.pivot_cols;
        if (F.empty()) continue;
        std::vector<int128> partial(P.size(), 0);
        auto rec = [&](auto&& self, size_t d) -> void {
            if (d == F.size()) {
                for (size_t i = 0; i < P.size(); ++i) {
                    int128 num = partial[i];
                    if (num % sol.den[i]) return;
                    int128 v = num / sol.den[i];
                    if (v < 1 || v > nu.support_len) return;
                    n[P[i]] = (long long)v;
                    if (!weight.count((long long)v)) return;
                }
                seen.insert(n);
                return;
            }
            for (const auto& [v, numer] : nu.entries) {
                if (numer == 0) continue;
                n[F[d]] = v;
                for (size_t i = 0; i < P.size(); ++i) partial[i] += sol.coef[i][d] * v;
                self(self, d + 1);
                for (size_t i = 0; i < P.size(); ++i) partial[i] -= sol.coef[i][d] * v;
            }
        };
        rec(rec, 0);
    }
    int128 total = 0;
    for (const auto& tup : seen) {
        int128 prod = 1;
        for (long long v : tup) prod *= weight[v];
        total += prod;
    }
    out.count.numer = total;
    double mass = nu.mass();
    double ref = std::pow(mass, (double)s) / std::pow((double)p.Nb, 1.2);
    out.ratio = out.count.value() / ref;
    return out;
}

bool telescope_check(const WeightedFn& f, const WeightedFn& g,
                     const std::vector<std::vector<long long>>& tuples) {
    auto val = [](const WeightedFn& h, long long n) {
        return cpp_rational(h.numer_at(n) * h.scale_num, h.scale_den);
    };
    for (const auto& x : tuples) {
        const size_t s = x.size();
        cpp_rational pf = 1, pg = 1;
        for (long long xi : x) {
            pf *= val(f, xi);
            pg *= val(g, xi);
        }
        cpp_rational rhs = 0;
        for (size_t j = 0; j < s; ++j) {
            cpp_rational term = val(f, x[j]) - val(g, x[j]);
            for (size_t i = 0; i < j; ++i) term *= val(f, x[i]);
            for (size_t i = j + 1; i < s; ++i) term *= val(g, x[i]);
            rhs += term;
        }
        if (pf - pg != rhs) return false;
    }
    return true;
}

std::pair<double, double> config_gap(const WeightedFn& f, const WeightedFn& g,
                                     const Majorant& nu, const Equation& eq, double p_exp) {
    const int s = eq.s();
    if (!(p_exp >= s - 1 && p_exp < s))
        throw std::invalid_argument("config_gap: p_exp must lie in [s-1, s)");
    const long long N = nu.support_len;
    const double eps = 1e-9;
    for (const auto& [n, numer] : f.entries)
        if (std::abs(numer * f.scale()) > nu.weight(n) + eps)
            throw std::invalid_argument("config_gap: f is not dominated by nu");
    for (const auto& [n, numer] : g.entries) {
        if (n < 1 || n > N)
            throw std::invalid_argument("config_gap: g must be supported on [1, N]");
        if (std::abs(numer * g.scale()) > 1 + eps)
            throw std::invalid_argument("config_gap: g is not dominated by 1_[N]");
    }
    std::vector<WeightedFn> fsf(s, f), fsg(s, g);
    double gap = std::abs(count_brute(fsf, eq).value() - count_brute(fsg, eq).value());

    long long M = 16 * N;
    if (M > (1LL << 25)) throw std::invalid_argument("config_gap: N too large for the grid");
    std::vector<cd> v(M, cd(0, 0));
    for (const auto& [n, numer] : f.entries) v[n % M] += cd(numer * f.scale(), 0);
    for (const auto& [n, numer] : g.entries) v[n % M] -= cd(numer * g.scale(), 0);
    dft(v);
    double sup = 0;
    for (const auto& z : v) sup = std::max(sup, std::abs(z));

    double frac = p_exp - std::floor(p_exp);
    double rhs = std::pow((double)N, s - 1) * std::pow(sup / (double)N, 1.0 - frac);
    return {gap, rhs};
}

std::optional<std::vector<long long>> system_direction(const Equation& eq, long long H) {
    if (!eq.sum_zero)
        throw std::invalid_argument("system_direction: coefficients must sum to zero");
    const int s = eq.s();
    // suffix reachability bounds for c.x and c.x^2 with x in [0,H]
    std::vector<long long> lo1(s + 1, 0), hi1(s + 1, 0);
    std::vector<int128> lo2(s + 1, 0), hi2(s + 1, 0);
    for (int i = s - 1; i >= 0; --i) {
        long long c = eq.coeffs[i];
        lo1[i] = lo1[i + 1] + (c < 0 ? c * H : 0);
        hi1[i] = hi1[i + 1] + (c > 0 ? c * H : 0);
        lo2[i] = lo2[i + 1] + (c < 0 ? (int128)c * H * H : 0);
        hi2[i] = hi2[i + 1] + (c > 0 ? (int128)c * H * H : 0);
    }
    std::vector<long long> x(s);
    auto rec = [&](auto&& self, int d, long long s1, int128 s2) -> std::optional<std::vector<long long>> {
        if (d == s) {
            if (s1 != 0 || s2 != 0) return std::nullopt;
            bool diag = true;
            for (int i = 1; i < s; ++i)
                if (x[i] != x[0]) diag = false;
            if (diag) return std::nullopt;
            return x;
        }
        for (long long v = 0; v <= H; ++v) {
            long long t1 = s1 + eq.coeffs[d] * v;
            int128 t2 = s2 + (int128)eq.coeffs[d] * v * v;
            if (t1 + lo1[d + 1] > 0 || t1 + hi1[d + 1] < 0) continue;
            if (t2 + lo2[d + 1] > 0 || t2 + hi2[d + 1] < 0) continue;
            x[d] = v;
            if (auto r = self(self, d + 1, t1, t2)) return r;
        }
        return std::nullopt;
    };
    return rec(rec, 0, 0, 0);
}

}  // namespace sqt
