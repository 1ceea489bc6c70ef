#include "sqtransfer/regularity.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

namespace sqt {

namespace {

// meet-in-the-middle over the quadratic partial sums; tuples packed 21 bits
// per entry
constexpr long long kMaxValue = (1LL << 21) - 1;

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void check_ranges(const Equation& eq, long long maxval) {
    if (maxval > kMaxValue)
        throw std::invalid_argument("distinct solution search: values above 2^21 unsupported");
    int128 bound = 0;
    for (long long c : eq.coeffs) bound += (c < 0 ? -(int128)c : (int128)c) * maxval * maxval;
    if (bound > (int128)4e18)
        throw std::overflow_error("distinct solution search: quadratic sums overflow");
}

void check_work(double candidates, int half) {
    if (std::pow(candidates, (double)half) > 2.5e7)
        throw std::invalid_argument("distinct solution search: candidate space too large");
}

// All distinct-entry solutions with every coordinate drawn from `values`;
// sink returns true to stop early.
template <typename Sink>
void mim_search(const Equation& eq, const std::vector<long long>& values, Sink sink) {
    const int s = eq.s();
    if (s > 6) throw std::invalid_argument("distinct solution search: s > 6 unsupported");
    check_ranges(eq, values.empty() ? 0 : *std::max_element(values.begin(), values.end()));
    const int R = s / 2;  // right coords [s-R, s)
    const int L = s - R;
    check_work((double)values.size(), L);

    std::unordered_map<long long, std::vector<unsigned long long>> right;
    std::vector<long long> x(s);
    {
        auto rec = [&](auto&& self, int d, long long sum) -> void {
            if (d == R) {
                unsigned long long key = 0;
                for (int i = 0; i < R; ++i) key = key << 21 | (unsigned long long)x[L + i];
                right[sum].push_back(key);
                return;
            }
            for (long long v : values) {
                bool dup = false;
                for (int i = 0; i < d; ++i)
                    if (x[L + i] == v) dup = true;
                if (dup) continue;
                x[L + d] = v;
                self(self, d + 1, sum + eq.coeffs[L + d] * v * v);
            }
        };
        rec(rec, 0, 0);
    }

    bool stop = false;
    auto rec = [&](auto&& self, int d, long long sum) -> void {
        if (stop) return;
        if (d == L) {
            auto it = right.find(-sum);
            if (it == right.end()) return;
            for (unsigned long long key : it->second) {
                for (int i = R - 1; i >= 0; --i) {
                    x[L + i] = (long long)(key & kMaxValue);
                    key >>= 21;
                }
                bool ok = true;
                for (int i = 0; i < L && ok; ++i)
                    for (int j = L; j < s && ok; ++j)
                        if (x[i] == x[j]) ok = false;
                if (ok && sink(x)) {
                    stop = true;
                    return;
                }
            }
            return;
        }
        for (long long v : values) {
            bool dup = false;
            for (int i = 0; i < d; ++i)
                if (x[i] == v) dup = true;
            if (dup) continue;
            x[d] = v;
            self(self, d + 1, sum + eq.coeffs[d] * v * v);
            if (stop) return;
        }
    };
    rec(rec, 0, 0);
}

// All distinct-entry solutions using the value `x` at some coordinate and the
// other coordinates drawn from `values` \ {x}.  sink returns true to stop.
template <typename Sink>
long long complete_with(const Equation& eq, const std::vector<long long>& values,
                        long long x, Sink sink) {
    const int s = eq.s();
    if (s > 6) throw std::invalid_argument("distinct solution search: s > 6 unsupported");
    long long vmax = x;
    for (long long v : values) vmax = std::max(vmax, v);
    check_ranges(eq, vmax);
    long long work = 0;
    std::vector<long long> tuple(s);
    for (int j = 0; j < s; ++j) {
        const long long target = -eq.coeffs[j] * x * x;
        std::vector<int> rest;
        for (int i = 0; i < s; ++i)
            if (i != j) rest.push_back(i);
        const int m = (int)rest.size();
        const int R = m / 2;
        const int L = m - R;
        check_work((double)values.size(), L);

        std::unordered_map<long long, std::vector<unsigned long long>> right;
        std::vector<long long> y(m);
        auto recr = [&](auto&& self, int d, long long sum) -> void {
            if (d == R) {
                unsigned long long key = 0;
                for (int i = 0; i < R; ++i) key = key << 21 | (unsigned long long)y[L + i];
                right[sum].push_back(key);
                return;
            }
            for (long long v : values) {
                if (v == x) continue;
                bool dup = false;
                for (int i = 0; i < d; ++i)
                    if (y[L + i] == v) dup = true;
                if (dup) continue;
                y[L + d] = v;
                ++work;
                self(self, d + 1, sum + eq.coeffs[rest[L + d]] * v * v);
            }
        };
        recr(recr, 0, 0);

        bool stop = false;
        auto recl = [&](auto&& self, int d, long long sum) -> void {
            if (stop) return;
            if (d == L) {
                auto it = right.find(target - sum);
                if (it == right.end()) return;
                for (unsigned long long key : it->second) {
                    unsigned long long k = key;
                    for (int i = R - 1; i >= 0; --i) {
                        y[L + i] = (long long)(k & kMaxValue);
                        k >>= 21;
                    }
                    bool ok = true;
                    for (int i = 0; i < L && ok; ++i)
                        for (int jj = L; jj < m && ok; ++jj)
                            if (y[i] == y[jj]) ok = false;
                    if (!ok) continue;
                    for (int i = 0; i < m; ++i) tuple[rest[i]] = y[i];
                    tuple[j] = x;
                    if (sink(tuple)) {
                        stop = true;
                        return;
                    }
                }
                return;
            }
            for (long long v : values) {
                if (v == x) continue;
                bool dup = false;
                for (int i = 0; i < d; ++i)
                    if (y[i] == v) dup = true;
                if (dup) continue;
                y[d] = v;
                ++work;
                self(self, d + 1, sum + eq.coeffs[rest[d]] * v * v);
                if (stop) return;
            }
        };
        recl(recl, 0, 0);
        if (stop) break;
    }
    return work;
}

bool creates_distinct_solution(const Equation& eq, const std::vector<long long>& A,
                               long long x) {
    bool found = false;
    complete_with(eq, A, x, [&](const std::vector<long long>&) {
        found = true;
        return true;
    });
    return found;
}

// solutions with max entry exactly m, each found once (m occupies one slot)
std::vector<std::vector<long long>> solutions_with_max(const Equation& eq, long long m,
                                                       long long& work) {
    std::vector<long long> values(m - 1);
    std::iota(values.begin(), values.end(), 1);
    std::vector<std::vector<long long>> out;
    work += complete_with(eq, values, m, [&](const std::vector<long long>& x) {
        out.push_back(x);
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<long long>> distinct_solutions(const Equation& eq, long long n) {
    if (n < 1) throw std::invalid_argument("distinct_solutions: n must be >= 1");
    std::vector<long long> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::vector<std::vector<long long>> out;
    mim_search(eq, values, [&](const std::vector<long long>& x) {
        out.push_back(x);
        return false;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool has_distinct_solution(const Equation& eq, const std::vector<long long>& A) {
    bool found = false;
    mim_search(eq, A, [&](const std::vector<long long>&) {
        found = true;
        return true;
    });
    return found;
}

ColoringResult rado_number(const Equation& eq, int r, long long n_max,
                           const Budget& budget) {
    if (!eq.sum_zero)
        throw std::invalid_argument("rado_number: coefficients must sum to zero");
    if (r < 1 || n_max < 1)
        throw std::invalid_argument("rado_number: r and n_max must be >= 1");
    Clock clk;
    ColoringResult res;
    res.eq = eq;
    res.r = r;

    // solutions generated lazily by their largest entry
    std::vector<std::vector<long long>> sols;
    std::vector<std::vector<int>> by_max(n_max + 1);
    std::vector<int> color, best_cert;

    for (long long n = 1; n <= n_max; ++n) {
        for (const auto& x : solutions_with_max(eq, n, res.nodes)) {
            by_max[n].push_back((int)sols.size());
            sols.push_back(x);
        }
        if (res.nodes > budget.max_nodes || clk.elapsed() > budget.max_seconds) {
            res.status = RadoStatus::exhausted_budget;
            res.n = n;
            res.certificate = best_cert;
            res.seconds = clk.elapsed();
            return res;
        }
        if (sols.empty()) continue;
        if (r == 1) {
            res.status = RadoStatus::regular_at_n;
            res.n = n;
            res.witness = sols[by_max[n].front()];
            res.seconds = clk.elapsed();
            return res;
        }

        // search for a solution-free r-coloring of [1, n]; a conflict can only
        // appear when the largest entry of a solution receives its color
        color.assign(n, -1);
        bool exhausted = false;
        auto feasible = [&](long long k, int c) {
            for (int idx : by_max[k]) {
                bool mono = true;
                for (long long v : sols[idx])
                    if (v != k && color[v - 1] != c) {
                        mono = false;
                        break;
                    }
                if (mono) return false;
            }
            return true;
        };
        auto search = [&](auto&& self, long long k) -> bool {
            if (k > n) return true;
            const int cmax = (k == 1) ? 1 : r;  // symmetry: 1 is always color 0
            for (int c = 0; c < cmax; ++c) {
                if (++res.nodes % 4096 == 0 && clk.elapsed() > budget.max_seconds)
                    exhausted = true;
                if (res.nodes > budget.max_nodes) exhausted = true;
                if (exhausted) return false;
                if (!feasible(k, c)) continue;
                color[k - 1] = c;
                if (self(self, k + 1)) return true;
                color[k - 1] = -1;
            }
            return false;
        };
        bool free_coloring = search(search, 1);
        if (exhausted) {
            res.status = RadoStatus::exhausted_budget;
            res.n = n;
            res.certificate = best_cert;
            res.seconds = clk.elapsed();
            return res;
        }
        if (!free_coloring) {
            res.status = RadoStatus::regular_at_n;
            res.n = n;
            res.witness = sols.front();
            res.certificate = best_cert;  // solution-free coloring of [1, n-1]
            res.seconds = clk.elapsed();
            return res;
        }
        best_cert = color;
    }

    res.status = RadoStatus::no_witness_up_to_n;
    res.n = n_max;
    if (best_cert.empty()) best_cert.assign(n_max, 0);  // no solution at all: one color
    res.certificate = best_cert;
    res.seconds = clk.elapsed();
    return res;
}

GreedyResult solution_free_greedy(const Equation& eq, long long X,
                                  unsigned long long order_seed) {
    if (!eq.sum_zero)
        throw std::invalid_argument("solution_free_greedy: coefficients must sum to zero");
    if (X < 1) throw std::invalid_argument("solution_free_greedy: X must be >= 1");
    std::vector<long long> order(X);
    std::iota(order.begin(), order.end(), 1);
    std::mt19937_64 rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);

    GreedyResult out;
    for (long long x : order)
        if (!creates_distinct_solution(eq, out.set, x)) out.set.push_back(x);
    std::sort(out.set.begin(), out.set.end());
    out.density = (double)out.set.size() / (double)X;
    return out;
}

TransferenceReport transference_statistic(const std::vector<long long>& A, long long X,
                                          long long w, const Equation& eq,
                                          const SubspaceFamily& K) {
    if (A.empty()) throw std::invalid_argument("transference_statistic: A must be nonempty");
    TransferenceReport rep;
    rep.selection = select_b(A, X, w);
    const WParams& p = rep.selection.params;
    rep.delta = rep.selection.delta;
    rep.delta_sq_N = rep.delta * rep.delta * (double)p.Nb;

    Majorant nu = wtricked_majorant(p);
    std::vector<long long> Ab = lift_set(A, p);
    rep.lifted_size = (long long)Ab.size();

    Majorant f = nu;
    f.entries.clear();
    for (const auto& e : nu.entries)
        if (std::binary_search(Ab.begin(), Ab.end(), e.first)) f.entries.push_back(e);
    rep.statistic = f.mass();

    rep.decay = decay_sup(nu, 8);

    const int s = eq.s();
    std::vector<WeightedFn> fs(s, f);
    rep.count_brute_value = count_brute(fs, eq).value();
    long long span = 0;
    for (long long c : eq.coeffs) span += std::abs(c);
    rep.count_dft_value = count_dft(fs, eq, span * p.Nb + 1);

    KWeightedValue kw = ktrivial_weighted(f, p, K);
    rep.ktrivial_value = kw.count.value();
    rep.ktrivial_ratio = kw.ratio;
    rep.heuristic_scale = std::pow((double)p.Nb, (double)(s - 1));
    return rep;
}

}  // namespace sqt
