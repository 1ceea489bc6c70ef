#pragma once

#include <optional>
#include <vector>

#include "sqtransfer/majorant.hpp"

namespace sqt {

// General finitely supported weighted function; same exact representation as
// Majorant but with signed numerators allowed.
using WeightedFn = Majorant;

struct Equation {
    std::vector<long long> coeffs;
    bool sum_zero = false;
    int n_pos = 0, n_neg = 0;
    int s() const { return (int)coeffs.size(); }
};

Equation make_equation(std::vector<long long> coeffs);

/// One proper subspace of the hyperplane c.y = 0, cut out by the extra forms.
struct Subspace {
    std::vector<std::vector<long long>> forms;
    bool contains_diagonal = false;  // every form has zero coefficient sum
};

struct SubspaceFamily {
    Equation eq;
    std::vector<Subspace> subs;
};

SubspaceFamily make_family(Equation eq, std::vector<std::vector<std::vector<long long>>> forms);
// y_i = y_j for all i < j: the C(s,2) single-form subspaces.
SubspaceFamily pairs_equal_family(const Equation& eq);
// The diagonal subspace, cut out by the s-1 forms e_i - e_{i+1}.
SubspaceFamily diagonal_family(const Equation& eq);

/// Exact weighted count with the combined scale kept as a fraction.
struct CountValue {
    int128 numer = 0;
    long long scale_num = 1, scale_den = 1;
    double value() const { return (double)numer * (double)scale_num / (double)scale_den; }
};

// sum over c.x = 0 of prod f_i(x_i), meet-in-the-middle over a balanced
// coordinate split.
CountValue count_brute(const std::vector<WeightedFn>& fs, const Equation& eq);

// (1/M) sum_t prod_i f^_i(c_i t / M).  M must exceed the range of c.x; the
// error message names the minimum admissible modulus.
double count_dft(const std::vector<WeightedFn>& fs, const Equation& eq, long long M);

// Number of x in [1,X]^s with (x_1^2, ..., x_s^2) in the union K.
long long count_ktrivial(long long X, const SubspaceFamily& K);

struct KWeightedValue {
    CountValue count;
    double ratio = 0;  // value / (mass^s / N^(1+1/5))
};

// sum over n in K of prod nu(n_i), via the exact linear parameterization of
// each subspace restricted to the support of nu.
KWeightedValue ktrivial_weighted(const Majorant& nu, const WParams& p, const SubspaceFamily& K);

// Verifies prod f(x_i) - prod g(x_i) = sum_j (f(x_j)-g(x_j)) prod_{i<j} f(x_i)
// prod_{i>j} g(x_i) in exact rational arithmetic at every sampled tuple.
bool telescope_check(const WeightedFn& f, const WeightedFn& g,
                     const std::vector<std::vector<long long>>& tuples);

// (|count(f) - count(g)|, N^(s-1) (||f^-g^||_inf / N)^(1-frac(p_exp))), with
// the sup-norm taken on the 16N grid.  Requires |f| <= nu and |g| <= 1_[N].
std::pair<double, double> config_gap(const WeightedFn& f, const WeightedFn& g,
                                     const Majorant& nu, const Equation& eq, double p_exp);

// Lexicographically smallest x in [0,H]^s off the diagonal with c.x = 0 and
// c.x^2 = 0, if any.  Requires sum-zero coefficients.
std::optional<std::vector<long long>> system_direction(const Equation& eq, long long H);

}  // namespace sqt
