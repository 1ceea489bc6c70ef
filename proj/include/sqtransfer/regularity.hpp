#pragma once

#include <optional>
#include <vector>

#include "sqtransfer/counting.hpp"
#include "sqtransfer/expsum.hpp"

namespace sqt {

enum class RadoStatus { regular_at_n, no_witness_up_to_n, exhausted_budget };

struct Budget {
    long long max_nodes = 50'000'000;
    double max_seconds = 120.0;
};

struct ColoringResult {
    Equation eq;
    int r = 1;
    long long n = 0;  // smallest regular n, or the largest endpoint examined
    RadoStatus status = RadoStatus::no_witness_up_to_n;
    std::optional<std::vector<long long>> witness;  // distinct-entry solution in [1, n]
    std::vector<int> certificate;  // solution-free coloring, certificate[k-1] = color of k
    long long nodes = 0;
    double seconds = 0;
};

// All x in [1, n]^s with c.x^2 = 0 and pairwise distinct entries, via
// meet-in-the-middle on the quadratic partial sums.
std::vector<std::vector<long long>> distinct_solutions(const Equation& eq, long long n);

bool has_distinct_solution(const Equation& eq, const std::vector<long long>& A);

// Smallest n <= n_max such that every r-coloring of [1, n] has a monochromatic
// distinct-entry solution of c.x^2 = 0.  Backtracking with the color of 1
// fixed; budget exhaustion is reported in the status.
ColoringResult rado_number(const Equation& eq, int r, long long n_max,
                           const Budget& budget = {});

struct GreedyResult {
    std::vector<long long> set;  // ascending
    double density = 0;          // |set| / X
};

// Maximal-by-inclusion A in [1, X] with no distinct-entry solution of
// c.x^2 = 0, grown greedily in a seeded random order.
GreedyResult solution_free_greedy(const Equation& eq, long long X,
                                  unsigned long long order_seed);

struct TransferenceReport {
    SelectResult selection;        // chosen (b1, b2) and the statistic
    double delta = 0;              // |A| / X
    double delta_sq_N = 0;         // delta^2 N_b
    double statistic = 0;          // sum over A_b of nu_b
    DecayResult decay;             // sup |f^ - (delta N)-scaled reference| diagnostics
    double count_brute_value = 0;  // weighted distinct-agnostic count of f
    double count_dft_value = 0;
    double ktrivial_value = 0;
    double ktrivial_ratio = 0;
    double heuristic_scale = 0;  // N_b^(s-1)
    long long lifted_size = 0;   // |A_b|
};

// The end-to-end pipeline: select b, lift A, weight by nu_b and report the
// counting statistics for eq against the K-trivial family.
TransferenceReport transference_statistic(const std::vector<long long>& A, long long X,
                                          long long w, const Equation& eq,
                                          const SubspaceFamily& K);

}  // namespace sqt
