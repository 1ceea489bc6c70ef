#include "doctest.h"

#include <algorithm>
#include <set>

#include "sqtransfer/regularity.hpp"

using namespace sqt;

namespace {

bool solves(const Equation& eq, const std::vector<long long>& x) {
    long long s = 0;
    for (int i = 0; i < eq.s(); ++i) s += eq.coeffs[i] * x[i] * x[i];
    std::set<long long> uniq(x.begin(), x.end());
    return s == 0 && uniq.size() == x.size();
}

}  // namespace

TEST_CASE("distinct_solutions: smallest witness of x^2 + y^2 = 2 z^2") {
    Equation eq = make_equation({1, 1, -2});
    CHECK(distinct_solutions(eq, 6).empty());
    auto sols = distinct_solutions(eq, 7);
    REQUIRE(sols.size() == 2);  // (1,7,5) and (7,1,5)
    CHECK(sols[0] == std::vector<long long>{1, 7, 5});
    CHECK(sols[1] == std::vector<long long>{7, 1, 5});
    for (const auto& x : sols) CHECK(solves(eq, x));
}

TEST_CASE("has_distinct_solution on explicit sets") {
    Equation eq = make_equation({1, 1, -2});
    CHECK(has_distinct_solution(eq, {1, 5, 7}));
    CHECK_FALSE(has_distinct_solution(eq, {1, 5, 6}));
    CHECK_FALSE(has_distinct_solution(eq, {5}));
}

TEST_CASE("rado_number r = 1 equals the smallest solvable endpoint") {
    Equation eq = make_equation({1, 1, 1, 1, -4});
    ColoringResult res = rado_number(eq, 1, 30);
    CHECK(res.status == RadoStatus::regular_at_n);
    CHECK(res.n == 12);
    REQUIRE(res.witness.has_value());
    CHECK(solves(eq, *res.witness));
    CHECK(*std::max_element(res.witness->begin(), res.witness->end()) <= res.n);
}

TEST_CASE("rado_number: no witness below the threshold") {
    Equation eq = make_equation({1, 1, -2});
    ColoringResult res = rado_number(eq, 1, 6);
    CHECK(res.status == RadoStatus::no_witness_up_to_n);
    CHECK(res.n == 6);
    CHECK(res.certificate == std::vector<int>(6, 0));
}

TEST_CASE("rado_number reports budget exhaustion") {
    Equation eq = make_equation({1, 1, 1, 1, -4});
    Budget tiny;
    tiny.max_nodes = 10;
    ColoringResult res = rado_number(eq, 2, 30, tiny);
    CHECK(res.status == RadoStatus::exhausted_budget);
    CHECK(res.nodes >= 10);
}

TEST_CASE("rado_number is monotone in r when both sides are determined") {
    Equation eq = make_equation({1, 1, 1, 1, -4});
    ColoringResult r1 = rado_number(eq, 1, 20);
    REQUIRE(r1.status == RadoStatus::regular_at_n);
    Budget b;
    b.max_seconds = 30;
    ColoringResult r2 = rado_number(eq, 2, 20, b);
    if (r2.status == RadoStatus::regular_at_n) CHECK(r2.n >= r1.n);
    if (r2.status == RadoStatus::no_witness_up_to_n) {
        // the certificate really is a solution-free 2-coloring of [1, 20]
        REQUIRE((long long)r2.certificate.size() == 20);
        for (int cls = 0; cls < 2; ++cls) {
            std::vector<long long> part;
            for (long long v = 1; v <= 20; ++v)
                if (r2.certificate[v - 1] == cls) part.push_back(v);
            CHECK_FALSE(has_distinct_solution(eq, part));
        }
    }
}

TEST_CASE("solution_free_greedy output is solution free and maximal") {
    Equation eq = make_equation({1, 1, 1, 1, -4});
    const long long X = 40;
    for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
        GreedyResult g = solution_free_greedy(eq, X, seed);
        CHECK(g.density == doctest::Approx((double)g.set.size() / X));
        CHECK_FALSE(has_distinct_solution(eq, g.set));
        // maximality: every rejected element closes a solution
        std::vector<long long> in(X + 1, 0);
        for (long long v : g.set) in[v] = 1;
        for (long long x = 1; x <= X; ++x) {
            if (in[x]) continue;
            auto with = g.set;
            with.push_back(x);
            std::sort(with.begin(), with.end());
            CHECK(has_distinct_solution(eq, with));
        }
    }
}

TEST_CASE("solution_free_greedy returns everything when no solution exists") {
    Equation eq = make_equation({1, 1, -2});
    GreedyResult g = solution_free_greedy(eq, 6, 123);
    CHECK(g.set.size() == 6);
    CHECK(g.density == doctest::Approx(1.0));
}

TEST_CASE("transference_statistic invariants") {
    Equation eq = make_equation({1, 1, 1, 1, -4});
    SubspaceFamily K = pairs_equal_family(eq);
    std::vector<long long> A;
    for (long long x = 1; x <= 100; ++x) A.push_back(x);
    TransferenceReport rep = transference_statistic(A, 100, 3, eq, K);
    CHECK(rep.delta == doctest::Approx(1.0));
    Majorant nu = wtricked_majorant(rep.selection.params);
    CHECK(rep.statistic <= nu.mass() + 1e-9);
    double wmax = 0;
    for (const auto& e : nu.entries) wmax = std::max(wmax, e.second * nu.scale());
    CHECK(rep.statistic <= (double)rep.lifted_size * wmax + 1e-9);
    CHECK(rep.count_brute_value == doctest::Approx(rep.count_dft_value).epsilon(1e-6));
    CHECK(rep.ktrivial_value <= rep.count_brute_value + 1e-9);
    CHECK(rep.statistic == doctest::Approx(rep.selection.statistic));
}

TEST_CASE("transference_statistic on a singleton") {
    Equation eq = make_equation({1, 1, -2});
    SubspaceFamily K = pairs_equal_family(eq);
    // 49 = 7^2 lifts under b1 = 1 iff 49 + b2 == 0 mod 24; with b2 = 23: yes
    TransferenceReport rep = transference_statistic({7}, 100, 3, eq, K);
    CHECK(rep.lifted_size <= 1);
    if (rep.lifted_size == 1) {
        Majorant nu = wtricked_majorant(rep.selection.params);
        bool matches_one_weight = false;
        for (const auto& e : nu.entries)
            if (std::abs(rep.statistic - e.second * nu.scale()) < 1e-9)
                matches_one_weight = true;
        CHECK(matches_one_weight);
    }
}
