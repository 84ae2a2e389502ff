#include "support.hpp"

#include <doctest.h>

using namespace mclab;


TEST_CASE("paper cases: dimensions") {
    auto a2 = SplitLieAlgebra::build('A', 2);
    Chart c2(a2, ChartKind::matrix_inverse);
    auto s = solve_mc(full_set(a2.root_system()), c2);
    CHECK(s.dimension == 8);
    CHECK(s.stabilized);
    CHECK(s.closed);

    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart c3(a3, ChartKind::matrix_inverse);
    CHECK(solve_mc(type_p_subset(a3.root_system(), 2), c3).dimension == 9);
    CHECK(solve_mc(full_set(a3.root_system()), c3).dimension == 15);

    auto sp = SplitLieAlgebra::build('C', 2);
    Chart cs(sp, ChartKind::sp2_paper);
    CHECK(solve_mc(validate(sp.root_system(), {0, 1, 2}), cs).dimension == 8);
    CHECK(solve_mc(full_set(sp.root_system()), cs).dimension == 10);
}

TEST_CASE("full R: the solution space is tau(g)") {
    for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'C', 2}}) {
        auto alg = SplitLieAlgebra::build(f, l);
        Chart ch(alg, default_chart_kind(alg));
        auto hs = full_set(alg.root_system());
        auto sol = solve_mc(hs, ch);
        CHECK(sol.dimension == alg.dim());
        for (std::size_t b = 0; b < alg.dim(); ++b) CHECK(solution_coordinates(sol, tau(ch, alg.basis_vector(b))).has_value());
    }
}

TEST_CASE("solutions pass the independent residual check and structural lemmas") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    for (auto& hs : enumerate_all(a3.root_system())) {
        if (!contains_all_simple(hs)) continue;
        auto sol = solve_mc(hs, ch);
        for (auto& f : sol.basis) CHECK(residual_check(hs, ch, f));
        CHECK(check_gerarchia(hs, sol));
        CHECK(check_ombra(hs, ch, sol));
        CHECK(check_cindip(hs, ch));
    }
}

TEST_CASE("bracket table is antisymmetric and closes") {
    auto sp = SplitLieAlgebra::build('C', 2);
    Chart cs(sp, ChartKind::sp2_paper);
    auto hs = validate(sp.root_system(), {0, 1, 2});
    auto sol = solve_mc(hs, cs);
    REQUIRE(sol.closed);
    auto fr = slice_frame(cs, hs);
    for (std::size_t i = 0; i < sol.dimension; ++i)
        for (std::size_t j = 0; j < sol.dimension; ++j) {
            for (std::size_t k = 0; k < sol.dimension; ++k)
                CHECK(sol.bracket_table[i][j][k] == -sol.bracket_table[j][i][k]);
            auto br = field_bracket(fr, sol.basis[i], sol.basis[j]);
            auto coords = solution_coordinates(sol, br);
            REQUIRE(coords.has_value());
            CHECK(*coords == sol.bracket_table[i][j]);
        }
}

TEST_CASE("solution basis is homogeneous with recorded grades") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    auto sol = solve_mc(type_p_subset(a3.root_system(), 2), ch);
    for (std::size_t i = 0; i < sol.dimension; ++i) CHECK(homogeneous_degree(sol.basis[i], ch.weights()) == sol.grades[i]);
    CHECK(field_rank(sol.basis) == sol.dimension);
}

TEST_CASE("algebra invariants of the sl(3) solution") {
    auto a2 = SplitLieAlgebra::build('A', 2);
    Chart c2(a2, ChartKind::matrix_inverse);
    auto inv = algebra_invariants(solve_mc(full_set(a2.root_system()), c2));
    CHECK(inv.dimension == 8);
    CHECK(inv.killing_rank == 8);  // semisimple
    // Killing form of sl(3, R): symmetric part positive (dim 5), skew part negative (dim 3).
    CHECK(inv.killing_positive == 5);
    CHECK(inv.killing_negative == 3);
    CHECK(inv.derived_series.front() == 8);
}

TEST_CASE("sp(2) counterexample: strict inclusion of the normalizer image") {
    auto sp = SplitLieAlgebra::build('C', 2);
    Chart cs(sp, ChartKind::sp2_paper);
    auto hs = validate(sp.root_system(), {0, 1, 2});
    auto sol = solve_mc(hs, cs);
    auto cmp = compare_with_normalizer(hs, cs, sol);
    CHECK(cmp.inclusion);
    CHECK(cmp.rank_nu == 6);
    CHECK(cmp.dim_solution == 8);
    CHECK(!cmp.equality);
    CHECK(cmp.conjecture_match);
}

TEST_CASE("nu vanishes on n_C") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    auto hs = type_p_subset(a3.root_system(), 2);
    for (auto c : hs.C) {
        auto v = nu(ch, hs, a3.basis_vector(a3.root_index(c)));
        for (auto& p : v.comp) CHECK(p.is_zero());
    }
}

TEST_CASE("normalizer support: formula and brute force agree everywhere") {
    for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 4}, {'C', 3}}) {
        auto alg = SplitLieAlgebra::build(f, l);
        for (auto& hs : enumerate_all(alg.root_system()))
            CHECK(normalizer_support_bruteforce(alg, hs) == analyze(hs).normalizer_support);
    }
}

TEST_CASE("multi-zone sets reduce additively") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    auto hs = validate(a3.root_system(), {0, 1, 2, 3});  // zones {100,010,110} and {001}
    auto z = reduce_by_dark_zones(hs, ch);
    CHECK(z.zones.size() == 2);
    CHECK(z.additive);
    CHECK(z.lifts_are_solutions);
    CHECK(z.lifts_span);
}

TEST_CASE("degree bound and errors") {
    auto a2 = SplitLieAlgebra::build('A', 2);
    CHECK(default_degree_bound(a2.root_system()) == 4);
    Chart c2(a2, ChartKind::matrix_inverse);
    HessenbergSet empty = validate(a2.root_system(), {});
    CHECK_THROWS_AS(solve_mc(empty, c2), std::invalid_argument);
    // rank-one slices do not stabilize and say so
    auto s = solve_mc(validate(a2.root_system(), {0}), c2);
    CHECK(!s.stabilized);
    CHECK(!s.warnings.empty());
}
