#include "mclab/hessenberg.hpp"

#include <doctest.h>

#include <set>

using namespace mclab;

TEST_CASE("number of Hessenberg subsets") {
    // Type A: Catalan numbers.
    std::vector<std::size_t> catalan{2, 5, 14, 42};
    for (int l = 1; l <= 4; ++l) {
        auto rs = RootSystem::build('A', l);
        CHECK(enumerate_all(rs).size() == catalan[l - 1]);
    }
    auto c2 = RootSystem::build('C', 2), c3 = RootSystem::build('C', 3);
    CHECK(enumerate_all(c2).size() == 6);
    CHECK(enumerate_all(c3).size() == 20);
}

TEST_CASE("every enumerated subset is closed under subtraction") {
    for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 3}, {'C', 3}}) {
        auto rs = RootSystem::build(f, l);
        for (auto& hs : enumerate_all(rs)) {
            CHECK(!hessenberg_violation(rs, hs.R).has_value());
            CHECK(hs.R.size() + hs.C.size() == rs.num_positive());
            for (auto a : hs.R)
                for (std::size_t b = 0; b < rs.num_positive(); ++b) {
                    auto d = rs.difference(a, b);
                    if (d && rs.is_positive(*d)) CHECK(hs.contains(*d));
                }
        }
    }
}

TEST_CASE("validate reports a witness") {
    auto rs = RootSystem::build('A', 2);
    CHECK_THROWS_AS(validate(rs, {2}), HessenbergError);
    try {
        validate(rs, {0, 2});
        FAIL("expected HessenbergError");
    } catch (const HessenbergError& e) {
        CHECK(e.alpha == 2);
        CHECK(e.beta == 0);
    }
    auto hs = validate(rs, {1, 0});
    CHECK(hs.R == std::vector<std::size_t>{0, 1});
    CHECK(hs.C == std::vector<std::size_t>{2});
}

TEST_CASE("type-p subsets") {
    auto rs = RootSystem::build('A', 3);
    CHECK(type_p_subset(rs, 1).R.size() == 3);
    CHECK(type_p_subset(rs, 2).R.size() == 5);
    CHECK(type_p_subset(rs, 3).R.size() == 6);
    CHECK(full_set(rs).C.empty());
}

TEST_CASE("sl(4) type-2 analysis") {
    auto rs = RootSystem::build('A', 3);
    auto hs = type_p_subset(rs, 2);
    auto rep = analyze(hs);
    CHECK(rep.maximal_roots == std::vector<std::size_t>{3, 4});
    CHECK(rep.boundary_roots == std::vector<std::size_t>{0, 2});
    CHECK(rep.normalizer_support == std::vector<std::size_t>{rs.negate(1)});
    CHECK(rep.intersection == std::vector<std::size_t>{1});
    CHECK(rep.dark_zones.size() == 1);
    CHECK(rep.hypothesis_I);
    CHECK(rep.hypothesis_II);
    CHECK(rep.dims.slice == 5);
    CHECK(rep.dims.q == 10);
    CHECK(rep.dims.q_mod_nC == 9);
    CHECK(rep.dims.conjecture == 9);
    CHECK(check_norma(hs));
}

TEST_CASE("sp(2) counterexample analysis") {
    auto rs = RootSystem::build('C', 2);
    auto hs = validate(rs, {0, 1, 2});
    auto rep = analyze(hs);
    CHECK(rep.maximal_roots == std::vector<std::size_t>{2});
    CHECK(!rep.hypothesis_I);
    CHECK(rep.normalizer_support == std::vector<std::size_t>{rs.negate(1)});
    CHECK(rep.dims.q_mod_nC == 6);
    CHECK(rep.dims.conjecture == 8);
    CHECK_THROWS_AS(check_norma(hs), std::domain_error);
}

TEST_CASE("zones of the simple-root set are singletons") {
    auto rs = RootSystem::build('A', 4);
    auto hs = type_p_subset(rs, 1);
    auto rep = analyze(hs);
    CHECK(rep.dark_zones.size() == 4);
    CHECK(!rep.hypothesis_II);
}

TEST_CASE("hypothesis (I) always holds in type A") {
    for (int l = 1; l <= 4; ++l) {
        auto rs = RootSystem::build('A', l);
        for (auto& hs : enumerate_all(rs)) CHECK(analyze(hs).hypothesis_I);
    }
}

TEST_CASE("boundary roots and D agree when all simple roots are in R") {
    for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 4}, {'C', 3}}) {
        auto rs = RootSystem::build(f, l);
        for (auto& hs : enumerate_all(rs)) {
            auto rep = analyze(hs);
            if (rep.hypothesis_I && contains_all_simple(hs)) CHECK(check_norma(hs));
        }
    }
}

TEST_CASE("shadows lie below their maximal root and cover R") {
    auto rs = RootSystem::build('C', 3);
    for (auto& hs : enumerate_all(rs)) {
        auto rep = analyze(hs);
        std::set<std::size_t> covered;
        for (auto& [mu, s] : rep.shadows)
            for (auto a : s) {
                CHECK(rs.leq(a, mu));
                covered.insert(a);
            }
        CHECK(covered == std::set<std::size_t>(hs.R.begin(), hs.R.end()));
    }
}

TEST_CASE("enumeration rank bound") {
    CHECK(max_enumeration_rank() >= 4);
    auto a6 = RootSystem::build('A', 6);
    CHECK_THROWS(enumerate_all(a6, 4));
}
