#include "support.hpp"

#include <doctest.h>

using namespace mclab;
using testsupport::random_point;

namespace {

std::vector<std::pair<char, int>> small() { return {{'A', 2}, {'A', 3}, {'C', 2}}; }

std::vector<ChartKind> kinds_for(const SplitLieAlgebra& alg) {
    std::vector<ChartKind> k{ChartKind::first_kind, ChartKind::second_kind, ChartKind::three_factor};
    if (alg.root_system().family() == 'A') {
        k.push_back(ChartKind::matrix_inverse);
        k.push_back(ChartKind::matrix_direct);
    } else {
        k.push_back(ChartKind::sp2_paper);
    }
    return k;
}

}  // namespace

TEST_CASE("chart kind names round trip") {
    for (auto k : {ChartKind::first_kind, ChartKind::second_kind, ChartKind::three_factor, ChartKind::matrix_inverse,
                   ChartKind::matrix_direct, ChartKind::sp2_paper})
        CHECK(parse_chart_kind(chart_kind_name(k)) == k);
    CHECK_THROWS(parse_chart_kind("nope"));
    auto c3 = SplitLieAlgebra::build('C', 3);
    CHECK_THROWS(Chart(c3, ChartKind::matrix_inverse));
    CHECK_THROWS(Chart(c3, ChartKind::sp2_paper));
}

TEST_CASE("BCH coefficients") {
    auto b = bch_coefficients(5);
    CHECK(b[0] == 1);
    CHECK(b[1] == Q(1, 2));
    CHECK(b[2] == Q(1, 12));
    CHECK(b[3] == 0);
    CHECK(b[4] == Q(-1, 720));
}

TEST_CASE("log coordinates and chart coordinates are inverse maps") {
    for (auto [f, l] : small()) {
        auto alg = SplitLieAlgebra::build(f, l);
        for (auto k : kinds_for(alg)) {
            Chart ch(alg, k);
            const auto& to = ch.to_log();
            const auto& from = ch.from_log();
            for (std::size_t g = 0; g < ch.nvars(); ++g) {
                CHECK(to[g].compose(from) == ch.var(g));
                CHECK(from[g].compose(to) == ch.var(g));
            }
            CHECK(ch.to_log_matrix_path() == to);
        }
    }
}

TEST_CASE("group law: both routes agree, associativity, identity, inverse") {
    std::mt19937_64 rng(21);
    for (auto [f, l] : small()) {
        auto alg = SplitLieAlgebra::build(f, l);
        for (auto k : kinds_for(alg)) {
            Chart ch(alg, k);
            CHECK(group_law(ch, Path::abstract) == group_law(ch, Path::matrix));
            std::size_t n = ch.nvars();
            for (int trial = 0; trial < 5; ++trial) {
                auto a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
                CHECK(group_multiply(ch, group_multiply(ch, a, b), c) == group_multiply(ch, a, group_multiply(ch, b, c)));
                std::vector<Q> e(n, Q(0));
                CHECK(group_multiply(ch, a, e) == a);
                CHECK(group_multiply(ch, e, a, Path::matrix) == a);
            }
        }
    }
}

TEST_CASE("weights follow heights") {
    auto alg = SplitLieAlgebra::build('C', 2);
    Chart ch(alg, ChartKind::sp2_paper);
    CHECK(ch.names() == std::vector<std::string>{"u", "x", "y", "z"});
    for (std::size_t g = 0; g < ch.nvars(); ++g) CHECK(ch.weights()[g] == alg.root_system().height(g));
}

TEST_CASE("left-invariant frame is left invariant") {
    // X_g(f o L_a) = (X_g f) o L_a for the coordinate function f = x_k.
    std::mt19937_64 rng(2);
    for (auto [f, l] : small()) {
        auto alg = SplitLieAlgebra::build(f, l);
        for (auto k : kinds_for(alg)) {
            Chart ch(alg, k);
            std::size_t n = ch.nvars();
            auto law = group_law(ch, Path::abstract);
            auto frame = left_invariant_frame(ch);
            auto a = random_point(rng, n);
            // L_a as polynomials in b: substitute a into the first block.
            std::vector<Poly> left;
            std::vector<Poly> subs;
            for (std::size_t i = 0; i < n; ++i) subs.push_back(Poly::constant(n, a[i]));
            for (std::size_t i = 0; i < n; ++i) subs.push_back(Poly::var(n, i));
            for (std::size_t i = 0; i < n; ++i) left.push_back(law[i].compose(subs));
            for (auto& X : frame)
                for (std::size_t kx = 0; kx < n; ++kx) CHECK(apply(X, left[kx]) == X.comp[kx].compose(left));
        }
    }
}

TEST_CASE("tau: abstract and matrix routes agree; tau is an anti-homomorphism up to sign convention") {
    for (auto [f, l] : small()) {
        auto alg = SplitLieAlgebra::build(f, l);
        Chart ch(alg, default_chart_kind(alg));
        auto frame = left_invariant_frame(ch);
        for (std::size_t b = 0; b < alg.dim(); ++b) {
            auto e = alg.basis_vector(b);
            auto t1 = tau(ch, e, Path::abstract), t2 = tau(ch, e, Path::matrix);
            CHECK(t1.comp == t2.comp);
        }
        // [tau E, tau F] = tau [E, F] in coordinate form.
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (std::size_t b = a + 1; b < alg.dim(); ++b) {
                auto ta = frame_to_coordinates(frame, tau(ch, alg.basis_vector(a)));
                auto tb = frame_to_coordinates(frame, tau(ch, alg.basis_vector(b)));
                auto tab = frame_to_coordinates(frame, tau(ch, alg.bracket(alg.basis_vector(a), alg.basis_vector(b))));
                CHECK(coordinate_bracket(ta, tb).comp == tab.comp);
            }
    }
}

TEST_CASE("frame and coordinate forms convert back and forth") {
    auto alg = SplitLieAlgebra::build('A', 3);
    Chart ch(alg, ChartKind::second_kind);
    auto frame = left_invariant_frame(ch);
    auto t = tau(ch, alg.theta(alg.basis_vector(alg.root_index(0))));
    auto back = coordinates_to_frame(frame, frame_to_coordinates(frame, t));
    CHECK(back.comp == t.comp);
}

TEST_CASE("transport between charts is consistent") {
    auto alg = SplitLieAlgebra::build('A', 3);
    Chart a(alg, ChartKind::three_factor), b(alg, ChartKind::matrix_inverse);
    for (std::size_t bi = 0; bi < alg.dim(); ++bi) {
        auto e = alg.basis_vector(bi);
        auto pa = tau(a, e).comp[5], pb = tau(b, e).comp[5];
        // omega components scale by the chart scales of omega
        CHECK(transport(pa, a, b) * a.scales()[5] == pb * b.scales()[5]);
        CHECK(transport(transport(pa, a, b), b, a) == pa);
    }
}
