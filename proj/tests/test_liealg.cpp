#include "support.hpp"

#include <doctest.h>

using namespace mclab;

namespace {

QElem random_elem(const SplitLieAlgebra& alg, std::mt19937_64& rng) {
    QElem x(alg.dim());
    for (auto& c : x) c = testsupport::random_rational(rng);
    return x;
}

std::vector<SplitLieAlgebra> algebras() {
    return {SplitLieAlgebra::build('A', 1), SplitLieAlgebra::build('A', 2), SplitLieAlgebra::build('A', 3),
            SplitLieAlgebra::build('C', 2), SplitLieAlgebra::build('C', 3)};
}

}  // namespace

TEST_CASE("dimensions and names") {
    CHECK(SplitLieAlgebra::build_sl(3).dim() == 8);
    CHECK(SplitLieAlgebra::build_sl(4).dim() == 15);
    CHECK(SplitLieAlgebra::build_sp(2).dim() == 10);
    CHECK(SplitLieAlgebra::build_sp(3).dim() == 21);
    CHECK(SplitLieAlgebra::build('C', 2).name() == "sp2");
    CHECK(SplitLieAlgebra::build('A', 2).matrix_size() == 3);
    CHECK(SplitLieAlgebra::build('C', 2).matrix_size() == 4);
}

TEST_CASE("bracket is bilinear, antisymmetric and satisfies Jacobi") {
    std::mt19937_64 rng(3);
    for (auto& alg : algebras()) {
        for (int trial = 0; trial < 10; ++trial) {
            auto x = random_elem(alg, rng), y = random_elem(alg, rng), z = random_elem(alg, rng);
            auto xy = alg.bracket(x, y), yx = alg.bracket(y, x);
            for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(xy[i] == -yx[i]);
            auto a = alg.bracket(x, alg.bracket(y, z)), b = alg.bracket(y, alg.bracket(z, x)),
                 c = alg.bracket(z, alg.bracket(x, y));
            for (std::size_t i = 0; i < alg.dim(); ++i) CHECK(a[i] + b[i] + c[i] == 0);
            // matrix commutator route
            auto mx = alg.to_matrix(x), my = alg.to_matrix(y);
            auto com = matmul(mx, my), rev = matmul(my, mx);
            for (std::size_t i = 0; i < com.size(); ++i)
                for (std::size_t j = 0; j < com.size(); ++j) com[i][j] -= rev[i][j];
            CHECK(alg.decompose(com) == xy);
        }
    }
}

TEST_CASE("trace form normalization and Killing constant") {
    std::mt19937_64 rng(4);
    for (auto& alg : algebras()) {
        const auto& rs = alg.root_system();
        for (std::size_t a = 0; a < rs.num_positive(); ++a)
            CHECK(alg.trace_form(alg.basis_vector(alg.root_index(a)), alg.basis_vector(alg.root_index(rs.negate(a)))) ==
                  1);
        for (int trial = 0; trial < 5; ++trial) {
            auto x = random_elem(alg, rng), y = random_elem(alg, rng);
            CHECK(alg.killing(x, y) == alg.killing_via_ad(x, y));
        }
    }
    CHECK(SplitLieAlgebra::build('A', 2).killing_constant() == 6);
    CHECK(SplitLieAlgebra::build('C', 2).killing_constant() == 6);
}

TEST_CASE("H_alpha represents alpha through the trace form") {
    for (auto& alg : algebras()) {
        const auto& rs = alg.root_system();
        for (std::size_t a = 0; a < rs.num_positive(); ++a) {
            auto Ha = alg.cartan_element(alg.H_of(a));
            for (std::size_t k = 0; k < alg.rank(); ++k) {
                auto Hk = alg.basis_vector(alg.cartan_index(k));
                CHECK(alg.trace_form(Hk, Ha) == alg.root_value_on_basis(a, k));
            }
        }
        auto h0 = alg.solve_H0();
        for (std::size_t d = 0; d < alg.rank(); ++d) CHECK(alg.root_value(d, h0) == -1);
        auto W = alg.coweights();
        for (std::size_t k = 0; k < alg.rank(); ++k)
            for (std::size_t d = 0; d < alg.rank(); ++d) CHECK(alg.root_value(d, W[k]) == (d == k ? 1 : 0));
    }
}

TEST_CASE("structure constants") {
    for (auto& alg : algebras()) {
        const auto& rs = alg.root_system();
        std::size_t N = rs.num_positive();
        for (std::size_t a = 0; a < 2 * N; ++a)
            for (std::size_t b = 0; b < 2 * N; ++b) {
                CHECK(alg.c(a, b) == -alg.c(b, a));
                if (!rs.signed_sum(a, b)) CHECK(alg.c(a, b) == 0);
                else CHECK(alg.c(a, b) != 0);
            }
    }
}

TEST_CASE("theta is an involutive automorphism") {
    std::mt19937_64 rng(8);
    for (auto& alg : algebras()) {
        auto x = random_elem(alg, rng), y = random_elem(alg, rng);
        CHECK(alg.theta(alg.theta(x)) == x);
        CHECK(alg.theta(alg.bracket(x, y)) == alg.bracket(alg.theta(x), alg.theta(y)));
    }
}

TEST_CASE("decompose rejects matrices outside the algebra") {
    auto alg = SplitLieAlgebra::build('A', 2);
    auto id = identity(3);
    CHECK_THROWS(alg.decompose(id));
}

TEST_CASE("unipotent matrix exp and log") {
    auto alg = SplitLieAlgebra::build('A', 3);
    std::size_t nv = 2;
    PElem e(alg.dim(), Poly(nv));
    e[alg.root_index(0)] = Poly::var(nv, 0);
    e[alg.root_index(4)] = Poly::var(nv, 1);
    auto m = alg.to_pmatrix(e, nv);
    auto ex = pm_exp_nilpotent(m);
    CHECK(pm_log_unipotent(ex) == m);
    CHECK(pm_mul(ex, pm_inverse_unipotent(ex)) == pm_identity(4, nv));
}
