#include "support.hpp"

#include "mclab/hessdefs.hpp"

#include <doctest.h>

using namespace mclab;

TEST_CASE("cartan_from_diagonal") {
    auto sl3 = SplitLieAlgebra::build('A', 2);
    auto h = cartan_from_diagonal(sl3, {Q(2), Q(-1), Q(-1)});
    CHECK(sl3.root_value(0, h) == 3);
    CHECK(sl3.root_value(1, h) == 0);
    CHECK_THROWS_AS(cartan_from_diagonal(sl3, {Q(1), Q(1), Q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_diagonal(sl3, {Q(1), Q(-1)}), std::invalid_argument);
    auto sp2 = SplitLieAlgebra::build('C', 2);
    auto hs = cartan_from_diagonal(sp2, {Q(2), Q(1)});
    CHECK(sp2.root_value(1, hs) == 2);  // long root 2*e2
}

TEST_CASE("singular H is rejected with the vanishing roots") {
    auto sl3 = SplitLieAlgebra::build('A', 2);
    Chart ch(sl3, ChartKind::matrix_inverse);
    auto hs = validate(sl3.root_system(), {0, 1});
    CartanParam H{false, cartan_from_diagonal(sl3, {Q(2), Q(-1), Q(-1)})};
    try {
        defining_equations(ch, hs, H);
        FAIL("expected NotRegularError");
    } catch (const NotRegularError& e) {
        CHECK(e.vanishing == std::vector<std::size_t>{1});
    }
}

TEST_CASE("sl(3) graph matches a hand computation for random diagonal H") {
    // n = M^-1 with M = [[1,x,u],[0,1,y],[0,0,1]]; (M H M^-1)_13 = (h3 - h1) u + (h1 - h2) x y.
    auto sl3 = SplitLieAlgebra::build('A', 2);
    Chart ch(sl3, ChartKind::matrix_inverse);
    auto hs = validate(sl3.root_system(), {0, 1});
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 20) {
        Q h1 = testsupport::random_rational(rng), h2 = testsupport::random_rational(rng);
        Q h3 = -h1 - h2;
        if (h1 == h2 || h2 == h3 || h1 == h3) continue;
        ++done;
        CartanParam H{false, cartan_from_diagonal(sl3, {h1, h2, h3})};
        auto eqs = defining_equations(ch, hs, H);
        auto entries = matrix_entries(eqs);
        Poly hand = parse_poly("u", ch.names()) * (h3 - h1) + parse_poly("x*y", ch.names()) * (h1 - h2);
        CHECK(entries.at(2) == hand);
        CHECK(matrix_oracle_agrees(eqs));
        auto g = graph_map(eqs);
        CHECK(g.values.at(2) == parse_poly("x*y", ch.names()) * ((h1 - h2) / (h1 - h3)));
        CHECK(graph_solves_equations(eqs, g));
    }
}

TEST_CASE("symbolic sl(3) graph") {
    auto sl3 = SplitLieAlgebra::build('A', 2);
    Chart ch(sl3, ChartKind::matrix_inverse);
    auto hs = validate(sl3.root_system(), {0, 1});
    auto eqs = defining_equations(ch, hs, CartanParam{true, {}});
    CHECK(eqs.names == std::vector<std::string>{"x", "y", "u", "t1", "t2"});
    CHECK(eqs.alpha_of_H.at(2) == parse_poly("t1 + t2", eqs.names));
    auto g = graph_map(eqs);
    const auto& e = g.entries.at(2);
    CHECK(e.numerator == parse_poly("t1*x*y", eqs.names));
    CHECK(denominator_poly(eqs, e) == parse_poly("t1 + t2", eqs.names));
    CHECK(graph_solves_equations(eqs, g));
    CHECK(g.values.empty());
}

TEST_CASE("smoothness certificate structure") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    for (auto& hs : enumerate_all(a3.root_system())) {
        auto eqs = defining_equations(ch, hs, CartanParam{true, {}});
        auto cert = smoothness_certificate(eqs);
        CHECK(cert.lower_triangular);
        CHECK(cert.diagonal_is_alpha_H);
        CHECK(cert.identity_holds);
        CHECK(cert.rank_at_origin == hs.C.size());
        CHECK(cert.dim_hess == hs.R.size());
    }
}

TEST_CASE("poly_determinant against cofactor expansion and products") {
    std::vector<std::string> n{"a", "b", "c"};
    auto P = [&](const char* s) { return parse_poly(s, n); };
    std::vector<std::vector<Poly>> m{{P("a"), P("b")}, {P("c"), P("a + 1")}};
    CHECK(poly_determinant(m, 3) == P("a^2 + a - b*c"));
    std::vector<std::vector<Poly>> tri{{P("a"), P("0"), P("0")}, {P("b"), P("c"), P("0")}, {P("1"), P("a*b"), P("b")}};
    CHECK(poly_determinant(tri, 3) == P("a*b*c"));
    CHECK(poly_determinant({}, 3) == P("1"));
}

TEST_CASE("pushforward leaves R components and differentiates the graph") {
    auto a3 = SplitLieAlgebra::build('A', 3);
    Chart ch(a3, ChartKind::matrix_inverse);
    auto hs = type_p_subset(a3.root_system(), 2);
    CartanParam H{false, cartan_from_diagonal(a3, {Q(3), Q(1), Q(-1), Q(-3)})};
    auto eqs = defining_equations(ch, hs, H);
    auto g = graph_map(eqs);
    auto pf = pushforward_frame(eqs, g);
    auto frame = slice_frame(ch, hs);
    for (auto b : hs.R) {
        for (auto r : hs.R) CHECK(pf[b].comp[r] == frame[b].comp[r]);
        CHECK(pf[b].comp[5] == apply(frame[b], g.values.at(5)));
    }
}

TEST_CASE("sp(2) equations in the sp2 chart") {
    auto sp2 = SplitLieAlgebra::build('C', 2);
    Chart ch(sp2, ChartKind::sp2_paper);
    auto hs = validate(sp2.root_system(), {0, 1, 2});
    CartanParam H{false, cartan_from_diagonal(sp2, {Q(2), Q(1)})};
    auto eqs = defining_equations(ch, hs, H);
    CHECK(matrix_oracle_agrees(eqs));
    auto g = graph_map(eqs);
    CHECK(graph_solves_equations(eqs, g));
    CHECK(g.values.at(3).weighted_degree(ch.weights()) == std::optional<long>(3));
}
