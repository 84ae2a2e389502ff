#include "support.hpp"

#include <doctest.h>

using namespace mclab;
using testsupport::random_point;
using testsupport::random_rational;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int maxdeg) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    Poly p(nvars);
    for (int i = 0; i < terms; ++i) {
        Mono m(nvars);
        for (auto& k : m) k = static_cast<std::uint8_t>(e(rng));
        p.add_term(m, random_rational(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("parse and print are inverse") {
    for (auto s : {"0", "1", "-3/4*x^2*y + z - 1", "x*y*z", "1/2*x - 1/3*y^3"}) {
        Poly p = parse_poly(s, XYZ);
        CHECK(parse_poly(p.to_string(XYZ), XYZ) == p);
    }
    CHECK(parse_poly("(x + y)^2", XYZ) == parse_poly("x^2 + 2*x*y + y^2", XYZ));
    CHECK(parse_poly("(3*x - y)/2", XYZ) == parse_poly("3/2*x - 1/2*y", XYZ));
    CHECK(parse_poly("x*y - x*y", XYZ).is_zero());
    CHECK_THROWS(parse_poly("w + 1", XYZ));
}

TEST_CASE("arithmetic basics") {
    Poly x = Poly::var(3, 0), y = Poly::var(3, 1);
    Poly p = (x + y) * (x - y);
    CHECK(p == parse_poly("x^2 - y^2", XYZ));
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(1) == 2);
    CHECK(!p.depends_on(2));
    CHECK((x + y).pow(3).size() == 4);
    CHECK(Poly::constant(0, 5) * x == x * Q(5));
    CHECK(p.coeff(Mono{2, 0, 0}) == 1);
    CHECK(Poly::constant(3, 7).is_constant());
    CHECK(Poly::constant(3, 7).constant_term() == 7);
}

TEST_CASE("random ring identities") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 3, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        for (std::size_t i = 0; i < 3; ++i) CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
        auto pt = random_point(rng, 3);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + c).evaluate(pt) == a.evaluate(pt) + c.evaluate(pt));
        // Substitution commutes with evaluation.
        std::vector<Poly> subs{b, c, Poly::var(3, 2)};
        std::vector<Q> img{b.evaluate(pt), c.evaluate(pt), pt[2]};
        CHECK(a.compose(subs).evaluate(pt) == a.evaluate(img));
    }
}

TEST_CASE("substitute, extend, remap") {
    Poly p = parse_poly("x^2*y + z", XYZ);
    CHECK(p.substitute(0, Poly::constant(3, 2)) == parse_poly("4*y + z", XYZ));
    Poly e = p.extend(4);
    CHECK(e.nvars() == 4);
    CHECK(e.evaluate({Q(1), Q(2), Q(3), Q(9)}) == 5);
    Poly r = p.remap({2, 1, 0}, 3);
    CHECK(r == parse_poly("z^2*y + x", XYZ));
}

TEST_CASE("weighted degrees") {
    std::vector<int> w{1, 1, 2};
    CHECK(parse_poly("z - x*y", XYZ).weighted_degree(w) == 2);
    CHECK(!parse_poly("z - x", XYZ).weighted_degree(w).has_value());
    CHECK(!Poly(3).weighted_degree(w).has_value());
    auto parts = parse_poly("z - x + 3", XYZ).homogeneous_parts(w);
    REQUIRE(parts.size() == 3);
    CHECK(parts.at(2) == parse_poly("z", XYZ));
    auto ms = monomials_of_weight(3, {0, 1, 2}, w, 2);
    CHECK(ms.size() == 4);  // x^2, xy, y^2, z
    for (auto& m : ms) CHECK(weighted_degree(m, w) == 2);
}

TEST_CASE("normalized gives a primitive integer polynomial") {
    Q f;
    Poly p = parse_poly("-3/4*x + 1/2*y", XYZ);
    Poly n = p.normalized(&f);
    CHECK(p * f == n);
    for (auto& [m, c] : n.terms()) CHECK(c.get_den() == 1);
}
