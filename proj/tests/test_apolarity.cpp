#include <doctest.h>

#include "apolar/apolarity.hpp"
#include "apolar/unfolding.hpp"

using namespace apolar;

TEST_CASE("contraction is differentiation without factorials")
{
    auto P = DualPair::make(Field::rationals(), 2);
    auto f = parse_polynomial(P.S, "x0^3*x1");
    CHECK(contract(parse_polynomial(P.T, "y0^2"), f) == parse_polynomial(P.S, "6*x0*x1"));
    CHECK(contract(parse_polynomial(P.T, "y0^3*y1"), f) == Polynomial::constant(P.S, 6));
    CHECK(contract(parse_polynomial(P.T, "y1^2"), f).is_zero());
}

TEST_CASE("inverse quadric and q^-1(q^2) = 6q")
{
    auto P = DualPair::make(Field::rationals(), 4);
    auto q = parse_polynomial(P.S, "x0*x1 + x2*x3");
    auto qinv = inverse_quadric(q, P.T);
    CHECK(qinv == parse_polynomial(P.T, "y0*y1 + y2*y3"));
    CHECK(contract(qinv, q.pow(2)) == Scalar(6) * q);
    CHECK_THROWS_AS(inverse_quadric(parse_polynomial(P.S, "x0*x1"), P.T), std::domain_error);
}

TEST_CASE("catalecticant of a binary form")
{
    // f = x0^2 x1^2: Cat_1 sends y0 -> 2x0x1^2, y1 -> 2x0^2x1, rank 2.
    auto P = DualPair::make(Field::rationals(), 2);
    auto f = parse_polynomial(P.S, "x0^2*x1^2");
    CHECK(rank(catalecticant(f, 1)) == 2);
    CHECK(rank(catalecticant(f, 2)) == 3);
    auto perp = apolar_graded(f, P.T, 3);
    CHECK(perp.size() == 2); // y0^3 and y1^3
}

TEST_CASE("apolar ideal of a power of a sum of squares has no low-degree elements")
{
    auto P = DualPair::make(Field::rationals(), 3);
    auto q = parse_polynomial(P.S, "x0^2 + x1*x2");
    CHECK(apolar_graded(q.pow(3), P.T, 3).empty());
    CHECK(apolar_graded(q.pow(3), P.T, 4).size() == 9);
}

TEST_CASE("proportionality and spans")
{
    auto R = Ring::indexed(Field::rationals(), "y", 2);
    auto a = parse_polynomial(R, "y0^2 - y1^2");
    auto c = proportional(a, Scalar(-3, 2) * a);
    REQUIRE(c);
    CHECK(*c == Scalar(-3, 2));
    CHECK_FALSE(proportional(a, parse_polynomial(R, "y0^2 + y1^2")));
    CHECK(same_span({a, parse_polynomial(R, "y0*y1")}, {parse_polynomial(R, "y0^2 - y1^2 + y0*y1"), parse_polynomial(R, "2*y0*y1")}, 2));
}

TEST_CASE("graded ideal view")
{
    auto R = Ring::indexed(Field::rationals(), "y", 3);
    GradedIdealView I(R, {parse_polynomial(R, "y0^2"), parse_polynomial(R, "y1^2"), parse_polynomial(R, "y2^2")});
    // Complete intersection of three quadrics: (1, 3, 3, 1, 0).
    CHECK(I.hilbert_function(4) == std::vector<std::size_t>{1, 3, 3, 1, 0});
    CHECK(empty_in_projective_space(I).empty);
    CHECK(I.recompute(3) == I.piece(3));
}

TEST_CASE("linear syzygies of the Koszul pair")
{
    auto R = Ring::indexed(Field::rationals(), "y", 2);
    std::vector<Polynomial> g{parse_polynomial(R, "y0"), parse_polynomial(R, "y1")};
    auto s = linear_syzygies(g);
    REQUIRE(s.size() == 1);
    CHECK(is_syzygy(s[0], g));
}
