#include <doctest.h>

#include "apolar/apolarity.hpp"

using namespace apolar;

TEST_CASE("parsing and printing")
{
    auto R = Ring::indexed(Field::rationals(), "x", 3);
    auto p = parse_polynomial(R, "(x0 + 2*x1)^2 - 4*x1^2 + 1/2");
    CHECK(p == parse_polynomial(R, "x0^2 + 4*x0*x1 + 1/2"));
    CHECK(p.degree() == 2);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(parse_polynomial(R, p.str()) == p);
}

TEST_CASE("prime field reduction")
{
    auto F = Field::prime(101);
    auto R = Ring::indexed(F, "x", 2);
    auto p = parse_polynomial(R, "102*x0 + 1/2*x1");
    CHECK(p.coeff(Monomial({1, 0})) == 1);
    CHECK(p.coeff(Monomial({0, 1})) == 51);
    CHECK(F.symmetric(Scalar(100)) == -1);
    CHECK_THROWS_AS(F.from(Scalar(1, 101)), std::domain_error);
}

TEST_CASE("grevlex order and monomial bases")
{
    auto m = monomials_of_degree(3, 2);
    REQUIRE(m.size() == 6);
    // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    CHECK(m[0] == Monomial({2, 0, 0}));
    CHECK(m[2] == Monomial({0, 2, 0}));
    CHECK(m[3] == Monomial({1, 0, 1}));
    CHECK(graded_dimension(5, 2) == 15);
}

TEST_CASE("substitution and twist")
{
    auto R = Ring::indexed(Field::rationals(), "x", 2);
    auto p = parse_polynomial(R, "x0^2*x1 + x1^3");
    auto swapped = p.substitute({Polynomial::variable(R, 1), Polynomial::variable(R, 0)});
    CHECK(swapped == parse_polynomial(R, "x0*x1^2 + x0^3"));
    CHECK(p.dehomogenize(1).homogenize(1, 3) == p);
    // Terms of degree e gain (3 - e)!: x0^2 (degree 2) gets 1!, 1 gets 3!.
    CHECK(twist(parse_polynomial(R, "x0^2 + 1"), 1, 3) == parse_polynomial(R, "x0^2 + 6"));
}
