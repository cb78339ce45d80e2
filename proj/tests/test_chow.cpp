#include <doctest.h>

#include "apolar/chow.hpp"

using namespace apolar;

TEST_CASE("Chern classes on P1 x P1")
{
    CHECK(cotangent().chern() == BaseClass(1, -2, -2, 4));
    // Whitney: c(O(1,0) + O(0,1)) = 1 + h1 + h2 + h1h2.
    CHECK((BundleClass::line(1, 0) + BundleClass::line(0, 1)).chern() == BaseClass(1, 1, 1, 1));
    auto E = BundleClass::line(1, 2) + BundleClass::line(-1, 0);
    CHECK(BundleClass::from_chern(2, E.chern()).twist(1, 1).chern() == E.twist(1, 1).chern());
    CHECK(E.sym(2).rank() == 3);
    CHECK(E.wedge2().chern() == BaseClass(1, 0, 2, 0));
}

TEST_CASE("Grassmannian degrees agree with Schubert calculus")
{
    // P^3 = G(1,4): xi^3 = 1.  G(2,4): xi^4 = 2.  G(2,5): xi^6 = 5.
    GrassmannBundle p3(BundleClass::trivial(4), 1, false);
    CHECK(p3.degree(p3.xi().pow(3)) == 1);
    GrassmannBundle g24(BundleClass::trivial(4), 2, false);
    CHECK(g24.degree(g24.xi().pow(4)) == 2);
    GrassmannBundle g25(BundleClass::trivial(5), 2, false);
    CHECK(g25.degree(g25.xi().pow(6)) == 5);
    CHECK(g25.dimension() == 6);
}

TEST_CASE("projective bundle over P1 x P1")
{
    // Lines in O + O(1,1).  On a fibre xi is the point class of P^1, and
    // classes pulled back from the base alone have no top-degree part.
    GrassmannBundle P(BundleClass::trivial(1) + BundleClass::line(1, 1), 1);
    CHECK(P.dimension() == 3);
    CHECK(P.degree(P.xi() * P.h1() * P.h2()) == 1);
    auto top = P.integrate(P.h1() * P.h2());
    CHECK_FALSE(top.top);
    CHECK(top.value == 0);
}

TEST_CASE("twisting formula for Chern polynomials")
{
    auto R = Ring::indexed(Field::rationals(), "c", 3);
    std::vector<Polynomial> c{Polynomial::variable(R, 0), Polynomial::variable(R, 1)};
    auto l = Polynomial::variable(R, 2);
    auto t = twist_chern(c, l);
    REQUIRE(t.size() == 2);
    // Rank 2: c1 + 2l and c2 + c1 l + l^2.
    CHECK(t[0] == parse_polynomial(R, "c0 + 2*c2"));
    CHECK(t[1] == parse_polynomial(R, "c1 + c0*c2 + c2^2"));
}
