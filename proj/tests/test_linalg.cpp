#include <doctest.h>

#include "apolar/linalg.hpp"

using namespace apolar;

TEST_CASE("rref of a small rational matrix")
{
    auto F = Field::rationals();
    ScalarMatrix m(F, 3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto k = rref_kernel(m);
    CHECK(k.rank == 2);
    CHECK(k.pivots == std::vector<std::size_t>{0, 1});
    REQUIRE(k.kernel.size() == 1);
    CHECK(k.kernel[0] == Vector{-1, -1, 1});
}

TEST_CASE("solve reports uniqueness")
{
    auto F = Field::rationals();
    ScalarMatrix m(F, 2, {{1, 1}, {1, -1}});
    auto s = solve(m, {3, 1});
    REQUIRE(s);
    CHECK(s->unique);
    CHECK(s->x == Vector{2, 1});
    ScalarMatrix sing(F, 2, {{1, 1}, {2, 2}});
    CHECK_FALSE(solve(sing, {1, 3}));
}

TEST_CASE("rank over Z/p can drop")
{
    // det = 101, invertible over Q, singular mod 101.
    std::vector<Vector> rows{{1, 10}, {-1, 91}};
    CHECK(rank(ScalarMatrix(Field::rationals(), 2, rows)) == 2);
    CHECK(rank(ScalarMatrix(Field::prime(101), 2, {{1, 10}, {100, 91}})) == 1);
}

TEST_CASE("polynomial determinant and minors")
{
    auto R = Ring::make(Field::rationals(), {"t"});
    PolyMatrix m(R, 2, 3);
    const char* e[] = {"1", "t", "t^2", "t", "t^2", "t^3"};
    for (std::size_t i = 0; i < 6; ++i) m(i / 3, i % 3) = parse_polynomial(R, e[i]);
    for (const auto& p : minors(m, 2)) CHECK(p.is_zero());
    CHECK(subsets(4, 2).size() == 6);
}
