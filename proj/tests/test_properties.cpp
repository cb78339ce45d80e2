#include <doctest.h>

#include "property_suites.hpp"

using namespace apolar::props;

namespace {

void expect_clean(const SuiteResult& r)
{
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.failures == 0);
}

} // namespace

TEST_CASE("ring axioms") { expect_clean(ring_axioms(0x1001, 400)); }
TEST_CASE("pairing perfectness") { expect_clean(pairing_perfectness(0x2002, 250)); }
TEST_CASE("rref postconditions") { expect_clean(rref_postconditions(0x3003, 300)); }
TEST_CASE("Chow normal-form confluence") { expect_clean(chow_confluence(0x4004, 200)); }
TEST_CASE("Whitney formula") { expect_clean(whitney_formula(0x5005, 200)); }

TEST_CASE("suites are deterministic")
{
    auto a = ring_axioms(7, 20), b = ring_axioms(7, 20);
    CHECK(a.failures == b.failures);
    CHECK(a.first_failure == b.first_failure);
}
