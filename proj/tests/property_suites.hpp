#ifndef APOLAR_PROPERTY_SUITES_HPP
#define APOLAR_PROPERTY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace apolar::props {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// Each suite is deterministic for a given seed.
SuiteResult ring_axioms(std::uint64_t seed, std::size_t cases);
SuiteResult pairing_perfectness(std::uint64_t seed, std::size_t cases);
SuiteResult rref_postconditions(std::uint64_t seed, std::size_t cases);
SuiteResult chow_confluence(std::uint64_t seed, std::size_t cases);
SuiteResult whitney_formula(std::uint64_t seed, std::size_t cases);

// Every suite with its default seed and case count.
std::vector<SuiteResult> run_all();

} // namespace apolar::props

#endif
