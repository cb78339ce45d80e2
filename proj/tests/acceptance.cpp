// Prints one PASS/FAIL line per acceptance criterion, followed by the failing
// checks.  Exits 0 unless a check raised; with --strict any failed criterion
// also gives exit 1.

#include <cstring>
#include <iostream>
#include <thread>

#include "apolar/checks.hpp"
#include "property_suites.hpp"

using namespace apolar;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::string selector;
};

const std::vector<Criterion> kCriteria{
    {1, "catalecticant ranks", "catalecticant/*"},
    {2, "apolar generator spans", "apolar/*"},
    {3, "tautological Hilbert functions", "hilbert/*"},
    {4, "syzygy counts", "syzygy/*"},
    {5, "unfolding counts", "unfold/*/counts,unfold/ternary/elimination,unfold/quaternary/correction-matrix"},
    {6, "component verification", "unfold/*/components"},
    {7, "ternary geometry", "ternary/*"},
    {8, "polarity identities", "polarity/*"},
    {9, "rank-11 certificates", "rank11/*"},
    {10, "isotropy", "isotropy/*"},
    {11, "intersection theory",
     "chow/sym*,chow/E-dual,chow/osculating-divisor,chow/grassmannian-462,chow/expansion-identity,chow/degree-*,"
     "chow/v3-term,chow/ruling-degrees"},
};

// Checks outside the numbered criteria, reported after them.
const Criterion kSupplementary{0, "supplementary checks", "equivariance/*,chow/E6,chow/wedge2-E6,chow/third-degeneracy"};

} // namespace

int main(int argc, char** argv)
{
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    // Run everything once so shared computations are done in parallel.
    std::vector<const Check*> all;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::vector<Criterion> groups = kCriteria;
    groups.push_back(kSupplementary);
    for (const auto& c : groups) {
        auto sel = select_checks(c.selector);
        ranges.emplace_back(all.size(), all.size() + sel.size());
        all.insert(all.end(), sel.begin(), sel.end());
    }
    auto records = run_checks(all, CheckContext{}, jobs);

    bool any_fail = false, any_error = false;
    std::vector<std::string> details;
    std::string supplementary;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        std::size_t pass = 0, total = ranges[i].second - ranges[i].first;
        for (std::size_t j = ranges[i].first; j < ranges[i].second; ++j) {
            const auto& r = records[j];
            if (r.status == Status::pass) {
                ++pass;
                continue;
            }
            any_error = any_error || r.status == Status::error;
            std::string where = groups[i].number ? "criterion " + std::to_string(groups[i].number) : "supplementary";
            details.push_back("  " + where + ": " + to_string(r.status) + " " +
                              r.id + "\n      expected " + r.expected + "\n      computed " + r.computed);
        }
        if (groups[i].number == 0) {
            supplementary = std::to_string(pass) + "/" + std::to_string(total) + " checks pass";
            continue;
        }
        bool ok = total > 0 && pass == total;
        any_fail = any_fail || !ok;
        std::cout << "criterion " << groups[i].number << " " << (ok ? "PASS" : "FAIL") << "  " << groups[i].title
                  << " (" << pass << "/" << total << " checks)\n";
    }

    std::size_t cases = 0, failures = 0;
    for (const auto& s : props::run_all()) {
        cases += s.cases;
        failures += s.failures;
        if (s.failures) details.push_back("  criterion 12: " + s.name + ": " + s.first_failure);
    }
    any_fail = any_fail || failures > 0 || cases < 1000;
    std::cout << "criterion 12 " << (failures == 0 && cases >= 1000 ? "PASS" : "FAIL") << "  property suites (" << failures
              << " failures in " << cases << " seeded cases)\n";

    std::cout << "\nsupplementary (equivariance, E6): " << supplementary << "\n";
    if (!details.empty()) {
        std::cout << "\nfailing checks:\n";
        for (const auto& d : details) std::cout << d << "\n";
    }
    if (any_error) return 3;
    return strict && any_fail ? 1 : 0;
}
