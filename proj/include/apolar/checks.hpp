#ifndef APOLAR_CHECKS_HPP
#define APOLAR_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

enum class Status { pass, fail, inconclusive, error };
std::string to_string(Status s);

struct CheckContext {
    // Field requested with --field; checks that only make sense over one
    // field ignore it and say so in the record.
    Field field = Field::rationals();
};

struct CheckOutcome {
    Status status = Status::fail;
    std::string expected;
    std::string computed;
    std::string comparison; // exact, up-to-scalar, span-equality, ...
};

struct Check {
    std::string id;
    std::string anchor; // short topic label
    std::vector<std::string> fixtures;
    bool field_aware = false;
    std::function<CheckOutcome(const CheckContext&)> run;
};

struct CheckRecord {
    std::string id;
    std::string anchor;
    Status status = Status::error;
    std::string expected;
    std::string computed;
    std::string comparison;
    double ms = 0;
};

// Every registered check, in catalog order.  Ids are unique.
const std::vector<Check>& catalog();

// Checks whose id matches the glob ('*' and '?' may cross '/'), in catalog
// order.  Several globs may be given separated by commas.
std::vector<const Check*> select_checks(const std::string& selector);

// Runs the checks on `threads` workers.  Records come back in the order of
// `checks`; exceptions become records with status error.
std::vector<CheckRecord> run_checks(const std::vector<const Check*>& checks, const CheckContext& ctx,
                                    unsigned threads);

// Distinct fixture files used by the checks, sorted.
std::vector<std::string> fixtures_of(const std::vector<const Check*>& checks);

std::string format_text(const CheckRecord& r);
// One JSON object per line, fields in the order id, anchor, status,
// expected, computed, comparison, ms.
std::string format_record(const CheckRecord& r, bool with_timing = true);

// 0 when every record passed, 3 if any raised, 1 otherwise.
int exit_code(const std::vector<CheckRecord>& records);

} // namespace apolar

#endif
