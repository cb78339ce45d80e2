#include <atomic>
#include <chrono>
#include <fnmatch.h>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "apolar/checks.hpp"

namespace apolar {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::error: return "error";
    }
    return "error";
}

std::vector<const Check*> select_checks(const std::string& selector)
{
    std::vector<std::string> globs;
    std::istringstream in(selector);
    std::string g;
    while (std::getline(in, g, ','))
        if (!g.empty()) globs.push_back(g);
    if (globs.empty()) globs.push_back("*");

    std::vector<const Check*> out;
    for (const auto& c : catalog())
        for (const auto& pattern : globs)
            if (fnmatch(pattern.c_str(), c.id.c_str(), 0) == 0) {
                out.push_back(&c);
                break;
            }
    return out;
}

std::vector<CheckRecord> run_checks(const std::vector<const Check*>& checks, const CheckContext& ctx, unsigned threads)
{
    std::vector<CheckRecord> records(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < checks.size();) {
            const Check& c = *checks[i];
            CheckRecord& r = records[i];
            r.id = c.id;
            r.anchor = c.anchor;
            auto start = std::chrono::steady_clock::now();
            try {
                CheckOutcome o = c.run(ctx);
                r.status = o.status;
                r.expected = std::move(o.expected);
                r.computed = std::move(o.computed);
                r.comparison = std::move(o.comparison);
                if (ctx.field.is_prime() && !c.field_aware) r.comparison += "; field fixed by the check";
                else if (c.field_aware) r.comparison += "; over " + ctx.field.name();
            } catch (const std::exception& e) {
                r.status = Status::error;
                r.computed = std::string("exception: ") + e.what();
            }
            r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return records;
}

std::vector<std::string> fixtures_of(const std::vector<const Check*>& checks)
{
    std::set<std::string> s;
    for (const auto* c : checks) s.insert(c->fixtures.begin(), c->fixtures.end());
    return {s.begin(), s.end()};
}

std::string format_text(const CheckRecord& r)
{
    std::ostringstream os;
    os << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : r.status == Status::error ? "ERROR " : "INCONCLUSIVE ")
       << r.id << "  [" << r.anchor << "]\n"
       << "    expected:   " << r.expected << "\n"
       << "    computed:   " << r.computed << "\n"
       << "    comparison: " << r.comparison << "\n";
    return os.str();
}

std::string format_record(const CheckRecord& r, bool with_timing)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["comparison"] = r.comparison;
    if (with_timing) j["ms"] = static_cast<long long>(r.ms + 0.5);
    return j.dump();
}

int exit_code(const std::vector<CheckRecord>& records)
{
    bool failed = false;
    for (const auto& r : records) {
        if (r.status == Status::error) return 3;
        if (r.status != Status::pass) failed = true;
    }
    return failed ? 1 : 0;
}

} // namespace apolar
