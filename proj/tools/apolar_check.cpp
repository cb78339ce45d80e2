// apolar-check: runs the verification catalog.
//
//   apolar-check [run] [--select GLOB] [--field q|f101] [--format text|records]
//                      [--fixtures DIR] [--jobs N]
//   apolar-check list
//
// Exit codes: 0 all selected checks pass, 1 some check failed, 2 the selector
// matched nothing, 3 a check raised.  APOLAR_FIXTURES overrides the fixture
// directory when --fixtures is not given.

#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "apolar/checks.hpp"
#include "apolar/fixtures.hpp"

using namespace apolar;

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of apolarity computations for powers of quadrics"};
    app.require_subcommand(0, 1);

    std::string selector = "*", field = "q", format = "text", fixtures;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* run = app.add_subcommand("run", "run checks (the default)");
    auto* list = app.add_subcommand("list", "list check ids with their topics");
    for (CLI::App* a : {&app, run}) {
        a->add_option("--select", selector, "comma-separated id globs");
        a->add_option("--field", field, "coefficient field for checks that support both")
            ->check(CLI::IsMember({"q", "f101"}));
        a->add_option("--format", format, "text or line-delimited records")->check(CLI::IsMember({"text", "records"}));
        a->add_option("--fixtures", fixtures, "fixture directory");
        a->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    }
    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& c : catalog()) std::cout << c.id << "\t" << c.anchor << "\n";
            return 0;
        }
        if (!fixtures.empty()) set_fixture_dir(fixtures);

        auto checks = select_checks(selector);
        if (checks.empty()) {
            std::cerr << "no check matches '" << selector << "'\n";
            return 2;
        }
        CheckContext ctx;
        if (field == "f101") ctx.field = Field::prime(101);

        const bool records = format == "records";
        for (const auto& f : fixtures_of(checks)) {
            std::string h = fixture_hash(f);
            if (records) {
                nlohmann::ordered_json j;
                j["fixture"] = f;
                j["hash"] = h;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "fixture " << f << " " << h << "\n";
            }
        }
        if (!records) std::cout << "\n";

        auto results = run_checks(checks, ctx, jobs);
        std::size_t passed = 0;
        for (const auto& r : results) {
            std::cout << (records ? format_record(r) + "\n" : format_text(r));
            passed += r.status == Status::pass;
        }
        if (!records) std::cout << "\n" << passed << " of " << results.size() << " checks pass\n";
        return exit_code(results);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
