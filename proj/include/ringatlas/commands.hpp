#ifndef RINGATLAS_COMMANDS_HPP
#define RINGATLAS_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringatlas/atlas.hpp"

namespace ringatlas {

// Exit codes shared by the CLI: 0 holds, 1 fails, 2 budget-hit, 3 usage or
// data error.

struct CheckArgs {
    std::string fixture;     // fixture id, or
    std::string atlas_path;  // atlas file with --ring/--map refs
    std::string ring;
    std::string map;  // empty = identity twist
    std::string property;
    int degree = 1;
    SearchStrategy strategy = SearchStrategy::dfs;
    std::uint64_t budget = 100'000'000;
    std::string out;  // write the report JSON here
};

int run_check(const CheckArgs& args, std::ostream& os, std::ostream& err);

struct FixtureOutcome {
    std::string id;
    bool ok = true;
    std::size_t soft_violations = 0;
    std::vector<std::string> lines;
    std::vector<PropertyReport> failing_reports;
};

struct ReproResult {
    std::vector<FixtureOutcome> fixtures;
    Ledger ledger;

    bool fixtures_ok() const;
    std::size_t soft_total() const;
    bool ok() const { return fixtures_ok() && ledger.ok(); }

    /// Deterministic: no timings, independent of the jobs count.
    std::string table() const;
    std::string witnesses_json() const;
};

/// Runs every fixture's expected assertions (and its shipped zero-product
/// pair, exactly) at `fixture_degree`, then the full harness.
ReproResult run_reproduction(const HarnessOptions& opt = {},
                             int fixture_degree = 1);

struct ReproArgs {
    HarnessOptions harness;
    int fixture_degree = 1;
    std::string out;            // ledger JSON path
    std::string witnesses_out;  // witness JSON path
};

int run_reproduce_cmd(const ReproArgs& args, std::ostream& os,
                      std::ostream& err);

struct SearchArgs {
    std::vector<std::string> where;  // "prop=holds", "prop=fails",
                                     // "twist=id", "twist!=id"
    std::string atlas_path;          // empty = built-in fixtures
    bool all_endos = false;
    int degree = 1;
    SearchStrategy strategy = SearchStrategy::dfs;
    std::uint64_t budget = 100'000'000;
    std::uint64_t limit = 1000;
};

int run_search(const SearchArgs& args, std::ostream& os, std::ostream& err);

struct AtlasArgs {
    std::string action;  // "import", "export", "list"
    std::string path;
    std::string out;
};

int run_atlas_cmd(const AtlasArgs& args, std::ostream& os, std::ostream& err);

}  // namespace ringatlas

#endif
