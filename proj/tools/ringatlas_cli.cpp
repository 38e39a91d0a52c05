#include <CLI11.hpp>

#include <iostream>

#include "ringatlas/commands.hpp"

using namespace ringatlas;

namespace {

SearchStrategy parse_strategy(const std::string& s) {
    if (s == "exhaustive") return SearchStrategy::exhaustive;
    if (s == "dfs") return SearchStrategy::dfs;
    throw CLI::ValidationError("--strategy", "must be exhaustive or dfs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring atlas: Armendariz-type property checks, "
                 "counterexample search and structural test harness"};
    app.require_subcommand(1);

    std::string strategy = "dfs";
    std::uint64_t budget = 100'000'000;
    int degree = 1;
    int jobs = 1;
    std::uint64_t seed = 0x52494e47;
    std::string out;
    bool trust = false;

    auto add_scan_flags = [&](CLI::App* cmd) {
        cmd->add_option("--degree", degree, "degree bound for scans");
        cmd->add_option("--strategy", strategy, "exhaustive|dfs");
        cmd->add_option("--budget", budget, "enumeration budget");
        cmd->add_option("--out", out, "write JSON output here");
    };

    // check
    auto* check = app.add_subcommand("check",
                                     "decide one property on one (ring, twist)");
    CheckArgs check_args;
    check->add_option("--fixture", check_args.fixture, "built-in fixture id");
    check->add_option("--atlas", check_args.atlas_path, "atlas file");
    check->add_option("--ring", check_args.ring, "ring name in the atlas");
    check->add_option("--map", check_args.map, "map name in the atlas");
    check->add_option("--property", check_args.property, "property name")
        ->required();
    add_scan_flags(check);

    // search
    auto* search = app.add_subcommand(
        "search", "scan (ring, twist) candidates for a property signature");
    SearchArgs search_args;
    search->add_option("--where", search_args.where,
                       "constraint prop=holds|fails, twist=id, twist!=id");
    search->add_option("--atlas", search_args.atlas_path,
                       "atlas file (default: built-in fixtures)");
    search->add_flag("--all-endos", search_args.all_endos,
                     "also brute-force every endomorphism (order <= 16)");
    search->add_option("--limit", search_args.limit, "result cap");
    add_scan_flags(search);

    // reproduce-paper
    auto* repro = app.add_subcommand(
        "reproduce-paper",
        "run every built-in example assertion and the full harness");
    std::string witnesses_out;
    repro->add_option("--jobs", jobs, "worker threads");
    repro->add_option("--seed", seed, "seed for randomized relabelings");
    repro->add_option("--witnesses-out", witnesses_out,
                      "write collected witnesses here");
    repro->add_flag("--trust", trust,
                    "skip re-validation of harness-constructed rings");
    add_scan_flags(repro);

    // atlas
    auto* atlas = app.add_subcommand("atlas", "import/export/list");
    AtlasArgs atlas_args;
    atlas->add_option("action", atlas_args.action, "import|export|list")
        ->required();
    atlas->add_option("path", atlas_args.path, "atlas file");
    atlas->add_option("--out", atlas_args.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            check_args.degree = degree;
            check_args.strategy = parse_strategy(strategy);
            check_args.budget = budget;
            check_args.out = out;
            return run_check(check_args, std::cout, std::cerr);
        }
        if (search->parsed()) {
            search_args.degree = degree;
            search_args.strategy = parse_strategy(strategy);
            search_args.budget = budget;
            return run_search(search_args, std::cout, std::cerr);
        }
        if (repro->parsed()) {
            ReproArgs args;
            args.harness.strategy = parse_strategy(strategy);
            args.harness.budget = budget;
            args.harness.jobs = jobs;
            args.harness.seed = seed;
            args.harness.construction_check =
                trust ? BuildCheck::trust : BuildCheck::validate;
            args.out = out;
            args.witnesses_out = witnesses_out;
            return run_reproduce_cmd(args, std::cout, std::cerr);
        }
        if (atlas->parsed()) {
            if (atlas_args.out.empty()) atlas_args.out = out;
            return run_atlas_cmd(atlas_args, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
