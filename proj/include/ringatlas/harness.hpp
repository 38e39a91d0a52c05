#ifndef RINGATLAS_HARNESS_HPP
#define RINGATLAS_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ringatlas/constructions.hpp"
#include "ringatlas/properties.hpp"

namespace ringatlas {

// The harness checks each structural result as an implication over the
// corpus at bounded degree. It is evidence, not proof: a pass says no
// counterexample exists within the scanned bounds, nothing more. Assert
// cases failing indicate either an implementation bug or a genuine
// counterexample; both stop the build. Observe cases record anomalies for
// results whose stated hypotheses are garbled or lean on external citations.

enum class CaseMode { assert_mode, observe_mode };
enum class CaseStatus { pass, fail, vacuous };

std::string to_string(CaseMode m);
std::string to_string(CaseStatus s);

struct CaseResult {
    std::string entry;
    CaseStatus status = CaseStatus::vacuous;
    std::string detail;
};

struct HarnessCaseInfo {
    std::string id;
    CaseMode mode = CaseMode::assert_mode;
    std::string summary;
};

/// The catalog of built-in cases, in ledger order.
const std::vector<HarnessCaseInfo>& builtin_cases();

struct HarnessOptions {
    SearchStrategy strategy = SearchStrategy::dfs;
    std::uint64_t budget = 100'000'000;
    int jobs = 1;
    std::uint64_t seed = 0x52494e47;
    /// Degree bound policy: degree_small for rings of order <= small_max,
    /// degree_large above.
    int degree_small = 2;
    int degree_large = 1;
    std::size_t small_max = 16;
    /// trust skips axiom re-validation of rings the harness constructs
    /// itself (relabelings, products, trivial extensions).
    BuildCheck construction_check = BuildCheck::validate;

    int degree_for(std::size_t order) const {
        return order <= small_max ? degree_small : degree_large;
    }
};

struct CaseLedger {
    HarnessCaseInfo info;
    std::vector<CaseResult> results;
};

struct Ledger {
    std::vector<CaseLedger> cases;

    std::size_t assert_failures() const;
    std::size_t observe_anomalies() const;
    std::size_t vacuous_total() const;
    bool case_non_vacuous(const std::string& id) const;
    bool ok() const { return assert_failures() == 0; }
};

/// Runs every built-in case over the corpus. Deterministic: the ledger is
/// identical for any jobs count.
Ledger run_harness(const std::vector<Fixture>& corpus,
                   const HarnessOptions& options = {});

/// Deterministic serializations (no timings, no thread counts).
std::string ledger_to_json(const Ledger& ledger);
std::string ledger_table(const Ledger& ledger);

}  // namespace ringatlas

#endif
