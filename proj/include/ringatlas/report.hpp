#ifndef RINGATLAS_REPORT_HPP
#define RINGATLAS_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "ringatlas/skew.hpp"

namespace ringatlas {

/// holds-exhaustively is reserved for predicates that quantify over ring
/// elements; polynomial-quantified predicates can only report up-to-bound
/// (or up-to-budget when the scan was cut short).
enum class Verdict { holds_exhaustively, holds_up_to_bound, holds_up_to_budget,
                     fails };

std::string to_string(Verdict v);
bool verdict_holds(Verdict v);

/// A zero-product pair refuting a polynomial predicate: re-multiplying f by g
/// gives 0 and the (i, j) product violates the predicate.
struct ZeroPairWitness {
    Poly f, g;
    std::size_t i = 0, j = 0;
    Elem product = 0;
};

/// An element-level certificate (nilpotent, non-central idempotent, ...).
struct ElementWitness {
    std::vector<Elem> elements;
    std::string note;
};

/// Same as ZeroPairWitness one level up, for R[x][y;a] scans.
struct TowerPairWitness {
    TowerPoly p, q;
    std::size_t i = 0, j = 0;
    Poly product;
};

using Witness = std::variant<ZeroPairWitness, ElementWitness, TowerPairWitness>;

struct PropertyReport {
    std::string property;
    std::string ring;
    std::string twist;
    std::optional<std::pair<int, int>> degree_bound;
    Verdict verdict = Verdict::holds_exhaustively;
    std::optional<Witness> witness;
    std::uint64_t pairs_examined = 0;
    double elapsed_seconds = 0.0;

    bool holds() const { return verdict_holds(verdict); }
    bool failed() const { return verdict == Verdict::fails; }
};

}  // namespace ringatlas

#endif
