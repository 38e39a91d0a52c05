#ifndef RINGATLAS_RING_HPP
#define RINGATLAS_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringatlas {

/// Element of a finite ring, as a dense index into its tables.
using Elem = std::uint16_t;

/// First ring axiom found violated by a candidate table, with a witness.
struct AxiomViolation {
    std::string axiom;           // e.g. "mul-associativity"
    std::vector<Elem> elements;  // witness tuple
    std::string detail;

    std::string to_string() const;
};

class RingError : public std::runtime_error {
public:
    explicit RingError(AxiomViolation v)
        : std::runtime_error(v.to_string()), violation_(std::move(v)) {}
    const AxiomViolation& violation() const noexcept { return violation_; }

private:
    AxiomViolation violation_;
};

/// A unital associative ring on elements 0..n-1, given by full addition and
/// multiplication tables. Immutable once built; safe to share across threads.
class FiniteRing {
public:
    static constexpr std::size_t order_cap = 512;

    using Table = std::vector<std::vector<Elem>>;

    /// Runs the full axiom scan (abelian group, associativity, identity,
    /// two-sided distributivity) and throws RingError on the first violation.
    static FiniteRing validated(std::string name, const Table& add,
                                const Table& mul, Elem zero, Elem one);

    /// Skips the axiom scan; for rings correct by construction.
    static FiniteRing trusted(std::string name, const Table& add,
                              const Table& mul, Elem zero, Elem one);

    /// nullopt when all axioms hold, otherwise the first violation in the
    /// documented check order (identity checks precede associativity).
    static std::optional<AxiomViolation> check_axioms(const Table& add,
                                                      const Table& mul,
                                                      Elem zero, Elem one);

    std::size_t order() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }

    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * n_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * n_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    bool is_zero(Elem a) const noexcept { return a == zero_; }
    bool is_central(Elem a) const { return central_[a] != 0; }
    bool commutative() const noexcept { return commutative_; }

    Table add_table() const;
    Table mul_table() const;

    /// Same tables, same zero/one. Names may differ.
    bool same_structure(const FiniteRing& other) const;

private:
    FiniteRing(std::string name, const Table& add, const Table& mul, Elem zero,
               Elem one);

    std::string name_;
    std::size_t n_;
    Elem zero_, one_;
    std::vector<Elem> add_, mul_;  // row-major, stride n_
    std::vector<Elem> neg_;
    std::vector<std::uint8_t> central_;
    bool commutative_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr make_validated(std::string name, const FiniteRing::Table& add,
                       const FiniteRing::Table& mul, Elem zero, Elem one);
RingPtr make_trusted(std::string name, const FiniteRing::Table& add,
                     const FiniteRing::Table& mul, Elem zero, Elem one);

/// Sorted set of elements of one ring.
struct ElementSet {
    std::vector<Elem> members;  // strictly increasing

    bool contains(Elem a) const;
    std::size_t size() const noexcept { return members.size(); }
    bool operator==(const ElementSet&) const = default;

    static ElementSet from_mask(const std::vector<std::uint8_t>& mask);
};

ElementSet center(const FiniteRing& r);
ElementSet idempotents(const FiniteRing& r);
ElementSet units(const FiniteRing& r);
ElementSet nilpotents(const FiniteRing& r);

/// Elements that are neither left nor right zero divisors.
ElementSet regular_elements(const FiniteRing& r);

/// { r : xr = 0 for every x in xs }. xs must be nonempty. The result is
/// checked to be a right ideal before returning.
ElementSet right_annihilator(const FiniteRing& r, std::span<const Elem> xs);

/// eR = { e*r : r in R }, as a sorted set.
ElementSet principal_right_ideal(const FiniteRing& r, Elem e);

bool is_right_ideal(const FiniteRing& r, const ElementSet& s);
bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s);

/// Two-sided ideal generated by a single element.
ElementSet principal_two_sided_ideal(const FiniteRing& r, Elem a);

/// All two-sided ideals, as the closure of the principal ideals under sum.
/// Sorted by (size, members). Intended for small rings; the closure is
/// exhaustive regardless of order.
std::vector<ElementSet> all_two_sided_ideals(const FiniteRing& r);

}  // namespace ringatlas

#endif
