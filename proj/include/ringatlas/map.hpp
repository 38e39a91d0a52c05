#ifndef RINGATLAS_MAP_HPP
#define RINGATLAS_MAP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringatlas/ring.hpp"

namespace ringatlas {

enum class MapKind { unverified, homomorphism, endomorphism, isomorphism,
                     automorphism };

std::string to_string(MapKind k);

struct MapViolation {
    std::string rule;            // "additivity", "multiplicativity", "unit",
                                 // "shape", "injectivity"
    std::vector<Elem> elements;  // witness pair / element
    std::string to_string() const;
};

class MapError : public std::runtime_error {
public:
    explicit MapError(MapViolation v)
        : std::runtime_error(v.to_string()), violation_(std::move(v)) {}
    const MapViolation& violation() const noexcept { return violation_; }

private:
    MapViolation violation_;
};

/// A verified unital ring map between table rings. Always preserves +, *
/// and sends one to one; the kind records what else holds.
class RingMap {
public:
    /// Exhaustively checks the homomorphism equations; throws MapError with
    /// a witness pair on failure. The kind is the most specific one that
    /// applies (bijective + same ring = automorphism, etc.).
    static RingMap verified(RingPtr source, RingPtr target,
                            std::vector<Elem> images, std::string label = "");

    static RingMap identity(RingPtr r);

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }
    MapKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<Elem>& images() const noexcept { return images_; }

    Elem operator()(Elem a) const { return images_[a]; }

    bool is_identity_table() const;
    bool injective() const;
    bool is_endomorphism() const noexcept {
        return kind_ == MapKind::endomorphism || kind_ == MapKind::automorphism;
    }

    /// Composition this . other (apply other first).
    RingMap compose(const RingMap& other) const;
    RingMap inverse() const;  // bijective maps only

    bool operator==(const RingMap& o) const {
        return source_.get() == o.source_.get() &&
               target_.get() == o.target_.get() && images_ == o.images_;
    }

private:
    RingMap(RingPtr s, RingPtr t, std::vector<Elem> images, MapKind kind,
            std::string label);

    RingPtr source_, target_;
    std::vector<Elem> images_;
    MapKind kind_;
    std::string label_;
};

/// Least t >= 1 with map^t = identity, or nullopt when iteration enters a
/// cycle that never reaches the identity (possible for non-injective
/// endomorphisms). Exact for bijections via cycle-length lcm.
std::optional<std::uint64_t> map_order(const RingMap& m);

/// phi . alpha . phi^{-1} on phi's target, verified.
RingMap transport(const RingMap& phi, const RingMap& alpha);

/// R/I on smallest-index coset representatives, with the verified projection.
struct Quotient {
    RingPtr ring;
    RingMap projection;       // R -> R/I
    std::vector<Elem> reps;   // coset index -> representative in R
    std::vector<Elem> coset;  // element of R -> coset index
};

/// Throws RingError ("not-an-ideal" with a witness pair) when I is not a
/// two-sided ideal, or when I = R (quotient would drop below order 2).
Quotient make_quotient(const RingPtr& r, const ElementSet& ideal,
                       std::string name = "");

/// The endomorphism a+I -> alpha(a)+I. Requires alpha(I) within I; throws
/// MapError with the escaping element otherwise.
RingMap induced_quotient_map(const Quotient& q, const RingMap& alpha);

/// A subset of R, closed under the ring operations, repackaged as a table
/// ring with its own identity (`one` need not be R's one: corner rings eRe).
struct Subring {
    RingPtr ring;
    std::vector<Elem> members;   // subring index -> element of R
    std::vector<Elem> index_of;  // element of R -> subring index (or npos)
    static constexpr Elem npos = 0xffff;
};

Subring subring_from_subset(const RingPtr& r, const ElementSet& members,
                            Elem one, std::string name);

/// Restriction of an endomorphism of R to an invariant subring.
RingMap restrict_to_subring(const Subring& s, const RingMap& alpha);

/// Every unital endomorphism of R, found by brute force over images of a
/// greedy additive generating set. Guarded to |R| <= 16.
std::vector<RingMap> all_endomorphisms(const RingPtr& r);

}  // namespace ringatlas

#endif
