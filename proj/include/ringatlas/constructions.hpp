#ifndef RINGATLAS_CONSTRUCTIONS_HPP
#define RINGATLAS_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ringatlas/map.hpp"
#include "ringatlas/ring.hpp"
#include "ringatlas/skew.hpp"

namespace ringatlas {

/// Validation policy for builders. Tests always validate; the CLI may trust
/// rings that are correct by construction.
enum class BuildCheck { validate, trust };

/// Z/nZ on residues 0..n-1.
RingPtr zmod(unsigned n, BuildCheck check = BuildCheck::validate);

/// The four-element field {0, 1, w, w+1}.
RingPtr gf4(BuildCheck check = BuildCheck::validate);

/// The squaring automorphism of gf4 (order 2).
RingMap gf4_frobenius(const RingPtr& f4);

/// A ring whose elements are fixed-length tuples over a base ring, addition
/// componentwise; encode/decode expose the tuple structure.
struct TupleRing {
    RingPtr ring;
    RingPtr base;
    std::size_t arity = 0;

    Elem encode(const std::vector<Elem>& tuple) const;
    std::vector<Elem> decode(Elem x) const;
};

struct DirectProduct {
    RingPtr ring, left, right;

    Elem pair(Elem a, Elem b) const;
    std::pair<Elem, Elem> split(Elem x) const;
    RingMap projection_left() const;
    RingMap projection_right() const;
};

DirectProduct direct_product(const RingPtr& a, const RingPtr& b,
                             std::string name = "",
                             BuildCheck check = BuildCheck::validate);

/// (a, b) -> (b, a) on a product of two copies of the same ring.
RingMap swap_automorphism(const DirectProduct& p);

RingMap componentwise_map(const DirectProduct& p, const RingMap& f,
                          const RingMap& g);

TupleRing matrix_ring(const RingPtr& r, std::size_t dim,
                      std::string name = "",
                      BuildCheck check = BuildCheck::validate);

TupleRing upper_triangular(const RingPtr& r, std::size_t dim,
                           std::string name = "",
                           BuildCheck check = BuildCheck::validate);

/// { (a b c; 0 a d; 0 0 a) } as a ring on tuples (a, b, c, d).
TupleRing constant_diagonal_subring(const RingPtr& r, std::string name = "",
                                    BuildCheck check = BuildCheck::validate);

/// Tuple slot (i, j) of the upper_triangular encoding, for building
/// elements by matrix position.
std::size_t triangular_slot(std::size_t dim, std::size_t i, std::size_t j);

/// Applies alpha to every tuple slot; an endomorphism whenever alpha is.
RingMap entrywise_map(const TupleRing& t, const RingMap& alpha,
                      std::string label = "");

/// T(R, R) = R + R with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + m1 r2), which is
/// R[x]/<x^2> on coefficient pairs, plus the induced twist
/// (a, b) -> (alpha(a), alpha(b)).
struct TrivialExtension {
    TupleRing ext;
    RingMap twist;
};

TrivialExtension trivial_extension(const RingPtr& r, const RingMap& alpha,
                                   BuildCheck check = BuildCheck::validate);

struct ExpectedAssertion {
    std::string property;
    bool holds = true;
    /// Claims the source material gets from external citations are reported
    /// on violation but do not fail a run.
    bool soft = false;
};

/// An explicit zero-product pair shipped with a fixture, reproduced exactly:
/// f*g must be 0 and the (i, j) product must equal `product` and exhibit the
/// flagged behavior.
struct FixturePair {
    Poly f, g;
    std::size_t i = 0, j = 0;
    Elem product = 0;
    bool expect_nonzero = true;
    bool expect_noncentral = false;
};

struct Fixture {
    std::string id;
    RingPtr ring;
    RingMap twist;
    std::string description;
    std::vector<ExpectedAssertion> expected;
    std::optional<FixturePair> pair;
    std::optional<Elem> moved_idempotent;  // an e with twist(e) != e

    Fixture(std::string id_, RingPtr ring_, RingMap twist_,
            std::string description_)
        : id(std::move(id_)),
          ring(std::move(ring_)),
          twist(std::move(twist_)),
          description(std::move(description_)) {}
};

/// The built-in corpus; built once, fully validated.
const std::vector<Fixture>& fixture_catalog();

/// Throws std::out_of_range for unknown ids.
const Fixture& paper_fixture(const std::string& id);

}  // namespace ringatlas

#endif
