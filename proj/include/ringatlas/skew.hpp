#ifndef RINGATLAS_SKEW_HPP
#define RINGATLAS_SKEW_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ringatlas/map.hpp"
#include "ringatlas/ring.hpp"

namespace ringatlas {

/// Polynomial over a FiniteRing: coeffs[i] is the coefficient of x^i.
/// Normal form has no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<Elem>;

/// Polynomial in an outer variable whose coefficients are Polys in x.
using TowerPoly = std::vector<Poly>;

/// R[x;a] with the commutation rule x*c = a(c)*x, so that
/// (fg)_k = sum over i+j=k of f_i * a^i(g_j). The twist's power tables are
/// precomputed; exponents are reduced through the twist's eventual cycle, so
/// any exponent that occurs at the supported degrees resolves exactly.
class SkewPolyRing {
public:
    explicit SkewPolyRing(RingMap twist, std::size_t max_power = 128);

    const FiniteRing& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_ptr_; }
    const RingMap& twist() const noexcept { return twist_; }
    bool twist_is_identity() const noexcept { return twist_identity_; }

    Elem twist_pow(std::size_t i, Elem a) const { return power_table(i)[a]; }
    const std::vector<Elem>& power_table(std::size_t i) const;

    Poly normalized(Poly f) const;
    bool is_zero(const Poly& f) const;
    int degree(const Poly& f) const;  // -1 for the zero polynomial

    Poly add(const Poly& f, const Poly& g) const;
    Poly neg(const Poly& f) const;
    Poly mul(const Poly& f, const Poly& g) const;

    /// Coefficientwise twist image of f (the extension of a to R[x]).
    Poly twist_poly(const Poly& f) const;

    bool is_idempotent(const Poly& f) const;

    /// Plain (untwisted) product over the coefficient ring; used for the
    /// x-arithmetic of R[x][y;a] and for the identity-twist cross-check.
    Poly plain_mul(const Poly& f, const Poly& g) const;
    Poly plain_add(const Poly& f, const Poly& g) const { return add(f, g); }

private:
    RingPtr ring_ptr_;
    const FiniteRing* ring_;
    RingMap twist_;
    bool twist_identity_;
    std::vector<std::vector<Elem>> powers_;  // powers_[i] = table of twist^i
    std::optional<std::pair<std::size_t, std::size_t>> cycle_;  // (start, len)
};

/// A pair of nonzero polynomials with f*g = 0, plus the full table of
/// coefficient products f_i * a^i(g_j), 0 <= i <= deg f, 0 <= j <= deg g.
struct ZeroPair {
    Poly f, g;
    std::vector<Elem> products;  // row-major, width deg(g)+1
    std::size_t width = 0;

    Elem product(std::size_t i, std::size_t j) const {
        return products[i * width + j];
    }
};

enum class SearchStrategy { exhaustive, dfs };
enum class ScanOutcome { exhausted, budget_hit, stopped };

struct ScanStats {
    ScanOutcome outcome = ScanOutcome::exhausted;
    std::uint64_t visited = 0;
};

/// Yields every ZeroPair with nonzero f, g and deg f <= d_f, deg g <= d_g,
/// each exactly once, ordered by (f, g) with coefficient vectors compared
/// index-0 first. Both strategies produce the same stream; dfs prunes the
/// g-space on the first nonzero product coefficient (coefficient k of f*g
/// depends only on g_0..g_k once f is fixed).
///
/// `budget` caps enumeration work: complete candidate pairs for exhaustive,
/// coefficient assignments for dfs. The sink returns false to stop early.
ScanStats enumerate_zero_pairs(const SkewPolyRing& rx, int d_f, int d_g,
                               SearchStrategy strategy, std::uint64_t budget,
                               const std::function<bool(const ZeroPair&)>& sink);

/// All e with e*e = e and deg e <= d, in enumeration order (includes the
/// zero and one constants).
std::vector<Poly> idempotent_polynomials(const SkewPolyRing& rx, int d);

struct ConstantAnnihilator {
    std::vector<Poly> polys;  // all g, deg <= d, with (constant a) * g = 0
    /// Set when the solution set equals { e*h : deg h <= d } for a constant
    /// idempotent e (smallest such e).
    std::optional<Elem> generator_idempotent;
};

ConstantAnnihilator constant_right_annihilator(const SkewPolyRing& rx, Elem a,
                                               int d);

/// parts[i](x^t) * x^{i(tk+1)} summed over i: packs a list of polynomials
/// into one, with slots kept disjoint. Requires k >= sum of part degrees.
Poly pack_polynomials(const FiniteRing& r, const std::vector<Poly>& parts,
                      std::uint64_t t, std::uint64_t k);

/// Zero pairs of R[x][y;a] with x-degrees <= d_x and y-degrees <= d_y.
/// products holds the x-polynomials p_i * a^i(q_j).
struct TowerZeroPair {
    TowerPoly p, q;
    std::vector<Poly> products;  // row-major, width = q.size()
    std::size_t width = 0;

    const Poly& product(std::size_t i, std::size_t j) const {
        return products[i * width + j];
    }
};

ScanStats enumerate_tower_zero_pairs(
    const SkewPolyRing& rx, int d_x, int d_y, SearchStrategy strategy,
    std::uint64_t budget,
    const std::function<bool(const TowerZeroPair&)>& sink);

}  // namespace ringatlas

#endif
