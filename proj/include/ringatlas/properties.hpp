#ifndef RINGATLAS_PROPERTIES_HPP
#define RINGATLAS_PROPERTIES_HPP

#include "ringatlas/report.hpp"

namespace ringatlas {

struct ScanOptions {
    int deg_f = 2;
    int deg_g = 2;
    SearchStrategy strategy = SearchStrategy::dfs;
    std::uint64_t budget = 100'000'000;
};

// Polynomial-quantified predicates. Each scans the zero-product pairs of
// R[x;a] up to the degree bounds and reports the first violation in
// enumeration order, or holds-up-to-bound (holds-up-to-budget if the budget
// ran out first).

/// f*g = 0 in R[x] forces every a_i b_j = 0.
PropertyReport is_armendariz(const RingPtr& r, const ScanOptions& opt = {});

/// f*g = 0 in R[x;a] forces every a_i a^i(b_j) = 0.
PropertyReport is_skew_armendariz(const RingMap& twist,
                                  const ScanOptions& opt = {});

/// f*g = 0 in R[x] forces every a_i b_j central.
PropertyReport is_central_armendariz(const RingPtr& r,
                                     const ScanOptions& opt = {});

/// f*g = 0 in R[x;a] forces every a_i a^i(b_j) central.
PropertyReport is_central_skew_armendariz(const RingMap& twist,
                                          const ScanOptions& opt = {});

/// The same test one ring up: p*q = 0 in R[x][y;a] (x-degree <= d_x,
/// y-degree <= d_y) must force every f_i a^i(g_j) central in R[x], i.e.
/// every coefficient of the product central in R.
PropertyReport is_central_skew_armendariz_over_polyring(
    const RingMap& twist, int d_x, int d_y, const ScanOptions& opt = {});

// Element-level predicates (exhaustive; verdicts are holds-exhaustively or
// fails with a witness).

PropertyReport is_reduced(const RingPtr& r);
PropertyReport is_abelian(const RingPtr& r);
PropertyReport is_prime(const RingPtr& r);
PropertyReport is_semiprime(const RingPtr& r);
PropertyReport is_right_pp(const RingPtr& r);
PropertyReport is_baer(const RingPtr& r);

PropertyReport fixes_idempotents(const RingMap& twist);
PropertyReport is_rigid(const RingMap& twist);
PropertyReport is_compatible(const RingMap& twist);

/// Lookup by the CLI property names ("central-skew-armendariz", ...).
/// Polynomial predicates use opt; element predicates ignore it.
PropertyReport check_property(const std::string& name, const RingPtr& r,
                              const RingMap& twist, const ScanOptions& opt);
const std::vector<std::string>& property_names();

}  // namespace ringatlas

#endif
