#pragma once

#include <functional>

#include <matint/matching.hpp>
#include <matint/npoly.hpp>
#include <matint/profile.hpp>
#include <matint/series.hpp>

namespace matint::wick {

/// Gaussian moment of order r: (r-1)!! for even r, 0 for odd r.
Rational gaussian_moment(long r);

/// Streams every pairing scheme of the profile's dots exactly once,
/// smallest-unmatched-first. Returns the number of schemes visited.
std::uint64_t enumerate_matchings(const DegreeProfile& profile,
                                  const std::function<void(const PairingScheme&)>& visit);

/// (2E-1)!! / prod_j (j!)^{v_j} v_j!  -- the scalar model's weight of a
/// profile, which equals the automorphism-weighted count of all graphs with
/// that profile. Zero for odd half-edge count.
Rational scalar_coefficient(const DegreeProfile& profile);

/// Scalar-model expansion over t_1..t_{2m} with vertex weight t_j/j!.
WeightedSeries<Rational> scalar_expansion(int max_degree, int trunc);

/// log of the scalar expansion: the connected-graph generating series.
WeightedSeries<Rational> connected_scalar_expansion(int max_degree, int trunc);

/// Indexed pairing sum of a single profile: for every matching, trace the
/// index-identification chains of the paired derivatives and count the closed
/// loops; each loop contributes a factor n. Normalized by prod_j j^{v_j} v_j!.
NPoly matrix_bruteforce_sum(const DegreeProfile& profile);

/// Matrix-model expansion over t_3..t_{2m} with vertex weight t_j/j,
/// coefficients in Q[n].
WeightedSeries<NPoly> matrix_expansion(int max_degree, int trunc);

/// Variable specs shared by expansions (t_j has weight j).
std::shared_ptr<const VariableSpec> t_variables(int min_degree, int max_degree);

}  // namespace matint::wick
