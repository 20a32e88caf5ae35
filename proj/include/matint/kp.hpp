#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include <matint/rational.hpp>
#include <matint/series.hpp>

namespace matint::kp {

/// Time variables T_1..T_num with weight alpha on T_alpha.
std::shared_ptr<const VariableSpec> T_variables(int num);

/// p_r(T): the weight-r coefficient of exp(sum_alpha T_alpha k^alpha) in k.
/// Zero series for r < 0 or r > trunc.
WeightedSeries<Rational> schur_p(int r, int num_vars, int trunc);

/// Moment table xi[r][j], 0 <= r < rows, 0 <= j < n. The scalar prefactor of
/// the underlying integrals is dropped: tau is only ever used projectively.
struct MomentMatrix {
    int n = 0;
    int rows = 0;
    std::vector<std::vector<Rational>> xi;  // xi[r][j]

    const Rational& at(int r, int j) const { return xi[r][j]; }
};

/// det over Q; plain elimination with pivoting.
Rational rational_det(std::vector<std::vector<Rational>> m);

/// Top n x n minor det(xi_{ij}); nonzero is the big-cell condition.
Rational top_minor_det(const MomentMatrix& m);

/// tau = det( sum_r p_{r-i}(T) xi_{rj} ), an n x n determinant of truncated
/// series. Requires rows >= n + trunc so no kept weight is missing a row,
/// and a nonsingular top minor.
WeightedSeries<Rational> tau_det(const MomentMatrix& m, int trunc);

/// u = d^2/dT1^2 log tau, after normalizing tau to constant term 1.
WeightedSeries<Rational> u_from_tau(const WeightedSeries<Rational>& tau);

/// (3/4) u_22 - d/dT1 ( u_3 - (1/4) u_111 - 3 u u_1 );  zero iff u solves
/// the KP equation to the truncation order.
WeightedSeries<Rational> kp_residual(const WeightedSeries<Rational>& u);

struct SolitonData {
    int n = 0;                              // matrix size
    std::vector<Rational> lambda;           // M distinct spectral points
    std::vector<std::vector<Rational>> c;   // M x n coefficients
    int M() const { return static_cast<int>(lambda.size()); }
};

void validate(const SolitonData& data);

/// Finite soliton tau: sum over n-subsets S of exp(sum_{i in S} eta(T, l_i))
/// times the Vandermonde of the chosen lambda and the matching minor of c.
WeightedSeries<Rational> soliton_tau(const SolitonData& data, int trunc);

/// Moments of the soliton measure: xi_{rj} = sum_i c_{ij} lambda_i^r.
MomentMatrix soliton_moment_matrix(const SolitonData& data, int rows);

/// Gaussian moments xi_{rj} = (r+j-1)!! (0 for odd r+j); top minor is
/// checked nonsingular.
MomentMatrix gaussian_moment_matrix(int n, int rows);

/// Seeded random small-rational moments with nonsingular top minor.
MomentMatrix random_moment_matrix(int n, int rows, std::uint64_t seed);

/// Seeded soliton data with distinct spectral points and nonsingular moments.
SolitonData random_soliton_data(int n, int M, std::uint64_t seed);

/// Same nonzero support and a single constant ratio between coefficients.
bool series_proportional(const WeightedSeries<Rational>& a, const WeightedSeries<Rational>& b);

MomentMatrix moment_matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json moment_matrix_to_json(const MomentMatrix& m);
SolitonData soliton_from_json(const nlohmann::json& j);

}  // namespace matint::kp
