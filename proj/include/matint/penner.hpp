#pragma once

#include <matint/npoly.hpp>
#include <matint/rational.hpp>
#include <matint/series.hpp>

namespace matint::penner {

/// Bernoulli number b_r from x/(e^x - 1) = sum b_r x^r / r!, exact.
Rational bernoulli(int r);

/// zeta(1 - 2g) = -b_{2g} / (2g) for g >= 1; g = 0 hits the pole and throws.
Rational zeta_neg(int g);

/// Closed-form coefficient C(g, s) with 2 - 2g - s < 0:
/// the signed automorphism-weighted count of connected ribbon graphs of type
/// (g, s). For g >= 1 this is -(2g+s-3)!(2g)(2g-1)/((2g)! s!) * zeta(1-2g);
/// for g = 0 it is -1/(s(s-1)(s-2)).
Rational penner_coefficient(int g, int s);

/// Bernoulli polynomial phi_r(x) = sum_{q=0}^{r-1} C(r,q) b_q x^{r-q},
/// in the symbol n. Satisfies sum_{i=1}^{n-1} i^r = phi_{r+1}(n)/(r+1).
NPoly bernoulli_phi(int r);

/// sum_{i=0}^{n-1} (n-i) i^r as a polynomial in n, r >= 1:
/// n*phi_{r+1}(n)/(r+1) - phi_{r+2}(n)/(r+2).
NPoly weighted_power_sum(int r);

/// The free energy assembled from the closed-form coefficients:
/// sum_{g,s} C(g,s) n^s (-z)^{2g+s-2}, kept to z^trunc_z.
WeightedSeries<NPoly> penner_free_energy(int trunc_z);

/// The same series derived along the analytic chain: the Stirling tail
/// sum_r b_{2r}/(2r(2r-1)) n z^{2r-1} plus sum_r ((-1)^{r-1}/r) S_r(n) z^r
/// with S_r the weighted power sum above. Log and constant terms never enter.
WeightedSeries<NPoly> analytic_free_energy(int trunc_z);

struct PennerCheck {
    int g = 0;
    int s = 0;
    Rational graph_sum;
    Rational closed_form;
    bool match = false;
};

/// Exact comparison of the ribbon enumeration against the closed form.
PennerCheck verify_penner_identity(int g, int s, int budget_half_edges = 14,
                                   bool parallel = true);

}  // namespace matint::penner
