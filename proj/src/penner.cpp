#include <matint/penner.hpp>

#include <vector>

#include <matint/ribbon.hpp>

namespace matint::penner {

Rational bernoulli(int r) {
    if (r < 0) throw std::invalid_argument("bernoulli: negative index");
    // sum_{k=0}^{m} C(m+1, k) b_k = 0 for m >= 1, from the generating function
    static std::vector<Rational> table{Rational(1)};
    for (int m = static_cast<int>(table.size()); m <= r; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial_big(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) *
                   table[k];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[r];
}

Rational zeta_neg(int g) {
    if (g < 1) throw std::invalid_argument("zeta_neg: pole at g = 0");
    return -bernoulli(2 * g) / Rational(2 * g);
}

Rational penner_coefficient(int g, int s) {
    if (g < 0 || s < 1 || 2 - 2 * g - s >= 0)
        throw std::invalid_argument("penner_coefficient: need g >= 0, s >= 1, 2-2g-s < 0");
    if (g == 0) {
        // the unified formula degenerates to a zeta(1) limit here; the g = 0
        // family has its own closed form
        return Rational(-1, BigInt(s) * (s - 1) * (s - 2));
    }
    const Rational front(BigInt(factorial_big(2 * g + s - 3)) * (2 * g) * (2 * g - 1),
                         factorial_big(2 * g) * factorial_big(s));
    return -front * zeta_neg(g);
}

NPoly bernoulli_phi(int r) {
    if (r < 1) throw std::invalid_argument("bernoulli_phi: need r >= 1");
    NPoly out;
    for (int q = 0; q <= r - 1; ++q)
        out.add_term(r - q, Rational(binomial_big(static_cast<unsigned>(r),
                                                  static_cast<unsigned>(q))) *
                                bernoulli(q));
    return out;
}

NPoly weighted_power_sum(int r) {
    if (r < 1) throw std::invalid_argument("weighted_power_sum: need r >= 1");
    NPoly first = NPoly::monomial(1, Rational(1)) * bernoulli_phi(r + 1);
    first /= Rational(r + 1);
    NPoly second = bernoulli_phi(r + 2);
    second /= Rational(r + 2);
    return first - second;
}

namespace {

std::shared_ptr<const VariableSpec> z_variable() { return VariableSpec::make({"z"}, {1}); }

}  // namespace

WeightedSeries<NPoly> penner_free_energy(int trunc_z) {
    if (trunc_z < 1) throw std::invalid_argument("penner_free_energy: need trunc_z >= 1");
    WeightedSeries<NPoly> out(z_variable(), trunc_z);
    for (int d = 1; d <= trunc_z; ++d) {
        // all (g, s) with 2g + s - 2 = d
        NPoly coeff;
        for (int g = 0; 2 * g <= d + 1; ++g) {
            const int s = d + 2 - 2 * g;
            if (s < 1) continue;
            Rational c = penner_coefficient(g, s);
            if (d % 2) c = -c;  // (-z)^d
            coeff.add_term(s, c);
        }
        out.add_term(Mono{d}, coeff);
    }
    return out;
}

WeightedSeries<NPoly> analytic_free_energy(int trunc_z) {
    if (trunc_z < 1) throw std::invalid_argument("analytic_free_energy: need trunc_z >= 1");
    WeightedSeries<NPoly> out(z_variable(), trunc_z);
    // Stirling tail: sum_r b_{2r}/(2r(2r-1)) n z^{2r-1}
    for (int r = 1; 2 * r - 1 <= trunc_z; ++r) {
        NPoly c = NPoly::monomial(1, bernoulli(2 * r) / Rational(2 * r * (2 * r - 1)));
        out.add_term(Mono{2 * r - 1}, c);
    }
    // eigenvalue-product tail: sum_r ((-1)^{r-1}/r) * sum_{i<n} (n-i) i^r * z^r
    for (int r = 1; r <= trunc_z; ++r) {
        NPoly c = weighted_power_sum(r);
        c /= Rational(r);
        if (r % 2 == 0) c *= Rational(-1);
        out.add_term(Mono{r}, c);
    }
    return out;
}

PennerCheck verify_penner_identity(int g, int s, int budget_half_edges, bool parallel) {
    PennerCheck check;
    check.g = g;
    check.s = s;
    check.closed_form = penner_coefficient(g, s);
    check.graph_sum = ribbon::connected_sum_gs(g, s, budget_half_edges, parallel);
    check.match = check.graph_sum == check.closed_form;
    return check;
}

}  // namespace matint::penner
