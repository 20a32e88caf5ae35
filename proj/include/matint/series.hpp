#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <matint/npoly.hpp>
#include <matint/rational.hpp>

namespace matint {

/// Ordered list of formal variables with positive integer weights.
/// Truncation of a series is by weighted total degree.
struct VariableSpec {
    std::vector<std::string> names;
    std::vector<int> weights;

    std::size_t size() const { return names.size(); }

    bool operator==(const VariableSpec& o) const = default;

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }

    static std::shared_ptr<const VariableSpec> make(std::vector<std::string> names,
                                                    std::vector<int> weights) {
        if (names.size() != weights.size())
            throw std::invalid_argument("VariableSpec: names/weights size mismatch");
        for (int w : weights)
            if (w < 1) throw std::invalid_argument("VariableSpec: weights must be >= 1");
        auto vs = std::make_shared<VariableSpec>();
        vs->names = std::move(names);
        vs->weights = std::move(weights);
        return vs;
    }
};

using Mono = std::vector<int>;

inline long weighted_degree(const Mono& m, const VariableSpec& vs) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * vs.weights[i];
    return d;
}

/// Graded lexicographic order: weighted degree first, then exponent-vector lex.
struct GradedLexLess {
    std::shared_ptr<const VariableSpec> vs;
    bool operator()(const Mono& a, const Mono& b) const {
        const long da = weighted_degree(a, *vs);
        const long db = weighted_degree(b, *vs);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Truncated formal power series over coefficient ring C (Rational or NPoly).
/// Invariants: every stored monomial has weighted degree <= trunc; no zeros stored.
/// Immutable in practice: all mutation happens while a value is being built.
template <class C>
class WeightedSeries {
public:
    using TermMap = std::map<Mono, C, GradedLexLess>;

    WeightedSeries(std::shared_ptr<const VariableSpec> vars, int trunc)
        : vars_(std::move(vars)), trunc_(trunc), terms_(GradedLexLess{vars_}) {
        if (trunc_ < 0) throw std::invalid_argument("WeightedSeries: negative trunc");
    }

    static WeightedSeries constant(std::shared_ptr<const VariableSpec> vars, int trunc, C c) {
        WeightedSeries s(std::move(vars), trunc);
        s.add_term(Mono(s.vars_->size(), 0), std::move(c));
        return s;
    }

    static WeightedSeries variable(std::shared_ptr<const VariableSpec> vars, int trunc, int idx) {
        WeightedSeries s(std::move(vars), trunc);
        if (idx < 0 || idx >= static_cast<int>(s.vars_->size()))
            throw std::invalid_argument("WeightedSeries::variable: index out of range");
        Mono m(s.vars_->size(), 0);
        m[idx] = 1;
        s.add_term(std::move(m), C(1));
        return s;
    }

    const VariableSpec& vars() const { return *vars_; }
    std::shared_ptr<const VariableSpec> vars_ptr() const { return vars_; }
    int trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Mono m, const C& c) {
        if (m.size() != vars_->size())
            throw std::invalid_argument("WeightedSeries::add_term: arity mismatch");
        if (matint::is_zero(c)) return;
        if (weighted_degree(m, *vars_) > trunc_) return;
        auto [it, inserted] = terms_.emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (matint::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Mono(vars_->size(), 0)); }

    /// Smallest weighted degree of a nonzero term; trunc+1 when the series is 0.
    long min_weight() const {
        if (terms_.empty()) return trunc_ + 1;
        return weighted_degree(terms_.begin()->first, *vars_);
    }

    bool operator==(const WeightedSeries& o) const {
        return *vars_ == *o.vars_ && trunc_ == o.trunc_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }

private:
    std::shared_ptr<const VariableSpec> vars_;
    int trunc_;
    TermMap terms_;
};

namespace detail {
template <class C>
void require_same_vars(const WeightedSeries<C>& a, const WeightedSeries<C>& b) {
    if (!(a.vars() == b.vars()))
        throw std::invalid_argument("series: mismatched VariableSpec");
}
}  // namespace detail

template <class C>
WeightedSeries<C> truncate_to(const WeightedSeries<C>& a, int trunc) {
    WeightedSeries<C> out(a.vars_ptr(), trunc);
    for (const auto& [m, c] : a.terms()) out.add_term(m, c);
    return out;
}

template <class C>
WeightedSeries<C> series_add(const WeightedSeries<C>& a, const WeightedSeries<C>& b) {
    detail::require_same_vars(a, b);
    WeightedSeries<C> out(a.vars_ptr(), std::min(a.trunc(), b.trunc()));
    for (const auto& [m, c] : a.terms()) out.add_term(m, c);
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

template <class C>
WeightedSeries<C> series_neg(const WeightedSeries<C>& a) {
    WeightedSeries<C> out(a.vars_ptr(), a.trunc());
    for (const auto& [m, c] : a.terms()) out.add_term(m, C(0) - c);
    return out;
}

template <class C>
WeightedSeries<C> series_sub(const WeightedSeries<C>& a, const WeightedSeries<C>& b) {
    return series_add(a, series_neg(b));
}

template <class C>
WeightedSeries<C> series_mul(const WeightedSeries<C>& a, const WeightedSeries<C>& b) {
    detail::require_same_vars(a, b);
    const int trunc = std::min(a.trunc(), b.trunc());
    WeightedSeries<C> out(a.vars_ptr(), trunc);
    const auto& vs = a.vars();
    for (const auto& [ma, ca] : a.terms()) {
        const long da = weighted_degree(ma, vs);
        if (da > trunc) break;  // graded order
        for (const auto& [mb, cb] : b.terms()) {
            if (da + weighted_degree(mb, vs) > trunc) break;
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

template <class C>
WeightedSeries<C> series_scale(const WeightedSeries<C>& a, const C& c) {
    WeightedSeries<C> out(a.vars_ptr(), a.trunc());
    for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
    return out;
}

/// exp(a) = sum a^k/k!; requires zero constant term so the sum is finite.
template <class C>
WeightedSeries<C> series_exp(const WeightedSeries<C>& a) {
    if (!matint::is_zero(a.constant_term()))
        throw std::invalid_argument("series_exp: nonzero constant term");
    WeightedSeries<C> result =
        WeightedSeries<C>::constant(a.vars_ptr(), a.trunc(), C(1));
    WeightedSeries<C> term = result;
    for (int k = 1; ; ++k) {
        term = series_mul(term, a);
        if (term.is_zero()) break;
        WeightedSeries<C> scaled(a.vars_ptr(), a.trunc());
        for (const auto& [m, c] : term.terms()) {
            C v = c;
            v /= Rational(k);
            scaled.add_term(m, v);
        }
        term = std::move(scaled);
        result = series_add(result, term);
    }
    return result;
}

/// log(a) for constant term 1, as the inverse power series of exp:
/// log(1-x) = -sum x^k/k applied to x = 1-a.
template <class C>
WeightedSeries<C> series_log(const WeightedSeries<C>& a) {
    if (!(a.constant_term() == C(1)))
        throw std::invalid_argument("series_log: constant term is not 1");
    WeightedSeries<C> x =
        series_sub(WeightedSeries<C>::constant(a.vars_ptr(), a.trunc(), C(1)), a);
    WeightedSeries<C> result(a.vars_ptr(), a.trunc());
    WeightedSeries<C> pow = WeightedSeries<C>::constant(a.vars_ptr(), a.trunc(), C(1));
    for (int k = 1; ; ++k) {
        pow = series_mul(pow, x);
        if (pow.is_zero()) break;
        WeightedSeries<C> scaled(a.vars_ptr(), a.trunc());
        for (const auto& [m, c] : pow.terms()) {
            C v = C(0) - c;
            v /= Rational(k);
            scaled.add_term(m, v);
        }
        result = series_add(result, scaled);
    }
    return result;
}

template <class C>
WeightedSeries<C> series_derive(const WeightedSeries<C>& a, int var_idx) {
    if (var_idx < 0 || var_idx >= static_cast<int>(a.vars().size()))
        throw std::invalid_argument("series_derive: unknown variable");
    const int w = a.vars().weights[var_idx];
    WeightedSeries<C> out(a.vars_ptr(), std::max(0, a.trunc() - w));
    for (const auto& [m, c] : a.terms()) {
        if (m[var_idx] == 0) continue;
        Mono d = m;
        d[var_idx] -= 1;
        C v = c;
        v *= Rational(m[var_idx]);
        out.add_term(std::move(d), v);
    }
    return out;
}

template <class C>
WeightedSeries<C> series_derive(const WeightedSeries<C>& a, const std::string& name) {
    const int idx = a.vars().index_of(name);
    if (idx < 0) throw std::invalid_argument("series_derive: unknown variable " + name);
    return series_derive(a, idx);
}

/// Multiplicative inverse for field coefficients; constant term must be nonzero.
inline WeightedSeries<Rational> series_inverse(const WeightedSeries<Rational>& a) {
    const Rational c0 = a.constant_term();
    if (c0 == 0) throw std::invalid_argument("series_inverse: zero constant term");
    // a = c0 (1 + x), 1/a = (1/c0) sum (-x)^k
    WeightedSeries<Rational> x(a.vars_ptr(), a.trunc());
    for (const auto& [m, c] : a.terms()) {
        if (weighted_degree(m, a.vars()) == 0) continue;
        x.add_term(m, c / c0);
    }
    WeightedSeries<Rational> result =
        WeightedSeries<Rational>::constant(a.vars_ptr(), a.trunc(), Rational(1));
    WeightedSeries<Rational> pow = result;
    for (int k = 1; ; ++k) {
        pow = series_mul(pow, x);
        if (pow.is_zero()) break;
        result = (k % 2) ? series_sub(result, pow) : series_add(result, pow);
    }
    return series_scale(result, Rational(1) / c0);
}

/// Substitution t_j -> -(sqrt z)^{j-2} for a series graded by deg t_j = j.
/// Internally every monomial lands on an even power of w = sqrt z; an odd
/// power signals an upstream bug and throws.
template <class C>
WeightedSeries<C> penner_substitute(const WeightedSeries<C>& a, int trunc_z) {
    const auto& vs = a.vars();
    for (int w : vs.weights)
        if (w < 3)
            throw std::invalid_argument("penner_substitute: variables must have weight >= 3");
    auto zvars = VariableSpec::make({"z"}, {1});
    WeightedSeries<C> out(zvars, trunc_z);
    for (const auto& [m, c] : a.terms()) {
        long vcount = 0, wpow = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            vcount += m[i];
            wpow += static_cast<long>(m[i]) * (vs.weights[i] - 2);
        }
        if (wpow % 2 != 0)
            throw std::logic_error("penner_substitute: residual odd power of sqrt z");
        const long zexp = wpow / 2;
        if (zexp > trunc_z) continue;
        C v = c;
        if (vcount % 2) v = C(0) - v;
        out.add_term(Mono{static_cast<int>(zexp)}, v);
    }
    return out;
}

// -- JSON -------------------------------------------------------------------

inline nlohmann::ordered_json coeff_to_json(const Rational& q) { return rat_str(q); }

inline nlohmann::ordered_json coeff_to_json(const NPoly& p) {
    nlohmann::ordered_json np = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) np[std::to_string(e)] = rat_str(c);
    return nlohmann::ordered_json{{"n_poly", np}};
}

/// Terms emitted in graded-lex order, so serialization is deterministic.
template <class C>
nlohmann::ordered_json series_to_json(const WeightedSeries<C>& s) {
    nlohmann::ordered_json j;
    j["vars"] = s.vars().names;
    j["weights"] = s.vars().weights;
    j["trunc"] = s.trunc();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : s.terms())
        terms.push_back({{"exp", m}, {"coeff", coeff_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace matint
