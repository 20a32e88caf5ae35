#pragma once

#include <map>
#include <string>

#include <matint/rational.hpp>

namespace matint {

/// Polynomial in the matrix-size symbol n over Rational.
/// No explicit zero coefficients are stored.
class NPoly {
public:
    NPoly() = default;
    NPoly(int c) { set(0, Rational(c)); }  // NOLINT: implicit by design, ring constant
    NPoly(const Rational& c) { set(0, c); }

    static NPoly monomial(int exponent, const Rational& c) {
        NPoly p;
        p.set(exponent, c);
        return p;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Rational coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set(int exponent, const Rational& c);
    void add_term(int exponent, const Rational& c);

    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    NPoly& operator*=(const NPoly& o);
    NPoly& operator*=(const Rational& c);
    NPoly& operator/=(const Rational& c);

    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator*(NPoly a, const NPoly& b) { return a *= b; }
    friend NPoly operator*(NPoly a, const Rational& c) { return a *= c; }
    friend NPoly operator-(const NPoly& a) { return NPoly() - a; }

    bool operator==(const NPoly& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& n) const;

    /// e.g. "n^3/2 + n/4", terms in descending exponent.
    std::string str() const;

private:
    std::map<int, Rational> terms_;
};

inline bool is_zero(const NPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace matint
