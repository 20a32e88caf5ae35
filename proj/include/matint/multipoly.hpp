#pragma once

#include <map>
#include <string>
#include <vector>

#include <matint/rational.hpp>

namespace matint {

/// Sparse polynomial over Q in variables a_1..a_nvars (exact arithmetic).
class MultiPoly {
public:
    using Mono = std::vector<int>;

    explicit MultiPoly(int nvars, const Rational& c = Rational(0)) : nvars_(nvars) {
        if (c != 0) terms_[Mono(nvars, 0)] = c;
    }
    static MultiPoly variable(int nvars, int idx);
    static MultiPoly monomial(int nvars, Mono m, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly(a.nvars_) - a; }

    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Leading coefficient in the lex order (largest monomial).
    Rational leading_coefficient() const;

    /// Componentwise minimum exponent over the support (zeros if empty).
    Mono common_monomial() const;
    void divide_by_monomial(const Mono& m);

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;  // "3/2*a1^2*a3 + ..."

private:
    void add_term(const Mono& m, const Rational& c);
    int nvars_;
    std::map<Mono, Rational> terms_;
};

/// Fraction of MultiPoly with lightweight normalization: common monomial
/// factors are cancelled, the denominator's leading coefficient is scaled to
/// 1, and fractions proportional to a constant collapse to one. No general
/// polynomial gcd is attempted.
class PolyFrac {
public:
    explicit PolyFrac(int nvars = 0, const Rational& c = Rational(0))
        : num_(nvars, c), den_(nvars, Rational(1)) {}
    PolyFrac(MultiPoly num, MultiPoly den);
    static PolyFrac from_poly(MultiPoly p);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    PolyFrac& operator+=(const PolyFrac& o);
    PolyFrac& operator-=(const PolyFrac& o);
    PolyFrac& operator*=(const PolyFrac& o);
    PolyFrac& operator/=(const PolyFrac& o);

    friend PolyFrac operator+(PolyFrac a, const PolyFrac& b) { return a += b; }
    friend PolyFrac operator-(PolyFrac a, const PolyFrac& b) { return a -= b; }
    friend PolyFrac operator*(PolyFrac a, const PolyFrac& b) { return a *= b; }
    friend PolyFrac operator/(PolyFrac a, const PolyFrac& b) { return a /= b; }
    friend PolyFrac operator-(const PolyFrac& a) {
        PolyFrac r = a;
        r.num_ *= Rational(-1);
        return r;
    }

    /// Exact equality by cross-multiplication.
    bool operator==(const PolyFrac& o) const { return num_ * o.den_ == o.num_ * den_; }

    Rational eval(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    void normalize();
    MultiPoly num_;
    MultiPoly den_;
};

inline bool is_zero(const PolyFrac& f) { return f.is_zero(); }

}  // namespace matint
