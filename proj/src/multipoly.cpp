#include <matint/multipoly.hpp>

#include <sstream>
#include <stdexcept>

namespace matint {

MultiPoly MultiPoly::variable(int nvars, int idx) {
    if (idx < 0 || idx >= nvars) throw std::invalid_argument("MultiPoly::variable: bad index");
    Mono m(nvars, 0);
    m[idx] = 1;
    return monomial(nvars, std::move(m), Rational(1));
}

MultiPoly MultiPoly::monomial(int nvars, Mono m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars)
        throw std::invalid_argument("MultiPoly::monomial: arity mismatch");
    MultiPoly p(nvars);
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Mono(nvars_, 0);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Mono& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out(nvars_);
    Mono m(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            out.add_term(m, c1 * c2);
        }
    terms_.swap(out.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c == 0) throw std::invalid_argument("MultiPoly: division by zero");
    for (auto& [m, v] : terms_) v /= c;
    return *this;
}

Rational MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

MultiPoly::Mono MultiPoly::common_monomial() const {
    Mono m(nvars_, 0);
    if (terms_.empty()) return m;
    m = terms_.begin()->first;
    for (const auto& [mono, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], mono[i]);
    return m;
}

void MultiPoly::divide_by_monomial(const Mono& m) {
    std::map<Mono, Rational> out;
    for (const auto& [mono, c] : terms_) {
        Mono d = mono;
        for (int i = 0; i < nvars_; ++i) {
            d[i] -= m[i];
            if (d[i] < 0) throw std::invalid_argument("MultiPoly: monomial does not divide");
        }
        out.emplace(std::move(d), c);
    }
    terms_.swap(out);
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval: arity mismatch");
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const Mono& m = it->first;
        bool has_vars = false;
        std::ostringstream vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (has_vars) vars << '*';
            vars << 'a' << (i + 1);
            if (m[i] > 1) vars << '^' << m[i];
            has_vars = true;
        }
        if (!has_vars) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << '*';
            os << vars.str();
        }
    }
    return os.str();
}

// -- PolyFrac ----------------------------------------------------------------

PolyFrac::PolyFrac(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) throw std::invalid_argument("PolyFrac: arity mismatch");
    if (den_.is_zero()) throw std::invalid_argument("PolyFrac: zero denominator");
    normalize();
}

PolyFrac PolyFrac::from_poly(MultiPoly p) {
    const int nv = p.nvars();
    return PolyFrac(std::move(p), MultiPoly(nv, Rational(1)));
}

void PolyFrac::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(den_.nvars(), Rational(1));
        return;
    }
    // cancel the common monomial factor of numerator and denominator
    auto mn = num_.common_monomial();
    const auto md = den_.common_monomial();
    for (std::size_t i = 0; i < mn.size(); ++i) mn[i] = std::min(mn[i], md[i]);
    bool nontrivial = false;
    for (int e : mn) nontrivial |= e > 0;
    if (nontrivial) {
        num_.divide_by_monomial(mn);
        den_.divide_by_monomial(mn);
    }
    // scale the denominator's leading coefficient to 1
    const Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
    if (den_.is_constant()) return;
    // collapse fractions that are secretly constants: num == q * den
    if (num_.terms().size() == den_.terms().size()) {
        const Rational q = num_.leading_coefficient();  // den lead is 1 now
        MultiPoly scaled = den_;
        scaled *= q;
        if (scaled == num_) {
            num_ = MultiPoly(num_.nvars(), q);
            den_ = MultiPoly(den_.nvars(), Rational(1));
        }
    }
}

PolyFrac& PolyFrac::operator+=(const PolyFrac& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

PolyFrac& PolyFrac::operator-=(const PolyFrac& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

PolyFrac& PolyFrac::operator*=(const PolyFrac& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

PolyFrac& PolyFrac::operator/=(const PolyFrac& o) {
    if (o.num_.is_zero()) throw std::invalid_argument("PolyFrac: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational PolyFrac::eval(const std::vector<Rational>& point) const {
    const Rational d = den_.eval(point);
    if (d == 0) throw std::invalid_argument("PolyFrac::eval: denominator vanishes at point");
    return num_.eval(point) / d;
}

std::string PolyFrac::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace matint
