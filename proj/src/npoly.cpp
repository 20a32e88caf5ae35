#include <matint/npoly.hpp>

#include <sstream>

namespace matint {

void NPoly::set(int exponent, const Rational& c) {
    if (c == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

void NPoly::add_term(int exponent, const Rational& c) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(exponent, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

NPoly& NPoly::operator+=(const NPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

NPoly& NPoly::operator*=(const NPoly& o) {
    NPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    terms_.swap(out.terms_);
    return *this;
}

NPoly& NPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

NPoly& NPoly::operator/=(const Rational& c) {
    if (c == 0) throw std::invalid_argument("NPoly: division by zero");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
}

Rational NPoly::eval(const Rational& n) const {
    Rational acc = 0;
    // Horner over the sparse support, descending.
    int prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0)
            for (int i = it->first; i < prev; ++i) acc *= n;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (int i = 0; i < prev; ++i) acc *= n;
    return acc;
}

std::string NPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
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
        const BigInt num = numerator(c);
        const BigInt den = denominator(c);
        if (e == 0) {
            os << rat_str(c);
            continue;
        }
        if (num != 1) os << num.str() << '*';
        os << 'n';
        if (e != 1) os << '^' << e;
        if (den != 1) os << '/' << den.str();
    }
    return os.str();
}

}  // namespace matint
