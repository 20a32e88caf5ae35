#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matint {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. cpp_rational keeps the canonical form we rely on
/// everywhere: lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial_big(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

/// m!! for odd m (m = -1 gives 1). The Gaussian moment of order r is (r-1)!!.
inline BigInt odd_double_factorial(long m) {
    if (m < -1 || m % 2 == 0) throw std::invalid_argument("odd_double_factorial: need odd m >= -1");
    BigInt f = 1;
    for (long i = m; i >= 3; i -= 2) f *= i;
    return f;
}

/// "p/q" in lowest terms; "/1" omitted.
inline std::string rat_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

inline Rational rat_parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_parse: malformed rational '" + std::string(s) + "'");
    }
}

}  // namespace matint
