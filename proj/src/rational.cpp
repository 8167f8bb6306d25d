#include "hh/rational.hpp"

#include <stdexcept>

namespace hh {

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - i + 1;
        b /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return b;
}

Integer int_pow(const Integer& base, unsigned exp) {
    Integer r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::string rational_str(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

Rational rational_parse(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_parse: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational_parse: not a rational: '" + text + "'");
    }
}

} // namespace hh
