#ifndef HH_RATIONAL_HPP
#define HH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hh {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant every
// coefficient in this project relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer int_pow(const Integer& base, unsigned exp);

// "p/q", or just "p" when the denominator is 1. Never decimals.
std::string rational_str(const Rational& x);

// Inverse of rational_str; also accepts plain integers.
Rational rational_parse(const std::string& text);

} // namespace hh

#endif
