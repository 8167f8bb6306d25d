#ifndef HH_SERIES_HPP
#define HH_SERIES_HPP

#include "hh/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hh {

/*
  Truncated formal power series in one variable u with exact rational
  coefficients. A series of order N stores exactly the coefficients of
  u^0..u^N; every operation is exact, and mixing orders is an error rather
  than a silent truncation (use truncate() to lower the order explicitly).

  Values are immutable after construction; all operations are pure functions
  and safe to call concurrently.
*/
class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    // Takes ownership of exactly order+1 coefficients, coeffs[k] ~ u^k.
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    // c * u^k as a series of the given order.
    static TruncatedSeries monomial(const Rational& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of u^k; k > order is an out-of-range error.
    const Rational& coeff(std::size_t k) const;
    // k! * coeff(k): the value H with coeff = H * u^k / k! conventions.
    Rational normalized_coeff(std::size_t k) const;

    // Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<std::size_t> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    // Exact text form, e.g. "1/2 + u^2/8 - 3*u^4/8"; "0" for the zero series.
    std::string str() const;

    // Equal iff orders agree and all coefficients agree exactly.
    bool operator==(const TruncatedSeries& rhs) const = default;

private:
    std::vector<Rational> coeffs_;
};

// Coefficient-wise sum/difference; operands must have equal order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy product truncated at the common order; operands must match.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Exact quotient q with q*b == a. Requires valuation(a) >= valuation(b);
// the common valuation v is cancelled and the result has order N - v,
// which is all the quotient coefficients the inputs determine.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);
TruncatedSeries pow_int(const TruncatedSeries& a, unsigned k);

// Formal exponential via the derivative recurrence (O(N^2) coefficient ops).
// Requires zero constant term.
TruncatedSeries exp(const TruncatedSeries& a);
// Formal logarithm; requires constant term 1. exp(log(a)) == a up to order N.
TruncatedSeries log(const TruncatedSeries& a);

// Taylor series of sin(q*u) up to the given order.
TruncatedSeries sin_scaled(const Rational& q, std::size_t order);

// Copy of a at the (not larger) order new_order.
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t new_order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }

} // namespace hh

#endif
