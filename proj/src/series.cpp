#include "hh/series.hpp"

#include <stdexcept>

namespace hh {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw std::invalid_argument("TruncatedSeries: expected " + std::to_string(order + 1) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t k, std::size_t order) {
    if (k > order) throw std::out_of_range("monomial: exponent exceeds order");
    TruncatedSeries s(order);
    s.coeffs_[k] = c;
    return s;
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("coeff: index " + std::to_string(k) + " exceeds order " +
                                std::to_string(order()));
    }
    return coeffs_[k];
}

Rational TruncatedSeries::normalized_coeff(std::size_t k) const {
    return coeff(k) * Rational(factorial(static_cast<unsigned>(k)));
}

std::optional<std::size_t> TruncatedSeries::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return std::nullopt;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Integer p = abs(numerator(c));
        const Integer q = denominator(c);
        std::string term;
        if (k == 0) {
            term = p.str();
            if (q != 1) term += '/' + q.str();
        } else {
            std::string upow = (k == 1) ? "u" : "u^" + std::to_string(k);
            term = (p == 1) ? upow : p.str() + '*' + upow;
            if (q != 1) term += '/' + q.str();
        }
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += term;
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "add");
    std::vector<Rational> c(a.coeffs());
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] += b.coeffs()[k];
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<Rational> c(a.coeffs());
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] -= b.coeffs()[k];
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs()[j] == 0) continue;
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return TruncatedSeries(n, std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "div");
    const auto vb = b.valuation();
    if (!vb) throw std::domain_error("div: division by the zero series");
    const std::size_t v = *vb;
    const std::size_t n = a.order();
    const auto va = a.valuation();
    if (!va) return TruncatedSeries::zero(n - v);
    if (*va < v) {
        throw std::domain_error("div: non-polynomial quotient (valuation " +
                                std::to_string(*va) + " < " + std::to_string(v) + ")");
    }
    // Strip u^v from both; b0 is then a unit.
    const std::size_t m = n - v;
    std::vector<Rational> q(m + 1);
    const Rational& b0 = b.coeffs()[v];
    for (std::size_t k = 0; k <= m; ++k) {
        Rational acc = a.coeffs()[v + k];
        for (std::size_t j = 0; j < k; ++j) acc -= q[j] * b.coeffs()[v + (k - j)];
        q[k] = acc / b0;
    }
    return TruncatedSeries(m, std::move(q));
}

TruncatedSeries negate(const TruncatedSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = -x;
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries pow_int(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries r = TruncatedSeries::one(a.order());
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

TruncatedSeries exp(const TruncatedSeries& a) {
    if (a.coeff(0) != 0) throw std::domain_error("exp: nonzero constant term");
    const std::size_t n = a.order();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    // e' = a' e  =>  k e_k = sum_{m=1..k} m a_m e_{k-m}
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t m = 1; m <= k; ++m)
            acc += Rational(Integer(m)) * a.coeffs()[m] * e[k - m];
        e[k] = acc / Rational(Integer(k));
    }
    return TruncatedSeries(n, std::move(e));
}

TruncatedSeries log(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw std::domain_error("log: constant term is not 1");
    const std::size_t n = a.order();
    std::vector<Rational> l(n + 1);
    // k a_k = sum_{m=1..k} m l_m a_{k-m} with a_0 = 1
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t m = 1; m < k; ++m)
            acc += Rational(Integer(m)) * l[m] * a.coeffs()[k - m];
        l[k] = a.coeffs()[k] - acc / Rational(Integer(k));
    }
    return TruncatedSeries(n, std::move(l));
}

TruncatedSeries sin_scaled(const Rational& q, std::size_t order) {
    std::vector<Rational> c(order + 1);
    Rational qk = q; // q^k / k! with alternating sign, odd k only
    for (std::size_t k = 1; k <= order; k += 2) {
        if (k > 1) {
            qk *= q * q;
            qk /= Rational(Integer(k) * Integer(k - 1));
            qk = -qk;
        }
        c[k] = qk;
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t new_order) {
    if (new_order > a.order()) {
        throw std::invalid_argument("truncate: cannot extend order " + std::to_string(a.order()) +
                                    " to " + std::to_string(new_order));
    }
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + new_order + 1);
    return TruncatedSeries(new_order, std::move(c));
}

} // namespace hh
