#include "hh/identities.hpp"

#include <stdexcept>

namespace hh {

namespace {

// (-1)^(d-1) d!/d^d, the master-relation normalization.
Rational master_constant(unsigned d) {
    Rational c(factorial(d), int_pow(Integer(d), d));
    return d % 2 ? c : -c;
}

IdentityReport make_report(IdentityKind kind, unsigned d, std::size_t order,
                           TruncatedSeries residual) {
    const bool ok = residual.is_zero();
    return IdentityReport{kind, d, order, residual.order(), std::move(residual), ok};
}

} // namespace

const char* to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::formula_hd: return "formula_hd";
        case IdentityKind::formula_heta: return "formula_heta";
        case IdentityKind::formula_cy_vs_master: return "formula_cy_vs_master";
        case IdentityKind::theorem_rel: return "theorem_rel";
        case IdentityKind::theorem_bpa: return "theorem_bpa";
        case IdentityKind::formula_dlf: return "formula_dlf";
    }
    return "?";
}

TruncatedSeries cy_series_closed(unsigned d, std::size_t order) {
    if (d < 1) throw std::invalid_argument("cy_series_closed: d must be >= 1");
    // Compute one order higher so the valuation-1 division lands back on `order`.
    const TruncatedSeries num = pow_int(scale(sin_scaled(Rational(1, 2), order + 1), 2), d);
    const TruncatedSeries den = scale(sin_scaled(Rational(d, 2), order + 1), 2);
    const Rational front = Rational(1, d) * (d % 2 ? 1 : -1);
    return scale(div(num, den), front);
}

TruncatedSeries dd_series_closed(unsigned d, std::size_t order) {
    if (d < 1) throw std::invalid_argument("dd_series_closed: d must be >= 1");
    const TruncatedSeries num = scale(sin_scaled(Rational(1, 2), order + 1), d);
    const TruncatedSeries den = sin_scaled(Rational(d, 2), order + 1);
    return log(div(num, den)); // ratio has constant term exactly 1
}

TruncatedSeries dd_series_from_master(unsigned d, std::size_t order,
                                      const TruncatedSeries& one_part) {
    if (d < 1) throw std::invalid_argument("dd_series_from_master: d must be >= 1");
    if (one_part.order() != order)
        throw std::invalid_argument("dd_series_from_master: Hurwitz series order mismatch");
    if (one_part.valuation() != std::optional<std::size_t>{d - 1})
        throw std::invalid_argument("dd_series_from_master: expected valuation d-1 input");
    TruncatedSeries ratio = scale(div(cy_series_closed(d, order), one_part),
                                  Rational(1) / master_constant(d));
    if (ratio.coeff(0) != 1) {
        throw std::domain_error(
            "dd_series_from_master: inner ratio has constant term " + rational_str(ratio.coeff(0)) +
            ", not 1: the one-part Hurwitz input is inconsistent with the master relation");
    }
    return scale(log(ratio), Rational(1, d));
}

TruncatedSeries t_series(unsigned d, std::size_t order) {
    if (d < 1) throw std::invalid_argument("t_series: d must be >= 1");
    return scale(exp(scale(dd_series_closed(d, order), d)), Rational(1, d));
}

TruncatedSeries di_series(unsigned d, unsigned i, std::size_t order) {
    if (d < 1 || i < 1) throw std::invalid_argument("di_series: need d >= 1 and i >= 1");
    const Rational front(int_pow(Integer(d), i - 1), factorial(i));
    return scale(pow_int(dd_series_closed(d, order), i), front);
}

HodgeIntegralValue hurwitz_hodge_integral(unsigned d, unsigned g, unsigned i) {
    if (i < 1 || g < i)
        throw std::invalid_argument("hurwitz_hodge_integral: need g >= i >= 1");
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    return HodgeIntegralValue{d, g, i, di_series(d, i, n).normalized_coeff(n)};
}

IdentityReport verify_hd(unsigned d, std::size_t order, HurwitzSource source,
                         const MonodromyOptions& opts) {
    const TruncatedSeries computed = hurwitz_series(Partition({d}), order, source, opts);
    return make_report(IdentityKind::formula_hd, d, order,
                       sub(computed, one_part_series_closed(d, order)));
}

IdentityReport verify_heta(unsigned d, std::size_t order, HurwitzSource source,
                           const MonodromyOptions& opts) {
    if (d < 2) throw std::invalid_argument("verify_heta: the relation requires d >= 2");
    if (order < d) throw std::invalid_argument("verify_heta: order must be >= d");
    // Dividing by prod 2 sin(eta_i u/2) costs l(eta) orders; the longest
    // profile (1^d) bounds the certified order at order - d.
    const std::size_t certified = order - d;
    TruncatedSeries residual = TruncatedSeries::zero(certified);
    for (const Partition& eta : partitions_of(d)) {
        TruncatedSeries den = TruncatedSeries::one(order);
        for (unsigned p : eta.parts()) den = mul(den, scale(sin_scaled(Rational(p, 2), order), 2));
        TruncatedSeries term =
            truncate(div(hurwitz_series(eta, order, source, opts), den), certified);
        residual = add(residual, eta.length() % 2 ? negate(term) : term);
    }
    return make_report(IdentityKind::formula_heta, d, order, std::move(residual));
}

IdentityReport verify_master(unsigned d, std::size_t order, HurwitzSource source,
                             const MonodromyOptions& opts) {
    const TruncatedSeries h = hurwitz_series(Partition({d}), order, source, opts);
    const TruncatedSeries rhs =
        scale(mul(h, exp(scale(dd_series_closed(d, order), d))), master_constant(d));
    const IdentityKind kind = source == HurwitzSource::closed ? IdentityKind::formula_cy_vs_master
                                                              : IdentityKind::theorem_rel;
    return make_report(kind, d, order, sub(cy_series_closed(d, order), rhs));
}

IdentityReport verify_bpa(unsigned d, std::size_t order, HurwitzSource source,
                          const MonodromyOptions& opts) {
    if (order + 1 < d) throw std::invalid_argument("verify_bpa: order must be >= d - 1");
    const TruncatedSeries h = hurwitz_series(Partition({d}), order, source, opts);
    const TruncatedSeries solved = dd_series_from_master(d, order, h);
    const TruncatedSeries closed = truncate(dd_series_closed(d, order), solved.order());
    return make_report(IdentityKind::theorem_bpa, d, order, sub(solved, closed));
}

IdentityReport verify_dlf(unsigned d, std::size_t order) {
    TruncatedSeries sum = TruncatedSeries::monomial(Rational(1, d), 0, order); // D_0 = 1/d
    for (unsigned i = 1; 2 * i <= order; ++i) sum = add(sum, di_series(d, i, order));
    return make_report(IdentityKind::formula_dlf, d, order, sub(t_series(d, order), sum));
}

} // namespace hh
