#ifndef HH_IDENTITIES_HPP
#define HH_IDENTITIES_HPP

#include "hh/hurwitz.hpp"
#include "hh/series.hpp"

namespace hh {

/*
  Generating-function identities relating one-part Hurwitz numbers, the
  lambda_g lambda_{g-1} Hodge-integral series D(u), and the Calabi-Yau cap
  series CY(u). Everything is exact order-N arithmetic: each identity is a
  residual series that must vanish identically, and every division by a
  series of valuation v lowers the order certified by the check by v (the
  reports carry the certified order explicitly).
*/

enum class IdentityKind {
    formula_hd,           // computed H_(d)(u) vs the SSV closed form
    formula_heta,         // signed sum over all profiles of H_eta / prod 2 sin(eta_i u / 2) = 0
    formula_cy_vs_master, // master relation with the closed form of H_(d)(u)
    theorem_rel,          // master relation with computed Hurwitz numbers
    theorem_bpa,          // D(u) solved from the master relation vs ln(d sin(u/2)/sin(du/2))
    formula_dlf,          // D_i = d^{i-1}/i! D^i summing to T(u)
};
const char* to_string(IdentityKind k);

struct IdentityReport {
    IdentityKind identity;
    unsigned d;
    std::size_t order;           // requested truncation order
    std::size_t certified_order; // order actually certified (order minus valuation losses)
    TruncatedSeries residual;    // has order == certified_order
    bool passed;                 // residual is identically zero
};

struct HodgeIntegralValue {
    unsigned d;
    unsigned g;
    unsigned i;
    Rational value; // (2g)! * [u^{2g}] D_i(u)
};

// CY(u) = (-1)^(d-1) (1/d) (2 sin(u/2))^d / (2 sin(du/2)); valuation d-1.
TruncatedSeries cy_series_closed(unsigned d, std::size_t order);

// D(u) = ln(d sin(u/2) / sin(du/2)) (Bryan-Pandharipande); even, valuation >= 2.
TruncatedSeries dd_series_closed(unsigned d, std::size_t order);

// Solves the master relation CY = (-1)^(d-1) d!/d^d H_(d) e^{dD} for D given
// a one-part Hurwitz series H of valuation d-1:
//   D(u) = (1/d) ln( d^d/((-1)^(d-1) d!) * CY(u) / H(u) ).
// The inner ratio must have constant term exactly 1; anything else signals a
// wrong Hurwitz input and raises an inconsistency error. Result order is
// order - (d-1), the part the division determines.
TruncatedSeries dd_series_from_master(unsigned d, std::size_t order, const TruncatedSeries& one_part);

// T(u) = (1/d) e^{dD(u)}; constant term 1/d.
TruncatedSeries t_series(unsigned d, std::size_t order);

// D_i(u) = d^{i-1}/i! * D(u)^i for i >= 1.
TruncatedSeries di_series(unsigned d, unsigned i, std::size_t order);

// (2g)! * [u^{2g}] D_i(u): the lambda_g lambda_{g-i} psi^{i-1} integral.
// Requires g >= i >= 1.
HodgeIntegralValue hurwitz_hodge_integral(unsigned d, unsigned g, unsigned i);

// The verifiers. `source` selects the Hurwitz computation feeding the
// identity (oracle or fast); verify_master with source == closed instead
// substitutes the SSV closed form for H_(d)(u) and reports it as
// formula_cy_vs_master.
IdentityReport verify_hd(unsigned d, std::size_t order,
                         HurwitzSource source = HurwitzSource::fast,
                         const MonodromyOptions& opts = {});
// Requires d >= 2: the all-profiles relation degenerates at d = 1 (its one
// term reads 0 = -H_(1)(u)/(2 sin(u/2)), which is false as stated).
IdentityReport verify_heta(unsigned d, std::size_t order,
                           HurwitzSource source = HurwitzSource::fast,
                           const MonodromyOptions& opts = {});
IdentityReport verify_master(unsigned d, std::size_t order,
                             HurwitzSource source = HurwitzSource::fast,
                             const MonodromyOptions& opts = {});
IdentityReport verify_bpa(unsigned d, std::size_t order,
                          HurwitzSource source = HurwitzSource::fast,
                          const MonodromyOptions& opts = {});
IdentityReport verify_dlf(unsigned d, std::size_t order);

} // namespace hh

#endif
