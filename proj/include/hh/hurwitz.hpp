#ifndef HH_HURWITZ_HPP
#define HH_HURWITZ_HPP

#include "hh/monodromy.hpp"
#include "hh/partition.hpp"
#include "hh/series.hpp"

namespace hh {

/*
  Simple Hurwitz numbers H^g_eta: automorphism-weighted counts of degree-d
  genus-g covers of the sphere, profile eta over infinity, simple branching
  at r = 2g + d - 2 + l(eta) further points. Via the monodromy dictionary,
  H^g_eta = (number of transitive monodromy tuples) / d!; the /d! accounts
  for sheet relabeling and cover automorphisms at once.

  Two computation paths:
    - oracle: brute-force word enumeration (count_monodromy_tuples), the
      ground truth within its budget;
    - fast:   cut-and-join recursion on (r, eta), memoized, validated
      against the oracle on the whole overlap region by the test suite.
*/

enum class HurwitzSource { oracle, fast, closed };
const char* to_string(HurwitzSource s);

inline constexpr unsigned kFastMaxDegree = 8;
inline constexpr unsigned kFastMaxGenus = 8;

// r = 2g + d - 2 + l(eta) (Riemann-Hurwitz count of simple branch points).
unsigned branch_count(unsigned g, const Partition& eta);

// Exact H^g_eta by brute-force enumeration; throws CapacityError beyond budget.
Rational hurwitz_oracle(unsigned g, const Partition& eta, const MonodromyOptions& opts = {});

// Exact H^g_eta by the cut-and-join recursion. Degree/genus limits keep the
// memo table at desk scale; raise them explicitly if needed.
Rational hurwitz_fast(unsigned g, const Partition& eta,
                      unsigned max_degree = kFastMaxDegree,
                      unsigned max_genus = kFastMaxGenus);

// Generating function H_eta(u) = sum_g (-1)^g H^g_eta u^r / r! truncated at
// the given order. The (-1)^g sign is the convention used throughout. With
// source == closed, eta must be a one-part profile.
TruncatedSeries hurwitz_series(const Partition& eta, std::size_t order,
                               HurwitzSource source = HurwitzSource::fast,
                               const MonodromyOptions& opts = {});

// Closed form of H_(d)(u) (Shapiro-Shapiro-Vainshtein):
//   H_(d)(u) = 2^(d-1)/(d*d!) * sin(du/2)^(d-1).
TruncatedSeries one_part_series_closed(unsigned d, std::size_t order);

struct HurwitzValue {
    unsigned g;
    Partition eta;
    unsigned r;
    Rational value;
    HurwitzSource source;
};

// Computes the value through the requested path and packages it with its
// branch count; enforces r = 2g + d - 2 + l(eta) by construction.
HurwitzValue hurwitz_value(unsigned g, const Partition& eta, HurwitzSource source,
                           const MonodromyOptions& opts = {});

} // namespace hh

#endif
