#ifndef HH_MONODROMY_HPP
#define HH_MONODROMY_HPP

#include "hh/partition.hpp"

#include <cstdint>
#include <stdexcept>

namespace hh {

// Thrown when a computation would exceed its configured size bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonodromyOptions {
    // Enumeration is refused when (d(d-1)/2)^r exceeds this.
    std::uint64_t budget = 100'000'000;
    // Worker threads over first-transposition branches; 0 = hardware default.
    unsigned threads = 0;
    // When false, the connectedness filter is dropped (used by the
    // word-count sanity identities; the Hurwitz path always keeps it).
    bool require_transitive = true;
};

// Number of tuples (sigma, tau_1, ..., tau_r) with sigma of cycle type eta,
// each tau_i a transposition in S_d, tau_r ... tau_1 sigma = id, and
// <sigma, tau_1, ..., tau_r> transitive on the d sheets. Since sigma is
// determined by the word (sigma = tau_1 ... tau_r), this enumerates
// transposition words of length r directly, composing incrementally and
// pruning on cycle-count distance/parity and on connectivity.
//
// Deterministic and independent of thread count.
std::uint64_t count_monodromy_tuples(const Partition& eta, unsigned r,
                                     const MonodromyOptions& opts = {});

} // namespace hh

#endif
