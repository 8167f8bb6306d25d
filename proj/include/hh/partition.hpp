#ifndef HH_PARTITION_HPP
#define HH_PARTITION_HPP

#include "hh/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hh {

// Integer partition: parts sorted non-increasing, all >= 1. Used as the
// ramification profile eta of a degree-d cover (d = sum of parts) and as a
// permutation cycle type.
class Partition {
public:
    Partition() = default; // empty partition of 0
    explicit Partition(std::vector<unsigned> parts);

    // Parses the comma-joined form, e.g. "2,1".
    static Partition parse(const std::string& text);

    unsigned size() const;                                // d = sum of parts
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<unsigned>& parts() const { return parts_; }

    // (part value, multiplicity) pairs, values descending.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const;

    std::string str() const; // "2,1"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
};

// All partitions of d, each once, in reverse-lexicographic order:
// (d), ..., (1,1,...,1). d < 1 is an error.
std::vector<Partition> partitions_of(unsigned d);

// Size of the conjugacy class in S_d with this cycle type: d! / prod j^{m_j} m_j!.
Integer conjugacy_class_size(const Partition& eta);

} // namespace hh

#endif
