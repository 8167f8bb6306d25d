#ifndef HH_PERMUTATION_HPP
#define HH_PERMUTATION_HPP

#include "hh/partition.hpp"

#include <vector>

namespace hh {

// Permutation of {0..d-1} stored as an image table (0-based throughout).
class Permutation {
public:
    static Permutation identity(unsigned d);
    // The transposition (a b) in S_d; requires a != b, both < d.
    static Permutation transposition(unsigned d, unsigned a, unsigned b);
    // Validates that images is a bijection of {0..d-1}.
    static Permutation from_images(std::vector<unsigned> images);

    unsigned degree() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned x) const { return images_[x]; }
    const std::vector<unsigned>& images() const { return images_; }

    Partition cycle_type() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<unsigned> images, Unchecked) : images_(std::move(images)) {}
    std::vector<unsigned> images_;
};

// Group product: (a*b)(x) = a(b(x)). Degree mismatch is an error.
Permutation compose(const Permutation& a, const Permutation& b);

// All d(d-1)/2 transpositions of S_d, in lexicographic (a,b) order.
std::vector<Permutation> transpositions(unsigned d);

// True iff the subgroup generated acts transitively on {0..d-1}.
// Orbits of the generated group are the connected components of the
// union of the generators' functional graphs, found by union-find.
bool is_transitive(const std::vector<Permutation>& gens, unsigned d);

} // namespace hh

#endif
