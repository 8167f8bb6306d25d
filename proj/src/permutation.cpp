#include "hh/permutation.hpp"

#include "hh/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hh {

Permutation Permutation::identity(unsigned d) {
    std::vector<unsigned> img(d);
    std::iota(img.begin(), img.end(), 0u);
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::transposition(unsigned d, unsigned a, unsigned b) {
    if (a >= d || b >= d || a == b)
        throw std::invalid_argument("transposition: need a != b, both < d");
    std::vector<unsigned> img(d);
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img[a], img[b]);
    return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
    std::vector<bool> seen(images.size(), false);
    for (unsigned v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
    return Permutation(std::move(images), Unchecked{});
}

Partition Permutation::cycle_type() const {
    std::vector<bool> visited(images_.size(), false);
    std::vector<unsigned> lengths;
    for (unsigned start = 0; start < images_.size(); ++start) {
        if (visited[start]) continue;
        unsigned len = 0, x = start;
        do {
            visited[x] = true;
            x = images_[x];
            ++len;
        } while (x != start);
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
    for (unsigned x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<unsigned> img(a.degree());
    for (unsigned x = 0; x < a.degree(); ++x) img[x] = a(b(x));
    return Permutation::from_images(std::move(img));
}

std::vector<Permutation> transpositions(unsigned d) {
    std::vector<Permutation> out;
    out.reserve(d * (d - 1) / 2);
    for (unsigned a = 0; a + 1 < d; ++a)
        for (unsigned b = a + 1; b < d; ++b)
            out.push_back(Permutation::transposition(d, a, b));
    return out;
}

bool is_transitive(const std::vector<Permutation>& gens, unsigned d) {
    UnionFind uf(d);
    for (const auto& g : gens) {
        if (g.degree() != d)
            throw std::invalid_argument("is_transitive: generator degree mismatch");
        for (unsigned x = 0; x < d; ++x) uf.unite(x, g(x));
    }
    return uf.components() <= 1;
}

} // namespace hh
