#ifndef HH_UNION_FIND_HPP
#define HH_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace hh {

// Union-find with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(unsigned n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    unsigned find(unsigned x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if a and b were in different components.
    bool unite(unsigned a, unsigned b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        return true;
    }

    unsigned components() const { return components_; }

private:
    std::vector<unsigned> parent_;
    std::vector<unsigned> size_;
    unsigned components_;
};

} // namespace hh

#endif
