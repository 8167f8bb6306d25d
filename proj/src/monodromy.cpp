#include "hh/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

namespace hh {

namespace {

// Union-find with undo, no path compression. Backtracking search needs
// rollback in LIFO order, so each unite pushes one log entry.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(unsigned n) : parent_(n), size_(n, 1), components_(n) {
        for (unsigned i = 0; i < n; ++i) parent_[i] = i;
    }

    unsigned find(unsigned x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void unite(unsigned a, unsigned b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            log_.push_back(kNoop);
            return;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
        log_.push_back(b);
    }

    void rollback() {
        const unsigned b = log_.back();
        log_.pop_back();
        if (b == kNoop) return;
        const unsigned a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        ++components_;
    }

    unsigned components() const { return components_; }

private:
    static constexpr unsigned kNoop = std::numeric_limits<unsigned>::max();
    std::vector<unsigned> parent_;
    std::vector<unsigned> size_;
    unsigned components_;
    std::vector<unsigned> log_;
};

struct Searcher {
    unsigned d;
    unsigned r;
    unsigned ell_target;
    bool require_transitive;
    std::vector<std::pair<unsigned, unsigned>> letters; // all transpositions (a,b), a < b
    std::vector<unsigned> target_counts;                // target_counts[len] = multiplicity in eta

    std::vector<unsigned> prod; // image table of tau_1 ... tau_depth
    RollbackUnionFind uf;
    std::uint64_t hits = 0;

    Searcher(unsigned d_, unsigned r_, const Partition& eta, bool transitive)
        : d(d_), r(r_), ell_target(eta.length()), require_transitive(transitive),
          target_counts(d_ + 1, 0), prod(d_), uf(d_) {
        for (unsigned a = 0; a + 1 < d; ++a)
            for (unsigned b = a + 1; b < d; ++b) letters.emplace_back(a, b);
        for (unsigned p : eta.parts()) ++target_counts[p];
        for (unsigned i = 0; i < d; ++i) prod[i] = i;
    }

    // a and b lie in the same cycle of the current product?
    bool same_cycle(unsigned a, unsigned b) const {
        unsigned x = prod[a];
        while (x != a && x != b) x = prod[x];
        return x == b;
    }

    bool type_matches() const {
        std::vector<unsigned> counts(d + 1, 0);
        std::uint64_t visited = 0; // d <= 64 whenever enumeration is in budget
        for (unsigned start = 0; start < d; ++start) {
            if (visited >> start & 1u) continue;
            unsigned len = 0, x = start;
            do {
                visited |= std::uint64_t{1} << x;
                x = prod[x];
                ++len;
            } while (x != start);
            ++counts[len];
        }
        return counts == target_counts;
    }

    void dfs(unsigned depth, unsigned ell) {
        const unsigned rem = r - depth;
        // Each letter changes the cycle count by exactly +-1, so the target
        // must be within rem steps and of matching parity.
        const unsigned diff = ell > ell_target ? ell - ell_target : ell_target - ell;
        if (diff > rem || ((rem - diff) & 1u)) return;
        // Each letter merges at most two components.
        if (require_transitive && uf.components() > rem + 1) return;
        if (depth == r) {
            if ((!require_transitive || uf.components() == 1) && type_matches()) ++hits;
            return;
        }
        for (const auto& [a, b] : letters) {
            const bool split = same_cycle(a, b);
            std::swap(prod[a], prod[b]); // right-multiply by (a b)
            uf.unite(a, b);
            dfs(depth + 1, split ? ell + 1 : ell - 1);
            uf.rollback();
            std::swap(prod[a], prod[b]);
        }
    }

    // Explore the branch whose first letter is letters[first].
    std::uint64_t run_branch(unsigned first) {
        const auto& [a, b] = letters[first];
        std::swap(prod[a], prod[b]);
        uf.unite(a, b);
        dfs(1, d - 1);
        uf.rollback();
        std::swap(prod[a], prod[b]);
        return hits;
    }
};

} // namespace

std::uint64_t count_monodromy_tuples(const Partition& eta, unsigned r,
                                     const MonodromyOptions& opts) {
    const unsigned d = eta.size();
    if (d < 1) throw std::invalid_argument("count_monodromy_tuples: empty profile");

    if (d == 1) return r == 0 ? 1 : 0; // S_1 has no transpositions

    const std::uint64_t t = std::uint64_t{d} * (d - 1) / 2;
    if (r == 0) {
        // The empty word: product is the identity, of type (1^d), and the
        // generated group is trivial, so never transitive for d >= 2.
        const bool is_identity_type = eta.length() == d;
        return (!opts.require_transitive && is_identity_type) ? 1 : 0;
    }
    const Integer words = int_pow(Integer(t), r);
    if (words > Integer(opts.budget)) {
        throw CapacityError("count_monodromy_tuples: " + std::to_string(t) + "^" +
                            std::to_string(r) + " = " + words.str() +
                            " words exceeds enumeration budget " + std::to_string(opts.budget));
    }

    unsigned nthreads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    nthreads = std::max(1u, std::min<unsigned>(nthreads, static_cast<unsigned>(t)));

    std::vector<std::uint64_t> branch_hits(t, 0);
    std::atomic<unsigned> next_branch{0};
    auto worker = [&] {
        for (;;) {
            const unsigned i = next_branch.fetch_add(1);
            if (i >= t) break;
            Searcher s(d, r, eta, opts.require_transitive);
            branch_hits[i] = s.run_branch(i);
        }
    };

    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::uint64_t total = 0;
    for (std::uint64_t h : branch_hits) total += h;
    return total;
}

} // namespace hh
