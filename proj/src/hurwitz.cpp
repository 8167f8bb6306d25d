#include "hh/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hh {

namespace {

/*
  Cut-and-join engine.

  h(r, eta) := (number of transitive factorizations of a permutation of
  cycle type eta into r transpositions) / d!, i.e. H^g_eta with
  g = (r - d + 2 - l(eta)) / 2. Appending the last transposition to a
  factorization either stays transitive (cut or join of cycles of the same
  product) or bridges exactly two transitive components, which yields:

    h(r, eta) = sum_{eta'} A(eta' -> eta) h(r-1, eta')
              + 1/2 sum_{d1+d2=d} sum_{eta1, eta2} sum_{r1+r2=r-1}
                    C(r-1, r1) J(eta1, eta2 -> eta) h(r1, eta1) h(r2, eta2)

  where A counts transpositions turning a fixed permutation of type eta'
  into type eta (cycle cuts and joins), and J counts transpositions bridging
  a fixed cycle of eta1 with one of eta2 so that the merged type is eta.
  The 1/2 compensates for the ordered enumeration of the two components.

  Base case: h(0, (1)) = 1; h(0, eta) = 0 for every eta of d >= 2.

  The tables cover all partitions of all degrees <= dmax and grow row by
  row in r. Everything here is validated against the enumeration oracle in
  the test suite.
*/
class CutJoinEngine {
public:
    explicit CutJoinEngine(unsigned dmax) : dmax_(dmax), parts_(dmax + 1), index_(dmax + 1) {
        for (unsigned dd = 1; dd <= dmax; ++dd) {
            parts_[dd] = partitions_of(dd);
            for (std::size_t i = 0; i < parts_[dd].size(); ++i) index_[dd][parts_[dd][i]] = i;
        }
        rows_.resize(dmax + 1);
        for (unsigned dd = 1; dd <= dmax; ++dd)
            rows_[dd].push_back(std::vector<Rational>(parts_[dd].size()));
        rows_[1][0][0] = 1; // h(0, (1)) = 1
    }

    unsigned dmax() const { return dmax_; }

    const Rational& value(unsigned r, const Partition& eta) {
        const unsigned d = eta.size();
        while (rows_[1].size() <= r) extend();
        return rows_[d][r][index_[d].at(eta)];
    }

private:
    void extend() {
        const unsigned r = static_cast<unsigned>(rows_[1].size()); // row being built
        for (unsigned dd = 1; dd <= dmax_; ++dd) {
            std::vector<Rational> row(parts_[dd].size());

            // Same-component step: cuts and joins on each source type.
            const auto& prev = rows_[dd][r - 1];
            for (std::size_t s = 0; s < parts_[dd].size(); ++s) {
                if (prev[s] == 0) continue;
                scatter_moves(dd, parts_[dd][s], prev[s], row);
            }

            // Bridge step: the last transposition connects two transitive
            // factorizations on complementary sheet sets.
            for (unsigned d1 = 1; d1 < dd; ++d1) {
                const unsigned d2 = dd - d1;
                for (unsigned r1 = 0; r1 + 1 <= r; ++r1) {
                    const unsigned r2 = r - 1 - r1;
                    const Rational weight(binomial(r - 1, r1));
                    const auto& h1 = rows_[d1][r1];
                    const auto& h2 = rows_[d2][r2];
                    for (std::size_t i1 = 0; i1 < h1.size(); ++i1) {
                        if (h1[i1] == 0) continue;
                        for (std::size_t i2 = 0; i2 < h2.size(); ++i2) {
                            if (h2[i2] == 0) continue;
                            scatter_bridges(dd, parts_[d1][i1], parts_[d2][i2],
                                            weight * h1[i1] * h2[i2] / 2, row);
                        }
                    }
                }
            }
            rows_[dd].push_back(std::move(row));
        }
    }

    // All single-transposition moves on a permutation of type src, with the
    // number of transpositions realizing each move.
    void scatter_moves(unsigned dd, const Partition& src, const Rational& amount,
                       std::vector<Rational>& row) {
        const auto mults = src.multiplicities();
        // Cut: a cycle of length c splits into k and c-k. Within a fixed
        // c-cycle, c transpositions realize an unordered split {k, c-k} with
        // k != c-k, and c/2 realize {c/2, c/2}.
        for (const auto& [c, mc] : mults) {
            for (unsigned k = 1; 2 * k <= c; ++k) {
                const unsigned other = c - k;
                if (other < 1) continue;
                const unsigned ways = (k == other) ? c / 2 : c;
                add_to(row, dd, replace_parts(src, {c}, {k, other}),
                       amount * Rational(Integer(mc) * ways));
            }
        }
        // Join: cycles of lengths x and y merge into x+y; x*y transpositions
        // bridge a fixed pair of cycles.
        for (std::size_t i = 0; i < mults.size(); ++i) {
            const auto [x, mx] = mults[i];
            if (mx >= 2)
                add_to(row, dd, replace_parts(src, {x, x}, {2 * x}),
                       amount * Rational(Integer(mx) * (mx - 1) / 2 * x * x));
            for (std::size_t j = i + 1; j < mults.size(); ++j) {
                const auto [y, my] = mults[j];
                add_to(row, dd, replace_parts(src, {x, y}, {x + y}),
                       amount * Rational(Integer(mx) * my * x * y));
            }
        }
    }

    // All ways the bridging transposition can merge a cycle of eta1 with a
    // cycle of eta2 (j*k choices for fixed cycles of lengths j and k).
    void scatter_bridges(unsigned dd, const Partition& eta1, const Partition& eta2,
                         const Rational& amount, std::vector<Rational>& row) {
        for (const auto& [j, mj] : eta1.multiplicities()) {
            for (const auto& [k, mk] : eta2.multiplicities()) {
                std::vector<unsigned> parts;
                parts.reserve(eta1.length() + eta2.length() - 1);
                bool removed = false;
                for (unsigned p : eta1.parts()) {
                    if (!removed && p == j) { removed = true; continue; }
                    parts.push_back(p);
                }
                removed = false;
                for (unsigned p : eta2.parts()) {
                    if (!removed && p == k) { removed = true; continue; }
                    parts.push_back(p);
                }
                parts.push_back(j + k);
                add_to(row, dd, Partition(std::move(parts)),
                       amount * Rational(Integer(mj) * mk * j * k));
            }
        }
    }

    static Partition replace_parts(const Partition& src, std::initializer_list<unsigned> remove,
                                   std::initializer_list<unsigned> insert) {
        std::vector<unsigned> parts = src.parts();
        for (unsigned rm : remove) {
            auto it = std::find(parts.begin(), parts.end(), rm);
            parts.erase(it); // caller guarantees presence
        }
        parts.insert(parts.end(), insert.begin(), insert.end());
        return Partition(std::move(parts));
    }

    void add_to(std::vector<Rational>& row, unsigned dd, const Partition& target,
                const Rational& amount) {
        row[index_[dd].at(target)] += amount;
    }

    unsigned dmax_;
    std::vector<std::vector<Partition>> parts_;                 // by degree
    std::vector<std::map<Partition, std::size_t>> index_;      // by degree
    std::vector<std::vector<std::vector<Rational>>> rows_;     // [degree][r][partition index]
};

std::mutex engine_mutex;

Rational cut_join_value(unsigned r, const Partition& eta) {
    static CutJoinEngine* engine = nullptr;
    std::lock_guard<std::mutex> lock(engine_mutex);
    const unsigned d = eta.size();
    if (!engine || engine->dmax() < d) {
        delete engine;
        engine = new CutJoinEngine(std::max(d, kFastMaxDegree));
    }
    return engine->value(r, eta);
}

} // namespace

const char* to_string(HurwitzSource s) {
    switch (s) {
        case HurwitzSource::oracle: return "oracle";
        case HurwitzSource::fast: return "cutjoin";
        case HurwitzSource::closed: return "closed_form";
    }
    return "?";
}

unsigned branch_count(unsigned g, const Partition& eta) {
    return 2 * g + eta.size() - 2 + eta.length(); // >= 0: d + l >= 2 for d >= 1
}

Rational hurwitz_oracle(unsigned g, const Partition& eta, const MonodromyOptions& opts) {
    const std::uint64_t tuples = count_monodromy_tuples(eta, branch_count(g, eta), opts);
    return Rational(Integer(tuples), factorial(eta.size()));
}

Rational hurwitz_fast(unsigned g, const Partition& eta, unsigned max_degree, unsigned max_genus) {
    const unsigned d = eta.size();
    if (d < 1) throw std::invalid_argument("hurwitz_fast: empty profile");
    if (d > max_degree || g > max_genus) {
        throw CapacityError("hurwitz_fast: (d=" + std::to_string(d) + ", g=" + std::to_string(g) +
                            ") outside limits (d <= " + std::to_string(max_degree) +
                            ", g <= " + std::to_string(max_genus) + ")");
    }
    return cut_join_value(branch_count(g, eta), eta);
}

TruncatedSeries hurwitz_series(const Partition& eta, std::size_t order, HurwitzSource source,
                               const MonodromyOptions& opts) {
    if (source == HurwitzSource::closed) {
        if (eta.length() != 1)
            throw std::invalid_argument("hurwitz_series: closed form needs a one-part profile");
        return one_part_series_closed(eta.size(), order);
    }
    std::vector<Rational> c(order + 1);
    for (unsigned g = 0;; ++g) {
        const unsigned r = branch_count(g, eta);
        if (r > order) break;
        const Rational v = source == HurwitzSource::oracle ? hurwitz_oracle(g, eta, opts)
                                                           : hurwitz_fast(g, eta);
        c[r] = Rational(g % 2 ? -1 : 1) * v / Rational(factorial(r));
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries one_part_series_closed(unsigned d, std::size_t order) {
    if (d < 1) throw std::invalid_argument("one_part_series_closed: d must be >= 1");
    const Rational front(int_pow(Integer(2), d - 1), Integer(d) * factorial(d));
    return scale(pow_int(sin_scaled(Rational(d, 2), order), d - 1), front);
}

HurwitzValue hurwitz_value(unsigned g, const Partition& eta, HurwitzSource source,
                           const MonodromyOptions& opts) {
    if (source == HurwitzSource::closed)
        throw std::invalid_argument("hurwitz_value: closed form defines a series, not a value");
    Rational v = source == HurwitzSource::oracle ? hurwitz_oracle(g, eta, opts)
                                                 : hurwitz_fast(g, eta);
    return HurwitzValue{g, eta, branch_count(g, eta), std::move(v), source};
}

} // namespace hh
