#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh/monodromy.hpp"
#include "hh/partition.hpp"
#include "hh/permutation.hpp"

#include <map>

using namespace hh;

TEST_CASE("partitions_of: canonical order and counts") {
    auto p1 = partitions_of(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == Partition({1}));

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK_THROWS_AS(partitions_of(0), std::invalid_argument);

    // Every partition of d sums to d, appears once, and is non-increasing.
    for (unsigned d = 1; d <= 8; ++d) {
        auto ps = partitions_of(d);
        std::map<Partition, int> seen;
        for (const auto& eta : ps) {
            CHECK(eta.size() == d);
            ++seen[eta];
            for (std::size_t i = 0; i + 1 < eta.parts().size(); ++i)
                CHECK(eta.parts()[i] >= eta.parts()[i + 1]);
        }
        CHECK(seen.size() == ps.size());
    }
}

TEST_CASE("partition parsing and rendering") {
    CHECK(Partition::parse("2,1") == Partition({1, 2}));
    CHECK(Partition({3, 1, 2}).str() == "3,2,1");
    CHECK(Partition({4}).length() == 1);
    CHECK(Partition({2, 2, 1}).size() == 5);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);

    auto mults = Partition({3, 2, 2, 1}).multiplicities();
    REQUIRE(mults.size() == 3);
    CHECK(mults[0] == std::pair<unsigned, unsigned>{3, 1});
    CHECK(mults[1] == std::pair<unsigned, unsigned>{2, 2});
    CHECK(mults[2] == std::pair<unsigned, unsigned>{1, 1});
}

TEST_CASE("conjugacy class sizes") {
    CHECK(conjugacy_class_size(Partition({3})) == 2);       // 3-cycles in S_3
    CHECK(conjugacy_class_size(Partition({2, 1})) == 3);    // transpositions in S_3
    CHECK(conjugacy_class_size(Partition({1, 1, 1})) == 1); // identity
    CHECK(conjugacy_class_size(Partition({2, 2})) == 3);    // in S_4

    Integer total = 0;
    for (const auto& eta : partitions_of(6)) total += conjugacy_class_size(eta);
    CHECK(total == factorial(6));
}

TEST_CASE("permutations: compose, cycle type, transpositions") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation t01 = Permutation::transposition(3, 0, 1);
    CHECK(compose(t01, id3) == t01);
    CHECK(compose(id3, t01) == t01);
    CHECK(compose(t01, t01) == id3);

    CHECK(t01.cycle_type() == Partition({2, 1}));
    CHECK(id3.cycle_type() == Partition({1, 1, 1}));

    // (0 1)(1 2): 0->1->... as functions, t01 after t12.
    const Permutation t12 = Permutation::transposition(3, 1, 2);
    const Permutation three_cycle = compose(t01, t12);
    CHECK(three_cycle.cycle_type() == Partition({3}));

    CHECK(transpositions(4).size() == 6);
    CHECK(transpositions(2).size() == 1);

    CHECK_THROWS_AS(compose(id3, Permutation::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::transposition(3, 1, 1), std::invalid_argument);
}

TEST_CASE("is_transitive") {
    CHECK(is_transitive({}, 1));
    CHECK(!is_transitive({}, 2));
    CHECK(!is_transitive({Permutation::transposition(3, 0, 1)}, 3));
    CHECK(is_transitive({Permutation::transposition(3, 0, 1), Permutation::transposition(3, 1, 2)}, 3));

    // A single d-cycle is transitive.
    std::vector<unsigned> img{1, 2, 3, 4, 0};
    CHECK(is_transitive({Permutation::from_images(img)}, 5));
}

TEST_CASE("count_monodromy_tuples: hand-checked values") {
    CHECK(count_monodromy_tuples(Partition({2}), 3) == 1);
    CHECK(count_monodromy_tuples(Partition({3}), 2) == 6);
    CHECK(count_monodromy_tuples(Partition({2, 1}), 3) == 24);

    // d = 1: the empty tuple is the unique cover of its kind.
    CHECK(count_monodromy_tuples(Partition({1}), 0) == 1);
    CHECK(count_monodromy_tuples(Partition({1}), 2) == 0);

    // d >= 2 with r = 0 can never be transitive.
    CHECK(count_monodromy_tuples(Partition({1, 1}), 0) == 0);
}

TEST_CASE("count_monodromy_tuples: parity vanishing") {
    // r must match d - l(eta) mod 2.
    CHECK(count_monodromy_tuples(Partition({2}), 2) == 0);
    CHECK(count_monodromy_tuples(Partition({3}), 3) == 0);
    CHECK(count_monodromy_tuples(Partition({2, 1}), 4) == 0);
    CHECK(count_monodromy_tuples(Partition({1, 1, 1}), 5) == 0);
}

TEST_CASE("count_monodromy_tuples: word-count sanity identity") {
    // Without the transitivity filter every word lands in exactly one class,
    // so the counts over all eta sum to (d(d-1)/2)^r.
    MonodromyOptions all;
    all.require_transitive = false;
    for (unsigned d = 2; d <= 4; ++d) {
        for (unsigned r = 0; r <= (d == 4 ? 5u : 6u); ++r) {
            Integer sum = 0;
            for (const auto& eta : partitions_of(d))
                sum += Integer(count_monodromy_tuples(eta, r, all));
            CHECK(sum == int_pow(Integer(d * (d - 1) / 2), r));
        }
    }
}

TEST_CASE("count_monodromy_tuples: conjugation invariance") {
    // Counting words whose product is one fixed representative, times the
    // class size, reproduces the class-summed count.
    for (unsigned d = 2; d <= 3; ++d) {
        const auto taus = transpositions(d);
        for (const auto& eta : partitions_of(d)) {
            for (unsigned r = 1; r <= 4; ++r) {
                // Build a representative with the given cycle type.
                std::vector<unsigned> img;
                for (unsigned start = 0, done = 0; done < eta.parts().size(); ++done) {
                    const unsigned len = eta.parts()[done];
                    for (unsigned k = 0; k < len; ++k)
                        img.push_back(start + (k + 1) % len);
                    start += len;
                }
                const Permutation rep = Permutation::from_images(img);

                std::uint64_t rep_words = 0;
                std::vector<unsigned> word(r, 0);
                for (;;) {
                    Permutation prod = Permutation::identity(d);
                    std::vector<Permutation> gens;
                    for (unsigned i = 0; i < r; ++i) {
                        prod = compose(prod, taus[word[i]]);
                        gens.push_back(taus[word[i]]);
                    }
                    if (prod == rep && is_transitive(gens, d)) ++rep_words;
                    unsigned pos = 0;
                    while (pos < r && ++word[pos] == taus.size()) word[pos++] = 0;
                    if (pos == r) break;
                }

                const Integer expected = Integer(rep_words) * conjugacy_class_size(eta);
                CHECK(Integer(count_monodromy_tuples(eta, r)) == expected);
            }
        }
    }
}

TEST_CASE("count_monodromy_tuples: budget and determinism") {
    MonodromyOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(count_monodromy_tuples(Partition({3}), 4, tiny), CapacityError);
    CHECK_THROWS_AS(count_monodromy_tuples(Partition({4, 2}), 20), CapacityError);

    MonodromyOptions one_thread, four_threads;
    one_thread.threads = 1;
    four_threads.threads = 4;
    for (unsigned r : {2u, 4u, 6u}) {
        CHECK(count_monodromy_tuples(Partition({2, 1, 1}), r, one_thread) ==
              count_monodromy_tuples(Partition({2, 1, 1}), r, four_threads));
    }
}
