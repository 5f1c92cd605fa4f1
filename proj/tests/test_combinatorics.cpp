#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "symrep/partition.hpp"
#include "symrep/permutation.hpp"
#include "symrep/skew.hpp"
#include "symrep/tableau.hpp"

using namespace symrep;

namespace {

// Independent partition counter: p(n, max) with parts bounded above,
// enumerated smallest-part-first (opposite order to the library).
int count_partitions(int n, int max_part) {
    if (n == 0) return 1;
    int total = 0;
    for (int p = 1; p <= std::min(n, max_part); ++p)
        total += count_partitions(n - p, p);
    return total;
}

// Brute-force skew hook test: contents pairwise distinct and forming a
// segment of integers.
bool segment_check(const SkewShape& s) {
    std::vector<int> contents;
    for (const Node& a : s.cells()) contents.push_back(a.content());
    std::sort(contents.begin(), contents.end());
    for (size_t i = 1; i < contents.size(); ++i)
        if (contents[i] != contents[i - 1] + 1) return false;
    return true;
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    for (int n = 0; n <= 12; ++n)
        CHECK(static_cast<int>(partitions_of(n).size()) == count_partitions(n, n));

    // Canonical order is decreasing lexicographic and duplicate-free.
    for (int n = 0; n <= 10; ++n) {
        auto ps = partitions_of(n);
        for (size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i - 1].parts() > ps[i].parts());
    }
}

TEST_CASE("partition parsing and conjugation") {
    CHECK(Partition::parse("5,3,3,1").parts() == std::vector<int>{5, 3, 3, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("3,1,0,0") == P({3, 1}));
    CHECK_THROWS_AS(Partition::parse("1,3"), domain_error);
    for (int n = 0; n <= 8; ++n)
        for (const Partition& la : partitions_of(n))
            CHECK(la.conjugate().conjugate() == la);
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
}

TEST_CASE("removable and addable nodes") {
    CHECK(removable_nodes(Partition{}).empty());
    CHECK(addable_nodes(Partition{}) == std::vector<Node>{{1, 1}});
    CHECK(removable_nodes(P({2, 1})) == std::vector<Node>{{1, 2}, {2, 1}});
    CHECK(addable_nodes(P({4, 2, 1})) ==
          std::vector<Node>{{1, 5}, {2, 3}, {3, 2}, {4, 1}});
}

TEST_CASE("hook dimension") {
    CHECK(hook_dimension(P({7})) == 1);
    CHECK(hook_dimension(P({2, 1})) == 2);
    CHECK(hook_dimension(P({5, 3, 3, 1})) == 4158);
    // Against the tableau-enumeration oracle, and Wedderburn's count.
    for (int n = 1; n <= 8; ++n) {
        Integer sq = 0;
        for (const Partition& la : partitions_of(n)) {
            const Integer d = hook_dimension(la);
            CHECK(d == Integer(standard_tableaux(la).size()));
            sq += d * d;
        }
        CHECK(sq == factorial(n));
    }
}

TEST_CASE("skew shapes and skew hooks") {
    CHECK_THROWS_AS(skew(P({2}), P({3})), domain_error);

    SkewShape s31(P({3, 1}), Partition{});
    CHECK(is_skew_hook(s31));
    CHECK(leg(s31) == 1);

    CHECK_FALSE(is_skew_hook(skew(P({2, 2}), Partition{})));

    SkewShape s221(P({2, 2}), P({1}));
    CHECK(s221.cells() == std::vector<Node>{{1, 2}, {2, 1}, {2, 2}});
    CHECK(is_skew_hook(s221));
    CHECK(leg(s221) == 1);

    CHECK_THROWS_AS(leg(skew(P({2}), P({2}))), domain_error);

    // Disconnected shape.
    CHECK_FALSE(is_connected(skew(P({2, 1}), P({1}))));

    // Library test agrees with the sorted-contents segment check.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            for (int m = 0; m < n; ++m)
                for (const Partition& mu : partitions_of(m)) {
                    if (!la.contains(mu)) continue;
                    SkewShape s(la, mu);
                    CHECK(is_skew_hook(s) == (is_connected(s) && segment_check(s)));
                }
}

TEST_CASE("cycle types and conjugacy classes") {
    CHECK(class_representative(P({1, 1, 1})) == Permutation::identity(3));
    CHECK(class_size(P({1, 1, 1, 1})) == 1);
    for (int k = 2; k <= 7; ++k)
        CHECK(class_size(P({k})) == factorial(k - 1));

    // rho = (2,1) in S_3: enumerate all six permutations.
    int count = 0;
    for (const Permutation& w : all_permutations(3))
        if (cycle_type(w) == P({2, 1})) ++count;
    CHECK(count == 3);
    CHECK(class_size(P({2, 1})) == 3);

    CHECK(cycle_type(class_representative(P({3, 2, 2, 1}))) == P({3, 2, 2, 1}));

    for (int n = 1; n <= 8; ++n) {
        Integer total = 0;
        for (const Partition& rho : partitions_of(n)) total += class_size(rho);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("coxeter length and reduced words") {
    CHECK(coxeter_length(Permutation::identity(4)) == 0);
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(coxeter_length(Permutation::simple(1, 2)) == 1);
    CHECK(reduced_word(Permutation::simple(1, 2)) == std::vector<int>{1});

    const Permutation w = Permutation::parse("3,2,1");
    CHECK(w == Permutation::parse("(1 3)", 3));
    CHECK(coxeter_length(w) == 3);

    for (int n = 1; n <= 6; ++n)
        for (const Permutation& w2 : all_permutations(n)) {
            const auto word = reduced_word(w2);
            CHECK(static_cast<int>(word.size()) == coxeter_length(w2));
            Permutation prod = Permutation::identity(n);
            for (int k : word) prod = prod.compose(Permutation::simple(k, n));
            CHECK(prod == w2);
        }
}

TEST_CASE("permutation parsing") {
    CHECK(Permutation::parse("2,1,4,3") ==
          Permutation::parse("(1 2)(3 4)"));
    CHECK(Permutation::parse("(1,2)", 4) == Permutation::simple(1, 4));
    CHECK_THROWS_AS(Permutation::parse("2,2,1"), domain_error);
}
