#include <set>

#include "doctest.h"
#include "patternlab/motzkin.hpp"
#include "patternlab/oracle.hpp"
#include "patternlab/pattern_set.hpp"

using namespace patternlab;

TEST_CASE("enumeration of 3412-avoiding involutions") {
    CHECK(involutions_3412(0) == std::vector<Permutation>{Permutation()});
    const auto& i3 = involutions_3412(3);
    const std::set<Permutation> expected{Permutation::parse("123"), Permutation::parse("132"),
                                         Permutation::parse("213"), Permutation::parse("321")};
    CHECK(std::set<Permutation>(i3.begin(), i3.end()) == expected);
    CHECK(involutions_3412(4).size() == 9);
    for (int n = 0; n <= 12; ++n)
        CHECK(Int(involutions_3412(n).size()) == motzkin_number(n));
    for (int n = 0; n <= 9; ++n) {
        std::set<Permutation> seen;
        for_each_involution(n, [&](const Permutation& p) {
            CHECK(p.size() == n);
            CHECK(p.is_involution());
            CHECK(avoids(p, Permutation::parse("3412")));
            seen.insert(p);
        });
        CHECK(Int(seen.size()) == motzkin_number(n));
    }
    CHECK_THROWS_AS(involutions_3412(15), std::length_error);
    CHECK_THROWS_AS(involutions_3412(-1), std::invalid_argument);
}

TEST_CASE("avoider counting") {
    CHECK(count_avoiders(PatternSet::parse("321"), 5) == 8);
    CHECK(count_avoiders(PatternSet::parse("4231,4321"), 4) == 7);
    CHECK(count_avoiders(PatternSet(), 6) == 51);
    for (const char* patterns : {"21,4321", "12,21,12", "321,54321"}) {
        const PatternSet set = PatternSet::parse(patterns);
        for (int n = 0; n <= 8; ++n)
            CHECK(count_avoiders(set, n) == count_avoiders(set.canonicalize(), n));
    }
}

TEST_CASE("occurrence counting over the class") {
    const auto p321 = Permutation::parse("321");
    CHECK(count_with_occurrences(p321, 1, 4) == 2);
    CHECK(count_with_occurrences(p321, 2, 4) == 1);
    CHECK(count_with_occurrences(p321, 1, 3) == 1);
}

TEST_CASE("statistic distributions") {
    // I_3(3412) = {123, 132, 213, 321} with 0, 1, 1, 3 inversions.
    CHECK(statistic_distribution(Statistic::Inv, 3) ==
          IntPoly(std::vector<Int>{1, 2, 0, 1}));
    CHECK(statistic_distribution(Statistic::Fix, 2) == IntPoly(std::vector<Int>{1, 0, 1}));
    CHECK(statistic_distribution(Statistic::LrMax, 2) ==
          IntPoly(std::vector<Int>{0, 1, 1}));
    CHECK(statistic_distribution(Statistic::RlMin, 2) ==
          IntPoly(std::vector<Int>{0, 1, 1}));
    // m distribution at n = 2: 12 has one decreasing subsequence per entry,
    // 21 has three nonempty ones.
    CHECK(statistic_distribution(Statistic::M, 2) ==
          IntPoly(std::vector<Int>{0, 0, 1, 1}));
}

TEST_CASE("brute-force bounded paths") {
    CHECK(brute_bounded_paths(PathFamily::M, 0, 0, 0, 5) == 1);
    CHECK(brute_bounded_paths(PathFamily::M, 0, 0, 1, 4) == 8);
    CHECK(brute_bounded_paths(PathFamily::O, 0, 0, 1, 2) == 1);
    CHECK(brute_bounded_paths(PathFamily::N, 1, 0, 1, 1) == 1);
    CHECK_THROWS_AS(brute_bounded_paths(PathFamily::M, 2, 0, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(brute_bounded_paths(PathFamily::M, 0, 0, 1, 15),
                    std::invalid_argument);
}
