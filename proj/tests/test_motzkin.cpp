#include <map>
#include <set>

#include "doctest.h"
#include "patternlab/motzkin.hpp"
#include "patternlab/oracle.hpp"

using namespace patternlab;

namespace {

MotzkinPath levels(int n) { return MotzkinPath(std::vector<Step>(static_cast<size_t>(n), Step::Level)); }

}  // namespace

TEST_CASE("path validation and text forms") {
    CHECK(MotzkinPath::parse("ULUDDLUD").str() == "ULUDDLUD");
    CHECK(MotzkinPath::parse("").size() == 0);
    CHECK_THROWS_AS(MotzkinPath::parse("UDD"), std::invalid_argument);   // dips below 0
    CHECK_THROWS_AS(MotzkinPath::parse("UL"), std::invalid_argument);    // ends high
    CHECK_THROWS_AS(MotzkinPath::parse("UXD"), std::invalid_argument);   // bad letter
    const auto h = MotzkinPath::parse("ULUDDLUD").heights();
    CHECK(h == std::vector<int>{0, 1, 1, 2, 1, 0, 0, 1});
}

TEST_CASE("path generation counts are Motzkin numbers") {
    const std::vector<long long> motzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
    for (int n = 0; n <= 10; ++n) {
        long long count = 0;
        std::set<MotzkinPath> seen;
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            ++count;
            seen.insert(p);
            CHECK(p.size() == n);
        });
        CHECK(count == motzkin[static_cast<size_t>(n)]);
        CHECK(static_cast<long long>(seen.size()) == count);
        CHECK(motzkin_number(n) == Int(motzkin[static_cast<size_t>(n)]));
    }
    CHECK(motzkin_number(14) == Int(113634));
    CHECK_THROWS_AS(for_each_motzkin_path(17, [](const MotzkinPath&) {}),
                    std::length_error);
}

TEST_CASE("path tau statistics") {
    const auto p = MotzkinPath::parse("ULUUDLDDLUD");
    const std::vector<std::uint64_t> expected{11, 22, 27, 19, 7, 1};
    for (int k = 1; k <= 6; ++k)
        CHECK(tau_k_path(p, k) == expected[static_cast<size_t>(k) - 1]);
    CHECK(tau_k_path(p, 7) == 0);
    CHECK(tau_k_path(levels(5), 1) == 5);
    CHECK(tau_k_path(levels(5), 2) == 0);
    CHECK(tau_k_path(MotzkinPath::parse("UD"), 2) == 1);
}

TEST_CASE("tau recurrences under path decompositions") {
    auto star_path = [](const MotzkinPath& a, const MotzkinPath& b) {
        std::vector<Step> s{Step::Up};
        s.insert(s.end(), a.steps().begin(), a.steps().end());
        s.push_back(Step::Down);
        s.insert(s.end(), b.steps().begin(), b.steps().end());
        return MotzkinPath(std::move(s));
    };
    for (int n1 = 0; n1 <= 4; ++n1)
        for_each_motzkin_path(n1, [&](const MotzkinPath& p1) {
            // L-prefix
            std::vector<Step> ls{Step::Level};
            ls.insert(ls.end(), p1.steps().begin(), p1.steps().end());
            const MotzkinPath lp{ls};
            for (int k = 1; k <= 16; ++k)
                CHECK(tau_k_path(lp, k) == (k == 1 ? 1 : 0) + tau_k_path(p1, k));
            for (int n2 = 0; n2 <= 3; ++n2)
                for_each_motzkin_path(n2, [&](const MotzkinPath& p2) {
                    const auto s = star_path(p1, p2);
                    for (int k = 1; k <= 16; ++k) {
                        const std::uint64_t rhs = (k == 1 ? 1u : 0u) + (k <= 2 ? 1u : 0u) +
                                                  tau_k_path(p1, k - 2) +
                                                  2 * tau_k_path(p1, k - 1) +
                                                  tau_k_path(p1, k) + tau_k_path(p2, k);
                        CHECK(tau_k_path(s, k) == rhs);
                    }
                });
        });
}

TEST_CASE("phi maps the worked example") {
    CHECK(phi(MotzkinPath::parse("ULUDDLUD")) == Permutation::parse("52431687"));
    CHECK(phi(levels(4)) == Permutation::identity(4));
    CHECK(phi(MotzkinPath::parse("UD")) == Permutation::parse("21"));
    CHECK(phi_inverse(Permutation::parse("52431687")) == MotzkinPath::parse("ULUDDLUD"));
    CHECK(phi_inverse(Permutation::identity(3)) == levels(3));
    CHECK(phi_inverse(Permutation::parse("21")) == MotzkinPath::parse("UD"));
    CHECK_THROWS_AS(phi_inverse(Permutation::parse("231")), std::domain_error);
    // 563412 is an involution but contains 3412.
    CHECK_THROWS_AS(phi_inverse(Permutation::parse("563412")), std::domain_error);
}

TEST_CASE("phi is a tau-preserving bijection at small lengths") {
    for (int n = 0; n <= 8; ++n) {
        std::set<Permutation> image;
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            const Permutation q = phi(p);
            CHECK(q.is_involution());
            CHECK(avoids(q, Permutation::parse("3412")));
            image.insert(q);
            for (int k = 1; k <= 2 * n; ++k) CHECK(tau_k(q, k) == tau_k_path(p, k));
            CHECK(phi_inverse(q) == p);
        });
        const auto& all = involutions_3412(n);
        CHECK(image.size() == all.size());
        for (const auto& q : all) CHECK(image.count(q) == 1);
    }
}

TEST_CASE("reverse complement commutes with phi") {
    CHECK(rc_path(MotzkinPath::parse("ULUUDLUUDDLLDDLUD")) ==
          MotzkinPath::parse("UDLUULLUUDDLUDDLD"));
    CHECK(rc_path(levels(5)) == levels(5));
    CHECK(rc_path(MotzkinPath::parse("UD")) == MotzkinPath::parse("UD"));
    for (int n = 0; n <= 8; ++n)
        for_each_motzkin_path(n, [&](const MotzkinPath& p) {
            CHECK(phi(rc_path(p)) == reverse_complement(phi(p)));
        });
}
