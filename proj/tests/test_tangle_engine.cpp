#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/tangle.hpp"

using namespace tanglekit;

TEST_CASE("separations") {
    Matroid u37 = make_uniform(3, 7);
    auto seps = separations(u37, 4);
    CHECK(seps.size() == 29);  // empty set, 7 singletons, 21 pairs
    for (Mask a : seps) CHECK(popcount(a) <= 2);

    Matroid k4 = k4_labeled();
    auto s3 = separations(k4, 3);
    for (int e = 0; e < 6; ++e)
        CHECK(std::count(s3.begin(), s3.end(), Mask(1) << e) == 1);
    Mask triangle = k4.mask_of_labels({"a", "b", "e"});
    CHECK(std::count(s3.begin(), s3.end(), triangle) == 0);

    CHECK(separations(u37, 1).empty());
}

TEST_CASE("verify_tangle") {
    Matroid u37 = make_uniform(3, 7);
    std::vector<Mask> closure_family;
    for (Mask a = 0; a <= u37.ground(); ++a) {
        if (popcount(a) <= 2) closure_family.push_back(a);
        if (a == u37.ground()) break;
    }
    CHECK_FALSE(verify_tangle(u37, 4, closure_family).has_value());

    Mask rest = u37.ground() & ~Mask(1);
    auto v = verify_tangle(u37, 4, {rest});
    REQUIRE(v.has_value());
    CHECK(v->axiom == "T4");
    CHECK(v->witnesses == std::vector<Mask>{Mask(1)});

    // Remove one pair entirely: neither it nor its complement is covered.
    std::vector<Mask> gappy;
    Mask missing = u37.mask_of_labels({"e1", "e2"});
    for (Mask a : closure_family)
        if (!subset_of(missing, a) || a != missing) {
            if (a == missing) continue;
            gappy.push_back(a);
        }
    auto v2 = verify_tangle(u37, 4, gappy);
    REQUIRE(v2.has_value());
    CHECK(v2->axiom == "T2");
}

TEST_CASE("enumeration on closed forms") {
    Matroid u37 = make_uniform(3, 7);
    auto tangles = enumerate_tangles(u37, 4);
    REQUIRE(tangles.size() == 1);
    CHECK(tangles[0].maximal_small.size() == 21);
    for (Mask h : tangles[0].maximal_small) CHECK(popcount(h) == 2);

    CHECK(enumerate_tangles(u37, 1).size() == 1);
    CHECK(enumerate_tangles(u37, 1)[0].maximal_small.empty());

    CHECK(enumerate_tangles(sec9_matroid(6), 4).size() == 1);
}

TEST_CASE("enumeration equals raw orientation search") {
    for (const auto& e : standard_instances(8)) {
        for (int k = 2; k <= 4; ++k) {
            auto fast = enumerate_tangles(e.matroid, k);
            auto slow = tktest::brute_force_tangles(e.matroid, k);
            REQUIRE_MESSAGE(fast.size() == slow.size(), e.name << " order " << k);
            for (size_t i = 0; i < fast.size(); ++i)
                CHECK(same_tangle(fast[i], slow[i]));
            for (const auto& t : fast) CHECK_FALSE(verify_tangle(t).has_value());
        }
    }
}

TEST_CASE("membership") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t = enumerate_tangles(u37, 4)[0];
    auto single = tangle_membership(t, Mask(1));
    CHECK(single.weak);
    REQUIRE(single.small.has_value());
    CHECK(*single.small);

    Mask five = u37.mask_of_labels({"e1", "e2", "e3", "e4", "e5"});
    auto big = tangle_membership(t, five);
    CHECK_FALSE(big.weak);  // strong
    REQUIRE(big.small.has_value());
    CHECK_FALSE(*big.small);  // large

    // Order-2 component tangle: high-connectivity subsets of the far side are
    // weak but outside the small/large dichotomy.
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(3, 7));
    auto twos = enumerate_tangles(sum, 2);
    REQUIRE(twos.size() == 2);
    Mask part1 = sum.mask_of_labels({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
    const Tangle& pointing_away = is_weak(twos[0], part1) ? twos[0] : twos[1];
    Mask probe = sum.mask_of_labels({"e1", "e2", "e3", "e4"});
    auto mem = tangle_membership(pointing_away, probe);
    CHECK(mem.weak);
    CHECK_FALSE(mem.small.has_value());
}

TEST_CASE("tangle matroid") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t = enumerate_tangles(u37, 4)[0];
    CHECK(same_matroid(tangle_matroid(t).matroid, u37));

    // Order-2 component tangle: the captured side is a parallel class, the
    // rest are loops.
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    auto twos = enumerate_tangles(sum, 2);
    REQUIRE(twos.size() == 1);
    Matroid tm = tangle_matroid(twos[0]).matroid;
    CHECK(tm.rank() == 1);
    Mask part1 = sum.mask_of_labels({"e1", "e2", "e3", "e4", "e5", "e6", "e7"});
    for_each_bit(part1, [&](int i) { CHECK(tm.rank_of(Mask(1) << i) == 1); });
    CHECK(tm.rank_of(Mask(1) << 7) == 0);
    CHECK(tm.rank_of(part1) == 1);
}

TEST_CASE("breadth") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t = enumerate_tangles(u37, 4)[0];
    auto cert = breadth(t);
    CHECK(cert.value == 7);
    CHECK(cert.witness == u37.ground());

    CHECK(breadth(enumerate_tangles(sec9_matroid(6), 4)[0]).value == 12);

    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    CHECK(breadth(enumerate_tangles(sum, 2)[0]).value == 7);

    // Order 1: the empty tangle's matroid is all loops, so everything counts.
    auto t1 = enumerate_tangles(u37, 1);
    REQUIRE(t1.size() == 1);
    CHECK(breadth(t1[0]).value == 7);
}

TEST_CASE("breadth agrees with exhaustive search") {
    for (const auto& e : standard_instances(9)) {
        for (int k = 2; k <= 4; ++k) {
            for (const Tangle& t : enumerate_tangles(e.matroid, k)) {
                Matroid tm = tangle_matroid(t).matroid;
                Mask least = 0;
                int expect = tktest::brute_force_breadth(tm, k, &least);
                auto cert = breadth(t);
                CHECK_MESSAGE(cert.value == expect, e.name << " order " << k);
                CHECK_MESSAGE(cert.witness == least, e.name << " witness tie-break");
            }
        }
    }
}

TEST_CASE("cover size") {
    Matroid u37 = make_uniform(3, 7);
    CHECK(cover_size(enumerate_tangles(u37, 4)[0]).value == 4);

    Matroid k4 = k4_labeled();
    auto t3 = enumerate_tangles(k4, 3);
    REQUIRE(t3.size() == 1);
    auto cs = cover_size(t3[0]);
    CHECK(cs.value == 6);
    CHECK_FALSE(cs.order2_caveat);

    // An order-2 tangle whose small sets miss the captured component.
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(3, 7));
    auto twos = enumerate_tangles(sum, 2);
    REQUIRE(twos.size() == 2);
    CHECK_THROWS_AS(cover_size(twos[0]), DomainError);
}

TEST_CASE("truncation") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t4 = enumerate_tangles(u37, 4)[0];
    Tangle t3 = truncate_tangle(t4, 3);
    CHECK(t3.order == 3);
    for (Mask h : t3.maximal_small) CHECK(popcount(h) == 1);
    CHECK(same_matroid(tangle_matroid(t3).matroid, make_uniform(2, 7)));
    CHECK_THROWS_AS(truncate_tangle(t4, 4), DomainError);
    CHECK_THROWS_AS(truncate_tangle(t4, 1), DomainError);
    CHECK(breadth(t3).value >= breadth(t4).value);
}

TEST_CASE("tangles from connected sets") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t4 = enumerate_tangles(u37, 4)[0];
    Tangle tz = tangle_from_k_connected_set(u37, u37.ground(), 4);
    CHECK(same_tangle(tz, t4));

    Mask six = u37.mask_of_labels({"e1", "e2", "e3", "e4", "e5", "e6"});
    CHECK_THROWS_AS(tangle_from_k_connected_set(u37, six, 4), DomainError);
    CHECK_THROWS_AS(tangle_from_k_connected_set(u37, u37.ground(), 2), DomainError);
}
