#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/json_io.hpp"
#include "tanglekit/minor_moves.hpp"

using namespace tanglekit;

TEST_CASE("induce_up") {
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    int coloop = 7;
    Matroid n = apply_removal(sum, {coloop, RemovalKind::Contract});
    Tangle tn = enumerate_tangles(n, 4)[0];
    Tangle lifted = induce_up(sum, {{coloop, RemovalKind::Contract}}, tn);
    CHECK_FALSE(verify_tangle(lifted).has_value());
    // The extra element is a loop of the lifted tangle matroid.
    Matroid tm = tangle_matroid(lifted).matroid;
    CHECK(tm.rank_of(Mask(1) << coloop) == 0);

    CHECK(same_tangle(induce_up(sum, {}, lifted), lifted));

    // A non-tangle of the minor is rejected.
    Tangle bogus = tn;
    bogus.maximal_small.clear();
    CHECK_THROWS_AS(induce_up(sum, {{coloop, RemovalKind::Contract}}, bogus), DomainError);
}

TEST_CASE("generated tangles on the golden instance") {
    Matroid m = sec9_matroid(6);
    Tangle t = enumerate_tangles(m, 4)[0];
    int a = m.index_of("a");

    auto con = generated_tangle(m, t, {a, RemovalKind::Contract});
    REQUIRE(con.status == GeneratedOutcome::Status::Unique);
    CHECK(breadth(*con.tangle).value <= 11);

    auto del = generated_tangle(m, t, {a, RemovalKind::Delete});
    REQUIRE(del.status == GeneratedOutcome::Status::Unique);
    CHECK(breadth(*del.tangle).value < 12);

    // Deleting a loop of the tangle matroid keeps the breadth.
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    Tangle ts = enumerate_tangles(sum, 4)[0];
    auto loopgen = generated_tangle(sum, ts, {7, RemovalKind::Delete});
    REQUIRE(loopgen.status == GeneratedOutcome::Status::Unique);
    CHECK(breadth(*loopgen.tangle).value == breadth(ts).value);
}

TEST_CASE("classify_separation") {
    Matroid m = sec9_matroid(6);
    Tangle t = enumerate_tangles(m, 4)[0];
    int a = m.index_of("a");
    Removal r{a, RemovalKind::Contract};
    Matroid n = apply_removal(m, r);
    Mask quad = m.mask_of_labels({"a", "b", "c", "d"});
    FlatContext ctx{quad, 2, a, RemovalKind::Contract};

    int type2 = 0;
    std::vector<Mask> family;
    for (Mask s : separations(n, 4)) {
        auto v = classify_separation(m, t, r, s, ctx);
        CHECK((v.small_side == v.x || v.small_side == v.y));
        if (v.type == 2) {
            ++type2;
            CHECK(v.justification == "canon-Y");
            // Both halves sit at a full-order separation through the element.
            Mask keep = m.ground() & ~(Mask(1) << a);
            CHECK(m.lambda(expand_mask(v.x, keep)) == 3);
            CHECK(m.lambda(expand_mask(v.y, keep)) == 3);
        }
        family.push_back(v.small_side);
    }
    // Aggregate of per-separation verdicts equals the generated tangle.
    auto det = determined_family(m, t, ctx);
    REQUIRE(det.tangle.has_value());
    auto gen = generated_tangle(m, t, r);
    REQUIRE(gen.status == GeneratedOutcome::Status::Unique);
    CHECK(tangle_to_json(*det.tangle) == tangle_to_json(*gen.tangle));

    // Unoriented separations exist here, so the context is load-bearing.
    CHECK(type2 > 0);
}

TEST_CASE("determined family agrees with enumeration everywhere") {
    for (const auto& e : standard_instances(8)) {
        for (int k = 3; k <= 4; ++k) {
            for (const Tangle& t : enumerate_tangles(e.matroid, k)) {
                Matroid tm = tangle_matroid(t).matroid;
                for (Mask f : flats(tm)) {
                    int rank = tm.rank_of(f);
                    if (f == 0 || rank > k - 2) continue;
                    if (e.matroid.lambda(f) != rank || !is_small(t, f)) continue;
                    for_each_bit(f, [&](int a) {
                        for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                            Matroid n = apply_removal(e.matroid, {a, kind});
                            Mask keep = e.matroid.ground() & ~(Mask(1) << a);
                            Mask rest = compress_mask(f & keep, keep);
                            if (n.lambda(rest) != rank) continue;
                            if (!is_titanic(n, rest)) continue;
                            FlatContext ctx{f, rank, a, kind};
                            auto det = determined_family(e.matroid, t, ctx);
                            auto gen = generated_tangle(e.matroid, t, {a, kind});
                            if (det.tangle) {
                                REQUIRE(gen.status == GeneratedOutcome::Status::Unique);
                                CHECK(tangle_to_json(*det.tangle) ==
                                      tangle_to_json(*gen.tangle));
                            } else {
                                CHECK(gen.status != GeneratedOutcome::Status::Unique);
                            }
                        }
                    });
                }
            }
        }
    }
}

TEST_CASE("reduction") {
    Matroid m = sec9_matroid(6);
    Tangle t = enumerate_tangles(m, 4)[0];
    auto red = reduce_to_weakly_4_connected(m, t);
    CHECK(red.steps.empty());
    CHECK(same_matroid(red.final_matroid, m));

    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    Tangle ts = enumerate_tangles(sum, 4)[0];
    auto red2 = reduce_to_weakly_4_connected(sum, ts);
    REQUIRE(red2.steps.size() == 1);
    CHECK(red2.steps[0].rule == "rank0-loop");
    CHECK(red2.steps[0].breadth == 7);
    CHECK(same_matroid(red2.final_matroid, make_uniform(3, 7)));
    CHECK(is_weakly_4_connected(red2.final_matroid));

    // Two fat three-separating sides: the interior rule has to fire.
    Matroid bt = truncate_to_rank(direct_sum(make_uniform(3, 6), make_uniform(3, 6)), 4);
    auto tangles = enumerate_tangles(bt, 4);
    REQUIRE(tangles.size() == 2);
    for (const Tangle& tb : tangles) {
        int base = breadth(tb).value;
        auto red3 = reduce_to_weakly_4_connected(bt, tb);
        CHECK(!red3.steps.empty());
        for (const auto& s : red3.steps) CHECK(s.breadth == base);
        CHECK(is_weakly_4_connected(red3.final_matroid));
        CHECK(breadth(red3.final_tangle).value == base);
    }

    Tangle t3 = enumerate_tangles(k4_labeled(), 3)[0];
    CHECK_THROWS_AS(reduce_to_weakly_4_connected(k4_labeled(), t3), DomainError);
}

TEST_CASE("reduction rules fire on both sides of duality") {
    // A point doubled on a line: the 2-separation rule, deletion side.
    Matroid u37 = make_uniform(3, 7);
    Matroid par = principal_extension(u37, u37.mask_of_labels({"e1"}), "p1");
    auto red = reduce_to_weakly_4_connected(par, enumerate_tangles(par, 4)[0]);
    REQUIRE(red.steps.size() == 1);
    CHECK(red.steps[0].rule == "non3conn-tutte");
    CHECK(red.steps[0].kind == RemovalKind::Delete);
    CHECK(red.steps[0].breadth == 7);

    // Its dual: the same rule must contract instead.
    Matroid ser = dual(par);
    auto red2 = reduce_to_weakly_4_connected(ser, enumerate_tangles(ser, 4)[0]);
    REQUIRE(red2.steps.size() == 1);
    CHECK(red2.steps[0].rule == "non3conn-tutte");
    CHECK(red2.steps[0].kind == RemovalKind::Contract);

    // A five-point line: guts deletion; in the dual, the coguts contraction.
    Matroid bl = make_uniform(4, 8);
    bl = principal_extension(bl, bl.mask_of_labels({"e1", "e2"}), "x1");
    bl = principal_extension(bl, bl.mask_of_labels({"e1", "e2", "x1"}), "x2");
    bl = principal_extension(bl, bl.mask_of_labels({"e1", "e2", "x1", "x2"}), "x3");
    auto red3 = reduce_to_weakly_4_connected(bl, enumerate_tangles(bl, 4)[0]);
    REQUIRE(red3.steps.size() == 1);
    CHECK(red3.steps[0].rule == "rank2-guts");
    CHECK(red3.steps[0].kind == RemovalKind::Delete);

    Matroid bld = dual(bl);
    auto red4 = reduce_to_weakly_4_connected(bld, enumerate_tangles(bld, 4)[0]);
    REQUIRE(red4.steps.size() == 1);
    CHECK(red4.steps[0].rule == "dual-of-any");
    CHECK(red4.steps[0].kind == RemovalKind::Contract);
    CHECK(breadth(red4.final_tangle).value == 8);
}

TEST_CASE("one-step breadth criticality") {
    Matroid m = sec9_matroid(6);
    Tangle t = enumerate_tangles(m, 4)[0];
    auto rep = is_breadth_critical_one_step(m, t);
    CHECK(rep.critical);
    CHECK(rep.base_breadth == 12);
    CHECK(rep.rows.size() == 28);
    for (const auto& row : rep.rows)
        if (row.status == GeneratedOutcome::Status::Unique) CHECK(row.breadth <= 11);

    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    CHECK_FALSE(is_breadth_critical_one_step(sum, enumerate_tangles(sum, 4)[0]).critical);

    Matroid u37 = make_uniform(3, 7);
    auto rep3 = is_breadth_critical_one_step(u37, enumerate_tangles(u37, 4)[0]);
    CHECK(rep3.critical);
    for (const auto& row : rep3.rows)
        if (row.status == GeneratedOutcome::Status::Unique) CHECK(row.breadth <= 6);
}

TEST_CASE("recursive criticality explorer") {
    Matroid u37 = make_uniform(3, 7);
    Tangle t = enumerate_tangles(u37, 4)[0];
    auto rep = is_breadth_critical_recursive(u37, t, 50);
    CHECK(rep.critical);
    auto tiny = is_breadth_critical_recursive(u37, t, 0);
    CHECK_FALSE(tiny.complete);

    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    CHECK_FALSE(
        is_breadth_critical_recursive(sum, enumerate_tangles(sum, 4)[0], 50).critical);
}

TEST_CASE("trace serialization") {
    Matroid sum = direct_sum(make_uniform(3, 7), make_uniform(1, 1));
    Tangle ts = enumerate_tangles(sum, 4)[0];
    auto red = reduce_to_weakly_4_connected(sum, ts);
    std::string j = trace_to_json(red);
    CHECK(j.find("\"steps\":[{\"element\":\"e1'\",\"kind\":\"delete\",\"rule\":\"rank0-loop\",\"breadth\":7}]") !=
          std::string::npos);
    CHECK(j.find("\"final\":") != std::string::npos);
    CHECK(j.find("\"final_tangle\":") != std::string::npos);
}
