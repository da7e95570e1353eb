#include "tanglekit/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "tanglekit/connectivity.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/json_io.hpp"
#include "tanglekit/limits.hpp"
#include "tanglekit/parallel.hpp"
#include "tanglekit/minor_moves.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

namespace {

struct Ctx {
    SuiteReport& rep;
    const SuiteOptions& opts;
    const std::vector<CorpusEntry>& all;
    long remaining;

    bool spend(long units = 1) {
        if (remaining < units) {
            rep.complete = false;
            return false;
        }
        remaining -= units;
        return true;
    }
    void check(bool cond, const CorpusEntry& e, const std::string& detail) {
        ++rep.checked;
        if (!cond) rep.failures.push_back({e.name, detail});
    }
    void skip() { ++rep.skipped; }

    std::vector<CorpusEntry> sized(int lo, int hi) const {
        std::vector<CorpusEntry> out;
        for (const auto& e : all) {
            if (e.matroid.size() < lo || e.matroid.size() > hi) continue;
            if (!opts.only.empty() &&
                std::find(opts.only.begin(), opts.only.end(), e.name) == opts.only.end())
                continue;
            out.push_back(e);
        }
        return out;
    }
    std::vector<CorpusEntry> standard() const { return sized(1, opts.sampled_max); }
};

std::string set_str(const Matroid& m, Mask a) {
    std::string s = "{";
    for (const auto& l : m.labels_of(a)) s += l + " ";
    s += "}";
    return s;
}

// All masks when small enough, otherwise a deterministic stride sample.
std::vector<Mask> sample_masks(const Matroid& m, const Ctx& ctx) {
    int n = m.size();
    Mask full = m.ground();
    std::vector<Mask> out;
    if (n <= ctx.opts.exhaustive_max) {
        out.reserve(std::size_t(1) << n);
        for (Mask a = 0; a <= full; ++a) {
            out.push_back(a);
            if (a == full) break;
        }
        return out;
    }
    Mask stride = Mask(1) << (n - ctx.opts.exhaustive_max);
    std::mt19937 rng(12345u + static_cast<unsigned>(n));
    for (Mask base = 0; base <= full - stride + 1; base += stride)
        out.push_back(std::min<Mask>(full, base + rng() % stride));
    out.push_back(0);
    out.push_back(full);
    return out;
}

// For suites whose per-mask filter is cheap and selective: every mask.
std::vector<Mask> all_masks(const Matroid& m) {
    std::vector<Mask> out;
    Mask full = m.ground();
    out.reserve(std::size_t(1) << m.size());
    for (Mask a = 0; a <= full; ++a) {
        out.push_back(a);
        if (a == full) break;
    }
    return out;
}

std::vector<Tangle> tangles_in(const Matroid& m, int lo, int hi) {
    std::vector<Tangle> out;
    for (int k = lo; k <= hi; ++k)
        for (const Tangle& t : enumerate_tangles(m, k)) out.push_back(t);
    return out;
}

bool is_tutte_k_connected(const Matroid& m, int k) {
    require_scan_cap(m.size());
    Mask full = m.ground();
    for (Mask a = 1; a < (Mask(1) << (m.size() - 1)); ++a) {
        int l = m.lambda(a);
        for (int j = l + 1; j < k; ++j)
            if (popcount(a) >= j && popcount(full & ~a) >= j) return false;
    }
    return true;
}

// Flat contexts with the removal-side hypotheses verified; fn returns false
// to stop early.
void for_flat_contexts(const Tangle& t, const Matroid& tm,
                       const std::function<bool(const FlatContext&, const Matroid&)>& fn) {
    const Matroid& m = t.matroid;
    for (Mask f : flats(tm)) {
        int rank = tm.rank_of(f);
        if (f == 0 || rank > t.order - 2) continue;
        if (m.lambda(f) != rank || !is_small(t, f)) continue;
        bool go = true;
        for_each_bit(f, [&](int a) {
            if (!go) return;
            for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                Matroid n = apply_removal(m, {a, kind});
                Mask keep = m.ground() & ~(Mask(1) << a);
                Mask rest = compress_mask(f & keep, keep);
                if (n.lambda(rest) != rank) continue;
                if (!is_titanic(n, rest)) continue;
                if (!fn(FlatContext{f, rank, a, kind}, n)) {
                    go = false;
                    return;
                }
            }
        });
        if (!go) break;
    }
}

using SuiteFn = std::function<void(Ctx&)>;

// ---------------------------------------------------------------------------
// Connectivity calculus
// ---------------------------------------------------------------------------

void s2_symmetry(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        Matroid md = dual(m);
        Mask full = m.ground();
        for (Mask a : sample_masks(m, ctx)) {
            if (!ctx.spend()) return;
            ctx.check(m.lambda(a) == m.lambda(full & ~a) && m.lambda(a) == md.lambda(a), e,
                      "lambda symmetry/duality fails on " + set_str(m, a));
        }
    }
}

void s2_submod(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        std::mt19937 rng(7u);
        Mask full = m.ground();
        long trials = std::min<long>(20000, 1L << (2 * std::min(m.size(), 8)));
        for (long i = 0; i < trials; ++i) {
            if (!ctx.spend()) return;
            Mask a = rng() & full, b = rng() & full;
            ctx.check(m.lambda(a) + m.lambda(b) >= m.lambda(a | b) + m.lambda(a & b), e,
                      "submodularity fails on " + set_str(m, a) + ", " + set_str(m, b));
        }
    }
}

void s2_setdiff(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        std::mt19937 rng(11u);
        Mask full = m.ground();
        long trials = std::min<long>(20000, 1L << (2 * std::min(m.size(), 8)));
        for (long i = 0; i < trials; ++i) {
            if (!ctx.spend()) return;
            Mask a = rng() & full, b = rng() & full;
            ctx.check(m.lambda(a) + m.lambda(b) >= m.lambda(a & ~b) + m.lambda(b & ~a), e,
                      "difference form fails on " + set_str(m, a) + ", " + set_str(m, b));
        }
    }
}

void s2_coclos(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        Mask full = m.ground();
        for (int x = 0; x < m.size(); ++x) {
            Mask xbit = Mask(1) << x;
            for (Mask a : sample_masks(m, ctx)) {
                if (a & xbit) continue;
                if (!ctx.spend()) return;
                Mask b = full & ~a & ~xbit;
                bool in_costar = (coclosure(m, a) & xbit) != 0;
                bool in_cl_b = (closure(m, b) & xbit) != 0;
                ctx.check(in_costar == !in_cl_b, e,
                          "coclosure test fails at " + m.label(x) + " with A=" + set_str(m, a));
            }
        }
    }
}

void s2_updown(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (Mask a : sample_masks(m, ctx)) {
            Mask cl = closure(m, a), ccl = coclosure(m, a);
            for_each_bit(m.ground() & ~a, [&](int x) {
                if (!ctx.spend()) return;
                int d = m.lambda(a | (Mask(1) << x)) - m.lambda(a);
                bool in_cl = (cl >> x) & 1, in_ccl = (ccl >> x) & 1;
                int expect = in_cl && in_ccl ? -1 : (!in_cl && !in_ccl ? 1 : 0);
                ctx.check(d == expect, e,
                          "lambda step wrong at " + m.label(x) + " over " + set_str(m, a));
            });
            if (!ctx.rep.complete) return;
        }
    }
}

void s2_tikokino(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 2) {
            ctx.skip();
            continue;
        }
        for (int x = 0; x < m.size(); ++x) {
            Mask xbit = Mask(1) << x;
            if (m.rank_of(xbit) == 0) continue;  // loops excluded
            Matroid n = minor(m, 0, xbit);
            Mask keep = m.ground() & ~xbit;
            for (Mask a : sample_masks(m, ctx)) {
                if (a & xbit) continue;
                if (!ctx.spend()) return;
                int expect = m.lambda(a) - (((closure(m, a) >> x) & 1) ? 1 : 0);
                ctx.check(n.lambda(compress_mask(a, keep)) == expect, e,
                          "contraction lambda wrong at " + m.label(x) + " over " +
                              set_str(m, a));
            }
        }
    }
}

void s2_keepfcl(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 2) {
            ctx.skip();
            continue;
        }
        for (Mask a : sample_masks(m, ctx)) {
            if (!is_fully_closed(m, a) || a == 0 || a == m.ground()) continue;
            for_each_bit(a, [&](int x) {
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    if (!ctx.spend(4)) return;
                    Matroid n = apply_removal(m, {x, kind});
                    Mask keep = m.ground() & ~(Mask(1) << x);
                    ctx.check(is_fully_closed(n, compress_mask(a & keep, keep)), e,
                              "full closure lost after removing " + m.label(x) + " from " +
                                  set_str(m, a));
                }
            });
            if (!ctx.rep.complete) return;
        }
    }
}

void s2_int2(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (Mask a : sample_masks(m, ctx)) {
            if (!ctx.spend()) return;
            int sz = popcount(boundary_profile(m, a).interior);
            ctx.check(sz == 0 || sz >= 2, e, "singleton interior of " + set_str(m, a));
        }
    }
}

void s2_guts(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        Mask full = m.ground();
        for (Mask f : all_masks(m)) {
            if (popcount(f) < 3 || popcount(full & ~f) < 2) continue;
            if (m.lambda(f) != 2 || !is_fully_closed(m, f)) continue;
            if (!ctx.spend(4)) return;
            auto p = boundary_profile(m, f);
            ctx.check((p.guts & p.coguts) == 0, e, "guts meets coguts in " + set_str(m, f));
            if (p.guts && p.coguts)
                ctx.check(popcount(p.guts) == 1 && popcount(p.coguts) == 1, e,
                          "guts/coguts both nonempty but not singletons in " + set_str(m, f));
            bool case_line = m.rank_of(f) == 2 && p.guts == f && !p.coguts && !p.interior;
            bool case_coline = m.corank_of(f) == 2 && p.coguts == f && !p.guts && !p.interior;
            bool case_fan = popcount(f) == 4 && popcount(p.guts) == 1 &&
                            popcount(p.coguts) == 1 && popcount(p.interior) == 2;
            bool case_big = popcount(p.interior) >= 3;
            ctx.check(case_line || case_coline || case_fan || case_big, e,
                      "interior case split fails for " + set_str(m, f));
        }
    }
}

void s2_backend(Ctx& ctx) {
    // Uniform rank two ways: closed form vs generic columns over a prime.
    CorpusEntry probe{"u37", make_uniform(3, 7), {}};
    {
        std::vector<std::vector<int>> cols;
        std::vector<std::string> labels;
        for (int i = 1; i <= 7; ++i) {
            cols.push_back({1, i % 11, i * i % 11});
            labels.push_back("e" + std::to_string(i));
        }
        Matroid vander = make_linear(11, cols, labels);
        Mask full = probe.matroid.ground();
        for (Mask a = 0; a <= full; ++a) {
            if (!ctx.spend()) return;
            ctx.check(probe.matroid.rank_of(a) == vander.rank_of(a), probe,
                      "uniform and linear backends disagree on " + set_str(probe.matroid, a));
            if (a == full) break;
        }
    }
    for (const auto& e : ctx.standard()) {
        if (!ctx.spend(50)) return;
        ctx.check(same_matroid(dual(dual(e.matroid)), e.matroid), e,
                  "double dual is not the identity");
        Matroid as_table = make_rank_table(e.matroid.labels(), e.matroid.table());
        ctx.check(same_matroid(as_table, e.matroid), e, "table rebuild changed ranks");
    }
}

// ---------------------------------------------------------------------------
// Tangle matroid basics
// ---------------------------------------------------------------------------

void s3_tm(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(100)) return;
            try {
                TangleMatroid tm = tangle_matroid(t);  // internal postconditions bite
                ctx.check(tm.matroid.rank() == t.order - 1, e, "tangle matroid rank off");
            } catch (const InternalError& err) {
                ctx.check(false, e, err.what());
            }
        }
    }
}

void s3_hall(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (const Tangle& t : tangles_in(m, 2, 5)) {
            if (!ctx.spend(100)) return;
            Matroid tm = tangle_matroid(t).matroid;
            auto hps = hyperplanes(tm);
            bool covered = false;
            for (size_t i = 0; i < hps.size() && !covered; ++i)
                for (size_t j = i; j < hps.size() && !covered; ++j)
                    for (size_t l = j; l < hps.size(); ++l)
                        if ((hps[i] | hps[j] | hps[l]) == m.ground()) {
                            covered = true;
                            break;
                        }
            ctx.check(!covered, e, "three hyperplanes of a tangle matroid cover the ground");
        }
        // Converse for rank-3 simple instances: no three-line cover forces a
        // unique order-4 tangle whose tangle matroid is the instance itself.
        if (m.rank() == 3 && m.size() >= 4) {
            bool simple = true;
            for (Mask c : circuits(m))
                if (popcount(c) <= 2) simple = false;
            if (!simple) {
                ctx.skip();
                continue;
            }
            auto lines = flats_of_rank(m, 2);
            bool covered = false;
            for (size_t i = 0; i < lines.size() && !covered; ++i)
                for (size_t j = i; j < lines.size() && !covered; ++j)
                    for (size_t l = j; l < lines.size(); ++l)
                        if ((lines[i] | lines[j] | lines[l]) == m.ground()) {
                            covered = true;
                            break;
                        }
            if (covered) {
                ctx.check(enumerate_tangles(m, 4).empty(), e,
                          "line-covered rank-3 matroid still has an order-4 tangle");
                continue;
            }
            if (!ctx.spend(200)) return;
            auto tangles = enumerate_tangles(m, 4);
            ctx.check(tangles.size() == 1, e, "expected a unique order-4 tangle");
            if (tangles.size() == 1)
                ctx.check(same_matroid(tangle_matroid(tangles[0]).matroid, m), e,
                          "tangle matroid differs from the rank-3 source");
        }
    }
}

void s3_weakrank(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(100)) return;
            Matroid tm = tangle_matroid(t).matroid;
            for (Mask a : sample_masks(e.matroid, ctx)) {
                if (!ctx.spend()) return;
                ctx.check((tm.rank_of(a) < t.order - 1) == is_weak(t, a), e,
                          "weak-iff-low-rank fails on " + set_str(e.matroid, a));
            }
            for (Mask f : flats(tm)) {
                if (f == tm.ground()) continue;
                if (!ctx.spend()) return;
                ctx.check(is_small(t, f) && tm.rank_of(f) == e.matroid.lambda(f), e,
                          "proper flat not small with matching lambda: " +
                              set_str(e.matroid, f));
            }
        }
    }
}

void s3_kconn(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() == 1) {
            ctx.skip();
            continue;
        }
        for (int k = 2; k <= 5; ++k) {
            if (m.size() <= 3 * (k - 2) || !is_tutte_k_connected(m, k)) {
                ctx.skip();
                continue;
            }
            if (!ctx.spend(200)) return;
            auto tangles = enumerate_tangles(m, k);
            ctx.check(tangles.size() == 1, e,
                      "k-connected matroid lacks a unique order-" + std::to_string(k) +
                          " tangle");
            if (tangles.size() != 1) continue;
            Matroid tm = tangle_matroid(tangles[0]).matroid;
            bool uniform = true;
            for (Mask a : sample_masks(m, ctx))
                if (tm.rank_of(a) != std::min(popcount(a), k - 1)) uniform = false;
            ctx.check(uniform, e, "tangle matroid is not the uniform one");
            ctx.check(breadth(tangles[0]).value == m.size(), e,
                      "breadth differs from the ground-set size");
        }
    }
}

void s3_getkcon(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(200)) return;
            auto cert = breadth(t);
            if (popcount(cert.witness) < t.order - 1) {
                ctx.skip();
                continue;
            }
            ctx.check(is_k_connected_set(e.matroid, cert.witness, t.order).ok, e,
                      "breadth witness is not a connected set at the tangle's order");
        }
    }
}

void s3_getktangle(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 3, 5)) {
            auto cert = breadth(t);
            if (popcount(cert.witness) < 3 * t.order - 5) {
                ctx.skip();
                continue;
            }
            if (!ctx.spend(300)) return;
            try {
                Tangle tz = tangle_from_k_connected_set(e.matroid, cert.witness, t.order);
                ctx.check(same_tangle(tz, t), e,
                          "witness-generated tangle differs from the source tangle");
            } catch (const std::exception& err) {
                ctx.check(false, e, std::string("witness generation failed: ") + err.what());
            }
        }
    }
}

void s3_quotient(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(100)) return;
            Matroid tm = tangle_matroid(t).matroid;
            std::mt19937 rng(23u);
            Mask full = e.matroid.ground();
            for (Mask a : sample_masks(e.matroid, ctx)) {
                if (!ctx.spend()) return;
                ctx.check(subset_of(closure(e.matroid, a), closure(tm, a)), e,
                          "closure containment fails on " + set_str(e.matroid, a));
                Mask b = a & (rng() & full);
                ctx.check(e.matroid.rank_of(a) - e.matroid.rank_of(b) >=
                              tm.rank_of(a) - tm.rank_of(b),
                          e, "quotient rank gap fails on " + set_str(e.matroid, a));
            }
        }
    }
}

void s3_flatsfc(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(100)) return;
            Matroid tm = tangle_matroid(t).matroid;
            for (Mask f : flats(tm)) {
                if (!ctx.spend()) return;
                ctx.check(is_fully_closed(e.matroid, f), e,
                          "tangle-matroid flat not fully closed: " + set_str(e.matroid, f));
            }
        }
    }
}

void s3_round(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 5)) {
            if (!ctx.spend(100)) return;
            ctx.check(is_round(tangle_matroid(t).matroid), e, "tangle matroid not round");
        }
    }
}

void s3_3con(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        if (e.matroid.size() < 2 || !is_tutte_3_connected(e.matroid)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(e.matroid, 3, 5)) {
            if (!ctx.spend(100)) return;
            ctx.check(is_tutte_3_connected(tangle_matroid(t).matroid), e,
                      "tangle matroid of a 3-connected matroid is not 3-connected");
        }
    }
}

void s3_lines(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            Matroid tm = tangle_matroid(t).matroid;
            auto all_flats = flats(tm);
            std::vector<Mask> solid_lines;
            for (Mask l : all_flats)
                if (tm.rank_of(l) == 2 && is_solid(m, l)) solid_lines.push_back(l);
            for (Mask f : all_flats) {
                if (f == tm.ground() || tm.rank_of(f) < 2 || !is_solid(m, f)) continue;
                for (Mask l : solid_lines) {
                    if (subset_of(l, f)) continue;
                    if (!ctx.spend()) return;
                    Mask meet = f & l;
                    ctx.check(popcount(meet) <= 1, e, "solid flat and line share two elements");
                    if (popcount(meet) == 1) {
                        int a = lowest_bit(meet);
                        Mask abit = Mask(1) << a;
                        bool in_f = (closure(m, f & ~abit) & abit) != 0;
                        bool in_l = (closure(m, l & ~abit) & abit) != 0;
                        ctx.check(in_f && in_l, e,
                                  "shared element not spanned from both sides at " +
                                      m.label(a));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Tangles in minors
// ---------------------------------------------------------------------------

void s4_induce(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 2) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 2, 4)) {
            if (!ctx.spend(50)) return;
            ctx.check(same_tangle(induce_up(m, {}, t), t), e, "empty-path lift changed it");
        }
        for (int a = 0; a < m.size() && a < 3; ++a) {
            for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                Matroid n = apply_removal(m, {a, kind});
                for (const Tangle& tn : tangles_in(n, 2, 4)) {
                    if (!ctx.spend(100)) return;
                    try {
                        Tangle lifted = induce_up(m, {{a, kind}}, tn);
                        ctx.check(!verify_tangle(lifted).has_value(), e, "lift not a tangle");
                    } catch (const std::exception& err) {
                        ctx.check(false, e, std::string("lift failed: ") + err.what());
                    }
                }
            }
        }
        // A generated tangle induces its source back.
        for (const Tangle& t : tangles_in(m, 3, 4)) {
            for (int a = 0; a < m.size() && a < 4; ++a) {
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    if (!ctx.spend(200)) return;
                    auto gen = generated_tangle(m, t, {a, kind});
                    if (gen.status != GeneratedOutcome::Status::Unique) {
                        ctx.skip();
                        continue;
                    }
                    Tangle lifted = induce_up(m, {{a, kind}}, *gen.tangle);
                    ctx.check(same_tangle(lifted, t), e,
                              "generated tangle induces a different tangle");
                }
            }
        }
    }
}

void s4_transitive(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 3) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 3, 4)) {
            int used = 0;
            for (int a = 0; a < m.size() && used < 2; ++a) {
                for (RemovalKind k1 : {RemovalKind::Delete, RemovalKind::Contract}) {
                    if (!ctx.spend(400)) return;
                    auto g1 = generated_tangle(m, t, {a, k1});
                    if (g1.status != GeneratedOutcome::Status::Unique) continue;
                    const Matroid& n1 = g1.tangle->matroid;
                    bool done = false;
                    for (int b = 0; b < n1.size() && !done; ++b) {
                        for (RemovalKind k2 : {RemovalKind::Delete, RemovalKind::Contract}) {
                            auto g2 = generated_tangle(n1, *g1.tangle, {b, k2});
                            if (g2.status != GeneratedOutcome::Status::Unique) continue;
                            Mask keep1 = m.ground() & ~(Mask(1) << a);
                            int b_host = bits_of(keep1)[b];
                            Mask keep = keep1 & ~(Mask(1) << b_host);
                            const Matroid& p = g2.tangle->matroid;
                            int hits = 0;
                            bool match = false;
                            for (const Tangle& cand : enumerate_tangles(p, t.order)) {
                                bool contains = true;
                                for (Mask h : t.maximal_small)
                                    if (!is_small(cand, compress_mask(h & keep, keep))) {
                                        contains = false;
                                        break;
                                    }
                                if (contains) {
                                    ++hits;
                                    match = same_tangle(cand, *g2.tangle);
                                }
                            }
                            ctx.check(hits == 1 && match, e,
                                      "two-step generation is not direct generation");
                            ++used;
                            done = true;
                            break;
                        }
                    }
                }
            }
        }
    }
}

void s4_addweak(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 2) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 3, 4)) {
            for (int a = 0; a < m.size() && a < 4; ++a) {
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    if (!ctx.spend(300)) return;
                    Matroid n = apply_removal(m, {a, kind});
                    Mask keep = m.ground() & ~(Mask(1) << a);
                    Mask full_n = n.ground();
                    for (const Tangle& cand : enumerate_tangles(n, t.order)) {
                        bool via_restriction = true;
                        for (Mask h : t.maximal_small)
                            if (!is_small(cand, compress_mask(h & keep, keep))) {
                                via_restriction = false;
                                break;
                            }
                        bool via_weak = true;
                        for (Mask s : separations(n, t.order)) {
                            for (Mask side : {s, full_n & ~s}) {
                                if (is_weak(t, expand_mask(side, keep)) &&
                                    !is_small(cand, side))
                                    via_weak = false;
                            }
                            if (!via_weak) break;
                        }
                        ctx.check(via_restriction == via_weak, e,
                                  "restriction filter and weak-set filter disagree");
                    }
                }
            }
        }
    }
}

void s4_ambiguous(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 2) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 2, 4)) {
            for (int a = 0; a < m.size(); ++a) {
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    Matroid n = apply_removal(m, {a, kind});
                    Mask keep = m.ground() & ~(Mask(1) << a);
                    for (Mask s : separations(n, t.order)) {
                        if (!ctx.spend()) return;
                        Mask x = expand_mask(s, keep);
                        Mask y = expand_mask(n.ground() & ~s, keep);
                        bool wx = is_weak(t, x), wy = is_weak(t, y);
                        ctx.check(!(wx && wy), e, "both sides weak after a removal");
                        if (!wx && !wy) {
                            bool lam_ok = m.lambda(x) == t.order - 1 &&
                                          m.lambda(y) == t.order - 1;
                            Mask abit = Mask(1) << a;
                            bool cl_ok;
                            if (kind == RemovalKind::Contract)
                                cl_ok = (closure(m, x) & abit) && (closure(m, y) & abit);
                            else
                                cl_ok = (coclosure(m, x) & abit) && (coclosure(m, y) & abit);
                            ctx.check(lam_ok && cl_ok, e,
                                      "unoriented separation lacks the forced geometry");
                        }
                    }
                }
            }
        }
    }
}

void s4_canon(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 3, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            int contexts = 0;
            for_flat_contexts(t, tm, [&](const FlatContext& f, const Matroid& n) {
                if (contexts++ > 6) return false;
                if (!ctx.spend(200)) return false;
                const Matroid& m = e.matroid;
                Mask keep = m.ground() & ~(Mask(1) << f.element);
                Mask rest = compress_mask(f.flat & keep, keep);
                Mask outside = compress_mask(m.ground() & ~f.flat, keep);
                for (Mask s : separations(n, t.order)) {
                    Mask x = s, y = n.ground() & ~s;
                    if (is_weak(t, expand_mask(x, keep)) || is_weak(t, expand_mask(y, keep)))
                        continue;
                    auto qual = [&](Mask side) {
                        return n.lambda(side & rest) < f.flat_rank &&
                               n.lambda(side & outside) <= t.order - 2;
                    };
                    bool qx = qual(x), qy = qual(y);
                    ctx.check(qx != qy, e, "canonical side not unique");
                    if (qx == qy) continue;
                    Mask small = qx ? x : y, big = qx ? y : x;
                    ctx.check(n.lambda(big & rest) >= f.flat_rank &&
                                  n.lambda(big & outside) > t.order - 2 &&
                                  is_small(t, expand_mask(small & outside, keep)),
                              e, "canonical-side structure fails");
                }
                return true;
            });
            if (contexts == 0) ctx.skip();
        }
    }
}

void s4_selection(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 3, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            int contexts = 0;
            for_flat_contexts(t, tm, [&](const FlatContext& f, const Matroid&) {
                if (contexts++ > 8) return false;
                if (!ctx.spend(500)) return false;
                auto det = determined_family(e.matroid, t, f);
                auto gen = generated_tangle(e.matroid, t, {f.element, f.kind});
                if (det.tangle) {
                    ctx.check(gen.status == GeneratedOutcome::Status::Unique &&
                                  tangle_to_json(*det.tangle) == tangle_to_json(*gen.tangle),
                              e, "determined family disagrees with generated tangle");
                } else {
                    ctx.check(gen.status != GeneratedOutcome::Status::Unique, e,
                              "determined family failed although a tangle is generated");
                }
                return true;
            });
            if (contexts == 0) ctx.skip();
        }
    }
}

void s4_titcover(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (Mask a : sample_masks(m, ctx)) {
            if (popcount(a) > 10) continue;  // keep the cover search bounded
            if (!ctx.spend(8)) return;
            ctx.check(is_titanic(m, a) == is_titanic_cover_form(m, a), e,
                      "partition and cover forms disagree on " + set_str(m, a));
        }
    }
}

void s4_tittangle(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 3, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            int contexts = 0;
            for_flat_contexts(t, tm, [&](const FlatContext& f, const Matroid&) {
                if (contexts++ > 8) return false;
                if (!ctx.spend(400)) return false;
                try {
                    auto det = determined_family(e.matroid, t, f);
                    ctx.check(det.tangle.has_value(), e, "titanic context produced no tangle");
                } catch (const std::exception& err) {
                    ctx.check(false, e, std::string("titanic context blew up: ") + err.what());
                }
                return true;
            });
            if (contexts == 0) ctx.skip();
        }
    }
}

// ---------------------------------------------------------------------------
// Breadth preservation under flat contexts
// ---------------------------------------------------------------------------

void for_s5_contexts(Ctx& ctx, long cost,
                     const std::function<void(const CorpusEntry&, const Tangle&,
                                              const Matroid& tm, const FlatContext&,
                                              const Tangle& ta)>& fn) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            int contexts = 0;
            for_flat_contexts(t, tm, [&](const FlatContext& f, const Matroid&) {
                if (contexts++ > 6) return false;
                if (!ctx.spend(cost)) return false;
                auto det = determined_family(e.matroid, t, f);
                if (!det.tangle) return true;  // titanic contexts always succeed
                fn(e, t, tm, f, *det.tangle);
                return true;
            });
            if (contexts == 0) ctx.skip();
        }
    }
}

void s5_freer(Ctx& ctx) {
    for_s5_contexts(ctx, 300,
                    [&](const CorpusEntry& e, const Tangle&, const Matroid& tm,
                        const FlatContext& f, const Tangle& ta) {
                        Matroid tma = tangle_matroid(ta).matroid;
                        Matroid tm_del = minor(tm, Mask(1) << f.element, 0);
                        ctx.check(tm_del.rank() == tma.rank(), e, "freer ranks differ");
                        Mask full = tma.ground();
                        bool contained = true;
                        for (Mask x = 0; x <= full; ++x) {
                            if (tma.rank_of(x) == popcount(x) &&
                                tm_del.rank_of(x) != popcount(x))
                                contained = false;
                            if (x == full) break;
                        }
                        ctx.check(contained, e,
                                  "independent in the generated tangle matroid, "
                                  "dependent after deletion");
                    });
}

void s5_breadthdown(Ctx& ctx) {
    for_s5_contexts(ctx, 400,
                    [&](const CorpusEntry& e, const Tangle& t, const Matroid&,
                        const FlatContext&, const Tangle& ta) {
                        ctx.check(breadth(ta).value <= breadth(t).value, e,
                                  "breadth increased under a generated tangle");
                    });
}

void s5_static(Ctx& ctx) {
    for_s5_contexts(
        ctx, 300,
        [&](const CorpusEntry& e, const Tangle&, const Matroid& tm, const FlatContext& f,
            const Tangle& ta) {
            Matroid tma = tangle_matroid(ta).matroid;
            Matroid tm_del = minor(tm, Mask(1) << f.element, 0);
            Mask keep = e.matroid.ground() & ~(Mask(1) << f.element);
            Mask rest = compress_mask(f.flat & keep, keep);
            Mask outside = compress_mask(e.matroid.ground() & ~f.flat, keep);
            Mask full = tma.ground();
            bool unchanged = true;
            for (Mask x = 0; x <= full; ++x) {
                if (subset_of(rest, x) || subset_of(x, outside))
                    if (tm_del.rank_of(x) != tma.rank_of(x)) unchanged = false;
                if (x == full) break;
            }
            ctx.check(unchanged, e, "protected set changed rank");
        });
}

// ---------------------------------------------------------------------------
// Low-rank flats and removal rules
// ---------------------------------------------------------------------------

void s6_loops(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            bool found = false;
            for (int a = 0; a < e.matroid.size(); ++a) {
                if (tm.rank_of(Mask(1) << a) != 0) continue;
                found = true;
                if (!ctx.spend(300)) return;
                auto gen = generated_tangle(e.matroid, t, {a, RemovalKind::Delete});
                ctx.check(gen.status == GeneratedOutcome::Status::Unique, e,
                          "loop deletion generates no unique tangle");
                if (gen.status == GeneratedOutcome::Status::Unique)
                    ctx.check(breadth(*gen.tangle).value == breadth(t).value, e,
                              "loop deletion changed the breadth");
            }
            if (!found) ctx.skip();
        }
    }
}

void s6_loopsall(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 2, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            Mask loops = 0;
            for (int a = 0; a < e.matroid.size(); ++a)
                if (tm.rank_of(Mask(1) << a) == 0) loops |= Mask(1) << a;
            if (!loops) {
                ctx.skip();
                continue;
            }
            if (!ctx.spend(600)) return;
            Tangle cur = t;
            bool good = true;
            while (good) {
                Matroid cur_tm = tangle_matroid(cur).matroid;
                int loop = -1;
                for (int a = 0; a < cur.matroid.size() && loop < 0; ++a)
                    if (cur_tm.rank_of(Mask(1) << a) == 0) loop = a;
                if (loop < 0) break;
                auto gen = generated_tangle(cur.matroid, cur, {loop, RemovalKind::Delete});
                if (gen.status != GeneratedOutcome::Status::Unique) {
                    good = false;
                    break;
                }
                cur = *gen.tangle;
            }
            ctx.check(good, e, "peeling loops failed to generate");
            if (!good) continue;
            ctx.check(breadth(cur).value == breadth(t).value, e,
                      "peeling loops changed the breadth");
            Matroid final_tm = tangle_matroid(cur).matroid;
            ctx.check(is_connected(final_tm), e, "loopless tangle matroid is not connected");
            Mask keep = 0;
            for (const auto& lbl : cur.matroid.labels())
                keep |= Mask(1) << e.matroid.index_of(lbl);
            int hits = 0;
            bool match = false;
            for (const Tangle& cand : enumerate_tangles(cur.matroid, t.order)) {
                bool contains = true;
                for (Mask h : t.maximal_small)
                    if (!is_small(cand, compress_mask(h & keep, keep))) {
                        contains = false;
                        break;
                    }
                if (contains) {
                    ++hits;
                    match = same_tangle(cand, cur);
                }
            }
            ctx.check(hits == 1 && match, e, "peeled tangle is not directly generated");
            if (!is_connected(e.matroid)) {
                if (!ctx.spend(800)) return;
                ctx.check(!is_breadth_critical_one_step(e.matroid, t).critical, e,
                          "disconnected matroid counted as breadth-critical");
            }
        }
    }
}

void s6_parclass(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 3 || !is_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 3, 4)) {
            Matroid tm = tangle_matroid(t).matroid;
            bool found = false;
            for (Mask f : flats_of_rank(tm, 1)) {
                if (popcount(f) < 2) continue;
                found = true;
                for_each_bit(f, [&](int a) {
                    for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                        if (!ctx.spend(300)) return;
                        Matroid n = apply_removal(m, {a, kind});
                        if (!is_connected(n)) continue;
                        auto gen = generated_tangle(m, t, {a, kind});
                        ctx.check(gen.status == GeneratedOutcome::Status::Unique, e,
                                  "parallel-class removal generated nothing");
                        if (gen.status != GeneratedOutcome::Status::Unique) continue;
                        Matroid tma = tangle_matroid(*gen.tangle).matroid;
                        ctx.check(same_matroid(minor(tm, Mask(1) << a, 0), tma), e,
                                  "tangle matroid is not the deletion");
                        ctx.check(breadth(*gen.tangle).value == breadth(t).value, e,
                                  "breadth moved");
                    }
                });
            }
            if (!found) ctx.skip();
            if (!ctx.rep.complete) return;
        }
    }
}

void s6_tutte(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 3, 4)) {
            if (!ctx.spend(1500)) return;
            bool exists = false;
            for (int a = 0; a < m.size() && !exists; ++a)
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    auto gen = generated_tangle(m, t, {a, kind});
                    if (gen.status == GeneratedOutcome::Status::Unique &&
                        breadth(*gen.tangle).value == breadth(t).value) {
                        exists = true;
                        break;
                    }
                }
            ctx.check(exists, e, "no breadth-preserving removal under a 2-separation");
        }
    }
}

void s6_twotit(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (!is_connected(m)) {
            ctx.skip();
            continue;
        }
        for (Mask a : sample_masks(m, ctx)) {
            if (m.lambda(a) > 1 || popcount(a) > 10) continue;
            if (!ctx.spend(4)) return;
            ctx.check(is_titanic(m, a), e, "2-separating set not titanic: " + set_str(m, a));
        }
    }
}

void s6_threetit(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (Mask a : sample_masks(m, ctx)) {
            if (m.lambda(a) != 2 || popcount(a) > 10) continue;
            if (!ctx.spend(4)) return;
            ctx.check(is_titanic(m, a) == (popcount(a) >= 4), e,
                      "exactly-3-separating titanic test fails on " + set_str(m, a));
        }
    }
}

void s6_intfree(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            Matroid tm = tangle_matroid(t).matroid;
            bool found = false;
            for (Mask f : flats_of_rank(tm, 2)) {
                if (popcount(f) < 3) continue;
                Mask inter = boundary_profile(m, f).interior;
                if (!inter) continue;
                found = true;
                for_each_bit(inter, [&](int a) {
                    if (!ctx.spend(50)) return;
                    ctx.check(is_freely_placed(tm, f, a), e,
                              "interior element not freely placed: " + m.label(a));
                    bool pinned = false;
                    Mask abit = Mask(1) << a;
                    for (Mask fl : flats(tm)) {
                        if (!(fl & abit) || (fl & f) != abit) continue;
                        if (closure(tm, fl & ~abit) & abit) pinned = true;
                    }
                    ctx.check(!pinned, e,
                              "flat criterion disagrees with free placement at " + m.label(a));
                });
            }
            if (!found) ctx.skip();
            if (!ctx.rep.complete) return;
        }
    }
}

void s6_witness(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 4 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            Matroid tm = tangle_matroid(t).matroid;
            auto cert = breadth(t);
            bool found = false;
            for (Mask f : flats_of_rank(tm, 2)) {
                if (popcount(f) < 3) continue;
                found = true;
                if (!ctx.spend(20)) return;
                ctx.check(popcount(cert.witness & f) <= 2, e,
                          "witness meets a line in three elements");
                for_each_bit(cert.witness & f, [&](int a) {
                    for_each_bit(f & ~cert.witness, [&](int b) {
                        if (!is_freely_placed(tm, f, b)) return;
                        if (!ctx.spend(30)) return;
                        Mask u2 = (cert.witness & ~(Mask(1) << a)) | (Mask(1) << b);
                        bool uniform = tm.rank_of(u2) == t.order - 1;
                        std::vector<int> bits = bits_of(u2);
                        std::function<void(size_t, Mask, int)> rec =
                            [&](size_t idx, Mask c, int cnt) {
                                if (!uniform) return;
                                if (cnt == t.order - 1) {
                                    if (tm.rank_of(c) < t.order - 1) uniform = false;
                                    return;
                                }
                                if (idx >= bits.size()) return;
                                rec(idx + 1, c | (Mask(1) << bits[idx]), cnt + 1);
                                rec(idx + 1, c, cnt);
                            };
                        rec(0, 0, 0);
                        ctx.check(uniform, e,
                                  "swapping in a freely placed element broke the witness");
                    });
                });
            }
            if (!found) ctx.skip();
            if (!ctx.rep.complete) return;
        }
    }
}

void s6_keep3con(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 6 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (Mask f : all_masks(m)) {
            if (popcount(f) < 4 || m.lambda(f) != 2 || !is_fully_closed(m, f)) continue;
            Mask guts = boundary_profile(m, f).guts;
            if (!guts) {
                ctx.skip();
                continue;
            }
            for_each_bit(guts, [&](int x) {
                if (!ctx.spend(30)) return;
                ctx.check(is_tutte_3_connected(minor(m, Mask(1) << x, 0)), e,
                          "guts deletion broke 3-connectivity at " + m.label(x));
            });
            if (!ctx.rep.complete) return;
        }
    }
}

void s6_gutsaway(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 6 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            Matroid tm = tangle_matroid(t).matroid;
            bool found = false;
            for (Mask f : flats_of_rank(tm, 2)) {
                if (popcount(f) < 5) continue;
                Mask guts = boundary_profile(m, f).guts;
                if (popcount(guts) < 3) continue;
                found = true;
                bool some_breadth_kept = false;
                for_each_bit(guts, [&](int x) {
                    if (!ctx.spend(500)) return;
                    auto gen = generated_tangle(m, t, {x, RemovalKind::Delete});
                    ctx.check(gen.status == GeneratedOutcome::Status::Unique, e,
                              "guts removal generated nothing at " + m.label(x));
                    if (gen.status != GeneratedOutcome::Status::Unique) return;
                    Matroid tma = tangle_matroid(*gen.tangle).matroid;
                    ctx.check(same_matroid(tma, minor(tm, Mask(1) << x, 0)), e,
                              "guts removal moved the tangle matroid at " + m.label(x));
                    if (breadth(*gen.tangle).value == breadth(t).value)
                        some_breadth_kept = true;
                });
                ctx.check(some_breadth_kept, e, "no guts element preserves breadth");
            }
            if (!found) ctx.skip();
            if (!ctx.rep.complete) return;
        }
    }
}

void s6_keepint(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 7 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            Matroid tm = tangle_matroid(t).matroid;
            bool found = false;
            for (Mask f : flats_of_rank(tm, 2)) {
                if (popcount(f) < 5) continue;
                for_each_bit(f, [&](int a) {
                    Mask abit = Mask(1) << a;
                    Matroid n = minor(m, abit, 0);
                    Mask keep = m.ground() & ~abit;
                    Mask rest = compress_mask(f & keep, keep);
                    if (!is_tutte_3_connected(n)) return;
                    if (n.lambda(rest) != m.lambda(f)) return;
                    if (!boundary_profile(n, rest).interior) return;
                    found = true;
                    if (!ctx.spend(500)) return;
                    auto gen = generated_tangle(m, t, {a, RemovalKind::Delete});
                    ctx.check(gen.status == GeneratedOutcome::Status::Unique &&
                                  breadth(*gen.tangle).value == breadth(t).value,
                              e, "interior-preserving deletion failed at " + m.label(a));
                });
            }
            if (!found) ctx.skip();
            if (!ctx.rep.complete) return;
        }
    }
}

// ---------------------------------------------------------------------------
// Weak 4-connectivity targets and order-4 structure
// ---------------------------------------------------------------------------

void s7_interior(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.size() < 10 || !is_tutte_3_connected(m)) {
            ctx.skip();
            continue;
        }
        for (Mask f : all_masks(m)) {
            if (popcount(f) < 5 || popcount(m.ground() & ~f) < 2) continue;
            if (m.lambda(f) != 2 || !is_fully_closed(m, f)) continue;
            if (m.rank_of(f) <= 2 || m.corank_of(f) <= 2) continue;
            if (!ctx.spend(100)) return;
            bool exists = false;
            for_each_bit(f, [&](int a) {
                if (exists) return;
                Mask abit = Mask(1) << a;
                Mask keep = m.ground() & ~abit;
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    Matroid n = apply_removal(m, {a, kind});
                    if (!is_tutte_3_connected(n)) continue;
                    if (popcount(boundary_profile(n, compress_mask(f & keep, keep)).interior) >=
                        2) {
                        exists = true;
                        return;
                    }
                }
            });
            ctx.check(exists, e, "no removal exposes interior in " + set_str(m, f));
        }
    }
}

void s7_breadthcrit(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            if (!ctx.spend(2000)) return;
            if (is_weakly_4_connected(m)) {
                ctx.check(true, e, "");
                continue;
            }
            bool exists = false;
            for (int a = 0; a < m.size() && !exists; ++a)
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    auto gen = generated_tangle(m, t, {a, kind});
                    if (gen.status == GeneratedOutcome::Status::Unique &&
                        breadth(*gen.tangle).value == breadth(t).value) {
                        exists = true;
                        break;
                    }
                }
            ctx.check(exists, e, "neither weakly 4-connected nor reducible");
        }
    }
}

void s7_reduce(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        for (const Tangle& t : tangles_in(m, 4, 5)) {
            if (!ctx.spend(4000)) return;
            try {
                ReductionResult red = reduce_to_weakly_4_connected(m, t);
                int base = breadth(t).value;
                bool steps_ok = true;
                for (const auto& s : red.steps)
                    if (s.breadth != base) steps_ok = false;
                ctx.check(steps_ok, e, "trace breadth not constant");
                ctx.check(is_weakly_4_connected(red.final_matroid), e,
                          "reduction did not reach weak 4-connectivity");
                ctx.check(breadth(red.final_tangle).value == base, e, "final breadth differs");
                Mask keep = 0;
                for (const auto& lbl : red.final_matroid.labels())
                    keep |= Mask(1) << m.index_of(lbl);
                int hits = 0;
                bool match = false;
                for (const Tangle& cand : enumerate_tangles(red.final_matroid, t.order)) {
                    bool contains = true;
                    for (Mask h : t.maximal_small)
                        if (!is_small(cand, compress_mask(h & keep, keep))) {
                            contains = false;
                            break;
                        }
                    if (contains) {
                        ++hits;
                        match = same_tangle(cand, red.final_tangle);
                    }
                }
                ctx.check(hits == 1 && match, e,
                          "final tangle is not directly generated by the source");
            } catch (const std::exception& err) {
                ctx.check(false, e, std::string("reduction failed: ") + err.what());
            }
        }
    }
}

void s8_onetangle(Ctx& ctx) {
    for (const auto& e : ctx.sized(13, 16)) {
        if (!is_weakly_4_connected(e.matroid)) {
            ctx.skip();
            continue;
        }
        if (!ctx.spend(2000)) return;
        ctx.check(enumerate_tangles(e.matroid, 4).size() == 1, e,
                  "big weakly 4-connected matroid lacks a unique order-4 tangle");
    }
}

void s8_identity(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        const Matroid& m = e.matroid;
        if (m.rank() != 3 || m.size() < 4) {
            ctx.skip();
            continue;
        }
        bool simple = true;
        for (Mask c : circuits(m))
            if (popcount(c) <= 2) simple = false;
        if (!simple) {
            ctx.skip();
            continue;
        }
        auto lines = flats_of_rank(m, 2);
        bool covered = false;
        for (size_t i = 0; i < lines.size() && !covered; ++i)
            for (size_t j = i; j < lines.size() && !covered; ++j)
                for (size_t l = j; l < lines.size(); ++l)
                    if ((lines[i] | lines[j] | lines[l]) == m.ground()) {
                        covered = true;
                        break;
                    }
        if (covered) {
            ctx.skip();
            continue;
        }
        if (!ctx.spend(500)) return;
        auto tangles = enumerate_tangles(m, 4);
        ctx.check(tangles.size() == 1 &&
                      same_matroid(tangle_matroid(tangles[0]).matroid, m),
                  e, "line-free rank-3 matroid is not its own tangle matroid");
    }
}

void s8_alltm(Ctx& ctx) {
    for (const auto& e : ctx.sized(13, 16)) {
        const Matroid& m = e.matroid;
        if (!is_weakly_4_connected(m)) {
            ctx.skip();
            continue;
        }
        if (!ctx.spend(2500)) return;
        auto tangles = enumerate_tangles(m, 4);
        if (tangles.size() != 1) {
            ctx.check(false, e, "expected the unique order-4 tangle");
            continue;
        }
        Matroid tm = tangle_matroid(tangles[0]).matroid;
        ctx.check(tm.rank() == 3, e, "tangle matroid rank is not 3");
        bool simple = true;
        for (Mask c : circuits(tm))
            if (popcount(c) <= 2) simple = false;
        for (Mask line : flats_of_rank(tm, 2)) {
            if (!ctx.spend()) return;
            ctx.check(popcount(line) <= 4, e, "tangle matroid line with five points");
        }
        ctx.check(simple, e, "tangle matroid not simple");
        if (!ctx.spend(2500)) return;
        ctx.check(is_weakly_4_connected(tm), e, "tangle matroid not weakly 4-connected");
        auto own = enumerate_tangles(tm, 4);
        ctx.check(own.size() == 1 && same_matroid(tangle_matroid(own[0]).matroid, tm), e,
                  "tangle matroid is not its own tangle matroid");
    }
}

void s8_breadthroot(Ctx& ctx) {
    for (const auto& e : ctx.sized(13, 16)) {
        if (!is_weakly_4_connected(e.matroid)) {
            ctx.skip();
            continue;
        }
        if (!ctx.spend(2000)) return;
        auto tangles = enumerate_tangles(e.matroid, 4);
        if (tangles.size() != 1) {
            ctx.check(false, e, "expected the unique order-4 tangle");
            continue;
        }
        long b = breadth(tangles[0]).value;
        ctx.check(b * b >= e.matroid.size(), e, "breadth below the square-root bound");
    }
}

void s10_pipeline(Ctx& ctx) {
    for (const auto& e : ctx.sized(1, 16)) {
        const Matroid& m = e.matroid;
        for (const Tangle& t : tangles_in(m, 4, 4)) {
            auto cert = breadth(t);
            if (cert.value < 7) {
                ctx.skip();
                continue;
            }
            if (!ctx.spend(5000)) return;
            Mask z = cert.witness;
            ctx.check(is_k_connected_set(m, z, 4).ok, e, "witness is not 4-connected");
            Tangle tz = tangle_from_k_connected_set(m, z, 4);
            ReductionResult red = reduce_to_weakly_4_connected(m, tz);
            ctx.check(is_weakly_4_connected(red.final_matroid), e, "pipeline end not weak-4");
            auto final_cert = breadth(red.final_tangle);
            ctx.check(final_cert.value >= popcount(z), e, "pipeline lost breadth");
            ctx.check(is_k_connected_set(red.final_matroid, final_cert.witness, 4).ok, e,
                      "final witness is not a 4-connected set");
        }
    }
}

void s11_truncate(Ctx& ctx) {
    for (const auto& e : ctx.standard()) {
        for (const Tangle& t : tangles_in(e.matroid, 3, 5)) {
            for (int to = 2; to <= t.order - 1; ++to) {
                if (!ctx.spend(300)) return;
                try {
                    Tangle tt = truncate_tangle(t, to);  // equality checked inside
                    ctx.check(breadth(tt).value >= breadth(t).value, e,
                              "truncation reduced the breadth");
                } catch (const std::exception& err) {
                    ctx.check(false, e, std::string("truncation failed: ") + err.what());
                }
            }
        }
    }
}

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"S2.symmetry", s2_symmetry},
        {"S2.submod", s2_submod},
        {"S2.setdiff", s2_setdiff},
        {"S2.coclos", s2_coclos},
        {"S2.updown", s2_updown},
        {"S2.tikokino", s2_tikokino},
        {"S2.keepfcl", s2_keepfcl},
        {"S2.int2", s2_int2},
        {"S2.guts", s2_guts},
        {"S2.backend", s2_backend},
        {"S3.tm", s3_tm},
        {"S3.hall", s3_hall},
        {"S3.weakrank", s3_weakrank},
        {"S3.kconn", s3_kconn},
        {"S3.getkcon", s3_getkcon},
        {"S3.getktangle", s3_getktangle},
        {"S3.quotient", s3_quotient},
        {"S3.flatsfc", s3_flatsfc},
        {"S3.round", s3_round},
        {"S3.3con", s3_3con},
        {"S3.lines", s3_lines},
        {"S4.induce", s4_induce},
        {"S4.transitive", s4_transitive},
        {"S4.addweak", s4_addweak},
        {"S4.ambiguous", s4_ambiguous},
        {"S4.canon", s4_canon},
        {"S4.selection", s4_selection},
        {"S4.titcover", s4_titcover},
        {"S4.tittangle", s4_tittangle},
        {"S5.freer", s5_freer},
        {"S5.breadthdown", s5_breadthdown},
        {"S5.static", s5_static},
        {"S6.loops", s6_loops},
        {"S6.loopsall", s6_loopsall},
        {"S6.parclass", s6_parclass},
        {"S6.tutte", s6_tutte},
        {"S6.twotit", s6_twotit},
        {"S6.threetit", s6_threetit},
        {"S6.intfree", s6_intfree},
        {"S6.witness", s6_witness},
        {"S6.keep3con", s6_keep3con},
        {"S6.gutsaway", s6_gutsaway},
        {"S6.keepint", s6_keepint},
        {"S7.interior", s7_interior},
        {"S7.breadthcrit", s7_breadthcrit},
        {"S7.reduce", s7_reduce},
        {"S8.onetangle", s8_onetangle},
        {"S8.identity", s8_identity},
        {"S8.alltm", s8_alltm},
        {"S8.breadthroot", s8_breadthroot},
        {"S10.pipeline", s10_pipeline},
        {"S11.truncate", s11_truncate},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_ids() {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
}

bool suite_exists(const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return true;
    return false;
}

SuiteReport run_suite(const std::string& id, const SuiteOptions& opts) {
    const SuiteFn* fn = nullptr;
    for (const auto& [name, f] : registry())
        if (name == id) fn = &f;
    if (!fn) throw DomainError("unknown suite '" + id + "'");
    SuiteReport rep;
    rep.suite = id;
    auto all = standard_instances(16, opts.include_random);
    Ctx ctx{rep, opts, all, opts.budget};
    auto start = std::chrono::steady_clock::now();
    (*fn)(ctx);
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts) {
    auto ids = suite_ids();
    std::vector<SuiteReport> out(ids.size());
    // Suites are independent; each report lands in its catalog slot, so the
    // merged output does not depend on scheduling.
    parallel_for_index(static_cast<std::int64_t>(ids.size()),
                       [&](std::int64_t i) { out[i] = run_suite(ids[i], opts); });
    return out;
}

std::string suite_report_json(const SuiteReport& rep, bool pretty) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["checked"] = rep.checked;
    j["skipped"] = rep.skipped;
    j["complete"] = rep.complete;
    j["wall_ms"] = rep.wall_ms;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
        nlohmann::ordered_json entry;
        entry["instance"] = f.instance;
        entry["detail"] = f.detail;
        arr.push_back(std::move(entry));
    }
    j["failures"] = std::move(arr);
    return pretty ? j.dump(2) : j.dump();
}

}  // namespace tanglekit
