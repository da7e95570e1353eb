#include "tanglekit/minor_moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tanglekit/errors.hpp"
#include "tanglekit/limits.hpp"
#include "tanglekit/parallel.hpp"

namespace tanglekit {

std::string removal_kind_name(RemovalKind k) {
    return k == RemovalKind::Delete ? "delete" : "contract";
}

Matroid apply_removal(const Matroid& m, Removal r) {
    Mask bit = Mask(1) << r.element;
    if (r.kind == RemovalKind::Delete) return minor(m, bit, 0);
    return minor(m, 0, bit);
}

namespace {

std::vector<Mask> antichain_of(std::vector<Mask> family) {
    std::sort(family.begin(), family.end(),
              [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> maximal;
    for (Mask s : family) {
        bool dominated = false;
        for (Mask t : maximal)
            if (subset_of(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace

Tangle induce_up(const Matroid& m, const std::vector<Removal>& path,
                 const Tangle& minor_tangle) {
    // Walk the path to find which host elements survive.
    Mask keep = m.ground();
    {
        Matroid cur = m;
        for (Removal r : path) {
            int host_index = bits_of(keep)[r.element];
            keep &= ~(Mask(1) << host_index);
            cur = apply_removal(cur, r);
        }
        if (cur.labels() != minor_tangle.matroid.labels())
            throw DomainError("tangle does not belong to the minor reached by the path");
    }
    if (path.empty()) return minor_tangle;

    int k = minor_tangle.order;
    Mask full = m.ground();
    std::vector<Mask> family;
    for (Mask a : separations(m, k)) {
        Mask b = full & ~a;
        bool sa = is_small(minor_tangle, compress_mask(a & keep, keep));
        bool sb = is_small(minor_tangle, compress_mask(b & keep, keep));
        if (sa) family.push_back(a);
        if (sb) family.push_back(b);
        if (!sa && !sb)
            throw DomainError("minor tangle orients no side of a host separation");
    }
    Tangle out{m, k, antichain_of(family)};
    if (auto v = verify_tangle(out))
        throw DomainError("induced family violates axiom " + v->axiom +
                          "; the minor tangle is not a tangle");
    return out;
}

GeneratedOutcome generated_tangle(const Matroid& m, const Tangle& t, Removal r) {
    Matroid n = apply_removal(m, r);
    Mask keep = m.ground() & ~(Mask(1) << r.element);
    GeneratedOutcome out;
    for (const Tangle& cand : enumerate_tangles(n, t.order)) {
        bool contains = true;
        for (Mask h : t.maximal_small) {
            if (!is_small(cand, compress_mask(h & keep, keep))) {
                contains = false;
                break;
            }
        }
        if (contains) {
            ++out.candidates;
            if (out.candidates == 1) out.tangle = cand;
        }
    }
    if (out.candidates == 1) {
        out.status = GeneratedOutcome::Status::Unique;
    } else {
        out.status = out.candidates == 0 ? GeneratedOutcome::Status::None
                                         : GeneratedOutcome::Status::Multiple;
        out.tangle.reset();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Determined families
// ---------------------------------------------------------------------------

namespace {

struct ContextData {
    Matroid n;          // the minor
    Mask keep = 0;      // surviving host elements
    Mask flat_rest = 0; // F - {a}, minor indexing
    Mask outside = 0;   // E(M) - F, minor indexing
    bool titanic = false;
};

ContextData prepare_context(const Matroid& m, const Tangle& t, const FlatContext& ctx) {
    Mask bit = Mask(1) << ctx.element;
    if (!(ctx.flat & bit)) throw DomainError("removed element must lie in the flat");
    if (ctx.flat_rank > t.order - 2) throw DomainError("flat rank exceeds order-2");
    if (m.lambda(ctx.flat) != ctx.flat_rank)
        throw DomainError("flat's lambda in the host differs from its stated rank");
    if (!is_small(t, ctx.flat)) throw DomainError("flat is not small in the tangle");

    ContextData d;
    d.n = apply_removal(m, {ctx.element, ctx.kind});
    d.keep = m.ground() & ~bit;
    d.flat_rest = compress_mask(ctx.flat & d.keep, d.keep);
    d.outside = compress_mask(m.ground() & ~ctx.flat, d.keep);
    if (d.n.lambda(d.flat_rest) != ctx.flat_rank)
        throw DomainError("removal does not preserve the flat's lambda");
    if (!is_solid(d.n, d.flat_rest))
        throw DomainError("flat minus the element is not solid in the minor");
    d.titanic = is_titanic(d.n, d.flat_rest);
    return d;
}

// Decides the small side for one separation of the minor. Returns the verdict
// in minor indexing.
OrientationVerdict orient_one(const Tangle& t, const ContextData& d, int order, Mask x) {
    Mask full_n = d.n.ground();
    Mask y = full_n & ~x;
    bool weak_x = is_weak(t, expand_mask(x, d.keep));
    bool weak_y = is_weak(t, expand_mask(y, d.keep));
    if (weak_x && weak_y)
        throw InternalError("both sides of a minor separation are weak in the host tangle");
    OrientationVerdict v;
    v.x = x;
    v.y = y;
    if (weak_x || weak_y) {
        v.type = 1;
        v.small_side = weak_x ? x : y;
        v.justification = "weak-side";
        return v;
    }
    v.type = 2;
    int fr = d.n.lambda(d.flat_rest);
    auto canon_small = [&](Mask s) {
        return d.n.lambda(s & d.flat_rest) < fr && d.n.lambda(s & d.outside) <= order - 2;
    };
    bool cx = canon_small(x), cy = canon_small(y);
    if (cx == cy)
        throw DomainError("flat context fails to discriminate an unoriented separation");
    v.small_side = cx ? x : y;
    v.justification = "canon-Y";
    return v;
}

}  // namespace

OrientationVerdict classify_separation(const Matroid& m, const Tangle& t, Removal r,
                                       Mask x_in_minor,
                                       const std::optional<FlatContext>& ctx) {
    Mask keep = m.ground() & ~(Mask(1) << r.element);
    Matroid n = apply_removal(m, r);
    if (n.lambda(x_in_minor) > t.order - 2)
        throw DomainError("not a low-order separation of the minor");
    Mask y = n.ground() & ~x_in_minor;
    bool weak_x = is_weak(t, expand_mask(x_in_minor, keep));
    bool weak_y = is_weak(t, expand_mask(y, keep));
    if (weak_x && weak_y)
        throw InternalError("both sides of a minor separation are weak in the host tangle");
    if (weak_x || weak_y) {
        OrientationVerdict v;
        v.x = x_in_minor;
        v.y = y;
        v.type = 1;
        v.small_side = weak_x ? x_in_minor : y;
        v.justification = "weak-side";
        return v;
    }
    if (!ctx) throw DomainError("unoriented separation needs a flat context");
    if (ctx->element != r.element || ctx->kind != r.kind)
        throw DomainError("flat context does not match the removal");
    ContextData d = prepare_context(m, t, *ctx);
    return orient_one(t, d, t.order, x_in_minor);
}

DeterminedOutcome determined_family(const Matroid& m, const Tangle& t,
                                    const FlatContext& ctx) {
    ContextData d = prepare_context(m, t, ctx);
    int k = t.order;
    std::vector<Mask> family;
    for (Mask a : separations(d.n, k)) {
        OrientationVerdict v = orient_one(t, d, k, a);
        family.push_back(v.small_side);
    }
    Tangle cand{d.n, k, antichain_of(family)};
    DeterminedOutcome out;
    if (auto violation = verify_tangle(cand)) {
        if (d.titanic)
            throw InternalError(
                "determined family of a titanic context failed verification on axiom " +
                violation->axiom);
        out.failure = violation;
        return out;
    }
    out.tangle = cand;
    return out;
}

// ---------------------------------------------------------------------------
// The reduction loop
// ---------------------------------------------------------------------------

namespace {

struct StepPick {
    Removal removal;
    std::string rule;
    Tangle tangle;
};

// Tries the context; falls back to enumeration for the same removal. Returns
// the generated tangle only if it exists, is unique, and keeps the breadth.
std::optional<Tangle> try_removal(const Matroid& m, const Tangle& t,
                                  const std::optional<FlatContext>& ctx, Removal r,
                                  int base_breadth) {
    if (ctx) {
        try {
            DeterminedOutcome out = determined_family(m, t, *ctx);
            if (out.tangle && breadth(*out.tangle).value == base_breadth) return out.tangle;
            if (out.tangle) return std::nullopt;  // tangle exists but breadth dropped
        } catch (const DomainError&) {
            // context hypotheses failed; fall through to ground truth
        }
    }
    GeneratedOutcome gen = generated_tangle(m, t, r);
    if (gen.status != GeneratedOutcome::Status::Unique) return std::nullopt;
    if (breadth(*gen.tangle).value != base_breadth) return std::nullopt;
    return gen.tangle;
}

std::optional<StepPick> find_step(const Matroid& m, const Tangle& t, const Matroid& tm,
                                  int base_breadth) {
    int n = m.size();

    // Loops of the tangle matroid can go.
    Mask loops = 0;
    for (int i = 0; i < n; ++i)
        if (tm.rank_of(Mask(1) << i) == 0) loops |= Mask(1) << i;
    if (loops) {
        std::optional<StepPick> pick;
        for_each_bit(loops, [&](int a) {
            if (pick) return;
            Removal r{a, RemovalKind::Delete};
            FlatContext ctx{loops, 0, a, RemovalKind::Delete};
            if (auto got = try_removal(m, t, ctx, r, base_breadth))
                pick = StepPick{r, "rank0-loop", *got};
        });
        if (pick) return pick;
    }

    // Small side of a 1- or 2-separation when the matroid is not 3-connected.
    if (!is_tutte_3_connected(m)) {
        Mask full = m.ground();
        std::optional<StepPick> pick;
        for (Mask a = 1; a < (Mask(1) << (n - 1)) && !pick; ++a) {
            Mask b = full & ~a;
            if (m.lambda(a) != 1 || popcount(a) < 2 || popcount(b) < 2) continue;
            Mask side = is_small(t, a) ? a : (is_small(t, b) ? b : 0);
            if (!side) continue;
            // The rank-1 flat of the tangle matroid around the small side.
            Mask flat = closure(tm, side);
            if (tm.rank_of(flat) != 1) continue;
            for_each_bit(flat, [&](int e) {
                if (pick) return;
                for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                    Matroid cand = apply_removal(m, {e, kind});
                    if (!is_connected(cand)) continue;
                    FlatContext ctx{flat, 1, e, kind};
                    if (auto got = try_removal(m, t, ctx, {e, kind}, base_breadth)) {
                        pick = StepPick{{e, kind}, "non3conn-tutte", *got};
                        return;
                    }
                }
            });
        }
        if (pick) return pick;
    }

    // 3-connected but some 3-separation has two big sides.
    if (is_tutte_3_connected(m) && !is_weakly_4_connected(m)) {
        Mask full = m.ground();
        Mask small_side = 0;
        for (Mask a = 1; a < (Mask(1) << (n - 1)) && !small_side; ++a) {
            Mask b = full & ~a;
            if (m.lambda(a) != 2 || popcount(a) < 5 || popcount(b) < 5) continue;
            small_side = is_small(t, a) ? a : b;
        }
        if (small_side) {
            Mask flat = closure(tm, small_side);
            BoundaryProfile profile = boundary_profile(m, flat);
            Mask witness = breadth_of_tangle_matroid(tm, t.order).witness;

            auto attempt_guts = [&](Mask candidates, RemovalKind kind,
                                    const char* rule) -> std::optional<StepPick> {
                std::optional<StepPick> pick;
                for_each_bit(candidates & ~witness, [&](int a) {
                    if (pick) return;
                    FlatContext ctx{flat, 2, a, kind};
                    if (auto got = try_removal(m, t, ctx, {a, kind}, base_breadth))
                        pick = StepPick{{a, kind}, rule, *got};
                });
                return pick;
            };

            if (m.rank_of(flat) == 2) {
                if (auto pick = attempt_guts(profile.guts, RemovalKind::Delete, "rank2-guts"))
                    return pick;
            } else if (m.corank_of(flat) == 2) {
                if (auto pick = attempt_guts(profile.coguts, RemovalKind::Contract, "dual-of-any"))
                    return pick;
            } else {
                // Hunt for a removal that keeps 3-connectivity and leaves the
                // flat's remainder with interior elements.
                std::optional<StepPick> pick;
                for_each_bit(flat, [&](int a) {
                    if (pick) return;
                    for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                        Matroid cand = apply_removal(m, {a, kind});
                        Mask keep = full & ~(Mask(1) << a);
                        Mask rest = compress_mask(flat & keep, keep);
                        if (!is_tutte_3_connected(cand)) continue;
                        if (cand.lambda(rest) != m.lambda(flat)) continue;
                        if (boundary_profile(cand, rest).interior == 0) continue;
                        FlatContext ctx{flat, 2, a, kind};
                        if (auto got = try_removal(m, t, ctx, {a, kind}, base_breadth)) {
                            pick = StepPick{{a, kind},
                                            kind == RemovalKind::Delete ? "interior-keepint"
                                                                        : "dual-of-any",
                                            *got};
                            return;
                        }
                    }
                });
                if (pick) return pick;
            }
        }
    }

    // Last resort: try everything.
    for (int a = 0; a < n; ++a) {
        for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
            if (auto got = try_removal(m, t, std::nullopt, {a, kind}, base_breadth))
                return StepPick{{a, kind}, "fallback-exhaustive", *got};
        }
    }
    return std::nullopt;
}

}  // namespace

ReductionResult reduce_to_weakly_4_connected(const Matroid& m, const Tangle& t) {
    if (t.order < 4) throw DomainError("reduction needs a tangle of order at least 4");
    int base_breadth = breadth(t).value;
    ReductionResult result{m, t, {}};
    while (!is_weakly_4_connected(result.final_matroid)) {
        Matroid tm = tangle_matroid(result.final_tangle).matroid;
        auto pick = find_step(result.final_matroid, result.final_tangle, tm, base_breadth);
        if (!pick) {
            std::ostringstream dump;
            dump << "no breadth-preserving step exists; order " << t.order << ", breadth "
                 << base_breadth << ", ground set {";
            for (const auto& l : result.final_matroid.labels()) dump << ' ' << l;
            dump << " }";
            throw InternalError(dump.str());
        }
        result.steps.push_back(TraceStep{result.final_matroid.label(pick->removal.element),
                                         pick->removal.kind, pick->rule, base_breadth});
        result.final_tangle = pick->tangle;
        result.final_matroid = pick->tangle.matroid;
    }
    return result;
}

CriticalityReport is_breadth_critical_one_step(const Matroid& m, const Tangle& t) {
    int n = m.size();
    CriticalityReport rep;
    rep.base_breadth = breadth(t).value;
    rep.rows.resize(2 * n);
    parallel_for_index(2 * n, [&](std::int64_t i) {
        Removal r{static_cast<int>(i / 2),
                  (i % 2 == 0) ? RemovalKind::Delete : RemovalKind::Contract};
        RemovalRow row;
        row.removal = r;
        GeneratedOutcome out = generated_tangle(m, t, r);
        row.status = out.status;
        if (out.status == GeneratedOutcome::Status::Unique)
            row.breadth = breadth(*out.tangle).value;
        rep.rows[i] = row;
    });
    rep.critical = true;
    for (const auto& row : rep.rows)
        if (row.status == GeneratedOutcome::Status::Unique && row.breadth >= rep.base_breadth)
            rep.critical = false;
    return rep;
}

namespace {

std::string fingerprint(const Tangle& t) {
    std::string key;
    const auto& tab = t.matroid.table();
    key.assign(tab.begin(), tab.end());
    key += '|';
    key += static_cast<char>(t.order);
    for (Mask h : t.maximal_small) {
        key += ',';
        key += std::to_string(h);
    }
    return key;
}

}  // namespace

RecursiveCriticality is_breadth_critical_recursive(const Matroid& m, const Tangle& t,
                                                   long node_budget) {
    RecursiveCriticality rep;
    rep.critical = true;
    rep.complete = true;
    Tangle root{m, t.order, t.maximal_small};
    int base = breadth(root).value;
    std::map<std::string, bool> seen;
    std::vector<Tangle> stack{root};
    seen[fingerprint(root)] = true;
    while (!stack.empty()) {
        if (++rep.nodes > node_budget) {
            rep.complete = false;
            break;
        }
        Tangle cur = stack.back();
        stack.pop_back();
        int n = cur.matroid.size();
        for (int a = 0; a < n && rep.critical; ++a) {
            for (RemovalKind kind : {RemovalKind::Delete, RemovalKind::Contract}) {
                GeneratedOutcome out = generated_tangle(cur.matroid, cur, {a, kind});
                if (out.status != GeneratedOutcome::Status::Unique) continue;
                if (breadth(*out.tangle).value >= base) {
                    rep.critical = false;
                    break;
                }
                std::string key = fingerprint(*out.tangle);
                if (!seen.count(key)) {
                    seen[key] = true;
                    stack.push_back(*out.tangle);
                }
            }
        }
        if (!rep.critical) break;
    }
    return rep;
}

}  // namespace tanglekit
