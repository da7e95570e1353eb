#include "tanglekit/connectivity.hpp"

#include <algorithm>

#include "tanglekit/errors.hpp"
#include "tanglekit/limits.hpp"

namespace tanglekit {

Mask closure(const Matroid& m, Mask a) {
    if (a & ~m.ground()) throw StructuralError("subset mask outside the ground set");
    Mask out = a;
    int r = m.rank_of(a);
    for_each_bit(m.ground() & ~a, [&](int i) {
        if (m.rank_of(a | (Mask(1) << i)) == r) out |= Mask(1) << i;
    });
    return out;
}

Mask coclosure(const Matroid& m, Mask a) {
    if (a & ~m.ground()) throw StructuralError("subset mask outside the ground set");
    Mask out = a;
    int r = m.corank_of(a);
    for_each_bit(m.ground() & ~a, [&](int i) {
        if (m.corank_of(a | (Mask(1) << i)) == r) out |= Mask(1) << i;
    });
    return out;
}

bool is_fully_closed(const Matroid& m, Mask a) {
    return closure(m, a) == a && coclosure(m, a) == a;
}

BoundaryProfile boundary_profile(const Matroid& m, Mask x) {
    Mask y = m.ground() & ~x;
    Mask guts = closure(m, x) & closure(m, y);
    Mask coguts = coclosure(m, x) & coclosure(m, y);
    BoundaryProfile p;
    p.guts = guts & x;
    p.coguts = coguts & x;
    p.interior = x & ~(guts | coguts);
    return p;
}

bool is_solid(const Matroid& m, Mask x) {
    int lx = m.lambda(x);
    bool solid = true;
    for_each_submask(x, [&](Mask a) {
        if (!solid || a > (x ^ a)) return;  // each unordered pair once
        if (m.lambda(a) < lx && m.lambda(x ^ a) < lx) solid = false;
    });
    return solid;
}

bool is_titanic(const Matroid& m, Mask a) {
    int la = m.lambda(a);
    if (la <= 0) return true;
    bool titanic = true;
    for_each_submask(a, [&](Mask x) {
        if (!titanic || m.lambda(x) >= la) return;
        Mask rest = a ^ x;
        for_each_submask(rest, [&](Mask y) {
            if (!titanic || m.lambda(y) >= la) return;
            if (m.lambda(rest ^ y) < la) titanic = false;
        });
    });
    return titanic;
}

bool is_titanic_cover_form(const Matroid& m, Mask a) {
    int la = m.lambda(a);
    if (la <= 0) return true;
    // Maximal subsets of A below the threshold, then look for a covering triple.
    std::vector<Mask> low;
    for_each_submask(a, [&](Mask s) {
        if (m.lambda(s) < la) low.push_back(s);
    });
    std::sort(low.begin(), low.end(),
              [](Mask x, Mask y) { return popcount(x) > popcount(y); });
    std::vector<Mask> maximal;
    for (Mask s : low) {
        bool dominated = false;
        for (Mask t : maximal)
            if (subset_of(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    for (size_t i = 0; i < maximal.size(); ++i)
        for (size_t j = i; j < maximal.size(); ++j)
            for (size_t l = j; l < maximal.size(); ++l)
                if ((maximal[i] | maximal[j] | maximal[l]) == a) return false;
    return true;
}

std::vector<Mask> hyperplanes(const Matroid& m) {
    require_scan_cap(m.size());
    std::vector<Mask> out;
    int target = m.rank() - 1;
    if (target < 0) return out;
    Mask full = m.ground();
    for (Mask a = 0; a <= full; ++a) {
        if (m.rank_of(a) == target && closure(m, a) == a) out.push_back(a);
        if (a == full) break;
    }
    return out;
}

bool is_round(const Matroid& m) {
    auto hps = hyperplanes(m);
    Mask full = m.ground();
    for (size_t i = 0; i < hps.size(); ++i)
        for (size_t j = i; j < hps.size(); ++j)
            if ((hps[i] | hps[j]) == full) return false;
    return true;
}

namespace {

// Scans all proper nonempty subsets, one side per complementary pair.
template <typename Fn>
void for_each_half(const Matroid& m, Fn&& fn) {
    Mask full = m.ground();
    Mask top = Mask(1) << (m.size() - 1);  // fix the last element on the complement side
    for (Mask a = 1; a < top; ++a) fn(a, full & ~a);
}

}  // namespace

bool is_connected(const Matroid& m) {
    require_scan_cap(m.size());
    bool ok = true;
    for_each_half(m, [&](Mask a, Mask) {
        if (m.lambda(a) == 0) ok = false;
    });
    return ok;
}

bool is_tutte_3_connected(const Matroid& m) {
    require_scan_cap(m.size());
    bool ok = true;
    for_each_half(m, [&](Mask a, Mask b) {
        if (!ok) return;
        int l = m.lambda(a);
        if (l == 0) ok = false;
        if (l <= 1 && popcount(a) >= 2 && popcount(b) >= 2) ok = false;
    });
    return ok;
}

bool is_weakly_4_connected(const Matroid& m) {
    if (!is_tutte_3_connected(m)) return false;
    bool ok = true;
    for_each_half(m, [&](Mask a, Mask b) {
        if (!ok) return;
        if (popcount(a) > 4 && popcount(b) > 4 && m.lambda(a) < 3) ok = false;
    });
    return ok;
}

ConnectivityReport connectivity_report(const Matroid& m, const std::vector<int>* svec) {
    require_scan_cap(m.size());
    ConnectivityReport rep;
    rep.connected = is_connected(m);
    rep.tutte_3_connected = rep.connected && is_tutte_3_connected(m);
    rep.weakly_4_connected = rep.tutte_3_connected && is_weakly_4_connected(m);
    if (svec) {
        bool ok = true;
        Mask witness = 0;
        int t = static_cast<int>(svec->size()) - 1;
        for_each_half(m, [&](Mask a, Mask b) {
            if (!ok) return;
            int l = m.lambda(a);
            if (l <= t && popcount(a) > (*svec)[l] && popcount(b) > (*svec)[l]) {
                ok = false;
                witness = a;
            }
        });
        rep.s_connected = ok;
        rep.s_witness = witness;
    }
    return rep;
}

KConnectedVerdict is_k_connected_set(const Matroid& m, Mask z, int k) {
    require_scan_cap(m.size());
    if (z & ~m.ground()) throw StructuralError("subset mask outside the ground set");
    Mask full = m.ground();
    for (Mask a = 0; a <= full; ++a) {
        int bound = std::min({popcount(a & z), popcount(z & ~a), k - 1});
        if (m.lambda(a) < bound) return {false, a};
        if (a == full) break;
    }
    return {true, 0};
}

std::vector<Mask> separations(const Matroid& m, int k) {
    require_scan_cap(m.size());
    std::vector<Mask> out;
    Mask full = m.ground();
    for (Mask a = 0; a <= full; ++a) {
        if (canonical_side(a, full) == a && m.lambda(a) <= k - 2) out.push_back(a);
        if (a == full) break;
    }
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

std::vector<Mask> circuits(const Matroid& m) {
    require_scan_cap(m.size());
    Mask full = m.ground();
    std::vector<Mask> out;
    for (Mask a = 1; a <= full; ++a) {
        if (m.rank_of(a) >= popcount(a)) {
            if (a == full) break;
            continue;
        }
        bool minimal = true;
        for_each_bit(a, [&](int i) {
            Mask sub = a & ~(Mask(1) << i);
            if (m.rank_of(sub) < popcount(sub)) minimal = false;
        });
        if (minimal) out.push_back(a);
        if (a == full) break;
    }
    return out;
}

bool is_freely_placed(const Matroid& m, Mask z_set, int z) {
    Mask zbit = Mask(1) << z;
    if (!(z_set & zbit)) throw StructuralError("element not in the given set");
    if (m.rank_of(z_set) != m.rank_of(z_set & ~zbit)) return false;  // rest must span z
    for (Mask c : circuits(m)) {
        if (!(c & zbit)) continue;
        if (!subset_of(z_set, closure(m, c))) return false;
    }
    return true;
}

std::vector<Mask> flats(const Matroid& m) {
    require_scan_cap(m.size());
    std::vector<Mask> out;
    Mask full = m.ground();
    for (Mask a = 0; a <= full; ++a) {
        if (closure(m, a) == a) out.push_back(a);
        if (a == full) break;
    }
    return out;
}

std::vector<Mask> flats_of_rank(const Matroid& m, int r) {
    std::vector<Mask> out;
    for (Mask f : flats(m))
        if (m.rank_of(f) == r) out.push_back(f);
    return out;
}

}  // namespace tanglekit
