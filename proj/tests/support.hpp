// Test-only oracles, deliberately independent of the library's algorithms:
// a raw orientation search for tangles, a linear-algebra rank for graphic
// matroids, and exhaustive breadth/witness searches.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "tanglekit/connectivity.hpp"
#include "tanglekit/tangle.hpp"

namespace tktest {

using tanglekit::Mask;
using tanglekit::Matroid;
using tanglekit::Tangle;

inline std::vector<Mask> maximal_sets(std::vector<Mask> family) {
    std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
        return tanglekit::popcount(a) > tanglekit::popcount(b);
    });
    std::vector<Mask> out;
    for (Mask s : family) {
        bool dominated = false;
        for (Mask t : out)
            if (tanglekit::subset_of(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Tries both orientations of every low-order separation, rejecting a branch
// only when an axiom is already broken. No propagation, no lookahead.
inline std::vector<Tangle> brute_force_tangles(const Matroid& m, int k) {
    if (k == 1) return {Tangle{m, 1, {}}};
    Mask full = m.ground();
    int n = m.size();
    std::vector<std::array<Mask, 2>> pairs;
    for (Mask a : tanglekit::separations(m, k)) pairs.push_back({a, full & ~a});

    std::vector<Tangle> found;
    std::vector<Mask> smalls, larges;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == pairs.size()) {
            if (!tanglekit::verify_tangle(m, k, smalls))
                found.push_back(Tangle{m, k, maximal_sets(smalls)});
            return;
        }
        for (int c = 0; c < 2; ++c) {
            Mask s = pairs[i][c];
            Mask comp = pairs[i][1 - c];
            if (tanglekit::popcount(s) >= n - 1) continue;
            bool ok = true;
            for (Mask prior : smalls)
                if (tanglekit::subset_of(comp, prior)) ok = false;  // large inside a small
            for (Mask prior : larges)
                if (tanglekit::subset_of(prior, s)) ok = false;  // small above a large
            for (size_t x = 0; x < smalls.size() && ok; ++x)
                for (size_t y = x; y < smalls.size() && ok; ++y)
                    if ((s | smalls[x] | smalls[y]) == full) ok = false;
            if (!ok) continue;
            smalls.push_back(s);
            larges.push_back(comp);
            rec(i + 1);
            smalls.pop_back();
            larges.pop_back();
        }
    };
    rec(0);
    std::sort(found.begin(), found.end(), tanglekit::tangle_less);
    return found;
}

// Graphic rank as the GF(2) rank of the vertex-edge incidence columns.
inline int incidence_rank(int, const std::vector<std::array<int, 2>>& edges,
                          Mask subset) {
    std::vector<unsigned long long> basis;
    int r = 0;
    tanglekit::for_each_bit(subset, [&](int i) {
        unsigned long long v = 0;
        if (edges[i][0] != edges[i][1]) {
            v = (1ull << edges[i][0]) | (1ull << edges[i][1]);
        }
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v) {
            basis.push_back(v);
            ++r;
        }
    });
    return r;
}

// Exhaustive breadth: scan every subset of the tangle matroid.
inline int brute_force_breadth(const Matroid& tm, int order, Mask* least_witness = nullptr) {
    Mask full = tm.ground();
    int best = 0;
    std::vector<Mask> best_masks;
    for (Mask u = 0; u <= full; ++u) {
        bool ok = tm.rank_of(u) == order - 1;
        if (ok) {
            std::vector<int> bits = tanglekit::bits_of(u);
            std::function<void(size_t, Mask, int)> combos = [&](size_t idx, Mask c, int cnt) {
                if (!ok) return;
                if (cnt == order - 1) {
                    if (tm.rank_of(c) < order - 1) ok = false;
                    return;
                }
                if (idx >= bits.size()) return;
                combos(idx + 1, c | (Mask(1) << bits[idx]), cnt + 1);
                combos(idx + 1, c, cnt);
            };
            combos(0, 0, 0);
        }
        if (ok) {
            int size = tanglekit::popcount(u);
            if (size > best) {
                best = size;
                best_masks.assign(1, u);
            } else if (size == best) {
                best_masks.push_back(u);
            }
        }
        if (u == full) break;
    }
    if (least_witness) {
        auto lex_less = [](Mask a, Mask b) {
            return tanglekit::bits_of(a) < tanglekit::bits_of(b);
        };
        *least_witness = *std::min_element(best_masks.begin(), best_masks.end(), lex_less);
    }
    return best;
}

}  // namespace tktest
