#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tanglekit {

// Subsets of a ground set with at most 22 elements, bit i = element i.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

template <typename Fn>
void for_each_bit(Mask m, Fn&& fn) {
    while (m) {
        int i = std::countr_zero(m);
        fn(i);
        m &= m - 1;
    }
}

inline std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    for_each_bit(m, [&](int i) { out.push_back(i); });
    return out;
}

inline Mask mask_of(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) m |= Mask(1) << i;
    return m;
}

// Enumerates all submasks of m, including 0 and m itself.
template <typename Fn>
void for_each_submask(Mask m, Fn&& fn) {
    Mask s = m;
    while (true) {
        fn(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

// Compresses a mask over the full ground set to the index space of the kept
// elements. Bits of `m` outside `keep` are dropped.
inline Mask compress_mask(Mask m, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for_each_bit(keep, [&](int i) {
        if (m & (Mask(1) << i)) out |= Mask(1) << pos;
        ++pos;
    });
    return out;
}

// Inverse of compress_mask: lifts a mask in the kept-element index space back
// to the full ground set.
inline Mask expand_mask(Mask m, Mask keep) {
    Mask out = 0;
    int pos = 0;
    for_each_bit(keep, [&](int i) {
        if (m & (Mask(1) << pos)) out |= Mask(1) << i;
        ++pos;
    });
    return out;
}

// Canonical representative of the complementary pair {a, full − a}: the side
// with fewer elements, ties broken by smaller mask value.
inline Mask canonical_side(Mask a, Mask full) {
    Mask b = full & ~a;
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb ? a : b;
    return a < b ? a : b;
}

// Strict "is a proper subset" test.
inline bool proper_subset_of(Mask a, Mask b) { return a != b && subset_of(a, b); }

}  // namespace tanglekit
