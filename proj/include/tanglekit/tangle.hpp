#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/connectivity.hpp"
#include "tanglekit/matroid.hpp"

namespace tanglekit {

// A tangle of the given order, stored as the antichain of its maximal small
// sets (sorted ascending by mask). Membership of arbitrary sets is derived:
// a set is small when its lambda is at most order-2 and it lies inside some
// antichain member.
struct Tangle {
    Matroid matroid;
    int order = 0;
    std::vector<Mask> maximal_small;
};

bool is_weak(const Tangle& t, Mask a);
bool is_small(const Tangle& t, Mask a);

struct Membership {
    // Unset when lambda(a) > order-2; small/large is only defined below that.
    std::optional<bool> small;
    bool weak = false;
};
Membership tangle_membership(const Tangle& t, Mask a);

struct AxiomViolation {
    std::string axiom;  // "T1".."T4"
    std::vector<Mask> witnesses;
};

// Checks the axioms for an explicitly listed family of small sets; membership
// of non-listed sets is by containment in a listed one.
std::optional<AxiomViolation> verify_tangle(const Matroid& m, int order,
                                            const std::vector<Mask>& family);
std::optional<AxiomViolation> verify_tangle(const Tangle& t);

// Complete, duplicate-free, deterministically ordered list of order-k tangles.
std::vector<Tangle> enumerate_tangles(const Matroid& m, int order);

struct TangleMatroid {
    Matroid matroid;
    Tangle source;
};

// Rank-table matroid whose hyperplanes are the tangle's maximal small sets.
TangleMatroid tangle_matroid(const Tangle& t);

struct BreadthCertificate {
    int value = 0;
    Mask witness = 0;  // lexicographically least maximizing witness
};

// Size of a largest spanning uniform restriction of the tangle matroid.
BreadthCertificate breadth(const Tangle& t);
BreadthCertificate breadth_of_tangle_matroid(const Matroid& tm, int order);

struct CoverSizeResult {
    int value = 0;
    bool order2_caveat = false;  // cover size is shaky for order <= 2
};
CoverSizeResult cover_size(const Tangle& t);

Tangle truncate_tangle(const Tangle& t, int to_order);

Tangle tangle_from_k_connected_set(const Matroid& m, Mask z, int order);

// Stable ordering/equality helpers.
bool tangle_less(const Tangle& a, const Tangle& b);
bool same_tangle(const Tangle& a, const Tangle& b);

}  // namespace tanglekit
