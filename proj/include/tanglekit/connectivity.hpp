#pragma once

#include <optional>
#include <vector>

#include "tanglekit/matroid.hpp"

namespace tanglekit {

Mask closure(const Matroid& m, Mask a);
Mask coclosure(const Matroid& m, Mask a);
bool is_fully_closed(const Matroid& m, Mask a);

// Guts/coguts/interior of X, reported within X. The guts of X is
// cl(X) ∩ cl(E−X); the coguts is the same in the dual; the interior is what
// is left of X after removing both.
struct BoundaryProfile {
    Mask guts = 0;
    Mask coguts = 0;
    Mask interior = 0;
};
BoundaryProfile boundary_profile(const Matroid& m, Mask x);

// No 2-partition of X has both parts of strictly smaller lambda. Empty parts
// are allowed; lambda(empty) = 0.
bool is_solid(const Matroid& m, Mask x);

// No 3-partition of A has all three parts of strictly smaller lambda.
bool is_titanic(const Matroid& m, Mask a);

// Cover variant of the titanic test: no three subsets of A with union A and
// all lambdas below lambda(A). Equivalent to is_titanic; kept separate as a
// cross-check route.
bool is_titanic_cover_form(const Matroid& m, Mask a);

std::vector<Mask> hyperplanes(const Matroid& m);

// Ground set not coverable by two hyperplanes.
bool is_round(const Matroid& m);

struct ConnectivityReport {
    bool connected = false;
    bool tutte_3_connected = false;
    bool weakly_4_connected = false;
    // Set when an s-vector was supplied.
    std::optional<bool> s_connected;
    Mask s_witness = 0;  // a violating side, when s_connected is false
};
ConnectivityReport connectivity_report(const Matroid& m,
                                       const std::vector<int>* svec = nullptr);

bool is_connected(const Matroid& m);
bool is_tutte_3_connected(const Matroid& m);
bool is_weakly_4_connected(const Matroid& m);

struct KConnectedVerdict {
    bool ok = false;
    Mask witness = 0;  // a violating A on failure
};
KConnectedVerdict is_k_connected_set(const Matroid& m, Mask z, int k);

// All subsets A with lambda(A) <= k-2, one canonical side per complementary
// pair, sorted ascending by (popcount, mask value).
std::vector<Mask> separations(const Matroid& m, int k);

// Circuits of M: minimal dependent sets (exhaustive; respects the scan cap).
std::vector<Mask> circuits(const Matroid& m);

// z is in cl(Z−z) and every circuit through z spans Z in closure.
bool is_freely_placed(const Matroid& m, Mask z_set, int z);

std::vector<Mask> flats(const Matroid& m);
std::vector<Mask> flats_of_rank(const Matroid& m, int r);

}  // namespace tanglekit
