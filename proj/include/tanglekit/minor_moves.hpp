#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/tangle.hpp"

namespace tanglekit {

enum class RemovalKind { Delete, Contract };

struct Removal {
    int element = 0;  // index in the current matroid
    RemovalKind kind = RemovalKind::Delete;
};

Matroid apply_removal(const Matroid& m, Removal r);

// Lifts a tangle of a minor back to the host matroid: the small sets are the
// low-order sides whose trace in the minor is small there.
Tangle induce_up(const Matroid& m, const std::vector<Removal>& path, const Tangle& minor_tangle);

struct GeneratedOutcome {
    enum class Status { None, Unique, Multiple };
    Status status = Status::None;
    std::optional<Tangle> tangle;  // engaged when unique
    int candidates = 0;            // tangles of the minor containing the restriction
};

// Ground truth by full enumeration of the minor's tangles.
GeneratedOutcome generated_tangle(const Matroid& m, const Tangle& t, Removal r);

// A flat of the tangle matroid plus the element being removed from it; the
// hypotheses under which the orientation of every low-order separation of the
// minor is determined.
struct FlatContext {
    Mask flat = 0;      // flat of the tangle matroid, as a mask in the host
    int flat_rank = 0;  // its rank there (= its lambda in the host)
    int element = 0;    // removed element, must lie in the flat
    RemovalKind kind = RemovalKind::Delete;
};

struct OrientationVerdict {
    Mask x = 0, y = 0;   // partition of the minor's ground set (minor indexing)
    int type = 0;        // 1 or 2
    Mask small_side = 0;
    std::string justification;  // "weak-side" or "canon-Y"
};

OrientationVerdict classify_separation(const Matroid& m, const Tangle& t, Removal r,
                                       Mask x_in_minor,
                                       const std::optional<FlatContext>& ctx);

struct DeterminedOutcome {
    std::optional<Tangle> tangle;
    std::optional<AxiomViolation> failure;  // three-cover witness when not a tangle
};

// Assembles the determined family for the minor and checks it. With a titanic
// flat this is guaranteed to be the generated tangle; with a merely solid one
// the verification decides.
DeterminedOutcome determined_family(const Matroid& m, const Tangle& t, const FlatContext& ctx);

struct TraceStep {
    std::string element;
    RemovalKind kind = RemovalKind::Delete;
    std::string rule;
    int breadth = 0;
};

struct ReductionResult {
    Matroid final_matroid;
    Tangle final_tangle;
    std::vector<TraceStep> steps;
};

// Repeatedly removes single elements, preserving the tangle's breadth at
// every step, until the matroid is weakly 4-connected.
ReductionResult reduce_to_weakly_4_connected(const Matroid& m, const Tangle& t);

struct RemovalRow {
    Removal removal;
    GeneratedOutcome::Status status = GeneratedOutcome::Status::None;
    int breadth = -1;  // breadth of the generated tangle, when unique
};

struct CriticalityReport {
    bool critical = false;
    int base_breadth = 0;
    std::vector<RemovalRow> rows;
};

// One-step breadth criticality: every single-element removal either generates
// no tangle or drops the breadth.
CriticalityReport is_breadth_critical_one_step(const Matroid& m, const Tangle& t);

struct RecursiveCriticality {
    bool critical = false;
    bool complete = false;  // false when the node budget ran out
    long nodes = 0;
};

// Explores removal sequences (memoized on rank-table fingerprints) looking
// for a generated tangle of undiminished breadth anywhere below the root.
RecursiveCriticality is_breadth_critical_recursive(const Matroid& m, const Tangle& t,
                                                   long node_budget);

std::string removal_kind_name(RemovalKind k);

}  // namespace tanglekit
