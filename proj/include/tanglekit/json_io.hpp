#pragma once

#include <optional>
#include <string>

#include "tanglekit/minor_moves.hpp"
#include "tanglekit/tangle.hpp"

namespace tanglekit {

// {"order":K,"maximal_small":[[labels],...]}; optionally with the matroid's
// construction expression under "matroid".
std::string tangle_to_json(const Tangle& t, bool include_matroid = false,
                           bool pretty = false);

// Reads a tangle for a known matroid back from its JSON form.
Tangle tangle_from_json(const Matroid& m, const std::string& text);

// Report shape shared by value-producing queries:
// {"value":..,"witness":[...],"violation":null|{"axiom":..,"witnesses":[[..],..]}}.
std::string report_json(const Matroid& m, std::optional<long> value,
                        std::optional<Mask> witness,
                        const std::optional<AxiomViolation>& violation,
                        bool pretty = false);

std::string trace_to_json(const ReductionResult& result, bool pretty = false);

}  // namespace tanglekit
