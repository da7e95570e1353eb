#pragma once

#include <stdexcept>
#include <string>

namespace tanglekit {

// Malformed inputs: masks out of range, overlapping delete/contract sets,
// bad expression trees, duplicate labels.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Violated preconditions and out-of-domain queries (non-closed flat for a
// principal extension, truncation order out of range, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because a configured cap would be exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the mathematics guarantees failed at runtime; always a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tanglekit
