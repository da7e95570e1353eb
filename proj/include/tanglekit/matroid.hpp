#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tanglekit/matroid_expr.hpp"
#include "tanglekit/subset.hpp"

namespace tanglekit {

// An immutable finite matroid given by a labeled ground set and an exact rank
// oracle. Uniform and graphic backends answer single queries directly, so
// instances above the table cap can still be loaded and probed; everything
// else is a full rank table (one byte per subset).
class Matroid {
public:
    Matroid() = default;

    int size() const;
    int rank() const;  // r(E)
    Mask ground() const { return full_mask(size()); }

    const std::vector<std::string>& labels() const;
    const std::string& label(int i) const;
    int index_of(const std::string& label) const;  // -1 if absent
    Mask mask_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    int rank_of(Mask subset) const;
    int lambda(Mask subset) const;
    int corank_of(Mask subset) const;  // rank in the dual

    // Materialized rank table (built lazily; throws ResourceError over cap).
    const std::vector<std::uint8_t>& table() const;
    bool answers_directly() const;  // true for uniform/graphic backends

    const MatroidExpr& expr() const;
    ExprPtr expr_ptr() const;

    bool valid() const { return impl_ != nullptr; }

    struct Impl;
    explicit Matroid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
    std::shared_ptr<const Impl> impl_;
};

Matroid make_uniform(int rank, int size);  // labels e1..en
Matroid make_graphic(int vertices, const std::vector<std::array<int, 2>>& edges,
                     const std::vector<std::string>& labels);
Matroid make_linear(int prime, const std::vector<std::vector<int>>& columns,
                    const std::vector<std::string>& labels);
Matroid make_rank_table(const std::vector<std::string>& labels,
                        const std::vector<std::uint8_t>& ranks);

Matroid dual(const Matroid& m);
Matroid minor(const Matroid& m, Mask del, Mask contract);
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid principal_extension(const Matroid& m, Mask flat, const std::string& new_label);

// Rank function clamped to min(r(A), target_rank); expression is a table dump.
Matroid truncate_to_rank(const Matroid& m, int target_rank);

// Rank-table equality over identically ordered, identically labeled ground sets.
bool same_matroid(const Matroid& a, const Matroid& b);

// True if relabeling element i as perm[i] is an automorphism.
bool is_automorphism(const Matroid& m, const std::vector<int>& perm);

}  // namespace tanglekit
