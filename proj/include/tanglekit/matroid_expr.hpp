#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tanglekit {

// Construction AST for matroids. Every matroid the toolkit produces carries
// one of these, so any value can be serialized and rebuilt.
struct MatroidExpr {
    enum class Kind {
        Uniform,
        Graphic,
        Linear,
        RankTable,
        Dual,
        Delete,
        Contract,
        DirectSum,
        PrincipalExtension,
    };

    Kind kind = Kind::Uniform;

    // uniform
    int rank = 0;
    int size = 0;

    // graphic
    int vertices = 0;
    std::vector<std::array<int, 2>> edges;

    // linear
    int prime = 0;
    std::vector<std::vector<int>> columns;

    // graphic / linear / rank_table
    std::vector<std::string> labels;

    // rank_table, subset-indexed with bit 0 = first label
    std::vector<std::uint8_t> ranks;

    // dual/delete/contract/principal_extension: one child; direct_sum: two
    std::vector<std::shared_ptr<const MatroidExpr>> children;

    // delete/contract: removed labels; principal_extension: the flat's labels
    std::vector<std::string> elements;

    // principal_extension
    std::string new_label;
};

using ExprPtr = std::shared_ptr<const MatroidExpr>;

std::string expr_to_json(const MatroidExpr& expr, bool pretty = false);
ExprPtr expr_from_json(const std::string& text);

}  // namespace tanglekit
