#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/matroid.hpp"

namespace tanglekit {

// Evaluates a construction expression. Idempotent: building the expression of
// a built matroid reproduces its rank function.
Matroid build_matroid(const MatroidExpr& expr);

// Cycle matroid of the complete graph on four vertices, edges labeled a..f so
// that {c,d,e}, {a,b,e}, {b,c,f}, {a,d,f} are the triangles and {e,f} is the
// non-adjacent pair.
Matroid k4_labeled();

// Rank-r wheel: r rim vertices around a hub; labels s1..sr (spokes), r1..rr
// (rim edges, ri joins rim vertex i to i+1).
Matroid wheel(int spokes);

Matroid complete_graphic(int vertices);
Matroid complete_bipartite_graphic(int left, int right);

// The s+8 element example: a rank-3 uniform flare glued to a quad by two free
// points on lines and two points on rank-4 flats, with the joining elements
// removed. Triangle-free and weakly 4-connected for s >= 6.
Matroid sec9_matroid(int s);

// Graph variant: a simple triangle-free 4-connected host H with a stable
// 4-vertex set, plus four new vertices and ten prescribed edges forming a fan.
// Vertices of H are arbitrary positive ids; stable_four lists the ids playing
// the roles of vertices 5..8.
Matroid sec9_graph(const std::vector<std::array<int, 2>>& h_edges,
                   const std::array<int, 4>& stable_four);
Matroid sec9_graph_default();  // H = complete bipartite 4+4

// Seeded, reproducible binary matroid: n nonzero columns of height r, redrawn
// until the full rank is exactly r.
Matroid random_binary_matroid(int n, int r, std::uint64_t seed);

struct ExpectedFacts {
    std::optional<bool> weakly_4_connected;
    std::optional<bool> triangle_free;
    std::optional<int> order4_tangle_count;
    std::optional<int> order4_breadth;
};

struct CorpusEntry {
    std::string name;
    Matroid matroid;
    ExpectedFacts facts;
};

// The built-in instance battery, filtered by ground-set size.
std::vector<CorpusEntry> standard_instances(int max_size, bool include_random = true);

}  // namespace tanglekit
