#include "tanglekit/corpus.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tanglekit/errors.hpp"

namespace tanglekit {

Matroid build_matroid(const MatroidExpr& e) {
    switch (e.kind) {
        case MatroidExpr::Kind::Uniform:
            return make_uniform(e.rank, e.size);
        case MatroidExpr::Kind::Graphic:
            return make_graphic(e.vertices, e.edges, e.labels);
        case MatroidExpr::Kind::Linear:
            return make_linear(e.prime, e.columns, e.labels);
        case MatroidExpr::Kind::RankTable:
            return make_rank_table(e.labels, e.ranks);
        case MatroidExpr::Kind::Dual:
            return dual(build_matroid(*e.children.at(0)));
        case MatroidExpr::Kind::Delete: {
            Matroid child = build_matroid(*e.children.at(0));
            return minor(child, child.mask_of_labels(e.elements), 0);
        }
        case MatroidExpr::Kind::Contract: {
            Matroid child = build_matroid(*e.children.at(0));
            return minor(child, 0, child.mask_of_labels(e.elements));
        }
        case MatroidExpr::Kind::DirectSum:
            return direct_sum(build_matroid(*e.children.at(0)),
                              build_matroid(*e.children.at(1)));
        case MatroidExpr::Kind::PrincipalExtension: {
            Matroid child = build_matroid(*e.children.at(0));
            return principal_extension(child, child.mask_of_labels(e.elements), e.new_label);
        }
    }
    throw StructuralError("unreachable expression kind");
}

Matroid k4_labeled() {
    // Vertices 0..3; e=(0,1) and f=(2,3) are the opposite pair.
    return make_graphic(4,
                        {{0, 2}, {1, 2}, {1, 3}, {0, 3}, {0, 1}, {2, 3}},
                        {"a", "b", "c", "d", "e", "f"});
}

Matroid wheel(int spokes) {
    if (spokes < 3) throw StructuralError("wheel needs at least three spokes");
    std::vector<std::array<int, 2>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < spokes; ++i) {
        edges.push_back({0, i + 1});  // hub = 0
        labels.push_back("s" + std::to_string(i + 1));
    }
    for (int i = 0; i < spokes; ++i) {
        edges.push_back({i + 1, (i + 1) % spokes + 1});
        labels.push_back("r" + std::to_string(i + 1));
    }
    return make_graphic(spokes + 1, edges, labels);
}

Matroid complete_graphic(int vertices) {
    std::vector<std::array<int, 2>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) {
            edges.push_back({i, j});
            labels.push_back(std::to_string(i + 1) + "-" + std::to_string(j + 1));
        }
    return make_graphic(vertices, edges, labels);
}

Matroid complete_bipartite_graphic(int left, int right) {
    std::vector<std::array<int, 2>> edges;
    std::vector<std::string> labels;
    for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j) {
            edges.push_back({i, left + j});
            labels.push_back("L" + std::to_string(i + 1) + "-R" + std::to_string(j + 1));
        }
    return make_graphic(left + right, edges, labels);
}

namespace {

// Shared recipe behind sec9_matroid; also used at smaller s for test fodder.
Matroid quad_flare(int s) {
    Matroid base = direct_sum(k4_labeled(), make_uniform(3, s));
    std::vector<std::string> e_labels;
    for (int i = 1; i <= s; ++i) e_labels.push_back("e" + std::to_string(i));

    Matroid m = principal_extension(base, base.mask_of_labels({"e", "e1"}), "f1");
    m = principal_extension(m, m.mask_of_labels({"f", "e2"}), "f2");
    std::vector<std::string> flat1 = e_labels;
    flat1.push_back("f1");
    flat1.push_back("e");
    m = principal_extension(m, m.mask_of_labels(flat1), "g1");
    std::vector<std::string> flat2 = e_labels;
    flat2.push_back("f2");
    flat2.push_back("f");
    m = principal_extension(m, m.mask_of_labels(flat2), "g2");
    return minor(m, m.mask_of_labels({"e", "f"}), 0);
}

}  // namespace

Matroid sec9_matroid(int s) {
    if (s < 6) throw DomainError("sec9 example needs s >= 6");
    return quad_flare(s);
}

Matroid sec9_graph(const std::vector<std::array<int, 2>>& h_edges,
                   const std::array<int, 4>& stable_four) {
    std::set<int> h_vertices;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : h_edges) {
        if (e[0] == e[1]) throw DomainError("host graph must be simple: self-loop found");
        auto key = std::minmax(e[0], e[1]);
        if (!seen.insert(key).second)
            throw DomainError("host graph must be simple: repeated edge");
        if (e[0] < 5 || e[1] < 5)
            throw DomainError("host vertices must be numbered from 5 upward");
        h_vertices.insert(e[0]);
        h_vertices.insert(e[1]);
    }
    for (int v : stable_four)
        if (!h_vertices.count(v)) throw DomainError("stable vertex missing from the host");
    for (const auto& e : h_edges) {
        bool a = std::count(stable_four.begin(), stable_four.end(), e[0]) > 0;
        bool b = std::count(stable_four.begin(), stable_four.end(), e[1]) > 0;
        if (a && b) throw DomainError("the four chosen vertices are not a stable set");
    }

    // New vertices 1..4; stable_four plays the roles of 5..8.
    std::vector<std::array<int, 2>> edges;
    std::vector<std::string> labels;
    auto add = [&](int u, int v) {
        edges.push_back({u, v});
        labels.push_back(std::to_string(u) + "-" + std::to_string(v));
    };
    add(1, 2);
    add(1, 3);
    add(1, 4);
    add(2, 4);
    auto role = [&](int r) { return stable_four[r - 5]; };
    add(2, role(5));
    add(2, role(6));
    add(3, role(6));
    add(3, role(7));
    add(4, role(7));
    add(4, role(8));
    for (const auto& e : h_edges) {
        int u = std::min(e[0], e[1]), v = std::max(e[0], e[1]);
        add(u, v);
    }

    // Compact vertex ids.
    std::set<int> ids{1, 2, 3, 4};
    ids.insert(h_vertices.begin(), h_vertices.end());
    std::vector<int> order(ids.begin(), ids.end());
    auto compact = [&](int v) {
        return static_cast<int>(std::lower_bound(order.begin(), order.end(), v) -
                                order.begin());
    };
    for (auto& e : edges) e = {compact(e[0]), compact(e[1])};
    return make_graphic(static_cast<int>(order.size()), edges, labels);
}

Matroid sec9_graph_default() {
    std::vector<std::array<int, 2>> h_edges;
    for (int i = 5; i <= 8; ++i)
        for (int j = 9; j <= 12; ++j) h_edges.push_back({i, j});
    return sec9_graph(h_edges, {5, 6, 7, 8});
}

Matroid random_binary_matroid(int n, int r, std::uint64_t seed) {
    if (r < 1 || r > n) throw DomainError("need 1 <= r <= n");
    if (r > 22) throw DomainError("column height above 22 unsupported");
    std::mt19937_64 rng(seed);
    std::uint32_t top = (std::uint32_t(1) << r) - 1;
    while (true) {
        std::vector<std::uint32_t> cols(n);
        for (auto& c : cols) c = 1 + static_cast<std::uint32_t>(rng() % top);
        // Rank over the two-element field.
        std::vector<std::uint32_t> basis;
        for (std::uint32_t c : cols) {
            std::uint32_t v = c;
            for (std::uint32_t b : basis) v = std::min(v, v ^ b);
            if (v) basis.push_back(v);
        }
        if (static_cast<int>(basis.size()) != r) continue;
        std::vector<std::vector<int>> columns;
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) {
            std::vector<int> col(r);
            for (int j = 0; j < r; ++j) col[j] = (cols[i] >> j) & 1;
            columns.push_back(std::move(col));
            labels.push_back("e" + std::to_string(i + 1));
        }
        return make_linear(2, columns, labels);
    }
}

std::vector<CorpusEntry> standard_instances(int max_size, bool include_random) {
    std::vector<CorpusEntry> all;
    auto put = [&](const std::string& name, Matroid m, ExpectedFacts facts = {}) {
        all.push_back(CorpusEntry{name, std::move(m), facts});
    };

    put("u11", make_uniform(1, 1));
    put("u22", make_uniform(2, 2));
    put("u23", make_uniform(2, 3));
    put("u24", make_uniform(2, 4));
    put("u34", make_uniform(3, 4));
    put("u26", make_uniform(2, 6));
    put("u36", make_uniform(3, 6));
    put("k4", k4_labeled());
    {
        ExpectedFacts f;
        f.weakly_4_connected = true;
        f.order4_tangle_count = 1;
        f.order4_breadth = 7;
        put("u37", make_uniform(3, 7), f);
    }
    put("u47", dual(make_uniform(3, 7)));
    {
        std::vector<std::vector<int>> cols;
        for (int v = 1; v <= 7; ++v) cols.push_back({v & 1, (v >> 1) & 1, (v >> 2) & 1});
        ExpectedFacts f;
        f.order4_tangle_count = 0;
        put("fano", make_linear(2, cols, {"e1", "e2", "e3", "e4", "e5", "e6", "e7"}), f);
    }
    {
        Matroid u36 = make_uniform(3, 6);
        put("u36p", principal_extension(u36, u36.mask_of_labels({"e1"}), "p1"));
    }
    put("u37_u11", direct_sum(make_uniform(3, 7), make_uniform(1, 1)));
    put("w4", wheel(4));
    put("k33", complete_bipartite_graphic(3, 3));
    put("u39", make_uniform(3, 9));
    put("k5", complete_graphic(5));
    put("w5", wheel(5));
    {
        Matroid m = make_uniform(4, 8);
        m = principal_extension(m, m.mask_of_labels({"e1", "e2"}), "x1");
        m = principal_extension(m, m.mask_of_labels({"e1", "e2", "x1"}), "x2");
        m = principal_extension(m, m.mask_of_labels({"e1", "e2", "x1", "x2"}), "x3");
        put("bigline11", m);
        put("bigline11d", dual(m));
    }
    put("cocirc12", quad_flare(4));
    // 3-connected with two fat exactly-3-separating sides of rank 3 each.
    put("bitrunc12",
        truncate_to_rank(direct_sum(make_uniform(3, 6), make_uniform(3, 6)), 4));
    put("u3_12", make_uniform(3, 12));
    put("u4_11", make_uniform(4, 11));
    put("u3_13", make_uniform(3, 13));
    {
        ExpectedFacts f;
        f.weakly_4_connected = true;
        f.triangle_free = true;
        f.order4_tangle_count = 1;
        f.order4_breadth = 12;
        put("sec9_6", sec9_matroid(6), f);
        f.order4_breadth = 13;
        put("sec9_7", sec9_matroid(7), f);
    }
    put("u37_u37", direct_sum(make_uniform(3, 7), make_uniform(3, 7)));

    if (include_random) {
        struct Rb {
            int n, r;
            std::uint64_t seed;
        };
        for (Rb rb : {Rb{6, 3, 1}, Rb{7, 3, 2}, Rb{7, 4, 8}, Rb{8, 4, 3}, Rb{8, 3, 9},
                      Rb{9, 4, 4}, Rb{10, 5, 5}, Rb{11, 4, 6}, Rb{12, 5, 7}}) {
            put("rb" + std::to_string(rb.n) + "_" + std::to_string(rb.r) + "_" +
                    std::to_string(rb.seed),
                random_binary_matroid(rb.n, rb.r, rb.seed));
        }
    }

    std::vector<CorpusEntry> out;
    for (auto& entry : all)
        if (entry.matroid.size() <= max_size) out.push_back(std::move(entry));
    return out;
}

}  // namespace tanglekit
