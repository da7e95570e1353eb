#include "tanglekit/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "tanglekit/errors.hpp"
#include "tanglekit/limits.hpp"

namespace tanglekit {

namespace {

struct TableBackend {
    std::vector<std::uint8_t> ranks;
};

struct UniformBackend {
    int rank = 0;
};

struct GraphicBackend {
    // Endpoints are compacted to 0..nv-1; self-loops model matroid loops.
    int nv = 0;
    std::vector<std::array<int, 2>> edges;
};

struct LinearBackend {
    int prime = 2;
    int rows = 0;
    std::vector<std::vector<int>> cols;
};

using Backend = std::variant<TableBackend, UniformBackend, GraphicBackend, LinearBackend>;

int graphic_rank(const GraphicBackend& g, Mask subset) {
    // Spanning-forest count: rank = number of successful unions.
    int parent[64];
    for (int v = 0; v < g.nv; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    int r = 0;
    for_each_bit(subset, [&](int i) {
        int a = find(g.edges[i][0]);
        int b = find(g.edges[i][1]);
        if (a != b) {
            parent[a] = b;
            ++r;
        }
    });
    return r;
}

int linear_rank(const LinearBackend& l, Mask subset) {
    std::vector<std::vector<int>> rows;  // row-echelon basis of the chosen columns
    int p = l.prime;
    int r = 0;
    std::vector<int> v;
    for_each_bit(subset, [&](int i) {
        v = l.cols[i];
        for (const auto& basis : rows) {
            int lead = 0;
            while (lead < l.rows && basis[lead] == 0) ++lead;
            if (lead < l.rows && v[lead] != 0) {
                // v -= v[lead]/basis[lead] * basis  (mod p)
                int inv = 1;
                for (int e = 1; e < p - 1; ++e) inv = inv * basis[lead] % p;  // Fermat inverse
                int factor = v[lead] * inv % p;
                for (int j = 0; j < l.rows; ++j) v[j] = ((v[j] - factor * basis[j]) % p + p) % p;
            }
        }
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
            rows.push_back(v);
            ++r;
        }
    });
    return r;
}

}  // namespace

struct Matroid::Impl {
    std::vector<std::string> labels;
    Backend backend;
    ExprPtr expr;
    int full_rank = 0;
    std::unordered_map<std::string, int> index;
    mutable std::once_flag table_once;
    mutable std::shared_ptr<const std::vector<std::uint8_t>> table_cache;

    int rank_direct(Mask subset) const {
        if (auto* t = std::get_if<TableBackend>(&backend)) return t->ranks[subset];
        if (auto* u = std::get_if<UniformBackend>(&backend))
            return std::min(popcount(subset), u->rank);
        if (auto* g = std::get_if<GraphicBackend>(&backend)) return graphic_rank(*g, subset);
        return linear_rank(std::get<LinearBackend>(backend), subset);
    }
};

namespace {

std::shared_ptr<const Matroid::Impl> finish(std::vector<std::string> labels, Backend backend,
                                            ExprPtr expr) {
    auto impl = std::make_shared<Matroid::Impl>();
    impl->labels = std::move(labels);
    impl->backend = std::move(backend);
    impl->expr = std::move(expr);
    if (impl->labels.empty()) throw StructuralError("matroid needs a nonempty ground set");
    if (impl->labels.size() > 32)
        throw StructuralError("ground sets above 32 elements are not supported");
    for (size_t i = 0; i < impl->labels.size(); ++i) {
        if (!impl->index.emplace(impl->labels[i], static_cast<int>(i)).second)
            throw StructuralError("duplicate element label '" + impl->labels[i] + "'");
    }
    impl->full_rank = impl->rank_direct(full_mask(static_cast<int>(impl->labels.size())));
    return impl;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

std::vector<std::uint8_t> build_table_from(const Matroid& m) {
    int n = m.size();
    require_table_cap(n);
    std::vector<std::uint8_t> ranks(std::size_t(1) << n);
    for (Mask a = 0; a < (Mask(1) << n); ++a) ranks[a] = static_cast<std::uint8_t>(m.rank_of(a));
    return ranks;
}

}  // namespace

int Matroid::size() const { return static_cast<int>(impl_->labels.size()); }
int Matroid::rank() const { return impl_->full_rank; }
const std::vector<std::string>& Matroid::labels() const { return impl_->labels; }
const std::string& Matroid::label(int i) const { return impl_->labels.at(i); }

int Matroid::index_of(const std::string& label) const {
    auto it = impl_->index.find(label);
    return it == impl_->index.end() ? -1 : it->second;
}

Mask Matroid::mask_of_labels(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& name : names) {
        int i = index_of(name);
        if (i < 0) throw StructuralError("unknown element label '" + name + "'");
        m |= Mask(1) << i;
    }
    return m;
}

std::vector<std::string> Matroid::labels_of(Mask m) const {
    std::vector<std::string> out;
    for_each_bit(m, [&](int i) { out.push_back(impl_->labels[i]); });
    return out;
}

int Matroid::rank_of(Mask subset) const {
    if (subset & ~ground()) throw StructuralError("subset mask outside the ground set");
    if (impl_->table_cache) return (*impl_->table_cache)[subset];
    return impl_->rank_direct(subset);
}

int Matroid::lambda(Mask subset) const {
    return rank_of(subset) + rank_of(ground() & ~subset) - rank();
}

int Matroid::corank_of(Mask subset) const {
    return popcount(subset) - rank() + rank_of(ground() & ~subset);
}

bool Matroid::answers_directly() const {
    return std::holds_alternative<UniformBackend>(impl_->backend) ||
           std::holds_alternative<GraphicBackend>(impl_->backend);
}

const std::vector<std::uint8_t>& Matroid::table() const {
    if (auto* t = std::get_if<TableBackend>(&impl_->backend)) return t->ranks;
    std::call_once(impl_->table_once, [this] {
        impl_->table_cache =
            std::make_shared<std::vector<std::uint8_t>>(build_table_from(*this));
    });
    return *impl_->table_cache;
}

const MatroidExpr& Matroid::expr() const { return *impl_->expr; }
ExprPtr Matroid::expr_ptr() const { return impl_->expr; }

Matroid make_uniform(int rank, int size) {
    if (size < 1 || rank < 0 || rank > size)
        throw StructuralError("uniform matroid needs 0 <= rank <= size, size >= 1");
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::Uniform;
    expr->rank = rank;
    expr->size = size;
    return Matroid(finish(default_labels(size), UniformBackend{rank}, expr));
}

Matroid make_graphic(int vertices, const std::vector<std::array<int, 2>>& edges,
                     const std::vector<std::string>& labels) {
    if (labels.size() != edges.size())
        throw StructuralError("graphic matroid needs one label per edge");
    if (vertices < 1 || vertices > 63) throw StructuralError("bad vertex count");
    for (const auto& e : edges) {
        if (e[0] < 0 || e[0] >= vertices || e[1] < 0 || e[1] >= vertices)
            throw StructuralError("edge endpoint outside vertex range");
    }
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::Graphic;
    expr->vertices = vertices;
    expr->edges = edges;
    expr->labels = labels;
    return Matroid(finish(labels, GraphicBackend{vertices, edges}, expr));
}

Matroid make_linear(int prime, const std::vector<std::vector<int>>& columns,
                    const std::vector<std::string>& labels) {
    if (prime < 2 || prime > 97) throw StructuralError("prime field order out of range");
    for (int d = 2; d * d <= prime; ++d)
        if (prime % d == 0) throw StructuralError("field order must be prime");
    if (columns.empty() || labels.size() != columns.size())
        throw StructuralError("linear matroid needs one label per column");
    size_t rows = columns.front().size();
    LinearBackend backend{prime, static_cast<int>(rows), {}};
    for (const auto& c : columns) {
        if (c.size() != rows) throw StructuralError("ragged column lengths");
        std::vector<int> col(c);
        for (int& x : col) x = ((x % prime) + prime) % prime;
        backend.cols.push_back(std::move(col));
    }
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::Linear;
    expr->prime = prime;
    expr->columns = columns;
    expr->labels = labels;
    return Matroid(finish(labels, std::move(backend), expr));
}

Matroid make_rank_table(const std::vector<std::string>& labels,
                        const std::vector<std::uint8_t>& ranks) {
    int n = static_cast<int>(labels.size());
    require_table_cap(n);
    if (ranks.size() != (std::size_t(1) << n))
        throw StructuralError("rank table must have one entry per subset");
    if (ranks[0] != 0) throw StructuralError("rank of the empty set must be 0");
    // Unit-increase sanity pass; full submodularity is the property suites' job.
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
        for (int i = 0; i < n; ++i) {
            if (a & (Mask(1) << i)) continue;
            int d = int(ranks[a | (Mask(1) << i)]) - int(ranks[a]);
            if (d < 0 || d > 1) throw StructuralError("rank table violates unit increase");
        }
    }
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::RankTable;
    expr->labels = labels;
    expr->ranks = ranks;
    return Matroid(finish(labels, TableBackend{ranks}, expr));
}

namespace {

Matroid table_matroid_with_expr(std::vector<std::string> labels,
                                std::vector<std::uint8_t> ranks, ExprPtr expr) {
    return Matroid(finish(std::move(labels), TableBackend{std::move(ranks)}, std::move(expr)));
}

}  // namespace

Matroid dual(const Matroid& m) {
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::Dual;
    expr->children = {m.expr_ptr()};
    if (const auto& src = m.expr(); src.kind == MatroidExpr::Kind::Uniform) {
        auto impl = finish(m.labels(), UniformBackend{m.size() - m.rank()}, expr);
        return Matroid(impl);
    }
    int n = m.size();
    require_table_cap(n);
    std::vector<std::uint8_t> ranks(std::size_t(1) << n);
    Mask full = full_mask(n);
    for (Mask a = 0; a <= full; ++a)
        ranks[a] = static_cast<std::uint8_t>(m.corank_of(a));
    return table_matroid_with_expr(m.labels(), std::move(ranks), expr);
}

namespace {

ExprPtr removal_expr(const Matroid& m, Mask del, Mask con) {
    ExprPtr cur = m.expr_ptr();
    if (del) {
        auto node = std::make_shared<MatroidExpr>();
        node->kind = MatroidExpr::Kind::Delete;
        node->children = {cur};
        node->elements = m.labels_of(del);
        cur = node;
    }
    if (con) {
        auto node = std::make_shared<MatroidExpr>();
        node->kind = MatroidExpr::Kind::Contract;
        node->children = {cur};
        node->elements = m.labels_of(con);
        cur = node;
    }
    return cur;
}

}  // namespace

Matroid minor(const Matroid& m, Mask del, Mask con) {
    if (del & con) throw StructuralError("delete and contract sets overlap");
    if ((del | con) & ~m.ground()) throw StructuralError("removal mask outside the ground set");
    Mask keep = m.ground() & ~(del | con);
    if (keep == 0) throw StructuralError("minor would have an empty ground set");
    std::vector<std::string> labels = m.labels_of(keep);
    ExprPtr expr = removal_expr(m, del, con);

    if (m.expr().kind == MatroidExpr::Kind::Uniform) {
        int n2 = m.size() - popcount(del);
        int r2 = std::min(m.rank(), n2);
        r2 = std::max(0, r2 - popcount(con));
        return Matroid(finish(labels, UniformBackend{r2}, expr));
    }
    if (m.expr().kind == MatroidExpr::Kind::Graphic) {
        // Contractions merge endpoints; contracting a loop is a deletion.
        const auto& src = m.expr();
        std::vector<int> remap(src.vertices);
        std::iota(remap.begin(), remap.end(), 0);
        auto root = [&](int v) {
            while (remap[v] != v) v = remap[v] = remap[remap[v]];
            return v;
        };
        for_each_bit(con, [&](int i) {
            int a = root(src.edges[i][0]);
            int b = root(src.edges[i][1]);
            if (a != b) remap[std::max(a, b)] = std::min(a, b);
        });
        std::vector<int> compact(src.vertices, -1);
        int nv = 0;
        std::vector<std::array<int, 2>> edges;
        for_each_bit(keep, [&](int i) {
            int a = root(src.edges[i][0]);
            int b = root(src.edges[i][1]);
            for (int v : {a, b})
                if (compact[v] < 0) compact[v] = nv++;
            edges.push_back({compact[a], compact[b]});
        });
        if (nv == 0) nv = 1;
        return Matroid(finish(labels, GraphicBackend{nv, std::move(edges)}, expr));
    }

    int n2 = popcount(keep);
    require_table_cap(n2);
    std::vector<std::uint8_t> ranks(std::size_t(1) << n2);
    int base = m.rank_of(con);
    for (Mask a = 0; a < (Mask(1) << n2); ++a)
        ranks[a] = static_cast<std::uint8_t>(m.rank_of(expand_mask(a, keep) | con) - base);
    return table_matroid_with_expr(std::move(labels), std::move(ranks), expr);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::DirectSum;
    expr->children = {a.expr_ptr(), b.expr_ptr()};

    // Colliding labels in the second part pick up primes until distinct.
    std::unordered_set<std::string> seen(a.labels().begin(), a.labels().end());
    std::vector<std::string> labels = a.labels();
    for (const auto& name : b.labels()) {
        std::string candidate = name;
        while (seen.count(candidate)) candidate += "'";
        seen.insert(candidate);
        labels.push_back(candidate);
    }

    if (a.expr().kind == MatroidExpr::Kind::Graphic &&
        b.expr().kind == MatroidExpr::Kind::Graphic) {
        const auto& ga = a.expr();
        const auto& gb = b.expr();
        std::vector<std::array<int, 2>> edges = ga.edges;
        for (const auto& e : gb.edges)
            edges.push_back({e[0] + ga.vertices, e[1] + ga.vertices});
        return Matroid(
            finish(labels, GraphicBackend{ga.vertices + gb.vertices, std::move(edges)}, expr));
    }

    int n = a.size() + b.size();
    require_table_cap(n);
    Mask first = full_mask(a.size());
    std::vector<std::uint8_t> ranks(std::size_t(1) << n);
    for (Mask s = 0; s < (Mask(1) << n); ++s)
        ranks[s] = static_cast<std::uint8_t>(a.rank_of(s & first) + b.rank_of(s >> a.size()));
    return table_matroid_with_expr(std::move(labels), std::move(ranks), expr);
}

Matroid principal_extension(const Matroid& m, Mask flat, const std::string& new_label) {
    if (flat & ~m.ground()) throw StructuralError("flat mask outside the ground set");
    if (m.index_of(new_label) >= 0)
        throw StructuralError("new element label '" + new_label + "' already present");
    // The flat must be closed: no outside element may keep the rank unchanged.
    int fr = m.rank_of(flat);
    Mask outside = m.ground() & ~flat;
    bool closed = true;
    for_each_bit(outside, [&](int i) {
        if (m.rank_of(flat | (Mask(1) << i)) == fr) closed = false;
    });
    if (!closed) throw DomainError("principal extension requires a closed flat");

    int n = m.size();
    require_table_cap(n + 1);
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::PrincipalExtension;
    expr->children = {m.expr_ptr()};
    expr->elements = m.labels_of(flat);
    expr->new_label = new_label;

    std::vector<std::string> labels = m.labels();
    labels.push_back(new_label);
    Mask new_bit = Mask(1) << n;
    std::vector<std::uint8_t> ranks(std::size_t(1) << (n + 1));
    for (Mask a = 0; a < new_bit; ++a) {
        int r = m.rank_of(a);
        ranks[a] = static_cast<std::uint8_t>(r);
        // New element sits freely on the flat: rank stays put once A spans it.
        // An empty flat pins nothing, so the new element is a coloop then.
        bool on_flat = flat != 0 && m.rank_of(a | flat) == r;
        ranks[a | new_bit] = static_cast<std::uint8_t>(on_flat ? r : r + 1);
    }
    return table_matroid_with_expr(std::move(labels), std::move(ranks), expr);
}

Matroid truncate_to_rank(const Matroid& m, int target_rank) {
    if (target_rank < 0 || target_rank > m.rank())
        throw DomainError("truncation rank out of range");
    int n = m.size();
    require_table_cap(n);
    std::vector<std::uint8_t> ranks(std::size_t(1) << n);
    for (Mask a = 0; a < (Mask(1) << n); ++a)
        ranks[a] = static_cast<std::uint8_t>(std::min(m.rank_of(a), target_rank));
    auto expr = std::make_shared<MatroidExpr>();
    expr->kind = MatroidExpr::Kind::RankTable;
    expr->labels = m.labels();
    expr->ranks = ranks;
    return table_matroid_with_expr(m.labels(), std::move(ranks), expr);
}

bool same_matroid(const Matroid& a, const Matroid& b) {
    if (a.labels() != b.labels()) return false;
    return a.table() == b.table();
}

bool is_automorphism(const Matroid& m, const std::vector<int>& perm) {
    int n = m.size();
    if (static_cast<int>(perm.size()) != n) throw StructuralError("permutation size mismatch");
    const auto& t = m.table();
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
        Mask image = 0;
        for_each_bit(a, [&](int i) { image |= Mask(1) << perm[i]; });
        if (t[a] != t[image]) return false;
    }
    return true;
}

}  // namespace tanglekit
