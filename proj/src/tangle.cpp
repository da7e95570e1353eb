#include "tanglekit/tangle.hpp"

#include <algorithm>
#include <limits>

#include "tanglekit/errors.hpp"
#include "tanglekit/limits.hpp"

namespace tanglekit {

bool is_weak(const Tangle& t, Mask a) {
    for (Mask h : t.maximal_small)
        if (subset_of(a, h)) return true;
    return false;
}

bool is_small(const Tangle& t, Mask a) {
    return t.matroid.lambda(a) <= t.order - 2 && is_weak(t, a);
}

Membership tangle_membership(const Tangle& t, Mask a) {
    Membership m;
    m.weak = is_weak(t, a);
    if (t.matroid.lambda(a) <= t.order - 2) m.small = m.weak;
    return m;
}

namespace {

std::vector<Mask> antichain_of(std::vector<Mask> family) {
    std::sort(family.begin(), family.end(),
              [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    std::vector<Mask> maximal;
    for (Mask s : family) {
        bool dominated = false;
        for (Mask t : maximal)
            if (subset_of(s, t)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace

std::optional<AxiomViolation> verify_tangle(const Matroid& m, int order,
                                            const std::vector<Mask>& family) {
    int n = m.size();
    Mask full = m.ground();
    for (Mask f : family)
        if (m.lambda(f) > order - 2) return AxiomViolation{"T1", {f}};

    std::vector<Mask> maximal = antichain_of(family);
    auto contained = [&](Mask a) {
        for (Mask h : maximal)
            if (subset_of(a, h)) return true;
        return false;
    };

    for (Mask a : separations(m, order)) {
        Mask b = full & ~a;
        if (!contained(a) && !contained(b)) return AxiomViolation{"T2", {a, b}};
    }
    for (size_t i = 0; i < maximal.size(); ++i)
        for (size_t j = i; j < maximal.size(); ++j)
            for (size_t l = j; l < maximal.size(); ++l)
                if ((maximal[i] | maximal[j] | maximal[l]) == full)
                    return AxiomViolation{"T3", {maximal[i], maximal[j], maximal[l]}};
    for (int e = 0; e < n; ++e) {
        Mask rest = full & ~(Mask(1) << e);
        if (m.lambda(rest) <= order - 2 && contained(rest))
            return AxiomViolation{"T4", {Mask(1) << e}};
    }
    return std::nullopt;
}

std::optional<AxiomViolation> verify_tangle(const Tangle& t) {
    return verify_tangle(t.matroid, t.order, t.maximal_small);
}

// ---------------------------------------------------------------------------
// Enumeration: orient every low-order separation, with unit propagation.
// ---------------------------------------------------------------------------

namespace {

struct SepPair {
    Mask side[2];  // side[0] is the canonical representative
};

struct SearchState {
    std::vector<std::uint8_t> status;  // 0 undecided, 1 side0 small, 2 side1 small
    std::vector<Mask> antichain;       // maximal small sets so far
    std::vector<std::pair<int, int>> queue;
};

class TangleSearch {
public:
    TangleSearch(const Matroid& m, int order) : m_(m), order_(order), full_(m.ground()) {
        n_ = m.size();
        for (Mask a : separations(m, order)) pairs_.push_back({{a, full_ & ~a}});
    }

    std::vector<Tangle> run() {
        SearchState root;
        root.status.assign(pairs_.size(), 0);
        // A side of size >= n-1 is never small, so its complement is.
        for (size_t i = 0; i < pairs_.size(); ++i)
            for (int s = 0; s < 2; ++s)
                if (popcount(pairs_[i].side[s]) >= n_ - 1)
                    root.queue.push_back({static_cast<int>(i), 1 - s});
        dfs(std::move(root));
        std::sort(results_.begin(), results_.end(), tangle_less);
        return std::move(results_);
    }

private:
    bool covered_by_two(const SearchState& st, Mask s) const {
        for (size_t x = 0; x < st.antichain.size(); ++x) {
            Mask sx = s | st.antichain[x];
            for (size_t y = x; y < st.antichain.size(); ++y)
                if ((sx | st.antichain[y]) == full_) return true;
        }
        return false;
    }

    // Returns false on conflict.
    bool propagate(SearchState& st) {
        while (true) {
            while (!st.queue.empty()) {
                auto [i, choice] = st.queue.back();
                st.queue.pop_back();
                if (st.status[i] == choice + 1) continue;
                if (st.status[i] != 0) return false;
                st.status[i] = static_cast<std::uint8_t>(choice + 1);
                Mask s = pairs_[i].side[choice];
                if (popcount(s) >= n_ - 1) return false;
                if (covered_by_two(st, s)) return false;
                bool dominated = false;
                for (Mask h : st.antichain)
                    if (subset_of(s, h)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) {
                    std::erase_if(st.antichain, [&](Mask h) { return subset_of(h, s); });
                    st.antichain.push_back(s);
                }
                // Downward closure: every separation side inside s is small too.
                for (size_t j = 0; j < pairs_.size(); ++j) {
                    for (int c = 0; c < 2; ++c) {
                        if (!subset_of(pairs_[j].side[c], s)) continue;
                        if (st.status[j] == 0)
                            st.queue.push_back({static_cast<int>(j), c});
                        else if (st.status[j] != c + 1)
                            return false;
                    }
                }
            }
            // A side that would close a three-set cover must go the other way.
            bool forced = false;
            for (size_t j = 0; j < pairs_.size() && !forced; ++j) {
                if (st.status[j] != 0) continue;
                for (int c = 0; c < 2 && !forced; ++c) {
                    if (covered_by_two(st, pairs_[j].side[c])) {
                        st.queue.push_back({static_cast<int>(j), 1 - c});
                        forced = true;
                    }
                }
            }
            if (!forced) return true;
        }
    }

    void dfs(SearchState st) {
        if (++nodes_ > kNodeBudget)
            throw ResourceError("tangle search exceeded " + std::to_string(kNodeBudget) +
                                " nodes after finding " + std::to_string(results_.size()) +
                                " tangle(s) over " + std::to_string(pairs_.size()) +
                                " separations");
        if (!propagate(st)) return;
        int next = -1;
        for (size_t i = 0; i < pairs_.size(); ++i)
            if (st.status[i] == 0) {
                next = static_cast<int>(i);
                break;
            }
        if (next < 0) {
            std::vector<Mask> antichain = st.antichain;
            std::sort(antichain.begin(), antichain.end());
            results_.push_back(Tangle{m_, order_, std::move(antichain)});
            return;
        }
        for (int c = 0; c < 2; ++c) {
            SearchState branch = st;
            branch.queue.push_back({next, c});
            dfs(std::move(branch));
        }
    }

    static constexpr long kNodeBudget = 4'000'000;

    Matroid m_;
    int order_;
    Mask full_;
    int n_ = 0;
    long nodes_ = 0;
    std::vector<SepPair> pairs_;
    std::vector<Tangle> results_;
};

}  // namespace

std::vector<Tangle> enumerate_tangles(const Matroid& m, int order) {
    if (order < 1) throw DomainError("tangle order must be positive");
    if (order == 1) return {Tangle{m, 1, {}}};  // the empty family
    return TangleSearch(m, order).run();
}

// ---------------------------------------------------------------------------
// Tangle matroid
// ---------------------------------------------------------------------------

TangleMatroid tangle_matroid(const Tangle& t) {
    const Matroid& m = t.matroid;
    int n = m.size();
    require_table_cap(n);
    const int k = t.order;
    const auto& tab = m.table();
    Mask full = m.ground();
    std::size_t count = std::size_t(1) << n;

    // weak[a]: a lies inside some maximal small set (downward closure).
    std::vector<std::uint8_t> weak(count, 0);
    for (Mask h : t.maximal_small) weak[h] = 1;
    for (int i = 0; i < n; ++i)
        for (Mask a = 0; a < static_cast<Mask>(count); ++a)
            if (!(a & (Mask(1) << i))) weak[a] = weak[a] | weak[a | (Mask(1) << i)];

    // Rank of a weak set: smallest lambda over small supersets; strong sets
    // get the full rank k-1.
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> g(count, kInf);
    for (Mask a = 0; a < static_cast<Mask>(count); ++a) {
        int lam = tab[a] + tab[full & ~a] - m.rank();
        if (weak[a] && lam <= k - 2) g[a] = lam;
    }
    for (int i = 0; i < n; ++i)
        for (Mask a = 0; a < static_cast<Mask>(count); ++a)
            if (!(a & (Mask(1) << i))) g[a] = std::min(g[a], g[a | (Mask(1) << i)]);

    std::vector<std::uint8_t> ranks(count);
    for (Mask a = 0; a < static_cast<Mask>(count); ++a)
        ranks[a] = static_cast<std::uint8_t>(std::min(g[a], k - 1));

    Matroid tm = make_rank_table(m.labels(), ranks);
    if (tm.rank() != k - 1) throw InternalError("tangle matroid rank is not order-1");
    if (hyperplanes(tm) != t.maximal_small)
        throw InternalError("tangle matroid hyperplanes differ from the maximal small sets");
    if (!is_round(tm)) throw InternalError("tangle matroid is not round");
    return TangleMatroid{tm, t};
}

// ---------------------------------------------------------------------------
// Breadth: branch and bound for a largest set with no dependent
// (order-1)-subset of the tangle matroid.
// ---------------------------------------------------------------------------

namespace {

template <typename Fn>
void combinations(const std::vector<int>& items, int want, Fn&& fn) {
    int m = static_cast<int>(items.size());
    if (want == 0) {
        fn(Mask(0));
        return;
    }
    if (m < want) return;
    std::vector<int> idx(want);
    for (int i = 0; i < want; ++i) idx[i] = i;
    while (true) {
        Mask c = 0;
        for (int i : idx) c |= Mask(1) << items[i];
        fn(c);
        int i = want - 1;
        while (i >= 0 && idx[i] == m - want + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
    }
}

class BreadthSearch {
public:
    BreadthSearch(const Matroid& tm, int order) : tm_(tm), r_(order - 1), n_(tm.size()) {}

    BreadthCertificate run() {
        extend(0, 0, 0);
        // Second pass: pin down the lexicographically least maximum witness.
        Mask fixed = 0;
        int fixed_count = 0;
        for (int e = 0; e < n_ && fixed_count < best_; ++e) {
            if (!compatible(fixed, e)) continue;
            found_ = false;
            probe(fixed | (Mask(1) << e), fixed_count + 1, e + 1);
            if (found_) {
                fixed |= Mask(1) << e;
                ++fixed_count;
            }
        }
        return {best_, fixed};
    }

private:
    // True if adding e to u creates no dependent r_-subset.
    bool compatible(Mask u, int e) const {
        Mask ebit = Mask(1) << e;
        if (tm_.rank_of(ebit) == 0) return false;
        if (r_ == 1) return true;
        bool ok = true;
        combinations(bits_of(u), r_ - 1, [&](Mask c) {
            if (ok && tm_.rank_of(c | ebit) < std::min(r_, popcount(c) + 1)) ok = false;
        });
        return ok;
    }

    void extend(Mask u, int size, int from) {
        if (size > best_) best_ = size;
        for (int e = from; e < n_; ++e) {
            if (size + (n_ - e) <= best_) break;
            if (compatible(u, e)) extend(u | (Mask(1) << e), size + 1, e + 1);
        }
    }

    void probe(Mask u, int size, int from) {
        if (found_) return;
        if (size == best_) {
            found_ = true;
            return;
        }
        for (int e = from; e < n_ && !found_; ++e) {
            if (size + (n_ - e) < best_) break;
            if (compatible(u, e)) probe(u | (Mask(1) << e), size + 1, e + 1);
        }
    }

    const Matroid& tm_;
    int r_;
    int n_;
    int best_ = 0;
    bool found_ = false;
};

}  // namespace

BreadthCertificate breadth_of_tangle_matroid(const Matroid& tm, int order) {
    if (order == 1) return {tm.size(), tm.ground()};  // rank-0 restriction, always uniform
    BreadthCertificate cert = BreadthSearch(tm, order).run();
    if (tm.rank_of(cert.witness) != order - 1)
        throw InternalError("breadth witness fails to span the tangle matroid");
    return cert;
}

BreadthCertificate breadth(const Tangle& t) {
    return breadth_of_tangle_matroid(tangle_matroid(t).matroid, t.order);
}

// ---------------------------------------------------------------------------
// Cover size: exact minimum cover of the ground set by maximal small sets.
// ---------------------------------------------------------------------------

namespace {

struct CoverSearch {
    const std::vector<Mask>& sets;
    int best = std::numeric_limits<int>::max();
    int max_size = 1;

    void recurse(Mask uncovered, int used) {
        if (!uncovered) {
            best = std::min(best, used);
            return;
        }
        if (used + (popcount(uncovered) + max_size - 1) / max_size >= best) return;
        // Branch on the uncovered element with the fewest candidate sets.
        int pick = -1, fewest = std::numeric_limits<int>::max();
        for_each_bit(uncovered, [&](int e) {
            int c = 0;
            for (Mask s : sets)
                if (s & (Mask(1) << e)) ++c;
            if (c < fewest) {
                fewest = c;
                pick = e;
            }
        });
        if (fewest == 0) return;
        for (Mask s : sets)
            if (s & (Mask(1) << pick)) recurse(uncovered & ~s, used + 1);
    }
};

}  // namespace

CoverSizeResult cover_size(const Tangle& t) {
    Mask full = t.matroid.ground();
    Mask unioned = 0;
    for (Mask h : t.maximal_small) unioned |= h;
    if (unioned != full)
        throw DomainError("ground set is not covered by the tangle's small sets");
    CoverSearch search{t.maximal_small};
    for (Mask h : t.maximal_small) search.max_size = std::max(search.max_size, popcount(h));
    search.recurse(full, 0);
    return {search.best, t.order <= 2};
}

// ---------------------------------------------------------------------------
// Truncation and tangles generated by k-connected sets
// ---------------------------------------------------------------------------

Tangle truncate_tangle(const Tangle& t, int to_order) {
    if (to_order < 2 || to_order > t.order - 1)
        throw DomainError("truncation order must lie in [2, order-1]");
    const Matroid& m = t.matroid;
    Mask full = m.ground();
    std::vector<Mask> family;
    for (Mask a : separations(m, to_order)) {
        Mask b = full & ~a;
        if (is_small(t, a))
            family.push_back(a);
        else if (is_small(t, b))
            family.push_back(b);
        else
            throw InternalError("separation unoriented by the source tangle");
    }
    Tangle out{m, to_order, antichain_of(family)};
    Matroid direct = tangle_matroid(out).matroid;
    Matroid via_truncation = truncate_to_rank(tangle_matroid(t).matroid, to_order - 1);
    if (!same_matroid(direct, via_truncation))
        throw InternalError("tangle truncation disagrees with tangle-matroid truncation");
    return out;
}

Tangle tangle_from_k_connected_set(const Matroid& m, Mask z, int order) {
    if (order < 3) throw DomainError("generated tangles need order at least 3");
    if (popcount(z) < 3 * order - 5)
        throw DomainError("set too small: need at least 3*order-5 elements");
    if (auto verdict = is_k_connected_set(m, z, order); !verdict.ok)
        throw DomainError("set is not " + std::to_string(order) + "-connected in the matroid");

    Mask full = m.ground();
    std::vector<Mask> family;
    for (Mask a : separations(m, order)) {
        Mask b = full & ~a;
        if (popcount(a & z) <= order - 2)
            family.push_back(a);
        else if (popcount(b & z) <= order - 2)
            family.push_back(b);
        else
            throw InternalError("unorientable separation despite the connected-set hypothesis");
    }
    Tangle out{m, order, antichain_of(family)};
    if (auto v = verify_tangle(out))
        throw InternalError("generated family violates axiom " + v->axiom);
    // The tangle matroid restricted to z must be uniform of rank order-1.
    Matroid tm = tangle_matroid(out).matroid;
    if (tm.rank_of(z) != order - 1)
        throw InternalError("connected set does not span the tangle matroid");
    bool uniform = true;
    combinations(bits_of(z), order - 1, [&](Mask c) {
        if (tm.rank_of(c) < order - 1) uniform = false;
    });
    if (!uniform)
        throw InternalError("tangle matroid restriction to the connected set is not uniform");
    return out;
}

bool tangle_less(const Tangle& a, const Tangle& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.maximal_small < b.maximal_small;
}

bool same_tangle(const Tangle& a, const Tangle& b) {
    return a.order == b.order && a.maximal_small == b.maximal_small;
}

}  // namespace tanglekit
