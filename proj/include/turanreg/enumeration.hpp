#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "census.hpp"
#include "graph.hpp"

namespace turanreg {

// Largest order enumerated without an explicit override.
inline constexpr std::size_t kEnumerationCap = 11;

struct GenFilter {
    std::size_t n = 0;
    std::optional<std::size_t> max_degree;
    std::optional<std::size_t> edge_count;
    std::optional<std::size_t> regular_k;
    bool connected = false;
    // A property inherited by all subgraphs (H-freeness, say). It is tested on
    // every partial graph, so failing branches are cut as early as possible.
    std::function<bool(const Graph&)> hereditary;
};

struct GenStats {
    std::uint64_t classes = 0;     // graphs handed to the visitor
    std::uint64_t nodes = 0;       // partial graphs expanded
    std::uint64_t candidates = 0;  // augmentations tried
    std::uint64_t pruned = 0;      // cut by degree/size bounds or the hereditary property
    std::uint64_t rejected = 0;    // non-canonical augmentations and duplicates
    double seconds = 0;
    bool infeasible = false;
    std::string reason;

    GenStats& operator+=(const GenStats& o) {
        classes += o.classes;
        nodes += o.nodes;
        candidates += o.candidates;
        pruned += o.pruned;
        rejected += o.rejected;
        return *this;
    }
};

struct GenOptions {
    std::size_t jobs = 1;
    bool allow_large = false;  // lift the n <= 11 cap (the kernel still stops at 64)
};

/// Throws when n is outside the supported range; otherwise returns why the
/// filter admits no graph at all, or nullopt.
inline std::optional<std::string> filter_infeasibility(const GenFilter& f, const GenOptions& opt = {}) {
    if (f.n == 0) throw std::invalid_argument("enumeration needs n >= 1");
    if (f.n > kMaxCanonicalOrder) throw std::invalid_argument("enumeration supports at most 64 vertices");
    if (f.n > kEnumerationCap && !opt.allow_large)
        throw std::invalid_argument("n=" + std::to_string(f.n) + " exceeds the enumeration cap of " +
                                    std::to_string(kEnumerationCap) + " (override with allow_large)");
    const std::size_t n = f.n;
    const std::size_t r = std::min(f.max_degree.value_or(n - 1), n - 1);
    if (f.regular_k) {
        const auto k = *f.regular_k;
        if (k >= n) return "regular degree k=" + std::to_string(k) + " needs k < n=" + std::to_string(n);
        if ((n * k) % 2 != 0) return "n*k odd: no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices";
        if (f.max_degree && *f.max_degree < k) return "max_degree below regular degree";
        if (f.edge_count && *f.edge_count != n * k / 2) return "edge_count inconsistent with n*k/2";
    }
    if (f.edge_count) {
        if (*f.edge_count > n * r / 2) return "edge_count exceeds n*max_degree/2";
        if (f.connected && n > 1 && *f.edge_count + 1 < n) return "too few edges for a connected graph";
    }
    if (f.connected && n > 1 && r == 0) return "no connected graph with max degree 0";
    if (f.connected && f.regular_k && n > 1 && *f.regular_k == 0) return "no connected 0-regular graph";
    return std::nullopt;
}

namespace detail {

struct EnumNode {
    Graph g;
    std::vector<std::uint64_t> canon;
};

// Removes bit c and shifts the higher bits down.
inline std::uint64_t squeeze(std::uint64_t w, unsigned c) {
    const std::uint64_t low = (std::uint64_t{1} << c) - 1;
    return (w & low) | ((w >> 1) & ~low);
}

inline std::vector<std::uint64_t> deleted_rows(const Graph& g, Vertex c) {
    std::vector<std::uint64_t> rows;
    rows.reserve(g.order() - 1);
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != c) rows.push_back(squeeze(g.word(v), c));
    return rows;
}

// Canonical augmentation by one vertex. The parent of a graph G is G - c,
// where c has minimum degree, then maximum neighbour-degree sum, then the
// largest canonical position. A child P + w is kept when G - c is isomorphic
// to P; children of one parent are deduplicated by canonical form.
class VertexAugmenter {
public:
    explicit VertexAugmenter(const GenFilter& f)
        : f_(f), n_(f.n), r_(std::min(f.max_degree.value_or(f.n - 1), f.n - 1)) {
        if (f.regular_k) {
            k_ = *f.regular_k;
            r_ = std::min(r_, *k_);
            m_ = n_ * *k_ / 2;
        }
        if (f.edge_count) m_ = *f.edge_count;
    }

    std::optional<EnumNode> root(GenStats& st) const {
        Graph g(1);
        ++st.candidates;
        if (!level_ok(1, 0, 0) || !hereditary_ok(g)) {
            ++st.pruned;
            return std::nullopt;
        }
        return EnumNode{g, canonical_form(g).rows};
    }

    bool final_ok(const Graph& g) const {
        if (m_ && g.size() != *m_) return false;
        if (k_) {
            auto d = g.regular_degree();
            if (!d || *d != *k_) return false;
        }
        if (f_.max_degree && g.max_degree() > *f_.max_degree) return false;
        if (f_.connected && !is_connected(g)) return false;
        return true;
    }

    std::size_t order() const { return n_; }

    // Children of `parent` are appended to `out`, or passed to `emit` when
    // they are complete. emit returns false to stop; expand then returns false.
    template <class Emit, class StopFn>
    bool expand(const EnumNode& parent, std::vector<EnumNode>& out, Emit& emit, GenStats& st,
                StopFn& should_stop) const {
        const auto i = static_cast<unsigned>(parent.g.order());
        const std::size_t child_n = i + 1;
        const bool last = child_n == n_;
        std::array<std::size_t, 64> deg{};
        std::uint64_t must = 0, forbid = 0;
        for (unsigned v = 0; v < i; ++v) {
            deg[v] = static_cast<std::size_t>(std::popcount(parent.g.word(v)));
            if (deg[v] + 1 > r_) forbid |= std::uint64_t{1} << v;
            if (k_ && deg[v] + (n_ - child_n) < *k_) must |= std::uint64_t{1} << v;
        }
        if (must & forbid) {
            ++st.pruned;
            return true;
        }
        const std::uint64_t all = (std::uint64_t{1} << i) - 1;
        const std::uint64_t free = all & ~must & ~forbid;
        const std::size_t e_parent = parent.g.size();
        std::unordered_set<std::vector<std::uint64_t>, RowsHash> seen;
        std::array<std::uint64_t, 64> rows{};

        std::uint64_t t = 0;
        while (true) {
            if (should_stop()) return false;
            const std::uint64_t s_mask = must | t;
            const auto s = static_cast<std::size_t>(std::popcount(s_mask));
            ++st.candidates;
            bool ok = s <= r_;
            // The new vertex must have minimum degree in the child.
            for (unsigned v = 0; ok && v < i; ++v)
                if (deg[v] + ((s_mask >> v) & 1U) < s) ok = false;
            if (ok) ok = level_ok(child_n, e_parent + s, s);
            if (!ok) {
                ++st.pruned;
            } else {
                for (unsigned v = 0; v < i; ++v) rows[v] = parent.g.word(v) | (((s_mask >> v) & 1U) << i);
                rows[i] = s_mask;
                Graph child = Graph::from_words(std::span<const std::uint64_t>(rows.data(), child_n));
                if (last && !final_ok(child)) {
                    ++st.pruned;
                } else if (auto form = accept(child, parent); !form) {
                    ++st.rejected;
                } else if (!seen.insert(*form).second) {
                    ++st.rejected;
                } else if (!hereditary_ok(child)) {
                    ++st.pruned;
                } else if (last) {
                    ++st.classes;
                    if (!emit(child)) return false;
                } else {
                    out.push_back({std::move(child), std::move(*form)});
                }
            }
            if (t == free) break;
            t = (t - free) & free;
        }
        return true;
    }

private:
    bool hereditary_ok(const Graph& g) const { return !f_.hereditary || f_.hereditary(g); }

    // Bounds every ancestor of an admissible final graph satisfies, given that
    // each step removes a vertex of minimum degree.
    bool level_ok(std::size_t i, std::size_t e, std::size_t min_deg) const {
        if (k_ && min_deg + (n_ - i) < *k_) return false;
        if (m_) {
            if (e > *m_) return false;
            if (*m_ - e > (n_ - i) * r_) return false;
            if (e * n_ * (n_ - 1) < *m_ * i * (i - 1)) return false;
        }
        return true;
    }

    // Canonical form of child if it is kept as a child of parent.
    std::optional<std::vector<std::uint64_t>> accept(const Graph& child, const EnumNode& parent) const {
        const auto cn = static_cast<Vertex>(child.order());
        const Vertex w = cn - 1;
        std::array<std::size_t, 64> deg{};
        std::array<std::size_t, 64> nds{};
        for (Vertex v = 0; v < cn; ++v) deg[v] = static_cast<std::size_t>(std::popcount(child.word(v)));
        for (Vertex v = 0; v < cn; ++v)
            for (std::uint64_t m = child.word(v); m; m &= m - 1) nds[v] += deg[std::countr_zero(m)];
        std::size_t best_deg = deg[w], best_nds = nds[w];
        for (Vertex v = 0; v < cn; ++v) {
            if (deg[v] < best_deg || (deg[v] == best_deg && nds[v] > best_nds)) return std::nullopt;
        }
        CanonicalForm form = canonical_form(child);
        Vertex c = w;
        for (Vertex p = cn; p-- > 0;) {
            Vertex v = form.order[p];
            if (deg[v] == best_deg && nds[v] == best_nds) {
                c = v;
                break;
            }
        }
        if (c != w) {
            auto rest = deleted_rows(child, c);
            if (canonical_form(Graph::from_words(rest)).rows != parent.canon) return std::nullopt;
        }
        return std::move(form.rows);
    }

    const GenFilter& f_;
    std::size_t n_;
    std::size_t r_;
    std::optional<std::size_t> k_;
    std::optional<std::size_t> m_;
};

template <class Emit, class StopFn>
bool vertex_dfs(const VertexAugmenter& aug, const EnumNode& node, Emit& emit, GenStats& st, StopFn& should_stop) {
    ++st.nodes;
    std::vector<EnumNode> kids;
    if (!aug.expand(node, kids, emit, st, should_stop)) return false;
    for (const auto& k : kids)
        if (!vertex_dfs(aug, k, emit, st, should_stop)) return false;
    return true;
}

}  // namespace detail

/// Folds every graph of the filter (one per isomorphism class) into an
/// accumulator. visit(acc, g) returns false to stop the enumeration.
/// With jobs > 1 the tree is split into subtrees at the first level holding
/// at least 4*jobs nodes; each subtree starts from a copy of init and the
/// partial results are merged in subtree order, so the result does not
/// depend on thread timing, early stops included.
template <class Acc, class Visit, class Merge>
Acc enumerate_reduce(const GenFilter& filter, Acc init, Visit visit, Merge merge, const GenOptions& opt = {},
                     GenStats* stats_out = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    GenStats stats;
    auto finish = [&](Acc result) {
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (stats_out) *stats_out = stats;
        return result;
    };
    if (auto why = filter_infeasibility(filter, opt)) {
        stats.infeasible = true;
        stats.reason = *why;
        return finish(std::move(init));
    }
    detail::VertexAugmenter aug(filter);
    auto root = aug.root(stats);
    if (!root) return finish(std::move(init));
    if (filter.n == 1) {
        if (aug.final_ok(root->g)) {
            ++stats.classes;
            visit(init, root->g);
        }
        return finish(std::move(init));
    }

    const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
    std::vector<detail::EnumNode> frontier{std::move(*root)};
    if (jobs > 1) {
        auto no_emit = [](const Graph&) { return true; };
        auto never = [] { return false; };
        while (frontier.size() < 4 * jobs && frontier.front().g.order() + 2 < filter.n) {
            std::vector<detail::EnumNode> next;
            for (const auto& node : frontier) {
                ++stats.nodes;
                aug.expand(node, next, no_emit, stats, never);
            }
            frontier = std::move(next);
            if (frontier.empty()) return finish(std::move(init));
        }
    }

    const std::size_t parts = frontier.size();
    std::vector<Acc> accs(parts, init);
    std::vector<GenStats> part_stats(parts);
    std::atomic<std::size_t> stop_at{SIZE_MAX};
    std::atomic<std::size_t> next_part{0};

    auto run_part = [&](std::size_t idx) {
        bool local_stop = false;
        auto should_stop = [&] { return local_stop || idx > stop_at.load(std::memory_order_relaxed); };
        auto emit = [&](const Graph& g) {
            if (!visit(accs[idx], g)) {
                local_stop = true;
                std::size_t cur = stop_at.load();
                while (idx < cur && !stop_at.compare_exchange_weak(cur, idx)) {
                }
                return false;
            }
            return true;
        };
        detail::vertex_dfs(aug, frontier[idx], emit, part_stats[idx], should_stop);
    };
    auto worker = [&] {
        for (std::size_t idx; (idx = next_part.fetch_add(1)) < parts;) {
            if (idx > stop_at.load()) continue;
            run_part(idx);
        }
    };
    if (jobs == 1 || parts == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < std::min(jobs, parts); ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const std::size_t last = std::min(parts - 1, stop_at.load());
    Acc result = std::move(accs[0]);
    stats += part_stats[0];
    for (std::size_t i = 1; i <= last; ++i) {
        result = merge(std::move(result), std::move(accs[i]));
        stats += part_stats[i];
    }
    for (std::size_t i = last + 1; i < parts; ++i) stats += part_stats[i];
    return finish(std::move(result));
}

namespace detail {

template <class Visitor>
bool call_visitor(Visitor& visitor, const Graph& g) {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Graph&>, void>) {
        visitor(g);
        return true;
    } else {
        return static_cast<bool>(visitor(g));
    }
}

}  // namespace detail

/// Streams one representative of every isomorphism class admitted by the
/// filter. The visitor may return bool (false stops) or void. Graphs arrive
/// in the same order for every jobs setting.
template <class Visitor>
GenStats enumerate_graphs(const GenFilter& filter, Visitor&& visitor, const GenOptions& opt = {}) {
    GenStats stats;
    if (opt.jobs <= 1) {
        struct Nothing {};
        enumerate_reduce(
            filter, Nothing{}, [&](Nothing&, const Graph& g) { return detail::call_visitor(visitor, g); },
            [](Nothing a, Nothing) { return a; }, opt, &stats);
        return stats;
    }
    using Batch = std::vector<Graph>;
    auto batches = enumerate_reduce(
        filter, std::vector<Batch>(1),
        [](std::vector<Batch>& acc, const Graph& g) {
            acc.back().push_back(g);
            return true;
        },
        [](std::vector<Batch> a, std::vector<Batch> b) {
            for (auto& x : b) a.push_back(std::move(x));
            return a;
        },
        opt, &stats);
    for (const auto& batch : batches)
        for (const auto& g : batch)
            if (!detail::call_visitor(visitor, g)) return stats;
    return stats;
}

/// k-regular graphs on n vertices, one per isomorphism class. Without a
/// hereditary property, degrees above (n-1)/2 are generated as complements
/// of the (n-1-k)-regular classes.
template <class Visitor>
GenStats enumerate_regular(std::size_t n, std::size_t k, Visitor&& visitor, const GenOptions& opt = {},
                           std::function<bool(const Graph&)> hereditary = {}) {
    GenFilter f;
    f.n = n;
    f.regular_k = k;
    f.hereditary = std::move(hereditary);
    if (!f.hereditary && k < n && 2 * k > n - 1) {
        f.regular_k = n - 1 - k;
        return enumerate_graphs(f, [&](const Graph& g) { return detail::call_visitor(visitor, complement(g)); }, opt);
    }
    return enumerate_graphs(f, std::forward<Visitor>(visitor), opt);
}

/// Second, independent generator: canonical augmentation by one edge at a
/// time on a fixed vertex set. Used to cross-check the vertex-based engine.
/// The parent of G is G minus its canonically last edge.
template <class Visitor>
GenStats enumerate_graphs_by_edges(const GenFilter& filter, Visitor&& visitor, const GenOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    GenStats st;
    if (auto why = filter_infeasibility(filter, opt)) {
        st.infeasible = true;
        st.reason = *why;
        return st;
    }
    const std::size_t n = filter.n;
    std::size_t r = std::min(filter.max_degree.value_or(n - 1), n - 1);
    std::optional<std::size_t> m = filter.edge_count;
    if (filter.regular_k) {
        r = std::min(r, *filter.regular_k);
        m = n * *filter.regular_k / 2;
    }
    auto final_ok = [&](const Graph& g) {
        if (m && g.size() != *m) return false;
        if (filter.regular_k) {
            auto d = g.regular_degree();
            if (!d || *d != *filter.regular_k) return false;
        }
        return !filter.connected || is_connected(g);
    };
    auto hereditary_ok = [&](const Graph& g) { return !filter.hereditary || filter.hereditary(g); };

    // Canonical last edge: largest (max position, min position) pair.
    auto last_edge = [&](const Graph& g, const CanonicalForm& form) {
        std::vector<std::size_t> inv(n);
        for (std::size_t p = 0; p < n; ++p) inv[form.order[p]] = p;
        Edge best{0, 0};
        std::pair<std::size_t, std::size_t> key{0, 0};
        bool found = false;
        for (auto e : g.edges()) {
            auto a = inv[e.u], b = inv[e.v];
            std::pair<std::size_t, std::size_t> k{std::max(a, b), std::min(a, b)};
            if (!found || k > key) {
                key = k;
                best = e;
                found = true;
            }
        }
        return best;
    };

    bool stopped = false;
    auto rec = [&](auto&& self, const Graph& g, const std::vector<std::uint64_t>& canon) -> void {
        ++st.nodes;
        if (final_ok(g)) {
            ++st.classes;
            if (!detail::call_visitor(visitor, g)) {
                stopped = true;
                return;
            }
        }
        if (m && g.size() >= *m) return;
        std::unordered_set<std::vector<std::uint64_t>, RowsHash> seen;
        std::vector<std::pair<Graph, std::vector<std::uint64_t>>> kids;
        for (Vertex b = 1; b < n; ++b)
            for (Vertex a = 0; a < b; ++a) {
                if (g.has_edge(a, b)) continue;
                ++st.candidates;
                if (g.degree(a) + 1 > r || g.degree(b) + 1 > r) {
                    ++st.pruned;
                    continue;
                }
                Graph child = g;
                child.add_edge(a, b);
                auto form = canonical_form(child);
                auto e = last_edge(child, form);
                if (!(e == Edge{a, b})) {
                    Graph back = child;
                    back.remove_edge(e.u, e.v);
                    if (canonical_form(back).rows != canon) {
                        ++st.rejected;
                        continue;
                    }
                }
                if (!seen.insert(form.rows).second) {
                    ++st.rejected;
                    continue;
                }
                if (!hereditary_ok(child)) {
                    ++st.pruned;
                    continue;
                }
                kids.emplace_back(std::move(child), std::move(form.rows));
            }
        for (const auto& [kg, kc] : kids) {
            if (stopped) return;
            self(self, kg, kc);
        }
    };
    Graph empty(n);
    if (hereditary_ok(empty)) rec(rec, empty, canonical_form(empty).rows);
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return st;
}

}  // namespace turanreg
