#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "census.hpp"
#include "graph.hpp"

namespace turanreg {

namespace detail {

// Pattern vertices ordered so that each one (after the first of its
// component) has as many already-placed neighbours as possible; ties go to
// higher degree.
inline std::vector<Vertex> pattern_order(const Graph& h) {
    const auto k = h.order();
    std::vector<Vertex> order;
    std::vector<std::size_t> placed_nbrs(k, 0);
    std::vector<bool> used(k, false);
    auto deg = h.degrees();
    while (order.size() < k) {
        Vertex best = 0;
        bool found = false;
        for (Vertex p = 0; p < k; ++p) {
            if (used[p]) continue;
            if (!found || placed_nbrs[p] > placed_nbrs[best] ||
                (placed_nbrs[p] == placed_nbrs[best] && deg[p] > deg[best])) {
                best = p;
                found = true;
            }
        }
        used[best] = true;
        order.push_back(best);
        h.for_each_neighbor(best, [&](Vertex q) { ++placed_nbrs[q]; });
    }
    return order;
}

// Enumerates injective edge-preserving maps pattern -> host. The callback
// returns false to stop; the function returns the number of maps visited.
template <class OnEmbedding>
Count embeddings(const Graph& host, const Graph& pattern, OnEmbedding&& on_embedding) {
    const auto n = host.order();
    const auto k = pattern.order();
    if (k > n) return 0;
    if (k == 0) {
        on_embedding(std::vector<Vertex>{});
        return 1;
    }
    const auto stride = host.stride();
    auto order = pattern_order(pattern);
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[order[i]] = i;

    // Earlier neighbours of each pattern vertex in placement order.
    std::vector<std::vector<std::size_t>> back(k);
    for (std::size_t i = 0; i < k; ++i)
        pattern.for_each_neighbor(order[i], [&](Vertex q) {
            if (pos[q] < i) back[i].push_back(pos[q]);
        });

    auto host_deg = host.degrees();
    auto pat_deg = pattern.degrees();
    std::vector<Words> deg_ok(k, Words(stride, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (Vertex v = 0; v < n; ++v)
            if (host_deg[v] >= pat_deg[order[i]]) deg_ok[i][v / 64] |= std::uint64_t{1} << (v % 64);

    std::vector<Vertex> image(k);
    Words used(stride, 0);
    std::vector<Words> cand(k, Words(stride));
    Count visited = 0;
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            ++visited;
            std::vector<Vertex> map(k);
            for (std::size_t j = 0; j < k; ++j) map[order[j]] = image[j];
            if (!on_embedding(map)) stop = true;
            return;
        }
        auto& c = cand[i];
        for (std::size_t w = 0; w < stride; ++w) c[w] = deg_ok[i][w] & ~used[w];
        for (auto j : back[i]) {
            auto r = host.row(image[j]);
            for (std::size_t w = 0; w < stride; ++w) c[w] &= r[w];
        }
        Vertex v = 0;
        while (!stop && pop_lowest(c, v)) {
            image[i] = v;
            used[v / 64] |= std::uint64_t{1} << (v % 64);
            self(self, i + 1);
            used[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    };
    rec(rec, 0);
    return visited;
}

}  // namespace detail

/// True iff the pattern occurs as a (not necessarily induced) subgraph.
inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    if (pattern.size() > host.size()) return false;
    if (pattern.max_degree() > host.max_degree()) return false;
    bool found = false;
    detail::embeddings(host, pattern, [&](const std::vector<Vertex>&) {
        found = true;
        return false;
    });
    return found;
}

/// Number of injective edge-preserving maps pattern -> host.
inline Count count_embeddings(const Graph& host, const Graph& pattern) {
    return detail::embeddings(host, pattern, [](const std::vector<Vertex>&) { return true; });
}

inline Count automorphism_count(const Graph& g) { return count_embeddings(g, g); }

namespace detail {

inline bool is_complete(const Graph& h) {
    const auto k = h.order();
    return h.size() == k * (k - (k > 0 ? 1 : 0)) / 2;
}

inline bool is_cycle(const Graph& h) {
    if (h.order() < 3) return false;
    auto d = h.regular_degree();
    return d && *d == 2 && is_connected(h);
}

// Side sizes (a <= b) when h is a complete bipartite graph without isolated vertices.
inline std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const Graph& h) {
    if (h.order() < 2 || !is_connected(h)) return std::nullopt;
    auto col = two_coloring(h);
    if (!col) return std::nullopt;
    std::size_t a = static_cast<std::size_t>(std::count(col->begin(), col->end(), 0));
    std::size_t b = h.order() - a;
    if (h.size() != a * b) return std::nullopt;
    return std::pair{std::min(a, b), std::max(a, b)};
}

}  // namespace detail

/// Copies of `pattern` in `host` as subgraphs (each subgraph counted once).
/// Cliques, cycles and complete bipartite patterns use the dedicated
/// counters; anything else divides the embedding count by |Aut(pattern)|.
inline Count count_copies(const Graph& host, const Graph& pattern) {
    if (pattern.order() == 0) return 1;
    if (detail::is_complete(pattern)) return count_cliques(host, pattern.order());
    if (detail::is_cycle(pattern) && pattern.order() <= 8) return count_cycles(host, pattern.order());
    if (auto sides = detail::complete_bipartite_sides(pattern)) {
        auto [a, b] = *sides;
        if (a == 1) return count_stars(host, b);
        return count_complete_bipartite(host, a, b);
    }
    return count_embeddings(host, pattern) / automorphism_count(pattern);
}

}  // namespace turanreg
