#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace turanreg {

/// Exact binomial coefficient; throws std::overflow_error past 2^64.
inline Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<Count>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<Count>(r);
}

namespace detail {

using Words = std::vector<std::uint64_t>;

inline std::size_t popcount(std::span<const std::uint64_t> w) {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

// Lowest set bit, cleared from w; returns false when empty.
inline bool pop_lowest(std::span<std::uint64_t> w, Vertex& out) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
            out = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
            w[i] &= w[i] - 1;
            return true;
        }
    }
    return false;
}

inline Words all_vertices(std::size_t n) {
    Words w((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64) w.back() = (std::uint64_t{1} << (n % 64)) - 1;
    if (n == 0) w.clear();
    return w;
}

// Bits strictly above v.
inline Words above(std::size_t n, Vertex v) {
    Words w = all_vertices(n);
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t lo = i * 64;
        if (lo + 64 <= v + 1u) w[i] = 0;
        else if (lo <= v) w[i] &= ~((std::uint64_t{2} << (v - lo)) - 1);
    }
    return w;
}

inline Count cliques_word(const Graph& g, std::uint64_t cand, std::size_t remaining) {
    if (remaining == 1) return static_cast<Count>(std::popcount(cand));
    Count total = 0;
    while (cand) {
        auto v = std::countr_zero(cand);
        cand &= cand - 1;
        auto next = cand & g.word(static_cast<Vertex>(v));
        if (static_cast<std::size_t>(std::popcount(next)) + 1 >= remaining)
            total += cliques_word(g, next, remaining - 1);
    }
    return total;
}

inline Count cliques_multi(const Graph& g, Words cand, std::size_t remaining) {
    if (remaining == 1) return popcount(cand);
    Count total = 0;
    Vertex v = 0;
    Words next(cand.size());
    while (pop_lowest(cand, v)) {
        auto r = g.row(v);
        for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & r[i];
        if (popcount(next) + 1 >= remaining) total += cliques_multi(g, next, remaining - 1);
    }
    return total;
}

inline Count all_cliques_word(const Graph& g, std::uint64_t cand) {
    Count total = 0;
    while (cand) {
        auto v = std::countr_zero(cand);
        cand &= cand - 1;
        total += 1 + all_cliques_word(g, cand & g.word(static_cast<Vertex>(v)));
    }
    return total;
}

inline Count all_cliques_multi(const Graph& g, Words cand) {
    Count total = 0;
    Vertex v = 0;
    Words next(cand.size());
    while (pop_lowest(cand, v)) {
        auto r = g.row(v);
        for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & r[i];
        total += 1 + all_cliques_multi(g, next);
    }
    return total;
}

}  // namespace detail

/// k_t(G): number of t-vertex cliques.
inline Count count_cliques(const Graph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("clique size must be at least 1");
    const auto n = g.order();
    if (t > n) return 0;
    if (t == 1) return n;
    if (t == 2) return g.size();
    if (n <= 64) {
        auto all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return detail::cliques_word(g, all, t);
    }
    return detail::cliques_multi(g, detail::all_vertices(n), t);
}

/// k(G) = sum over t >= 2 of k_t(G).
inline Count total_cliques(const Graph& g) {
    const auto n = g.order();
    Count with_singletons = 0;
    if (n <= 64) {
        auto all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        with_singletons = n == 0 ? 0 : detail::all_cliques_word(g, all);
    } else {
        with_singletons = detail::all_cliques_multi(g, detail::all_vertices(n));
    }
    return with_singletons - n;
}

/// Number of m-cycles as subgraphs (each cycle once), 3 <= m <= 8.
inline Count count_cycles(const Graph& g, std::size_t m) {
    if (m < 3 || m > 8) throw std::invalid_argument("count_cycles supports lengths 3..8");
    const auto n = g.order();
    if (m > n) return 0;
    const auto stride = g.stride();
    // Paths start at their smallest vertex s and close back to s; both
    // orientations are found, hence the final halving.
    Count twice = 0;
    std::vector<detail::Words> level(m, detail::Words(stride));
    detail::Words visited(stride);
    std::vector<Vertex> path(m);

    for (Vertex s = 0; s < n; ++s) {
        auto gt = detail::above(n, s);
        auto rs = g.row(s);
        // level[d] = candidates for path position d+1 given path[0..d].
        std::fill(visited.begin(), visited.end(), 0);
        visited[s / 64] |= std::uint64_t{1} << (s % 64);
        path[0] = s;

        auto dfs = [&](auto&& self, std::size_t depth) -> void {
            auto rv = g.row(path[depth]);
            if (depth == m - 2) {
                std::size_t c = 0;
                for (std::size_t i = 0; i < stride; ++i)
                    c += static_cast<std::size_t>(std::popcount(rv[i] & rs[i] & gt[i] & ~visited[i]));
                twice += c;
                return;
            }
            auto& cand = level[depth];
            for (std::size_t i = 0; i < stride; ++i) cand[i] = rv[i] & gt[i] & ~visited[i];
            Vertex w = 0;
            while (detail::pop_lowest(cand, w)) {
                visited[w / 64] |= std::uint64_t{1} << (w % 64);
                path[depth + 1] = w;
                self(self, depth + 1);
                visited[w / 64] &= ~(std::uint64_t{1} << (w % 64));
            }
        };
        dfs(dfs, 0);
    }
    return twice / 2;
}

/// Copies of the star K_{1,s}. For s >= 2 this is sum_v C(deg v, s);
/// s = 1 is a single edge and gives m.
inline Count count_stars(const Graph& g, std::size_t s) {
    if (s == 0) throw std::invalid_argument("star size must be at least 1");
    if (s == 1) return g.size();
    Count total = 0;
    for (Vertex v = 0; v < g.order(); ++v) total += binomial(g.degree(v), s);
    return total;
}

/// Copies of K_{a,b} as (not necessarily induced) subgraphs.
inline Count count_complete_bipartite(const Graph& g, std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("complete bipartite sides must be at least 1");
    const auto n = g.order();
    const auto stride = g.stride();
    Count total = 0;
    std::vector<detail::Words> common(a + 1, detail::Words(stride));
    common[0] = detail::all_vertices(n);

    // A is built in increasing vertex order; B ranges over b-subsets of the
    // common neighbourhood of A, which never meets A itself.
    auto rec = [&](auto&& self, std::size_t depth, Vertex start) -> void {
        if (depth == a) {
            total += binomial(detail::popcount(common[depth]), b);
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            auto r = g.row(v);
            auto& next = common[depth + 1];
            for (std::size_t i = 0; i < stride; ++i) next[i] = common[depth][i] & r[i];
            if (detail::popcount(next) < b) continue;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return a == b ? total / 2 : total;
}

/// Proper 2-colouring if one exists.
inline std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
    const auto n = g.order();
    std::vector<std::uint8_t> color(n, 2);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != 2) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            bool ok = true;
            g.for_each_neighbor(u, [&](Vertex w) {
                if (color[w] == 2) {
                    color[w] = static_cast<std::uint8_t>(1 - color[u]);
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    ok = false;
                }
            });
            if (!ok) return std::nullopt;
        }
    }
    return color;
}

/// Length of a shortest odd closed walk through s (an upper bound on the
/// odd girth, and equal to it when s lies on a shortest odd cycle).
inline std::optional<std::size_t> shortest_odd_walk_through(const Graph& g, Vertex s,
                                                            std::size_t cutoff = SIZE_MAX) {
    const auto n = g.order();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    std::optional<std::size_t> best;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        if (2 * dist[u] + 1 >= std::min(cutoff, best.value_or(SIZE_MAX))) break;
        g.for_each_neighbor(u, [&](Vertex w) {
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            } else if (dist[w] == dist[u]) {
                auto len = 2 * dist[u] + 1;
                if (!best || len < *best) best = len;
            }
        });
    }
    return best;
}

/// Length of a shortest odd cycle; nullopt iff the graph is bipartite.
inline std::optional<std::size_t> odd_girth(const Graph& g) {
    std::optional<std::size_t> best;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto w = shortest_odd_walk_through(g, s, best.value_or(SIZE_MAX));
        if (w && (!best || *w < *best)) best = w;
        if (best && *best == 3) break;
    }
    return best;
}

}  // namespace turanreg
