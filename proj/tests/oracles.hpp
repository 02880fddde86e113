#pragma once

// Slow, obviously-correct reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "turanreg/graph.hpp"

namespace oracle {

using turanreg::Graph;
using turanreg::Vertex;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const Graph& g) {
    Matrix a(g.order(), std::vector<bool>(g.order(), false));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) a[u][v] = g.has_edge(u, v);
    return a;
}

inline Graph from_matrix(const Matrix& a) {
    Graph g(a.size());
    for (Vertex u = 0; u < a.size(); ++u)
        for (Vertex v = u + 1; v < a.size(); ++v)
            if (a[u][v]) g.add_edge(u, v);
    return g;
}

// Upper triangle read column by column under a relabelling.
inline std::string upper_bits(const Matrix& a, const std::vector<Vertex>& perm) {
    std::string s;
    for (std::size_t j = 1; j < a.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) s.push_back(a[perm[i]][perm[j]] ? '1' : '0');
    return s;
}

// Isomorphism invariant: the largest upper-triangle string over all n! labellings.
inline std::string brute_canonical(const Graph& g) {
    auto a = matrix(g);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        auto s = upper_bits(a, perm);
        if (s > best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every labelled graph on n vertices; bit k of the mask is the k-th pair in column order.
inline Graph labelled_graph(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (mask >> k & 1) g.add_edge(i, j);
    return g;
}

inline std::size_t brute_class_count(std::size_t n) {
    std::set<std::string> seen;
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        seen.insert(brute_canonical(labelled_graph(n, mask)));
    return seen.size();
}

inline std::uint64_t count_cliques(const Graph& g, std::size_t t) {
    const auto n = g.order();
    std::uint64_t c = 0;
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (pick.size() == t) {
            ++c;
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            bool ok = true;
            for (auto u : pick) ok = ok && g.has_edge(u, v);
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return c;
}

// Closed walks on m distinct vertices, divided by the 2m rotations and reflections.
inline std::uint64_t count_cycles(const Graph& g, std::size_t m) {
    const auto n = g.order();
    std::uint64_t seq = 0;
    std::vector<Vertex> path;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (path.size() == m) {
            if (g.has_edge(path.back(), path.front())) ++seq;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v] || (!path.empty() && !g.has_edge(path.back(), v))) continue;
            used[v] = true;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return seq / (2 * m);
}

// Injective maps V(h) -> V(g) preserving edges.
inline std::uint64_t count_embeddings(const Graph& g, const Graph& h) {
    std::uint64_t c = 0;
    std::vector<Vertex> map;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self) -> void {
        const Vertex x = static_cast<Vertex>(map.size());
        if (x == h.order()) {
            ++c;
            return;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (Vertex y = 0; y < x && ok; ++y)
                if (h.has_edge(x, y) && !g.has_edge(v, map[y])) ok = false;
            if (!ok) continue;
            used[v] = true;
            map.push_back(v);
            self(self);
            map.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return c;
}

inline std::uint64_t automorphisms(const Graph& h) { return count_embeddings(h, h); }

inline std::uint64_t count_copies(const Graph& g, const Graph& h) {
    return count_embeddings(g, h) / automorphisms(h);
}

// Shortest odd cycle via the naive cycle counter.
inline std::size_t odd_girth(const Graph& g) {
    for (std::size_t l = 3; l <= g.order(); l += 2)
        if (count_cycles(g, l) > 0) return l;
    return 0;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.order());
    for (auto e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

// Independent graph6 encoder for orders up to 62.
inline std::string graph6(const Graph& g) {
    std::string s(1, static_cast<char>(63 + g.order()));
    std::vector<int> bits;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int x = 0;
        for (int b = 0; b < 6; ++b) x = x * 2 + bits[k + b];
        s.push_back(static_cast<char>(63 + x));
    }
    return s;
}

}  // namespace oracle
