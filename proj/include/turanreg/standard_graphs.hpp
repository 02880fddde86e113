#pragma once

#include <stdexcept>

#include "graph.hpp"

namespace turanreg {

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// K_{a,b}: vertices [0,a) on one side, [a,a+b) on the other.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    g.join(0, static_cast<Vertex>(a), static_cast<Vertex>(a), static_cast<Vertex>(a + b));
    return g;
}

/// K_{1,s} with centre 0.
inline Graph star_graph(std::size_t s) { return complete_bipartite(1, s); }

inline Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

/// K_n minus a perfect matching {2i, 2i+1}; n must be even.
inline Graph cocktail_party_graph(std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("cocktail party graph needs even order");
    Graph g = complete_graph(n);
    for (Vertex i = 0; i + 1 < n; i += 2) g.remove_edge(i, i + 1);
    return g;
}

}  // namespace turanreg
