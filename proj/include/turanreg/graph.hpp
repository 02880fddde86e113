#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turanreg {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Largest order accepted anywhere (dense rows: 16384^2 bits = 32 MiB).
inline constexpr std::size_t kMaxOrder = 16384;

/// Simple undirected graph stored as a symmetric bit matrix, one row of
/// 64-bit words per vertex. For order <= 64 every row is a single word and
/// the search code reads it through word().
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t order)
        : n_(order), stride_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0) {
        if (order > kMaxOrder)
            throw std::invalid_argument("graph order " + std::to_string(order) + " exceeds " +
                                        std::to_string(kMaxOrder));
    }

    /// Graph of order rows.size() <= 64 given single-word adjacency rows.
    static Graph from_words(std::span<const std::uint64_t> rows) {
        const auto n = rows.size();
        if (n > 64) throw std::invalid_argument("from_words needs order <= 64");
        Graph g(n);
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (rows[v] & ~all) throw std::out_of_range("row " + std::to_string(v) + " has bits beyond the order");
            if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
            for (std::uint64_t m = rows[v]; m; m &= m - 1)
                if (!((rows[static_cast<std::size_t>(std::countr_zero(m))] >> v) & 1U))
                    throw std::invalid_argument("adjacency rows are not symmetric");
            g.bits_[v] = rows[v];
        }
        return g;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t stride() const noexcept { return stride_; }

    bool has_edge(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return (bits_[u * stride_ + v / 64] >> (v % 64)) & 1U;
    }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        bits_[u * stride_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void remove_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        bits_[u * stride_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[v * stride_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }

    /// Adds every edge between [a_begin, a_end) and [b_begin, b_end).
    /// The ranges must be disjoint.
    void join(Vertex a_begin, Vertex a_end, Vertex b_begin, Vertex b_end) {
        if (a_end > n_ || b_end > n_ || a_begin > a_end || b_begin > b_end)
            throw std::out_of_range("join range outside graph");
        if (a_begin < b_end && b_begin < a_end && a_begin != a_end && b_begin != b_end)
            throw std::invalid_argument("join ranges overlap");
        for (Vertex u = a_begin; u < a_end; ++u) set_range(u, b_begin, b_end);
        for (Vertex u = b_begin; u < b_end; ++u) set_range(u, a_begin, a_end);
    }

    std::size_t degree(Vertex v) const {
        check(v);
        std::size_t d = 0;
        for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }

    std::size_t size() const {
        std::size_t twice = 0;
        for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
        return twice / 2;
    }

    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_};
    }

    // Single-word row; only meaningful when order() <= 64.
    std::uint64_t word(Vertex v) const { return bits_[v]; }

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const {
        auto r = row(v);
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::uint64_t w = r[i]; w != 0; w &= w - 1)
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        }
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
        return out;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    std::size_t min_degree() const {
        if (n_ == 0) return 0;
        std::size_t best = n_;
        for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    /// The common degree if the graph is regular.
    std::optional<std::size_t> regular_degree() const {
        if (n_ == 0) return 0;
        auto d = degree(0);
        for (Vertex v = 1; v < n_; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](Vertex v) {
                if (u < v) out.push_back({u, v});
            });
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
    }

    void set_range(Vertex u, Vertex lo, Vertex hi) {
        auto* r = bits_.data() + static_cast<std::size_t>(u) * stride_;
        for (std::size_t v = lo; v < hi;) {
            std::size_t word = v / 64, off = v % 64;
            std::size_t take = std::min<std::size_t>(64 - off, hi - v);
            std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1) << off;
            r[word] |= mask;
            v += take;
        }
    }

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Graph with exactly the given edges; duplicates are harmless.
inline Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for order " + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

inline Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
    const auto n = g.order();
    Graph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("common_neighbors needs two distinct vertices");
    auto a = g.row(u);
    auto b = g.row(v);
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::uint64_t w = a[i] & b[i]; w != 0; w &= w - 1)
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    return out;
}

inline std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
    auto a = g.row(u);
    auto b = g.row(v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

/// Graph on the remaining vertices after deleting v; higher labels shift down.
inline Graph delete_vertex(const Graph& g, Vertex v) {
    const auto n = g.order();
    if (v >= n) throw std::out_of_range("delete_vertex: vertex out of range");
    Graph h(n - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        h.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return h;
}

/// Relabels so that vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
    Graph h(g.order());
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    const auto off = static_cast<Vertex>(a.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

/// Number of connected components; component ids written to `label` when given.
inline std::size_t connected_components(const Graph& g, std::vector<std::size_t>* label = nullptr) {
    const auto n = g.order();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::vector<Vertex> stack;
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            g.for_each_neighbor(u, [&](Vertex w) {
                if (comp[w] == SIZE_MAX) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            });
        }
        ++count;
    }
    if (label) *label = std::move(comp);
    return count;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g) == 1; }

// Edge-list text: optional "# order N" header, then one "u v" pair per line.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "# order " << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
    std::optional<std::size_t> order;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream hs(line.substr(first + 1));
            std::string key;
            std::size_t value = 0;
            if (hs >> key && key == "order" && hs >> value) order = value;
            continue;
        }
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra) || u < 0 || v < 0)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::size_t n = order.value_or(0);
    if (!order)
        for (auto [u, v] : edges) n = std::max<std::size_t>(n, std::max(u, v) + 1);
    return from_edges(n, edges);
}

}  // namespace turanreg
