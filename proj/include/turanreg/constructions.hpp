#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "formulas.hpp"
#include "graph.hpp"

namespace turanreg {

/// A deterministic schedule (matchings, factor removal) could not be carried
/// out for the requested parameters.
class InfeasibleSchedule : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructed graph failed one of its own expected properties.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output of a constructor: the graph plus everything its validator checks.
struct Construction {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    Graph graph;

    std::size_t order = 0;
    std::optional<std::size_t> degree;
    std::optional<std::size_t> odd_girth;  // exact expected value
    std::optional<Count> triangles;

    // Vertex partition, when the construction has one. With parts_cycle the
    // parts are arranged around a cycle and every edge joins consecutive
    // parts; otherwise the parts are only required to be stable sets.
    std::vector<std::uint32_t> part_of;
    std::size_t parts = 0;
    bool parts_cycle = false;

    // Every triangle passes through this vertex; deleting it leaves a bipartite graph.
    std::optional<Vertex> apex;
    // The graph is a subgraph of kbe_graph(a, b) via vertex v -> kbe_map[v].
    std::optional<std::pair<std::size_t, std::size_t>> kbe_host;
    std::vector<Vertex> kbe_map;

    std::vector<std::size_t> part_sizes() const {
        std::vector<std::size_t> s(parts, 0);
        for (auto p : part_of) ++s[p];
        return s;
    }
};

namespace detail {

inline std::vector<std::uint32_t> contiguous_parts(const std::vector<std::size_t>& sizes) {
    std::vector<std::uint32_t> part_of;
    for (std::size_t i = 0; i < sizes.size(); ++i) part_of.insert(part_of.end(), sizes[i], static_cast<std::uint32_t>(i));
    return part_of;
}

// Removes a_i -- b_{(i+c) mod size} for lo <= c < hi.
inline void remove_rotations(Graph& g, Vertex a0, Vertex b0, std::size_t size, std::size_t lo, std::size_t hi) {
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t c = lo; c < hi; ++c)
            g.remove_edge(static_cast<Vertex>(a0 + i), static_cast<Vertex>(b0 + (i + c) % size));
}

// Joins consecutive parts around a cycle, S_M--S_1 excluded.
inline Graph cycle_blowup_skeleton(const std::vector<std::size_t>& sizes) {
    std::size_t n = 0;
    std::vector<Vertex> start;
    for (auto s : sizes) {
        start.push_back(static_cast<Vertex>(n));
        n += s;
    }
    Graph g(n);
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        g.join(start[i], static_cast<Vertex>(start[i] + sizes[i]), start[i + 1],
               static_cast<Vertex>(start[i + 1] + sizes[i + 1]));
    return g;
}

// Deletes a d-regular bipartite subgraph between A = [a0, a0+na) and
// B = [b0, b0+nb) from existing edges, always serving the vertex with the
// largest remaining deficit first (ties to the lower index).
inline void remove_regular_bipartite(Graph& g, Vertex a0, std::size_t na, Vertex b0, std::size_t nb, std::size_t d) {
    if (d == 0) return;
    if (na != nb) throw InfeasibleSchedule("regular bipartite deletion needs equal sides");
    std::vector<std::size_t> need_a(na, d), need_b(nb, d);
    for (std::size_t round = 0; round < na; ++round) {
        std::size_t ia = 0;
        for (std::size_t i = 1; i < na; ++i)
            if (need_a[i] > need_a[ia]) ia = i;
        if (need_a[ia] == 0) break;
        std::vector<std::size_t> cand;
        for (std::size_t j = 0; j < nb; ++j)
            if (need_b[j] > 0 && g.has_edge(static_cast<Vertex>(a0 + ia), static_cast<Vertex>(b0 + j))) cand.push_back(j);
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t p, std::size_t q) { return need_b[p] > need_b[q]; });
        if (cand.size() < need_a[ia])
            throw InfeasibleSchedule("largest-deficit deletion got stuck at vertex " + std::to_string(a0 + ia));
        for (std::size_t t = 0; t < need_a[ia]; ++t) {
            g.remove_edge(static_cast<Vertex>(a0 + ia), static_cast<Vertex>(b0 + cand[t]));
            --need_b[cand[t]];
        }
        need_a[ia] = 0;
    }
    for (auto r : need_b)
        if (r != 0) throw InfeasibleSchedule("largest-deficit deletion left a vertex short");
}

inline std::size_t edges_inside(const Graph& g, const std::vector<Vertex>& set) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) ++e;
    return e;
}

}  // namespace detail

/// Blow-up of C_{2l+1} with part sizes from {x-y, x, x+y}, n = (2l+1)x + y,
/// x > y, with y rotational perfect matchings removed between S_1 and S_M.
/// 2x-regular with odd girth exactly 2l+1.
inline Construction odd_girth_blowup(std::size_t n, std::size_t ell) {
    if (ell < 2) throw std::invalid_argument("odd_girth_blowup needs l >= 2");
    if (n % 2 == 0) throw std::invalid_argument("odd_girth_blowup needs odd n");
    const std::size_t m = 2 * ell + 1;
    const std::size_t x = n / m, y = n % m;
    if (x <= y)
        throw std::invalid_argument("n=" + std::to_string(n) + " = " + std::to_string(m) + "*" + std::to_string(x) +
                                    " + " + std::to_string(y) + " needs x > y");
    std::vector<std::size_t> sizes(m);
    for (std::size_t i = 1; i <= m; ++i) {
        if (ell % 2 == 1)
            sizes[i - 1] = i % 2 == 1 ? x : (i % 4 == 2 ? x + y : x - y);
        else
            sizes[i - 1] = i % 2 == 0 ? x : (i % 4 == 1 ? x + y : x - y);
    }
    Graph g = detail::cycle_blowup_skeleton(sizes);
    // S_1 and S_M have equal size; join them and drop y rotations.
    const std::size_t a = sizes.front();
    const auto last_start = static_cast<Vertex>(n - sizes.back());
    g.join(0, static_cast<Vertex>(a), last_start, static_cast<Vertex>(n));
    detail::remove_rotations(g, 0, last_start, a, 0, y);

    Construction c;
    c.name = "odd-girth-blowup";
    c.params = {{"n", static_cast<std::int64_t>(n)}, {"l", static_cast<std::int64_t>(ell)}};
    c.graph = std::move(g);
    c.order = n;
    c.degree = 2 * x;
    c.odd_girth = m;
    c.part_of = detail::contiguous_parts(sizes);
    c.parts = m;
    c.parts_cycle = true;
    return c;
}

/// Pentagon blow-up with parts (x+y, x, x-y, x, x+y), n = 5x + y odd, y < x.
inline Construction pentagon_blowup(std::size_t n) {
    if (n % 2 == 0) throw std::invalid_argument("pentagon_blowup needs odd n");
    const std::size_t x = n / 5, y = n % 5;
    if (y >= x)
        throw std::invalid_argument("pentagon_blowup: n=" + std::to_string(n) + " gives y=" + std::to_string(y) +
                                    " >= x=" + std::to_string(x));
    Construction c = odd_girth_blowup(n, 2);
    c.name = "pentagon-blowup";
    c.params = {{"n", static_cast<std::int64_t>(n)}};
    c.triangles = 0;
    return c;
}

/// Circulant on Z_n joining i and j when i - j = +-1, +-3, ..., +-(2 floor(n/5) - 1).
inline Construction circulant_small_odd(std::size_t n) {
    if (n % 2 == 0 || n < 5 || n > 19 || n == 15)
        throw std::invalid_argument("circulant_small_odd needs odd 5 <= n <= 19, n != 15");
    Graph g(n);
    for (std::size_t h = 0; h < n / 5; ++h)
        for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 2 * h + 1) % n));
    Construction c;
    c.name = "circulant-small-odd";
    c.params = {{"n", static_cast<std::int64_t>(n)}};
    c.graph = std::move(g);
    c.order = n;
    c.degree = 2 * (n / 5);
    c.triangles = 0;
    return c;
}

/// K_{x,x} (n = 2x+1) minus y+1 rotational matchings inside the block
/// A[0,k/2) x B[0,k/2) and y inside the rest, y = x - k; the last block
/// matching is replaced by an apex joined to the whole block. Every triangle
/// uses the apex, and there are (k/2)(k/2 - y - 1) of them.
inline Construction apex_construction(std::size_t n, std::size_t k) {
    if (n % 2 == 0 || k % 2 == 1) throw std::invalid_argument("apex_construction needs odd n and even k");
    if (!in_supersaturation_window(n, k))
        throw std::invalid_argument("apex_construction: k=" + std::to_string(k) + " outside (" +
                                    std::to_string(2 * (n / 5)) + ", " + std::to_string(2 * (n / 4)) + "] for n=" +
                                    std::to_string(n));
    const std::size_t x = (n - 1) / 2, y = x - k, s = k / 2;
    if (y + 1 > s || y > x - s)
        throw InfeasibleSchedule("apex_construction: block of size " + std::to_string(s) + " cannot absorb " +
                                 std::to_string(y + 1) + " matchings");
    Graph g(n);
    const auto bx = static_cast<Vertex>(x);
    const auto apex = static_cast<Vertex>(2 * x);
    g.join(0, bx, bx, static_cast<Vertex>(2 * x));
    detail::remove_rotations(g, 0, bx, s, 0, y + 1);
    detail::remove_rotations(g, static_cast<Vertex>(s), static_cast<Vertex>(x + s), x - s, 0, y);
    for (std::size_t i = 0; i < s; ++i) {
        g.add_edge(apex, static_cast<Vertex>(i));
        g.add_edge(apex, static_cast<Vertex>(x + i));
    }
    Construction c;
    c.name = "apex";
    c.params = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
    c.graph = std::move(g);
    c.order = n;
    c.degree = k;
    c.triangles = s * (s - y - 1);
    c.apex = apex;
    return c;
}

/// K_{k,k} minus a matching of size k/2, whose endpoints are joined to an
/// extra vertex; k-regular on 2k+1 vertices with (k/2)(k/2-1) triangles.
inline Construction prop56_extremal(std::size_t k) {
    if (k % 2 == 1 || k < 4) throw std::invalid_argument("prop56_extremal needs even k >= 4");
    Graph g(2 * k + 1);
    const auto kk = static_cast<Vertex>(k);
    const auto apex = static_cast<Vertex>(2 * k);
    g.join(0, kk, kk, static_cast<Vertex>(2 * k));
    for (Vertex i = 0; i < k / 2; ++i) {
        g.remove_edge(i, kk + i);
        g.add_edge(apex, i);
        g.add_edge(apex, kk + i);
    }
    Construction c;
    c.name = "prop56";
    c.params = {{"k", static_cast<std::int64_t>(k)}};
    c.graph = std::move(g);
    c.order = 2 * k + 1;
    c.degree = k;
    c.triangles = (k / 2) * (k / 2 - 1);
    c.apex = apex;
    return c;
}

/// K_{p,p} (n = 2p+1) plus a vertex v joined to k/2 vertices on each side;
/// a (q+1)-regular bipartite graph is deleted among the neighbours of v and a
/// q-regular one among the non-neighbours (q = p - k), both by
/// largest-deficit-first deletion.
inline Construction conj55_equality(std::size_t n, std::size_t k) {
    if (n % 2 == 0 || k % 2 == 1) throw std::invalid_argument("conj55_equality needs odd n and even k");
    if (!in_supersaturation_window(n, k))
        throw std::invalid_argument("conj55_equality: k=" + std::to_string(k) + " outside (" +
                                    std::to_string(2 * (n / 5)) + ", " + std::to_string(2 * (n / 4)) + "] for n=" +
                                    std::to_string(n));
    const std::size_t p = (n - 1) / 2, q = p - k, h = k / 2;
    Graph g(n);
    const auto bp = static_cast<Vertex>(p);
    const auto v = static_cast<Vertex>(2 * p);
    g.join(0, bp, bp, static_cast<Vertex>(2 * p));
    for (Vertex i = 0; i < h; ++i) {
        g.add_edge(v, i);
        g.add_edge(v, bp + i);
    }
    if (q + 1 > h) throw InfeasibleSchedule("conj55_equality: cannot delete a (q+1)-factor among k/2 vertices");
    detail::remove_regular_bipartite(g, 0, h, bp, h, q + 1);
    detail::remove_regular_bipartite(g, static_cast<Vertex>(h), p - h, static_cast<Vertex>(p + h), p - h, q);
    Construction c;
    c.name = "conj55-equality";
    c.params = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
    c.graph = std::move(g);
    c.order = n;
    c.degree = k;
    c.triangles = conj55_bound(n, k);
    c.apex = v;
    return c;
}

/// (r-1)-partite (r-2)x-regular graph on n = (r-1)x + y vertices: a complete
/// (r-2)-partite core with parts of size x, minus a y-factor made of
/// circulant difference classes, joined to a stable set of size x + y.
inline Construction multipartite_regular(std::size_t n, std::size_t r) {
    if (r < 4) throw std::invalid_argument("multipartite_regular needs r >= 4");
    const std::size_t x = 2 * (n / (2 * (r - 1)));
    if (x < 2) throw std::invalid_argument("multipartite_regular: n too small for an even part size x >= 2");
    const std::size_t y = n - (r - 1) * x;
    const std::size_t c = r - 2;  // core parts
    const std::size_t big = c * x;
    if (big <= y)
        throw std::invalid_argument("multipartite_regular: (r-2)x=" + std::to_string(big) + " must exceed y=" +
                                    std::to_string(y));
    if (y > (c - 1) * x)
        throw InfeasibleSchedule("multipartite_regular: core has degree " + std::to_string((c - 1) * x) +
                                 ", no " + std::to_string(y) + "-factor to remove");

    // Core vertex i of Z_big sits in part i mod c; difference classes +-d with
    // d not divisible by c join distinct parts.
    std::vector<std::size_t> diffs;
    for (std::size_t d = (y % 2 == 1 ? 2 : 1); d < big / 2 && diffs.size() < y / 2; ++d)
        if (d % c != 0) diffs.push_back(d);
    if (diffs.size() < y / 2)
        throw InfeasibleSchedule("multipartite_regular: only " + std::to_string(diffs.size()) +
                                 " usable difference classes for a " + std::to_string(y) + "-factor");

    // Relabel core vertex i to (i mod c) * x + i / c so parts are contiguous.
    auto pos = [&](std::size_t i) { return static_cast<Vertex>((i % c) * x + i / c); };
    Graph g(n);
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b)
            g.join(static_cast<Vertex>(a * x), static_cast<Vertex>((a + 1) * x), static_cast<Vertex>(b * x),
                   static_cast<Vertex>((b + 1) * x));
    if (y % 2 == 1)
        for (std::size_t j = 0; j + 1 < big; j += 2) g.remove_edge(pos(j), pos(j + 1));
    for (auto d : diffs)
        for (std::size_t i = 0; i < big; ++i) g.remove_edge(pos(i), pos((i + d) % big));
    g.join(0, static_cast<Vertex>(big), static_cast<Vertex>(big), static_cast<Vertex>(n));

    Construction out;
    out.name = "multipartite-regular";
    out.params = {{"n", static_cast<std::int64_t>(n)}, {"r", static_cast<std::int64_t>(r)},
                  {"x", static_cast<std::int64_t>(x)}, {"y", static_cast<std::int64_t>(y)}};
    out.graph = std::move(g);
    out.order = n;
    out.degree = big;
    std::vector<std::size_t> sizes(c, x);
    sizes.push_back(x + y);
    out.part_of = detail::contiguous_parts(sizes);
    out.parts = r - 1;
    return out;
}

/// K^=_{2x,y}: K_{2x,y} plus the matching {2i, 2i+1} inside the side of size 2x.
inline Graph kbe_graph(std::size_t x, std::size_t y) {
    if (x < 1) throw std::invalid_argument("kbe_graph needs x >= 1");
    Graph g(2 * x + y);
    g.join(0, static_cast<Vertex>(2 * x), static_cast<Vertex>(2 * x), static_cast<Vertex>(2 * x + y));
    for (Vertex i = 0; i < x; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

/// n = 2x+1: K_{x+1,x} with floor((x+1)/2) disjoint edges inside the side of
/// size x+1. For even x the matched vertices also lose a perfect matching to
/// the other side, leaving an x-regular graph; for odd x it is (x+1)-regular.
inline Construction odd_half_construction(std::size_t n) {
    if (n % 2 == 0 || n < 5) throw std::invalid_argument("odd_half_construction needs odd n >= 5");
    const std::size_t x = (n - 1) / 2;
    Graph g(n);
    const auto qx = static_cast<Vertex>(x + 1);
    g.join(0, qx, qx, static_cast<Vertex>(n));
    for (Vertex i = 0; i < (x + 1) / 2; ++i) g.add_edge(2 * i, 2 * i + 1);
    if (x % 2 == 0)
        for (Vertex i = 0; i < x; ++i) g.remove_edge(i, qx + i);
    Construction c;
    c.name = "odd-half";
    c.params = {{"n", static_cast<std::int64_t>(n)}};
    c.graph = std::move(g);
    c.order = n;
    c.degree = x % 2 == 0 ? x : x + 1;
    // P keeps its labels on the side of size 2x, Q goes to the side of size x.
    c.kbe_host = std::pair{x, x};
    for (Vertex i = 0; i <= x; ++i) c.kbe_map.push_back(i);
    for (Vertex j = 0; j < x; ++j) c.kbe_map.push_back(static_cast<Vertex>(2 * x + j));
    return c;
}

/// Complement of the disjoint union of stars K_{1,a_i}, each laid out as
/// centre followed by its leaves; requires n = sum (a_i + 1).
inline Graph star_forest_complement(std::size_t n, const std::vector<std::size_t>& parts) {
    std::size_t used = 0;
    for (auto a : parts) {
        if (a < 1) throw std::invalid_argument("star sizes must be at least 1");
        used += a + 1;
    }
    if (used != n)
        throw std::invalid_argument("stars cover " + std::to_string(used) + " vertices, expected " + std::to_string(n));
    Graph forest(n);
    Vertex at = 0;
    for (auto a : parts) {
        for (Vertex j = 1; j <= a; ++j) forest.add_edge(at, at + j);
        at += static_cast<Vertex>(a + 1);
    }
    return complement(forest);
}

// ---------------------------------------------------------------- validation

struct PropertyCheck {
    std::string property;
    std::string expected;
    std::string observed;
    bool ok = false;
};

struct Validation {
    bool ok = true;
    std::vector<PropertyCheck> checks;

    void add(std::string property, std::string expected, std::string observed, bool ok_) {
        ok = ok && ok_;
        checks.push_back({std::move(property), std::move(expected), std::move(observed), ok_});
    }
};

namespace detail {

inline std::vector<Words> part_masks(const Construction& c) {
    const auto stride = c.graph.stride();
    std::vector<Words> masks(c.parts, Words(stride, 0));
    for (Vertex v = 0; v < c.part_of.size(); ++v) masks[c.part_of[v]][v / 64] |= std::uint64_t{1} << (v % 64);
    return masks;
}

// Every edge must join parts i and i+1 (mod parts). Returns the first bad vertex.
inline std::optional<Vertex> cycle_homomorphism_violation(const Construction& c) {
    const auto& g = c.graph;
    auto masks = part_masks(c);
    const auto m = c.parts;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto p = c.part_of[v];
        const auto& prev = masks[(p + m - 1) % m];
        const auto& next = masks[(p + 1) % m];
        auto r = g.row(v);
        for (std::size_t w = 0; w < r.size(); ++w)
            if (r[w] & ~(prev[w] | next[w])) return v;
    }
    return std::nullopt;
}

inline std::optional<Vertex> stable_parts_violation(const Construction& c) {
    auto masks = part_masks(c);
    for (Vertex v = 0; v < c.graph.order(); ++v) {
        auto r = c.graph.row(v);
        const auto& own = masks[c.part_of[v]];
        for (std::size_t w = 0; w < r.size(); ++w)
            if (r[w] & own[w]) return v;
    }
    return std::nullopt;
}

inline std::string opt_str(std::optional<std::size_t> v) { return v ? std::to_string(*v) : "none"; }

}  // namespace detail

/// Checks every expected property of a construction. Large blow-ups are
/// certified without a full odd-girth search: a homomorphism onto the
/// cycle of parts bounds the odd girth from below and one breadth-first
/// search from a vertex of S_1 exhibits an odd cycle of that length.
inline Validation validate(const Construction& c) {
    Validation v;
    const auto& g = c.graph;
    v.add("order", std::to_string(c.order), std::to_string(g.order()), g.order() == c.order);
    if (c.degree) {
        auto d = g.regular_degree();
        v.add("regular degree", std::to_string(*c.degree), d ? std::to_string(*d) : "irregular", d && *d == *c.degree);
    }
    if (c.parts > 0) {
        bool sized = c.part_of.size() == g.order();
        v.add("partition covers vertices", std::to_string(g.order()), std::to_string(c.part_of.size()), sized);
        if (sized) {
            auto bad = detail::stable_parts_violation(c);
            v.add("parts are stable", "no edge inside a part",
                  bad ? "edge inside part at vertex " + std::to_string(*bad) : "none", !bad);
        }
        if (sized && c.parts_cycle) {
            auto bad = detail::cycle_homomorphism_violation(c);
            v.add("edges follow the part cycle", "homomorphism onto C" + std::to_string(c.parts),
                  bad ? "violated at vertex " + std::to_string(*bad) : "holds", !bad);
        }
    }
    if (c.odd_girth) {
        std::optional<std::size_t> observed;
        if (c.parts_cycle && c.parts == *c.odd_girth && g.order() > 0 &&
            !detail::cycle_homomorphism_violation(c)) {
            auto walk = shortest_odd_walk_through(g, 0, *c.odd_girth + 1);
            // The homomorphism rules out anything shorter than the number of parts.
            observed = walk && *walk <= *c.odd_girth ? std::optional<std::size_t>(*c.odd_girth) : walk;
        } else {
            observed = odd_girth(g);
        }
        v.add("odd girth", std::to_string(*c.odd_girth), detail::opt_str(observed), observed == c.odd_girth);
    }
    if (c.apex) {
        auto rest = delete_vertex(g, *c.apex);
        bool bip = two_coloring(rest).has_value();
        v.add("bipartite after deleting apex", "bipartite", bip ? "bipartite" : "not bipartite", bip);
    }
    if (c.triangles) {
        Count t = 0;
        if (c.apex && two_coloring(delete_vertex(g, *c.apex))) {
            t = detail::edges_inside(g, g.neighbors(*c.apex));
        } else if (c.parts_cycle && c.parts > 3 && !detail::cycle_homomorphism_violation(c)) {
            t = 0;  // homomorphism onto a cycle longer than 3
        } else {
            t = count_cliques(g, 3);
        }
        v.add("triangles", std::to_string(*c.triangles), std::to_string(t), t == *c.triangles);
    }
    if (c.kbe_host) {
        auto host = kbe_graph(c.kbe_host->first, c.kbe_host->second);
        const auto& map = c.kbe_map;
        bool fits = map.size() == g.order();
        std::vector<bool> hit(host.order(), false);
        for (std::size_t i = 0; fits && i < map.size(); ++i) {
            if (map[i] >= host.order() || hit[map[i]]) fits = false;
            else hit[map[i]] = true;
        }
        if (fits)
            for (auto e : g.edges())
                if (!host.has_edge(map[e.u], map[e.v])) {
                    fits = false;
                    break;
                }
        v.add("subgraph of K^=", "kbe_graph(" + std::to_string(c.kbe_host->first) + "," +
                                     std::to_string(c.kbe_host->second) + ")",
              fits ? "embedding verified" : "embedding fails", fits);
    }
    return v;
}

inline void validate_or_throw(const Construction& c) {
    auto v = validate(c);
    for (const auto& chk : v.checks)
        if (!chk.ok)
            throw ValidationError(c.name + ": property '" + chk.property + "' violated (expected " + chk.expected +
                                  ", observed " + chk.observed + ")");
}

/// Machine-readable certificate: parameters, expectations and check outcomes.
inline nlohmann::json certificate_json(const Construction& c, const Validation& v) {
    nlohmann::json j;
    j["construction"] = c.name;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, val] : c.params) params[k] = val;
    j["params"] = params;
    j["order"] = c.graph.order();
    j["size"] = c.graph.size();
    nlohmann::json expected = nlohmann::json::object();
    if (c.degree) expected["degree"] = *c.degree;
    if (c.odd_girth) expected["odd_girth"] = *c.odd_girth;
    if (c.triangles) expected["triangles"] = *c.triangles;
    if (c.parts) expected["part_sizes"] = c.part_sizes();
    if (c.apex) expected["apex"] = *c.apex;
    j["expected"] = expected;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& chk : v.checks)
        checks.push_back({{"property", chk.property}, {"expected", chk.expected}, {"observed", chk.observed},
                          {"ok", chk.ok}});
    j["checks"] = checks;
    j["valid"] = v.ok;
    return j;
}

}  // namespace turanreg
