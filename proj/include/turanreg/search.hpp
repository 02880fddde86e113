#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "canonical.hpp"
#include "census.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "formulas.hpp"
#include "graph6.hpp"
#include "standard_graphs.hpp"
#include "subgraph.hpp"

namespace turanreg {

/// A forbidden pattern: a named odd-cycle family or an explicit graph.
using HSpec = std::variant<FamilySpec, Graph>;

inline std::string hspec_name(const HSpec& h) {
    if (auto f = std::get_if<FamilySpec>(&h)) return f->name();
    return "g6:" + graph6_encode(std::get<Graph>(h));
}

/// Parses K3, C<odd>, odd-family:<l>, clique:<t>, star:<s>, cycle:<m> or g6:<graph6>.
inline HSpec parse_hspec(std::string_view text) {
    auto number = [&](std::string_view digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad pattern '" + std::string(text) + "'");
        return static_cast<std::size_t>(std::stoull(std::string(digits)));
    };
    if (text == "K3" || text == "triangle") return FamilySpec::triangle();
    if (text.starts_with("g6:")) {
        Graph h = graph6_decode(text.substr(3));
        if (h.size() == 0) throw std::invalid_argument("forbidden graph needs at least one edge");
        return h;
    }
    if (text.starts_with("odd-family:")) return FamilySpec::odd_cycle_family(number(text.substr(11)));
    if (text.starts_with("clique:")) {
        auto t = number(text.substr(7));
        if (t < 2) throw std::invalid_argument("clique pattern needs t >= 2");
        return complete_graph(t);
    }
    if (text.starts_with("star:")) {
        auto s = number(text.substr(5));
        if (s < 1) throw std::invalid_argument("star pattern needs s >= 1");
        return star_graph(s);
    }
    if (text.starts_with("cycle:") || (text.size() > 1 && text[0] == 'C')) {
        auto len = number(text.substr(text[0] == 'C' ? 1 : 6));
        if (len < 3) throw std::invalid_argument("cycle pattern needs length >= 3");
        if (len % 2 == 1) return len == 3 ? FamilySpec::triangle() : FamilySpec::odd_cycle((len + 1) / 2);
        return cycle_graph(len);
    }
    throw std::invalid_argument("unknown pattern '" + std::string(text) + "'");
}

namespace detail {

inline bool has_triangle_small(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto rv = g.word(v);
        for (std::uint64_t m = rv >> v >> 1; m; m &= m - 1) {
            auto u = static_cast<Vertex>(v + 1 + static_cast<Vertex>(std::countr_zero(m)));
            if (rv & g.word(u)) return true;
        }
    }
    return false;
}

inline bool has_triangle(const Graph& g) {
    if (g.order() <= 64) return has_triangle_small(g);
    return count_cliques(g, 3) > 0;
}

}  // namespace detail

/// Predicate "G contains no member of H". Odd cycles go through the odd
/// girth first and fall back to subgraph search only when it is inconclusive.
inline std::function<bool(const Graph&)> h_free_predicate(const HSpec& h) {
    if (auto f = std::get_if<FamilySpec>(&h)) {
        const auto len = f->longest_cycle();
        switch (f->kind) {
            case FamilyKind::triangle: return [](const Graph& g) { return !detail::has_triangle(g); };
            case FamilyKind::odd_cycle_family:
                return [len](const Graph& g) {
                    auto og = odd_girth(g);
                    return !og || *og > len;
                };
            case FamilyKind::odd_cycle: {
                if (len == 3) return [](const Graph& g) { return !detail::has_triangle(g); };
                Graph c = cycle_graph(len);
                return [len, c](const Graph& g) {
                    auto og = odd_girth(g);
                    if (!og || *og > len) return true;
                    if (*og == len) return false;
                    return !contains_subgraph(g, c);
                };
            }
        }
    }
    Graph pattern = std::get<Graph>(h);
    if (pattern.size() == 0) throw std::invalid_argument("forbidden graph needs at least one edge");
    if (detail::is_cycle(pattern) && pattern.order() % 2 == 1)
        return h_free_predicate(pattern.order() == 3 ? FamilySpec::triangle() : FamilySpec::odd_cycle((pattern.order() + 1) / 2));
    const bool pattern_bipartite = two_coloring(pattern).has_value();
    return [pattern, pattern_bipartite](const Graph& g) {
        if (!pattern_bipartite && two_coloring(g)) return true;
        return !contains_subgraph(g, pattern);
    };
}

inline constexpr std::size_t kDefaultWitnessCap = 16;

struct SearchOptions {
    std::size_t jobs = 1;
    std::size_t witness_cap = kDefaultWitnessCap;
    bool all_witnesses = false;  // exr_exact: keep enumerating past the first witness
    bool allow_large = false;
};

struct SearchResult {
    std::optional<std::int64_t> objective;  // none when no graph qualifies
    std::vector<std::string> witnesses;     // canonical graph6, at most witness_cap
    std::uint64_t classes = 0;              // extremal isomorphism classes
    bool classes_exact = true;              // false when the search stopped at the first witness
    GenStats stats;
    bool exact = true;
    std::string note;
};

namespace detail {

// Min/max with the attaining graphs; merging is associative and keeps
// witnesses in enumeration order.
struct Extremum {
    bool maximize = true;
    std::size_t cap = kDefaultWitnessCap;
    std::optional<std::int64_t> best;
    std::uint64_t count = 0;
    std::vector<Graph> witnesses;

    void offer(std::int64_t value, const Graph& g) {
        if (!best || (maximize ? value > *best : value < *best)) {
            best = value;
            count = 0;
            witnesses.clear();
        }
        if (value == *best) {
            ++count;
            if (witnesses.size() < cap) witnesses.push_back(g);
        }
    }

    static Extremum merge(Extremum a, Extremum b) {
        if (!b.best) return a;
        if (!a.best || (a.maximize ? *b.best > *a.best : *b.best < *a.best)) return b;
        if (*b.best == *a.best) {
            a.count += b.count;
            for (auto& w : b.witnesses)
                if (a.witnesses.size() < a.cap) a.witnesses.push_back(std::move(w));
        }
        return a;
    }
};

inline std::vector<std::string> canonical_witnesses(const std::vector<Graph>& graphs) {
    std::vector<std::string> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(canonical_label(g).bytes);
    return out;
}

template <class Objective>
SearchResult optimize(const GenFilter& filter, Objective objective, bool maximize, const SearchOptions& opt) {
    Extremum init;
    init.maximize = maximize;
    init.cap = opt.witness_cap;
    SearchResult res;
    auto acc = enumerate_reduce(
        filter, init,
        [&](Extremum& e, const Graph& g) {
            e.offer(static_cast<std::int64_t>(objective(g)), g);
            return true;
        },
        &Extremum::merge, GenOptions{opt.jobs, opt.allow_large}, &res.stats);
    res.objective = acc.best;
    res.classes = acc.count;
    res.witnesses = canonical_witnesses(acc.witnesses);
    if (res.stats.infeasible) res.note = res.stats.reason;
    else if (!res.objective) res.note = "no graph satisfies the constraints";
    return res;
}

inline void check_cap(std::size_t n, std::size_t cap, const SearchOptions& opt, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + " needs n >= 1");
    if (n > cap && !opt.allow_large)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(cap));
}

}  // namespace detail

/// Largest k such that some k-regular graph on n vertices avoids H. Degrees
/// are tried from n-1 downwards; each k stops at its first witness unless
/// all_witnesses is set, in which case the class count is exact.
inline SearchResult exr_exact(std::size_t n, const HSpec& h, const SearchOptions& opt = {}) {
    detail::check_cap(n, kEnumerationCap, opt, "exr_exact");
    auto free = h_free_predicate(h);
    SearchResult res;
    struct Found {
        std::uint64_t count = 0;
        std::vector<Graph> graphs;
    };
    for (std::size_t k = n; k-- > 0;) {
        if ((n * k) % 2 != 0) continue;
        GenFilter f;
        f.n = n;
        f.regular_k = k;
        f.hereditary = free;
        GenStats st;
        auto found = enumerate_reduce(
            f, Found{},
            [&](Found& acc, const Graph& g) {
                ++acc.count;
                if (acc.graphs.size() < opt.witness_cap) acc.graphs.push_back(g);
                return opt.all_witnesses;
            },
            [&](Found a, Found b) {
                a.count += b.count;
                for (auto& g : b.graphs)
                    if (a.graphs.size() < opt.witness_cap) a.graphs.push_back(std::move(g));
                return a;
            },
            GenOptions{opt.jobs, opt.allow_large}, &st);
        res.stats += st;
        res.stats.seconds += st.seconds;
        if (found.count > 0) {
            res.objective = static_cast<std::int64_t>(k);
            res.classes = found.count;
            res.classes_exact = opt.all_witnesses;
            res.witnesses = detail::canonical_witnesses(found.graphs);
            return res;
        }
    }
    res.note = "no regular graph avoids the pattern";
    return res;
}

/// Minimum triangle count over k-regular graphs on n vertices.
inline SearchResult min_triangles_regular(std::size_t n, std::size_t k, const SearchOptions& opt = {}) {
    detail::check_cap(n, kEnumerationCap, opt, "min_triangles_regular");
    GenFilter f;
    f.n = n;
    f.regular_k = k;
    SearchResult res;
    if (auto why = filter_infeasibility(f, {opt.jobs, opt.allow_large})) {
        res.stats.infeasible = true;
        res.stats.reason = *why;
        res.note = *why;
        return res;
    }
    // Complements keep the triangle count computable and halve the search for k > (n-1)/2.
    detail::Extremum init;
    init.maximize = false;
    init.cap = opt.witness_cap;
    const bool flip = 2 * k > n - 1;
    if (flip) f.regular_k = n - 1 - k;
    auto acc = enumerate_reduce(
        f, init,
        [&](detail::Extremum& e, const Graph& g) {
            if (flip) {
                Graph c = complement(g);
                e.offer(static_cast<std::int64_t>(count_cliques(c, 3)), c);
            } else {
                e.offer(static_cast<std::int64_t>(count_cliques(g, 3)), g);
            }
            return true;
        },
        &detail::Extremum::merge, GenOptions{opt.jobs, opt.allow_large}, &res.stats);
    res.objective = acc.best;
    res.classes = acc.count;
    res.witnesses = detail::canonical_witnesses(acc.witnesses);
    if (!res.objective) res.note = "no " + std::to_string(k) + "-regular graph on " + std::to_string(n) + " vertices";
    return res;
}

/// Maximum k_t over graphs with n vertices, m edges and maximum degree <= r.
inline SearchResult max_kt(std::size_t n, std::size_t m, std::size_t r, std::size_t t, const SearchOptions& opt = {}) {
    detail::check_cap(n, 10, opt, "max_kt");
    if (t == 0) throw std::invalid_argument("clique size must be at least 1");
    GenFilter f;
    f.n = n;
    f.edge_count = m;
    f.max_degree = r;
    return detail::optimize(f, [t](const Graph& g) { return count_cliques(g, t); }, true, opt);
}

/// Maximum total clique count k(G) = sum_{t>=2} k_t(G) under the same constraints.
inline SearchResult max_k_total(std::size_t n, std::size_t m, std::size_t r, const SearchOptions& opt = {}) {
    detail::check_cap(n, 10, opt, "max_k_total");
    GenFilter f;
    f.n = n;
    f.edge_count = m;
    f.max_degree = r;
    return detail::optimize(f, [](const Graph& g) { return total_cliques(g); }, true, opt);
}

/// Maximum number of copies of `pattern` over graphs on n vertices with maximum degree <= r.
inline SearchResult max_copies_free(std::size_t n, const Graph& pattern, std::size_t r, const SearchOptions& opt = {}) {
    detail::check_cap(n, 10, opt, "max_copies_free");
    GenFilter f;
    f.n = n;
    f.max_degree = r;
    return detail::optimize(f, [&pattern](const Graph& g) { return count_copies(g, pattern); }, true, opt);
}

// ------------------------------------------------------------ classification

/// Whether H has chromatic number 3, whether deleting one vertex can make it
/// bipartite, and whether it embeds into K^=_{2|H|,|H|}.
struct ThreeChromaticProfile {
    bool chromatic_three = false;
    bool vertex_to_bipartite = false;
    bool inside_kbe = false;
    std::optional<std::size_t> odd_girth;
};

inline bool three_colorable(const Graph& h) {
    const auto n = h.order();
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            h.for_each_neighbor(v, [&](Vertex u) {
                if (u < v && color[u] == c) ok = false;
            });
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
        }
        color[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

inline ThreeChromaticProfile classify_three_chromatic(const Graph& h) {
    ThreeChromaticProfile p;
    p.odd_girth = odd_girth(h);
    p.chromatic_three = p.odd_girth.has_value() && three_colorable(h);
    for (Vertex v = 0; v < h.order() && !p.vertex_to_bipartite; ++v)
        if (two_coloring(delete_vertex(h, v))) p.vertex_to_bipartite = true;
    if (h.order() > 0) p.inside_kbe = contains_subgraph(kbe_graph(h.order(), h.order()), h);
    return p;
}

// ------------------------------------------------------------------ probes

struct ProbeRow {
    std::string instance;
    std::string conjectured;
    std::string observed;
    std::string status;  // consistent | discrepancy | data | skipped
    std::string detail;
};

struct ProbeReport {
    std::string name;
    std::vector<ProbeRow> rows;
};

struct ProbeRange {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t r = 4;                // degree bound (gls-critical, cycle-question)
    std::size_t cycle_length = 5;     // cycle-question
    std::optional<Graph> pattern;     // odd-girth-question; C5 with a pendant edge by default
};

namespace detail {

inline std::size_t clique_components(const Graph& g, std::size_t size) {
    std::vector<std::size_t> label;
    auto comps = connected_components(g, &label);
    std::vector<std::size_t> verts(comps, 0), twice_edges(comps, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        ++verts[label[v]];
        twice_edges[label[v]] += g.degree(v);
    }
    std::size_t c = 0;
    for (std::size_t i = 0; i < comps; ++i)
        if (verts[i] == size && twice_edges[i] == size * (size - 1)) ++c;
    return c;
}

inline Graph c5_with_pendant() {
    Graph g = cycle_graph(5);
    Graph h(6);
    for (auto e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(0, 5);
    return h;
}

}  // namespace detail

/// Small-n data for the open conjectures and questions. Rows report what
/// exhaustive search finds next to the conjectured value or structure; the
/// probe never treats a conjecture as established.
inline ProbeReport probe_conjecture(const std::string& name, const ProbeRange& range, const SearchOptions& opt = {}) {
    ProbeReport rep;
    rep.name = name;
    SearchOptions wide = opt;
    wide.witness_cap = std::max<std::size_t>(opt.witness_cap, 64);

    if (name == "gls-critical") {
        const auto r = range.r;
        for (std::size_t n = range.n_min; n <= range.n_max; ++n) {
            auto [low, high] = gls_critical_range(n, r);
            auto p = gls_params(n, r);
            const std::size_t need = p.a > 0 ? p.a - 1 : 0;
            for (std::size_t m = low + 1; m <= high; ++m) {
                auto check = [&](const std::string& what, const SearchResult& res) {
                    ProbeRow row;
                    row.instance = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                   " " + what;
                    row.conjectured = "every extremal graph has >= " + std::to_string(need) + " components K" +
                                      std::to_string(r + 1);
                    if (!res.objective) {
                        row.status = "skipped";
                        row.detail = res.note;
                        rep.rows.push_back(row);
                        return;
                    }
                    std::size_t fewest = SIZE_MAX;
                    for (const auto& w : res.witnesses)
                        fewest = std::min(fewest, detail::clique_components(graph6_decode(w), r + 1));
                    row.observed = "max " + std::to_string(*res.objective) + ", " + std::to_string(res.classes) +
                                   " extremal classes, fewest K" + std::to_string(r + 1) + " components " +
                                   std::to_string(fewest);
                    row.status = fewest >= need ? "consistent" : "discrepancy";
                    if (res.witnesses.size() < res.classes) row.detail = "only the first witnesses were inspected";
                    rep.rows.push_back(row);
                };
                check("t=3", max_kt(n, m, r, 3, wide));
                check("k", max_k_total(n, m, r, wide));
            }
        }
    } else if (name == "conj55") {
        for (std::size_t n = range.n_min; n <= range.n_max; ++n) {
            if (n % 2 == 0) continue;
            for (std::size_t k = 2; k < n; k += 2) {
                if (!in_supersaturation_window(n, k)) continue;
                ProbeRow row;
                row.instance = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                auto bound = conj55_bound(n, k);
                row.conjectured = "k3 >= " + std::to_string(bound);
                auto res = min_triangles_regular(n, k, opt);
                row.observed = res.objective ? "min k3 = " + std::to_string(*res.objective) : "no graph";
                if (!res.objective) row.status = "skipped";
                else row.status = static_cast<Count>(*res.objective) >= bound ? "consistent" : "discrepancy";
                if (res.objective && static_cast<Count>(*res.objective) == bound) row.detail = "bound attained";
                rep.rows.push_back(row);
            }
        }
    } else if (name == "odd-girth-question") {
        Graph h = range.pattern ? *range.pattern : detail::c5_with_pendant();
        auto og = odd_girth(h);
        if (!og) throw std::invalid_argument("odd-girth-question needs a non-bipartite pattern");
        for (std::size_t n = range.n_min; n <= range.n_max; ++n) {
            ProbeRow row;
            row.instance = "n=" + std::to_string(n) + " H=" + graph6_encode(h) + " g=" + std::to_string(*og);
            row.conjectured = "2*floor(n/(g+2)) + o(n) = " + std::to_string(2 * (n / (*og + 2))) + " + o(n)";
            auto res = exr_exact(n, HSpec{h}, opt);
            row.observed = res.objective ? "ex_r = " + std::to_string(*res.objective) : "none";
            row.status = "data";
            rep.rows.push_back(row);
        }
    } else if (name == "cycle-question") {
        const auto r = range.r;
        const auto len = range.cycle_length;
        Graph cyc = cycle_graph(len);
        Graph ref = len % 2 == 0 ? complete_bipartite(r, r) : complete_graph(r + 1);
        const double ref_value = static_cast<double>(count_copies(ref, cyc)) / static_cast<double>(ref.order());
        for (std::size_t n = range.n_min; n <= range.n_max; ++n) {
            ProbeRow row;
            row.instance = "n=" + std::to_string(n) + " C" + std::to_string(len) + " r=" + std::to_string(r);
            std::ostringstream c, o;
            c << (len % 2 == 0 ? "K_{r,r}" : "K_{r+1}") << " ratio " << ref_value;
            auto res = max_copies_free(n, cyc, r, opt);
            double ratio = res.objective ? static_cast<double>(*res.objective) / static_cast<double>(n) : 0.0;
            o << "max " << res.objective.value_or(0) << ", ratio " << ratio;
            row.conjectured = c.str();
            row.observed = o.str();
            row.status = "data";
            if (ratio > ref_value + 1e-12) row.detail = "exceeds the reference ratio";
            rep.rows.push_back(row);
        }
    } else {
        throw std::invalid_argument("unknown probe '" + name + "' (gls-critical, conj55, odd-girth-question, cycle-question)");
    }
    return rep;
}

}  // namespace turanreg
