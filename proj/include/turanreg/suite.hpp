#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "census.hpp"
#include "constructions.hpp"
#include "enumeration.hpp"
#include "formulas.hpp"
#include "graph6.hpp"
#include "report.hpp"
#include "search.hpp"
#include "standard_graphs.hpp"

namespace turanreg {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// ------------------------------------------------------------ constructions

using ParamMap = std::map<std::string, std::int64_t>;

namespace detail {

inline std::size_t param(const ParamMap& p, const std::string& key, const std::string& ctor) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument(ctor + " needs parameter '" + key + "'");
    if (it->second < 0) throw std::invalid_argument(ctor + ": parameter '" + key + "' must be non-negative");
    return static_cast<std::size_t>(it->second);
}

}  // namespace detail

inline const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names{"pentagon_blowup",  "odd_girth_blowup",     "circulant_small_odd",
                                                "apex_construction", "prop56_extremal",      "conj55_equality",
                                                "multipartite_regular", "odd_half_construction"};
    return names;
}

/// Builds a named construction from integer parameters (n, l, k, r).
inline Construction build_construction(const std::string& name, const ParamMap& p) {
    auto get = [&](const char* key) { return detail::param(p, key, name); };
    if (name == "pentagon_blowup") return pentagon_blowup(get("n"));
    if (name == "odd_girth_blowup") return odd_girth_blowup(get("n"), get("l"));
    if (name == "circulant_small_odd") return circulant_small_odd(get("n"));
    if (name == "apex_construction") return apex_construction(get("n"), get("k"));
    if (name == "prop56_extremal") return prop56_extremal(get("k"));
    if (name == "conj55_equality") return conj55_equality(get("n"), get("k"));
    if (name == "multipartite_regular") return multipartite_regular(get("n"), get("r"));
    if (name == "odd_half_construction") return odd_half_construction(get("n"));
    throw std::invalid_argument("unknown construction '" + name + "'");
}

/// Parses "k=v,k=v" into a parameter map.
inline ParamMap parse_params(std::string_view text) {
    ParamMap out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto item = text.substr(pos, end - pos);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("bad parameter '" + std::string(item) + "', expected key=value");
        auto value = std::string(item.substr(eq + 1));
        if (value.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("parameter '" + std::string(item) + "' needs a non-negative integer");
        out[std::string(item.substr(0, eq))] = std::stoll(value);
        pos = end + 1;
    }
    return out;
}

// ------------------------------------------------------------- graph specs

namespace detail {

inline std::size_t spec_number(std::string_view digits, std::string_view whole) {
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("bad graph spec '" + std::string(whole) + "'");
    return static_cast<std::size_t>(std::stoull(std::string(digits)));
}

inline Graph single_graph_from_spec(std::string_view s) {
    if (s.starts_with("g6:")) return graph6_decode(s.substr(3));
    if (s.starts_with("co:")) return complement(single_graph_from_spec(s.substr(3)));
    if (s == "petersen") return petersen_graph();
    if (s.starts_with("cocktail:")) return cocktail_party_graph(spec_number(s.substr(9), s));
    if (s.starts_with("construct:")) {
        auto rest = s.substr(10);
        auto colon = rest.find(':');
        auto name = std::string(rest.substr(0, colon));
        ParamMap p = colon == std::string_view::npos ? ParamMap{} : parse_params(rest.substr(colon + 1));
        return build_construction(name, p).graph;
    }
    if (s.size() >= 2) {
        auto body = s.substr(1);
        switch (s[0]) {
            case 'K': {
                auto comma = body.find(',');
                if (comma != std::string_view::npos)
                    return complete_bipartite(spec_number(body.substr(0, comma), s),
                                              spec_number(body.substr(comma + 1), s));
                return complete_graph(spec_number(body, s));
            }
            case 'C': return cycle_graph(spec_number(body, s));
            case 'P': return path_graph(spec_number(body, s));
            case 'E': return empty_graph(spec_number(body, s));
            default: break;
        }
    }
    throw std::invalid_argument("unknown graph spec '" + std::string(s) + "'");
}

}  // namespace detail

/// Graph from a short description: g6:<graph6>, K<n>, K<a>,<b>, C<n>, P<n>,
/// E<n>, petersen, cocktail:<n>, co:<spec> (complement),
/// construct:<name>:k=v,... and A+B for a disjoint union.
inline Graph graph_from_spec(std::string_view spec) {
    if (spec.empty()) throw std::invalid_argument("empty graph spec");
    std::optional<Graph> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto end = spec.find('+', pos);
        if (end == std::string_view::npos) end = spec.size();
        Graph part = detail::single_graph_from_spec(spec.substr(pos, end - pos));
        out = out ? disjoint_union(*out, part) : part;
        pos = end + 1;
    }
    return *out;
}

// ------------------------------------------------------------- suite checks

inline const std::vector<std::string>& suite_sources() {
    static const std::vector<std::string> s{"published", "trivial", "derived"};
    return s;
}

struct SuiteOptions {
    std::size_t jobs = 1;
    std::uint64_t seed = 20240101;
    bool allow_large = false;
};

struct CheckOutcome {
    std::size_t index = 0;
    std::string id;
    std::string op;
    std::string source;
    Json args;
    Json expected;
    Json observed;
    bool passed = false;
    std::string message;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckOutcome> checks;
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
    }
};

namespace detail {

struct OpContext {
    SearchOptions search;
    std::uint64_t seed = 0;
};

inline std::size_t arg_size(const Json& a, const char* key) {
    if (!a.contains(key)) throw std::invalid_argument(std::string("missing argument '") + key + "'");
    const auto& v = a.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw std::invalid_argument(std::string("argument '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

inline std::size_t arg_size_or(const Json& a, const char* key, std::size_t fallback) {
    return a.contains(key) ? arg_size(a, key) : fallback;
}

inline std::string arg_string(const Json& a, const char* key) {
    if (!a.contains(key) || !a.at(key).is_string())
        throw std::invalid_argument(std::string("argument '") + key + "' must be a string");
    return a.at(key).get<std::string>();
}

inline Json search_json(const SearchResult& r) {
    Json j = to_json(r);
    j["value"] = j["objective"];
    return j;
}

// All integer partitions of n into parts >= 2, each part a star K_{1,a} on a+1 vertices.
inline void star_forests(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (n == 0) {
        visit(cur);
        return;
    }
    for (std::size_t part = std::min(n, max_part); part >= 2; --part) {
        cur.push_back(part - 1);
        star_forests(n - part, part, cur, visit);
        cur.pop_back();
    }
}

inline Json clique_profile(const Graph& g, std::size_t t_max) {
    Json p = Json::array();
    for (std::size_t t = 3; t <= t_max; ++t) p.push_back(count_cliques(g, t));
    return p;
}

inline SearchOptions wide_options(const OpContext& ctx, const Json& a) {
    SearchOptions o = ctx.search;
    o.witness_cap = arg_size_or(a, "witness_cap", 1024);
    return o;
}

inline Json run_op(const std::string& op, const Json& a, const OpContext& ctx) {
    const auto& so = ctx.search;
    if (op == "exr_exact") {
        SearchOptions o = so;
        o.all_witnesses = a.value("all_witnesses", false);
        return search_json(exr_exact(arg_size(a, "n"), parse_hspec(arg_string(a, "h")), o));
    }
    if (op == "exr_closed_form") {
        auto h = parse_hspec(arg_string(a, "h"));
        auto* fam = std::get_if<FamilySpec>(&h);
        if (!fam) throw std::invalid_argument("exr_closed_form needs an odd cycle or odd cycle family");
        auto cf = exr_closed_form(arg_size(a, "n"), *fam);
        return {{"value", cf.value}, {"exact", cf.exact}};
    }
    if (op == "max_kt")
        return search_json(max_kt(arg_size(a, "n"), arg_size(a, "m"), arg_size(a, "r"), arg_size(a, "t"), so));
    if (op == "max_k_total") return search_json(max_k_total(arg_size(a, "n"), arg_size(a, "m"), arg_size(a, "r"), so));
    if (op == "max_k_above_edges") {
        // Every graph in the search has exactly m edges, so the extremal classes coincide with max_k_total.
        const auto m = arg_size(a, "m");
        auto res = max_k_total(arg_size(a, "n"), m, arg_size(a, "r"), so);
        Json j = search_json(res);
        j["value"] = res.objective ? Json(*res.objective - static_cast<std::int64_t>(m)) : Json(nullptr);
        return j;
    }
    if (op == "extremal_clique_profile") {
        // Profiles (k3, ..., k_tmax) of every extremal class of the total clique count.
        const auto r = arg_size(a, "r");
        auto res = max_k_total(arg_size(a, "n"), arg_size(a, "m"), r, wide_options(ctx, a));
        if (res.witnesses.size() < res.classes) throw std::runtime_error("witness cap below the class count");
        Json profiles = Json::array();
        for (const auto& w : res.witnesses)
            profiles.push_back(clique_profile(graph6_decode(w), arg_size_or(a, "t_max", r)));
        std::sort(profiles.begin(), profiles.end());
        Json j = search_json(res);
        j["value"] = profiles;
        return j;
    }
    if (op == "extremal_complement_triangles") {
        auto res = max_kt(arg_size(a, "n"), arg_size(a, "m"), arg_size(a, "r"), arg_size_or(a, "t", 3),
                          wide_options(ctx, a));
        if (res.witnesses.size() < res.classes) throw std::runtime_error("witness cap below the class count");
        std::vector<Count> tri;
        for (const auto& w : res.witnesses) tri.push_back(count_cliques(complement(graph6_decode(w)), 3));
        std::sort(tri.begin(), tri.end());
        Json j = search_json(res);
        j["value"] = tri;
        return j;
    }
    if (op == "min_triangles_regular")
        return search_json(min_triangles_regular(arg_size(a, "n"), arg_size(a, "k"), so));
    if (op == "min_triangles_regular_direct") {
        // Same minimum without the complement shortcut, as an independent path.
        GenFilter f;
        f.n = arg_size(a, "n");
        f.regular_k = arg_size(a, "k");
        if (f.n > kEnumerationCap && !so.allow_large) throw std::invalid_argument("n exceeds the enumeration cap");
        return search_json(detail::optimize(f, [](const Graph& g) { return count_cliques(g, 3); }, false, so));
    }
    if (op == "max_copies_free")
        return search_json(max_copies_free(arg_size(a, "n"), graph_from_spec(arg_string(a, "pattern")),
                                           arg_size(a, "r"), so));
    if (op == "goodman_exhaustive") {
        // Over every isomorphism class of order <= n_max; the defect is an isomorphism invariant.
        std::uint64_t graphs = 0, nonzero = 0;
        for (std::size_t n = 1; n <= arg_size(a, "n_max"); ++n) {
            GenFilter f;
            f.n = n;
            enumerate_graphs(
                f,
                [&](const Graph& g) {
                    ++graphs;
                    if (goodman_defect(g) != 0) ++nonzero;
                },
                GenOptions{1, so.allow_large});
        }
        return {{"value", nonzero}, {"graphs", graphs}};
    }
    if (op == "goodman_random") {
        const auto count = arg_size(a, "count");
        const auto n_max = arg_size(a, "n_max");
        if (n_max < 1) throw std::invalid_argument("goodman_random needs n_max >= 1");
        std::mt19937_64 rng(ctx.seed + arg_size_or(a, "seed_offset", 0));
        std::uniform_int_distribution<std::size_t> order(1, n_max);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        std::uint64_t nonzero = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto n = order(rng);
            const double p = density(rng);
            Graph g(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (density(rng) < p) g.add_edge(u, v);
            if (goodman_defect(g) != 0) ++nonzero;
        }
        return {{"value", nonzero}, {"graphs", count}, {"seed", ctx.seed + arg_size_or(a, "seed_offset", 0)}};
    }
    if (op == "goodman_defect") return {{"value", goodman_defect(graph_from_spec(arg_string(a, "graph")))}};
    if (op == "c5_star_forest_all") {
        // Closed form against direct 5-cycle counting in the complement, for every star forest.
        std::uint64_t forests = 0, mismatches = 0;
        Json first_bad;
        for (std::size_t n = 2; n <= arg_size(a, "n_max"); ++n) {
            std::vector<std::size_t> cur;
            star_forests(n, n, cur, [&](const std::vector<std::size_t>& parts) {
                ++forests;
                auto direct = count_cycles(star_forest_complement(n, parts), 5);
                if (direct != c5_star_forest_count(n, parts)) {
                    if (mismatches++ == 0) first_bad = {{"n", n}, {"stars", parts}};
                }
            });
        }
        Json j{{"value", mismatches}, {"forests", forests}};
        if (!first_bad.is_null()) j["first_mismatch"] = first_bad;
        return j;
    }
    if (op == "c5_star_forest_count") {
        auto parts = a.at("stars").get<std::vector<std::size_t>>();
        return {{"value", c5_star_forest_count(arg_size(a, "n"), parts)}};
    }
    if (op == "ex_c5_closed_form") return {{"value", ex_c5_closed_form(arg_size(a, "r"))}};
    if (op == "ex_c5_partition_max") {
        // On r+2 vertices with maximum degree r the complement has no isolated
        // vertex; deleting complement edges never destroys a 5-cycle, so the
        // maximum is attained when the complement is a star forest.
        const auto n = arg_size(a, "r") + 2;
        Count best = 0;
        Json best_parts;
        std::vector<std::size_t> cur;
        star_forests(n, n, cur, [&](const std::vector<std::size_t>& parts) {
            auto c = c5_star_forest_count(n, parts);
            if (c > best || best_parts.is_null()) {
                best = c;
                best_parts = parts;
            }
        });
        return {{"value", best}, {"stars", best_parts}};
    }
    if (op == "gls_critical_range") {
        auto [low, high] = gls_critical_range(arg_size(a, "n"), arg_size(a, "r"));
        return {{"value", Json::array({low, high})}};
    }
    if (op == "conj55_bound") return {{"value", conj55_bound(arg_size(a, "n"), arg_size(a, "k"))}};
    if (op == "construction") {
        ParamMap p;
        for (auto& [k, v] : a.at("params").items()) p[k] = v.get<std::int64_t>();
        auto c = build_construction(arg_string(a, "name"), p);
        auto v = validate(c);
        Json j = certificate_json(c, v);
        const auto field = a.value("field", std::string("valid"));
        if (field == "valid") j["value"] = v.ok;
        else if (field == "triangles") j["value"] = count_cliques(c.graph, 3);
        else if (field == "degree") j["value"] = c.graph.regular_degree() ? Json(*c.graph.regular_degree()) : Json(nullptr);
        else if (field == "g6") j["value"] = graph6_encode(c.graph);
        else throw std::invalid_argument("unknown construction field '" + field + "'");
        j["graph6"] = graph6_encode(c.graph);
        if (field != "g6" && c.graph.order() > 64) j.erase("graph6");
        return j;
    }
    if (op == "construction_sweep") {
        // Every parameter choice in range; invalid parameters are skipped, schedule
        // failures and validation failures are reported separately.
        const auto name = arg_string(a, "name");
        const auto n_min = arg_size(a, "n_min"), n_max = arg_size(a, "n_max");
        // Optional second parameter swept over [<key>_min, <key>_max].
        std::string key;
        std::size_t lo = 0, hi = 0;
        for (const char* k : {"l", "r", "k"})
            if (a.contains(std::string(k) + "_max")) {
                key = k;
                lo = arg_size(a, (key + "_min").c_str());
                hi = arg_size(a, (key + "_max").c_str());
            }
        std::uint64_t built = 0, skipped = 0, infeasible = 0, failed = 0;
        Json first_failure;
        auto attempt = [&](const ParamMap& p) {
            try {
                auto c = build_construction(name, p);
                ++built;
                auto v = validate(c);
                if (!v.ok && failed++ == 0) first_failure = certificate_json(c, v);
            } catch (const InfeasibleSchedule& e) {
                if (infeasible++ == 0 && first_failure.is_null()) first_failure = {{"infeasible", e.what()}};
            } catch (const std::invalid_argument&) {
                ++skipped;
            }
        };
        for (std::size_t n = n_min; n <= n_max; ++n) {
            if (key.empty()) {
                attempt({{"n", static_cast<std::int64_t>(n)}});
                continue;
            }
            for (auto x = lo; x <= hi; ++x)
                attempt({{"n", static_cast<std::int64_t>(n)}, {key, static_cast<std::int64_t>(x)}});
        }
        Json j{{"value", failed},
               {"built", built},
               {"skipped", skipped},
               {"infeasible", infeasible}};
        if (!first_failure.is_null()) j["first_failure"] = first_failure;
        return j;
    }
    if (op == "isomorphic")
        return {{"value", isomorphic(graph_from_spec(arg_string(a, "a")), graph_from_spec(arg_string(a, "b")))}};
    if (op == "canonical_label") return {{"value", canonical_label(graph_from_spec(arg_string(a, "graph"))).bytes}};
    if (op == "count_cliques")
        return {{"value", count_cliques(graph_from_spec(arg_string(a, "graph")), arg_size(a, "t"))}};
    if (op == "total_cliques") return {{"value", total_cliques(graph_from_spec(arg_string(a, "graph")))}};
    if (op == "count_cycles")
        return {{"value", count_cycles(graph_from_spec(arg_string(a, "graph")), arg_size(a, "length"))}};
    if (op == "count_copies")
        return {{"value", count_copies(graph_from_spec(arg_string(a, "graph")),
                                        graph_from_spec(arg_string(a, "pattern")))}};
    if (op == "odd_girth") {
        auto og = odd_girth(graph_from_spec(arg_string(a, "graph")));
        return {{"value", og ? Json(*og) : Json(nullptr)}};
    }
    if (op == "enumerate_count") {
        GenFilter f;
        f.n = arg_size(a, "n");
        if (a.contains("k")) f.regular_k = arg_size(a, "k");
        if (a.contains("max_degree")) f.max_degree = arg_size(a, "max_degree");
        if (a.contains("m")) f.edge_count = arg_size(a, "m");
        f.connected = a.value("connected", false);
        const bool by_edges = a.value("by_edges", false);
        GenOptions go{so.jobs, so.allow_large};
        auto st = by_edges ? enumerate_graphs_by_edges(f, [](const Graph&) {}, go)
                           : enumerate_graphs(f, [](const Graph&) {}, go);
        return {{"value", st.classes}, {"stats", to_json(st)}};
    }
    throw std::invalid_argument("unknown operation '" + op + "'");
}

inline bool matches_witness(const Json& observed, const std::string& spec) {
    if (!observed.contains("witnesses")) return false;
    auto want = canonical_label(graph_from_spec(spec)).bytes;
    for (const auto& w : observed.at("witnesses"))
        if (w.get<std::string>() == want) return true;
    return false;
}

inline bool numeric_leq(const Json& a, const Json& b) {
    if (!a.is_number() || !b.is_number()) return false;
    return a.get<double>() <= b.get<double>();
}

}  // namespace detail

/// Runs one manifest check. An expectation may be a literal or an object
/// {"op": ..., "args": ...} that is evaluated and compared by value.
inline CheckOutcome run_check(const Json& check, std::size_t index, const SuiteOptions& opt, std::size_t inner_jobs) {
    CheckOutcome out;
    out.index = index;
    out.id = check.value("id", "check-" + std::to_string(index));
    out.op = check.value("op", "");
    out.source = check.value("source", "");
    out.args = check.value("args", Json::object());
    detail::OpContext ctx;
    ctx.search.jobs = inner_jobs;
    ctx.search.allow_large = opt.allow_large;
    ctx.seed = opt.seed;
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> failures;
    try {
        if (std::find(suite_sources().begin(), suite_sources().end(), out.source) == suite_sources().end())
            throw std::invalid_argument("check needs a source of published, trivial or derived");
        out.expected = Json::object();
        for (const char* key : {"expect", "expect_min", "expect_max", "expect_classes", "expect_witness", "expect_error"})
            if (check.contains(key)) out.expected[key] = check.at(key);
        if (out.expected.empty()) throw std::invalid_argument("check has no expectation");

        Json observed;
        std::string error;
        try {
            observed = detail::run_op(out.op, out.args, ctx);
        } catch (const std::exception& e) {
            error = e.what();
        }
        if (check.contains("expect_error")) {
            auto want = check.at("expect_error").get<std::string>();
            out.observed = error.empty() ? Json{{"value", observed.value("value", Json())}} : Json{{"error", error}};
            if (error.empty()) failures.push_back("expected an error, operation succeeded");
            else if (error.find(want) == std::string::npos)
                failures.push_back("error '" + error + "' does not mention '" + want + "'");
        } else {
            if (!error.empty()) throw std::runtime_error(error);
            out.observed = observed;
            const Json value = observed.value("value", Json());
            if (check.contains("expect")) {
                Json want = check.at("expect");
                if (want.is_object() && want.contains("op")) {
                    Json ref = detail::run_op(want.at("op").get<std::string>(), want.value("args", Json::object()), ctx);
                    out.expected["expect_resolved"] = ref.value("value", Json());
                    want = ref.value("value", Json());
                }
                if (value != want) failures.push_back("value " + value.dump() + " != " + want.dump());
            }
            if (check.contains("expect_min") && !detail::numeric_leq(check.at("expect_min"), value))
                failures.push_back("value " + value.dump() + " below " + check.at("expect_min").dump());
            if (check.contains("expect_max") && !detail::numeric_leq(value, check.at("expect_max")))
                failures.push_back("value " + value.dump() + " above " + check.at("expect_max").dump());
            if (check.contains("expect_classes")) {
                const Json classes = observed.value("classes", Json());
                if (observed.value("classes_exact", true) == false)
                    failures.push_back("class count is a lower bound only");
                else if (classes != check.at("expect_classes"))
                    failures.push_back("classes " + classes.dump() + " != " + check.at("expect_classes").dump());
            }
            if (check.contains("expect_witness")) {
                auto spec = check.at("expect_witness").get<std::string>();
                if (!detail::matches_witness(observed, spec))
                    failures.push_back("no witness isomorphic to " + spec);
            }
        }
    } catch (const std::exception& e) {
        failures.push_back(std::string("error: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.passed = failures.empty();
    for (std::size_t i = 0; i < failures.size(); ++i) out.message += (i ? "; " : "") + failures[i];
    return out;
}

/// Reads a suite manifest: {"suites": {"<id>": {"description": ..., "checks": [...]}}}.
inline OrderedJson load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");
    OrderedJson m = OrderedJson::parse(in);
    if (!m.contains("suites") || !m.at("suites").is_object())
        throw std::runtime_error("manifest '" + path + "' has no suites object");
    return m;
}

inline std::vector<std::string> suite_ids(const OrderedJson& manifest) {
    std::vector<std::string> ids;
    for (auto& [k, v] : manifest.at("suites").items()) ids.push_back(k);
    return ids;
}

/// Runs every check of a suite; checks run concurrently and the report keeps manifest order.
inline SuiteReport run_suite(const OrderedJson& manifest, const std::string& id, const SuiteOptions& opt = {}) {
    const auto& suites = manifest.at("suites");
    if (!suites.contains(id)) {
        std::string known;
        for (const auto& s : suite_ids(manifest)) known += (known.empty() ? "" : ", ") + s;
        throw std::invalid_argument("unknown suite '" + id + "' (known: " + known + ")");
    }
    const Json checks = Json::parse(suites.at(id).at("checks").dump());
    SuiteReport rep;
    rep.suite = id;
    rep.seed = opt.seed;
    rep.checks.resize(checks.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(opt.jobs, checks.size()));
    const std::size_t inner = workers == 1 ? std::max<std::size_t>(1, opt.jobs) : 1;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) rep.checks[i] = run_check(checks[i], i, opt, inner);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rep;
}

inline Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"index", c.index},
                          {"id", c.id},
                          {"op", c.op},
                          {"source", c.source},
                          {"args", c.args},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"passed", c.passed},
                          {"message", c.message},
                          {"seconds", c.seconds}});
    return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

/// One line per check: "[source] PASS|FAIL suite/id op args -> value".
inline std::string log_line(const SuiteReport& r, const CheckOutcome& c) {
    std::ostringstream os;
    os << '[' << c.source << "] " << (c.passed ? "PASS" : "FAIL") << ' ' << r.suite << '/' << c.id << ' ' << c.op
       << ' ' << c.args.dump() << " -> ";
    if (c.observed.contains("error")) os << "error: " << c.observed.at("error").get<std::string>();
    else os << c.observed.value("value", Json()).dump();
    if (!c.passed) os << " (" << c.message << ')';
    return os.str();
}

}  // namespace turanreg
