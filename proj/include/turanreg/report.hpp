#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumeration.hpp"
#include "formulas.hpp"
#include "search.hpp"

namespace turanreg {

inline nlohmann::json to_json(const GenStats& s) {
    nlohmann::json j{{"classes", s.classes},   {"nodes", s.nodes},       {"candidates", s.candidates},
                     {"pruned", s.pruned},     {"rejected", s.rejected}, {"seconds", s.seconds},
                     {"infeasible", s.infeasible}};
    if (!s.reason.empty()) j["reason"] = s.reason;
    return j;
}

inline nlohmann::json to_json(const SearchResult& r) {
    nlohmann::json j;
    j["objective"] = r.objective ? nlohmann::json(*r.objective) : nlohmann::json(nullptr);
    j["witnesses"] = r.witnesses;
    j["classes"] = r.classes;
    j["classes_exact"] = r.classes_exact;
    j["exact"] = r.exact;
    j["stats"] = to_json(r.stats);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::json to_json(const ProbeReport& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : p.rows)
        rows.push_back({{"instance", r.instance},
                        {"conjectured", r.conjectured},
                        {"observed", r.observed},
                        {"status", r.status},
                        {"detail", r.detail}});
    return {{"probe", p.name}, {"rows", rows}};
}

/// One cell of a maximum-k3 table: (n, m, r, t) and the maximum clique count.
struct CensusRow {
    std::size_t n = 0, m = 0, r = 0, t = 3;
    std::int64_t value = 0;
    std::uint64_t classes = 0;
};

struct CensusTable {
    std::size_t r = 0;
    std::size_t n_min = 0, n_max = 0;
    std::size_t m_min = 0, m_max = 0;  // column span
    std::vector<CensusRow> cells;      // only the critical regime
    bool has_reference = false;        // r = 4, n in 6..8 has published values
};

/// Maximum k3 over the critical regime gls_critical_range(n, r) for each n.
inline CensusTable census_table(std::size_t r, std::size_t n_min, std::size_t n_max, const SearchOptions& opt = {}) {
    if (n_min > n_max) throw std::invalid_argument("empty n range");
    if (n_max > 10 && !opt.allow_large) throw std::invalid_argument("table needs n <= 10");
    CensusTable t;
    t.r = r;
    t.n_min = n_min;
    t.n_max = n_max;
    t.m_min = SIZE_MAX;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        auto [low, high] = gls_critical_range(n, r);
        for (std::size_t m = low + 1; m <= high; ++m) {
            auto res = max_kt(n, m, r, 3, opt);
            if (!res.objective) continue;
            t.cells.push_back({n, m, r, 3, *res.objective, res.classes});
            t.m_min = std::min(t.m_min, m);
            t.m_max = std::max(t.m_max, m);
        }
    }
    if (t.cells.empty()) t.m_min = t.m_max = 0;
    t.has_reference = r == 4 && n_min >= 6 && n_max <= 8;
    return t;
}

/// CSV with header "n\m,<m...>"; cells outside the critical regime stay blank.
inline std::string table_csv(const CensusTable& t) {
    std::ostringstream os;
    os << "n\\m";
    for (std::size_t m = t.m_min; m <= t.m_max && !t.cells.empty(); ++m) os << ',' << m;
    os << '\n';
    for (std::size_t n = t.n_min; n <= t.n_max; ++n) {
        os << n;
        for (std::size_t m = t.m_min; m <= t.m_max && !t.cells.empty(); ++m) {
            os << ',';
            for (const auto& c : t.cells)
                if (c.n == n && c.m == m) os << c.value;
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json table_json(const CensusTable& t) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : t.cells)
        cells.push_back({{"n", c.n}, {"m", c.m}, {"max_k3", c.value}, {"classes", c.classes}});
    return {{"r", t.r},
            {"n_min", t.n_min},
            {"n_max", t.n_max},
            {"cells", cells},
            {"reference", t.has_reference ? "published table" : "no published reference"}};
}

}  // namespace turanreg
