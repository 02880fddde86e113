#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanreg/canonical.hpp"
#include "turanreg/census.hpp"
#include "turanreg/enumeration.hpp"
#include "turanreg/standard_graphs.hpp"

using namespace turanreg;

namespace {

std::vector<std::string> labels_of(const GenFilter& f, bool by_edges = false, std::size_t jobs = 1) {
    std::vector<std::string> out;
    auto visit = [&](const Graph& g) { out.push_back(canonical_label(g).bytes); };
    if (by_edges) enumerate_graphs_by_edges(f, visit, {jobs});
    else enumerate_graphs(f, visit, {jobs});
    return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

GenFilter order(std::size_t n) {
    GenFilter f;
    f.n = n;
    return f;
}

bool triangle_free(const Graph& g) { return count_cliques(g, 3) == 0; }

}  // namespace

TEST(Enumeration, MatchesBruteForceClassCounts) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto st = enumerate_graphs(order(n), [](const Graph&) {});
        EXPECT_EQ(st.classes, oracle::brute_class_count(n)) << "n=" << n;
    }
}

TEST(Enumeration, EmittedSetEqualsBruteForceSet) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::string> brute;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
            brute.insert(canonical_label(oracle::labelled_graph(n, mask)).bytes);
        EXPECT_EQ(as_set(labels_of(order(n))), brute) << "n=" << n;
    }
}

TEST(Enumeration, DuplicateFreeAndDualOrdersAgree) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto by_vertex = labels_of(order(n));
        auto by_edge = labels_of(order(n), true);
        auto set_v = as_set(by_vertex);
        EXPECT_EQ(set_v.size(), by_vertex.size()) << "duplicates at n=" << n;
        EXPECT_EQ(as_set(by_edge).size(), by_edge.size()) << "edge duplicates at n=" << n;
        EXPECT_EQ(set_v, as_set(by_edge)) << "n=" << n;
    }
}

TEST(Enumeration, DualOrdersAgreeUnderFilters) {
    for (std::size_t n = 4; n <= 8; ++n)
        for (std::size_t r = 1; r < n; r += 2) {
            GenFilter f = order(n);
            f.max_degree = r;
            EXPECT_EQ(as_set(labels_of(f)), as_set(labels_of(f, true))) << "n=" << n << " r=" << r;
            GenFilter reg = order(n);
            reg.regular_k = r;
            EXPECT_EQ(as_set(labels_of(reg)), as_set(labels_of(reg, true))) << "n=" << n << " k=" << r;
        }
}

// Every filter produces the same classes as enumerating everything and filtering afterwards.
TEST(Enumeration, PrunedRunsEqualPostFilteredRuns) {
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<Graph> all;
        enumerate_graphs(order(n), [&](const Graph& g) { all.push_back(g); });
        auto post = [&](auto pred) {
            std::set<std::string> s;
            for (const auto& g : all)
                if (pred(g)) s.insert(canonical_label(g).bytes);
            return s;
        };
        for (std::size_t r = 0; r < n; ++r) {
            GenFilter f = order(n);
            f.max_degree = r;
            EXPECT_EQ(as_set(labels_of(f)), post([&](const Graph& g) { return g.max_degree() <= r; }));
            GenFilter reg = order(n);
            reg.regular_k = r;
            EXPECT_EQ(as_set(labels_of(reg)), post([&](const Graph& g) { return g.regular_degree() == r; }));
        }
        for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) {
            GenFilter f = order(n);
            f.edge_count = m;
            f.max_degree = n > 2 ? n - 2 : n - 1;
            auto cap = *f.max_degree;
            EXPECT_EQ(as_set(labels_of(f)),
                      post([&](const Graph& g) { return g.size() == m && g.max_degree() <= cap; }))
                << "n=" << n << " m=" << m;
        }
        GenFilter conn = order(n);
        conn.connected = true;
        EXPECT_EQ(as_set(labels_of(conn)), post([](const Graph& g) { return is_connected(g); }));
        GenFilter tf = order(n);
        tf.hereditary = triangle_free;
        EXPECT_EQ(as_set(labels_of(tf)), post(triangle_free));
        GenFilter combo = order(n);
        combo.hereditary = triangle_free;
        combo.connected = true;
        combo.max_degree = 3;
        EXPECT_EQ(as_set(labels_of(combo)), post([](const Graph& g) {
                      return triangle_free(g) && is_connected(g) && g.max_degree() <= 3;
                  }));
    }
}

TEST(Enumeration, DeterministicAndJobsIndependent) {
    GenFilter f = order(8);
    f.max_degree = 4;
    auto a = labels_of(f);
    auto b = labels_of(f);
    EXPECT_EQ(a, b);
    EXPECT_EQ(labels_of(f, false, 3), a);
    EXPECT_EQ(labels_of(f, false, 8), a);
}

TEST(Enumeration, ReduceWithJobsMatchesSequential) {
    GenFilter f = order(8);
    auto sum = [&](std::size_t jobs) {
        GenStats st;
        auto total = enumerate_reduce(
            f, std::uint64_t{0},
            [](std::uint64_t& acc, const Graph& g) {
                acc += count_cliques(g, 3);
                return true;
            },
            [](std::uint64_t x, std::uint64_t y) { return x + y; }, {jobs}, &st);
        return std::make_pair(total, st.classes);
    };
    EXPECT_EQ(sum(1), sum(4));
}

TEST(Enumeration, VisitorCanStopEarly) {
    std::size_t seen = 0;
    enumerate_graphs(order(7), [&](const Graph&) { return ++seen < 5; });
    EXPECT_EQ(seen, 5u);
    seen = 0;
    enumerate_graphs(order(7), [&](const Graph&) { return ++seen < 5; }, {4});
    EXPECT_EQ(seen, 5u);
}

TEST(Enumeration, RegularExamples) {
    std::vector<Graph> got;
    auto st = enumerate_regular(5, 2, [&](const Graph& g) { got.push_back(g); });
    ASSERT_EQ(st.classes, 1u);
    EXPECT_TRUE(isomorphic(got[0], cycle_graph(5)));

    auto odd = enumerate_regular(7, 3, [](const Graph&) {});
    EXPECT_EQ(odd.classes, 0u);
    EXPECT_TRUE(odd.infeasible);
    EXPECT_NE(odd.reason.find("odd"), std::string::npos);

    Count min_tri = 1000;
    enumerate_regular(9, 4, [&](const Graph& g) { min_tri = std::min(min_tri, count_cliques(g, 3)); });
    EXPECT_EQ(min_tri, 2u);
}

TEST(Enumeration, ComplementShortcutMatchesDirectGeneration) {
    for (std::size_t n = 5; n <= 9; ++n)
        for (std::size_t k = (n + 1) / 2; k < n; ++k) {
            if (n * k % 2) continue;
            std::set<std::string> shortcut;
            enumerate_regular(n, k, [&](const Graph& g) {
                EXPECT_EQ(g.regular_degree(), k);
                shortcut.insert(canonical_label(g).bytes);
            });
            GenFilter f = order(n);
            f.regular_k = k;
            EXPECT_EQ(shortcut, as_set(labels_of(f))) << "n=" << n << " k=" << k;
        }
}

// Regular class counts on 10 and 11 vertices agree with the edge-based generator through complements.
TEST(Enumeration, RegularCountsAgreeAcrossGenerators) {
    for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{8, 3}, {9, 4}, {10, 3}, {11, 2}}) {
        GenFilter f = order(n);
        f.regular_k = k;
        auto v = enumerate_graphs(f, [](const Graph&) {});
        auto e = enumerate_graphs_by_edges(f, [](const Graph&) {});
        EXPECT_EQ(v.classes, e.classes) << "n=" << n << " k=" << k;
        auto c = enumerate_regular(n, n - 1 - k, [](const Graph&) {});
        EXPECT_EQ(c.classes, v.classes);
    }
}

TEST(Enumeration, InfeasibleFiltersAreFlagged) {
    GenFilter f = order(6);
    f.edge_count = 16;
    auto st = enumerate_graphs(f, [](const Graph&) {});
    EXPECT_TRUE(st.infeasible);
    EXPECT_EQ(st.classes, 0u);
    GenFilter g = order(6);
    g.regular_k = 6;
    EXPECT_TRUE(enumerate_graphs(g, [](const Graph&) {}).infeasible);
    GenFilter h = order(6);
    h.max_degree = 2;
    h.edge_count = 7;
    EXPECT_TRUE(enumerate_graphs(h, [](const Graph&) {}).infeasible);
}

TEST(Enumeration, CapIsEnforced) {
    GenFilter f = order(12);
    f.regular_k = 1;
    EXPECT_THROW(enumerate_graphs(f, [](const Graph&) {}), std::invalid_argument);
    auto st = enumerate_graphs(f, [](const Graph&) {}, {1, true});
    EXPECT_EQ(st.classes, 1u);
    EXPECT_THROW(enumerate_graphs(order(0), [](const Graph&) {}), std::invalid_argument);
    EXPECT_THROW(enumerate_graphs(order(65), [](const Graph&) {}, {1, true}), std::invalid_argument);
}
