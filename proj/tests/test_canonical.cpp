#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanreg/canonical.hpp"
#include "turanreg/standard_graphs.hpp"

using namespace turanreg;

TEST(Canonical, RelabelledCycleHasSameLabel) {
    auto c5 = cycle_graph(5);
    auto relabelled = from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    EXPECT_EQ(canonical_label(c5), canonical_label(relabelled));
    EXPECT_NE(canonical_label(c5), canonical_label(path_graph(5)));
}

TEST(Canonical, ElevenClassesOnFourVertices) {
    std::set<std::string> labels;
    for (std::uint64_t mask = 0; mask < 64; ++mask) labels.insert(canonical_label(oracle::labelled_graph(4, mask)).bytes);
    EXPECT_EQ(labels.size(), 11u);
}

// Canonical labels agree with the permutation brute force on every labelled graph up to 6 vertices.
TEST(Canonical, PartitionMatchesBruteForce) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        std::map<std::string, std::string> brute_to_label;
        std::set<std::string> labels;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            auto g = oracle::labelled_graph(n, mask);
            auto label = canonical_label(g).bytes;
            auto key = oracle::brute_canonical(g);
            auto [it, fresh] = brute_to_label.emplace(key, label);
            EXPECT_EQ(it->second, label) << "n=" << n << " mask=" << mask;
            labels.insert(label);
        }
        EXPECT_EQ(labels.size(), brute_to_label.size()) << "n=" << n;
    }
}

TEST(Canonical, CanonicalGraphIsIsomorphicAndIdempotent) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + rng() % 7;
        auto g = oracle::random_graph(n, 0.5, rng);
        auto c = canonical_graph(g);
        EXPECT_EQ(oracle::brute_canonical(c), oracle::brute_canonical(g));
        EXPECT_EQ(canonical_graph(c), c);
        auto form = canonical_form(g);
        for (Vertex p = 0; p < n; ++p)
            for (Vertex q = 0; q < n; ++q)
                EXPECT_EQ((form.rows[p] >> q) & 1U, g.has_edge(form.order[p], form.order[q]) ? 1U : 0U);
    }
}

TEST(Canonical, InvariantUnderRelabellingOnLargerGraphs) {
    std::mt19937_64 rng(29);
    std::vector<Graph> hard{petersen_graph(), complete_bipartite(8, 8), cocktail_party_graph(12), cycle_graph(40),
                            complement(cycle_graph(17))};
    for (int i = 0; i < 40; ++i) hard.push_back(oracle::random_graph(10 + rng() % 50, 0.3, rng));
    for (const auto& g : hard) {
        auto label = canonical_label(g);
        for (int r = 0; r < 5; ++r) EXPECT_EQ(canonical_label(oracle::random_relabel(g, rng)), label);
    }
}

TEST(Canonical, RegularGraphsAreDistinguished) {
    // The two 3-regular graphs on 6 vertices: K_{3,3} and the prism.
    auto prism = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_FALSE(isomorphic(prism, complete_bipartite(3, 3)));
    std::mt19937_64 rng(1);
    EXPECT_TRUE(isomorphic(petersen_graph(), oracle::random_relabel(petersen_graph(), rng)));
}

TEST(Canonical, RejectsLargeGraphs) { EXPECT_THROW(canonical_form(Graph(65)), std::invalid_argument); }
