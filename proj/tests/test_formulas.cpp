#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanreg/canonical.hpp"
#include "turanreg/constructions.hpp"
#include "turanreg/formulas.hpp"
#include "turanreg/standard_graphs.hpp"

using namespace turanreg;

namespace {

// Star sizes a_i >= 1 with sum (a_i + 1) = n, listed non-increasing.
void star_partitions(std::size_t n, std::size_t max_star, std::vector<std::size_t>& cur,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (n == 0) return f(cur);
    for (std::size_t a = std::min(max_star, n - 1); a >= 1; --a) {
        if (a + 1 > n) continue;
        cur.push_back(a);
        star_partitions(n - a - 1, a, cur, f);
        cur.pop_back();
    }
}

// The complement of a star forest built directly from its definition.
Graph star_forest_complement_oracle(std::size_t n, const std::vector<std::size_t>& stars) {
    Graph forest(n);
    Vertex next = 0;
    for (auto a : stars) {
        Vertex centre = next++;
        for (std::size_t i = 0; i < a; ++i) forest.add_edge(centre, next++);
    }
    return complement(forest);
}

}  // namespace

TEST(Formulas, ClosedFormExamples) {
    auto ten = exr_closed_form(10, FamilySpec::triangle());
    EXPECT_EQ(ten.value, 5u);
    EXPECT_TRUE(ten.exact);
    EXPECT_EQ(exr_closed_form(7, FamilySpec::triangle()).value, 2u);
    auto c5 = exr_closed_form(25, FamilySpec::odd_cycle(3));
    EXPECT_EQ(c5.value, 6u);
    EXPECT_FALSE(c5.exact);
    EXPECT_FALSE(exr_closed_form(25, FamilySpec::odd_cycle_family(3)).exact);
    EXPECT_EQ(exr_closed_form(24, FamilySpec::odd_cycle(4)).value, 12u);
    EXPECT_THROW(exr_closed_form(2, FamilySpec::triangle()), std::invalid_argument);
    EXPECT_THROW(FamilySpec::odd_cycle(1), std::invalid_argument);
    EXPECT_EQ(FamilySpec::odd_cycle(3).name(), "C5");
}

TEST(Formulas, GoodmanDefect) {
    EXPECT_EQ(goodman_defect(complete_graph(4)), 0);
    EXPECT_EQ(goodman_defect(empty_graph(5)), 0);
    EXPECT_EQ(goodman_defect(cycle_graph(5)), 0);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(1 + rng() % 30, 0.5, rng);
        EXPECT_EQ(goodman_defect(g), 0);
    }
}

TEST(Formulas, StarForestExamples) {
    EXPECT_EQ(c5_star_forest_count(9, {8}), 672u);
    EXPECT_EQ(c5_star_forest_count(10, {1, 1, 1, 1, 1}), 1584u);
    EXPECT_EQ(c5_star_forest_count(5, {4}), oracle::count_cycles(star_forest_complement_oracle(5, {4}), 5));
    EXPECT_THROW(c5_star_forest_count(5, {0, 3}), std::invalid_argument);
    EXPECT_THROW(c5_star_forest_count(6, {4}), std::invalid_argument);
}

TEST(Formulas, StarForestCountMatchesCycleCountingForAllForests) {
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 10; ++n) {
        std::vector<std::size_t> cur;
        star_partitions(n, n, cur, [&](const std::vector<std::size_t>& stars) {
            auto g = star_forest_complement_oracle(n, stars);
            EXPECT_EQ(c5_star_forest_count(n, stars), oracle::count_cycles(g, 5)) << "n=" << n;
            EXPECT_TRUE(isomorphic(star_forest_complement(n, stars), g));
            ++checked;
        });
    }
    EXPECT_EQ(checked, 41u);  // partitions of n = 2..10 into parts >= 2
}

TEST(Formulas, ExC5ClosedForm) {
    EXPECT_EQ(ex_c5_closed_form(7), 672u);
    EXPECT_EQ(ex_c5_closed_form(6), 288u);
    EXPECT_EQ(ex_c5_closed_form(8), 1584u);
    EXPECT_EQ(ex_c5_closed_form(8), c5_star_forest_count(10, {1, 1, 1, 1, 1}));
    EXPECT_THROW(ex_c5_closed_form(5), std::invalid_argument);
}

// On r+2 vertices with maximum degree r the complement has minimum degree >= 1;
// star forests are the minimal such complements, so the maximum is over them.
TEST(Formulas, ExC5ClosedFormMatchesExhaustiveStarForests) {
    for (std::size_t r = 6; r <= 9; ++r) {
        const std::size_t n = r + 2;
        std::uint64_t best = 0;
        std::vector<std::size_t> cur;
        star_partitions(n, n, cur, [&](const std::vector<std::size_t>& stars) {
            best = std::max(best, oracle::count_cycles(star_forest_complement_oracle(n, stars), 5));
        });
        EXPECT_EQ(ex_c5_closed_form(r), best) << "r=" << r;
    }
}

TEST(Formulas, CriticalRange) {
    EXPECT_EQ(gls_critical_range(6, 4), std::make_pair(Count{10}, Count{12}));
    EXPECT_EQ(gls_critical_range(8, 4), std::make_pair(Count{13}, Count{16}));
    EXPECT_EQ(gls_critical_range(5, 4), std::make_pair(Count{10}, Count{10}));
    auto p = gls_params(13, 4);
    EXPECT_EQ(p.a, 2u);
    EXPECT_EQ(p.b, 3u);
}

TEST(Formulas, SupersaturationBound) {
    EXPECT_EQ(conj55_bound(9, 4), 2u);
    EXPECT_EQ(conj55_bound(13, 6), 6u);
    EXPECT_EQ(conj55_bound(21, 10), 20u);
    EXPECT_TRUE(in_supersaturation_window(21, 10));
    EXPECT_FALSE(in_supersaturation_window(11, 4));
    EXPECT_THROW(conj55_bound(11, 4), std::invalid_argument);
    EXPECT_THROW(conj55_bound(10, 4), std::invalid_argument);
    EXPECT_THROW(conj55_bound(9, 3), std::invalid_argument);
}
