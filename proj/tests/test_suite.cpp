#include <gtest/gtest.h>

#include "turanreg/canonical.hpp"
#include "turanreg/suite.hpp"

using namespace turanreg;

namespace {

Json check(std::string op, Json args, Json extra) {
    Json c{{"id", "t"}, {"op", std::move(op)}, {"args", std::move(args)}, {"source", "trivial"}};
    for (auto& [k, v] : extra.items()) c[k] = v;
    return c;
}

CheckOutcome run(const Json& c) { return run_check(c, 0, SuiteOptions{}, 1); }

OrderedJson manifest_of(Json checks) {
    OrderedJson m;
    m["suites"]["demo"]["checks"] = OrderedJson::parse(checks.dump());
    return m;
}

}  // namespace

TEST(GraphSpec, Parses) {
    EXPECT_EQ(graph_from_spec("K4"), complete_graph(4));
    EXPECT_EQ(graph_from_spec("K2,3"), complete_bipartite(2, 3));
    EXPECT_EQ(graph_from_spec("C6"), cycle_graph(6));
    EXPECT_EQ(graph_from_spec("P3"), path_graph(3));
    EXPECT_EQ(graph_from_spec("E2"), empty_graph(2));
    EXPECT_EQ(graph_from_spec("petersen"), petersen_graph());
    EXPECT_EQ(graph_from_spec("cocktail:8"), cocktail_party_graph(8));
    EXPECT_EQ(graph_from_spec("co:K3"), empty_graph(3));
    EXPECT_EQ(graph_from_spec("g6:D?{"), graph6_decode("D?{"));
    auto u = graph_from_spec("K8+E1");
    EXPECT_EQ(u.order(), 9u);
    EXPECT_EQ(u.size(), 28u);
    EXPECT_TRUE(isomorphic(graph_from_spec("construct:prop56_extremal:k=4"), prop56_extremal(4).graph));
    EXPECT_EQ(graph_from_spec("construct:pentagon_blowup:n=23").order(), 23u);
    EXPECT_THROW(graph_from_spec(""), std::invalid_argument);
    EXPECT_THROW(graph_from_spec("K"), std::invalid_argument);
    EXPECT_THROW(graph_from_spec("Q5"), std::invalid_argument);
    EXPECT_THROW(graph_from_spec("K3+"), std::invalid_argument);
    EXPECT_THROW(graph_from_spec("construct:nope:n=3"), std::invalid_argument);
    EXPECT_THROW(graph_from_spec("construct:pentagon_blowup"), std::invalid_argument);
}

TEST(GraphSpec, Params) {
    auto p = parse_params("n=23,l=3");
    EXPECT_EQ(p.at("n"), 23);
    EXPECT_EQ(p.at("l"), 3);
    EXPECT_THROW(parse_params("n"), std::invalid_argument);
    EXPECT_THROW(parse_params("n=-1"), std::invalid_argument);
    EXPECT_THROW(parse_params("=4"), std::invalid_argument);
}

TEST(Suite, LiteralExpectations) {
    EXPECT_TRUE(run(check("count_cliques", {{"graph", "K5"}, {"t", 3}}, {{"expect", 10}})).passed);
    auto bad = run(check("count_cliques", {{"graph", "K5"}, {"t", 3}}, {{"expect", 11}}));
    EXPECT_FALSE(bad.passed);
    EXPECT_NE(bad.message.find("10"), std::string::npos);
    EXPECT_TRUE(run(check("count_cycles", {{"graph", "K5"}, {"length", 5}}, {{"expect_min", 12}, {"expect_max", 12.5}})).passed);
    EXPECT_FALSE(run(check("count_cycles", {{"graph", "K5"}, {"length", 5}}, {{"expect_max", 11}})).passed);
}

TEST(Suite, ReferenceExpectation) {
    auto c = check("exr_exact", {{"n", 9}, {"h", "K3"}},
                   {{"expect", {{"op", "exr_closed_form"}, {"args", {{"n", 9}, {"h", "K3"}}}}}});
    auto out = run(c);
    EXPECT_TRUE(out.passed) << out.message;
    EXPECT_EQ(out.expected["expect_resolved"], 2);
}

TEST(Suite, ClassesAndWitness) {
    auto ok = run(check("min_triangles_regular", {{"n", 9}, {"k", 4}},
                        {{"expect", 2}, {"expect_classes", 1}, {"expect_witness", "construct:prop56_extremal:k=4"}}));
    EXPECT_TRUE(ok.passed) << ok.message;
    auto wrong = run(check("min_triangles_regular", {{"n", 9}, {"k", 4}}, {{"expect_witness", "C9"}}));
    EXPECT_FALSE(wrong.passed);
    // exr stops at the first witness, so its class count is not exact and cannot be asserted.
    auto lower = run(check("exr_exact", {{"n", 6}, {"h", "K3"}}, {{"expect_classes", 1}}));
    EXPECT_FALSE(lower.passed);
    auto exact = run(check("exr_exact", {{"n", 6}, {"h", "K3"}, {"all_witnesses", true}}, {{"expect_classes", 1}}));
    EXPECT_TRUE(exact.passed) << exact.message;
}

TEST(Suite, ErrorExpectations) {
    auto c = check("construction", {{"name", "multipartite_regular"}, {"params", {{"n", 9}, {"r", 4}}}},
                   {{"expect_error", "core has degree"}});
    EXPECT_TRUE(run(c).passed);
    auto succeeded = check("construction", {{"name", "pentagon_blowup"}, {"params", {{"n", 23}}}},
                           {{"expect_error", ""}});
    EXPECT_FALSE(run(succeeded).passed);
    auto unexpected = run(check("construction", {{"name", "pentagon_blowup"}, {"params", {{"n", 22}}}}, {{"expect", true}}));
    EXPECT_FALSE(unexpected.passed);
    EXPECT_NE(unexpected.message.find("odd"), std::string::npos);
}

TEST(Suite, MalformedChecksFail) {
    EXPECT_FALSE(run(check("no_such_op", Json::object(), {{"expect", 1}})).passed);
    EXPECT_FALSE(run(check("count_cliques", {{"graph", "K5"}, {"t", 3}}, Json::object())).passed);
    auto c = check("count_cliques", {{"graph", "K5"}, {"t", 3}}, {{"expect", 10}});
    c["source"] = "folklore";
    EXPECT_FALSE(run(c).passed);
    EXPECT_FALSE(run(check("count_cliques", {{"graph", "K5"}, {"t", -3}}, {{"expect", 10}})).passed);
}

TEST(Suite, OperationsAgreeWithLibrary) {
    EXPECT_TRUE(run(check("ex_c5_partition_max", {{"r", 8}}, {{"expect", 1584}})).passed);
    EXPECT_TRUE(run(check("c5_star_forest_all", {{"n_max", 8}}, {{"expect", 0}})).passed);
    EXPECT_TRUE(run(check("goodman_exhaustive", {{"n_max", 6}}, {{"expect", 0}})).passed);
    EXPECT_TRUE(run(check("goodman_random", {{"count", 50}, {"n_max", 20}}, {{"expect", 0}})).passed);
    EXPECT_TRUE(run(check("extremal_complement_triangles", {{"n", 8}, {"m", 17}, {"r", 5}}, {{"expect", {0, 1, 4}}})).passed);
    EXPECT_TRUE(run(check("max_k_above_edges", {{"n", 8}, {"m", 18}, {"r", 5}}, {{"expect", 22}})).passed);
    EXPECT_TRUE(run(check("enumerate_count", {{"n", 5}}, {{"expect", 34}})).passed);
    EXPECT_TRUE(run(check("enumerate_count", {{"n", 5}, {"by_edges", true}}, {{"expect", 34}})).passed);
    EXPECT_TRUE(run(check("isomorphic", {{"a", "C5"}, {"b", "co:C5"}}, {{"expect", true}})).passed);
    auto sweep = run(check("construction_sweep", {{"name", "odd_girth_blowup"}, {"n_min", 5}, {"n_max", 99}, {"l_min", 2}, {"l_max", 5}},
                           {{"expect", 0}}));
    EXPECT_TRUE(sweep.passed) << sweep.message;
    EXPECT_GT(sweep.observed["built"].get<int>(), 20);
}

TEST(Suite, RandomChecksFollowTheSeed) {
    auto c = check("goodman_random", {{"count", 5}, {"n_max", 10}}, {{"expect", 0}});
    SuiteOptions a, b;
    a.seed = 1;
    b.seed = 2;
    EXPECT_EQ(run_check(c, 0, a, 1).observed["seed"], 1);
    EXPECT_EQ(run_check(c, 0, b, 1).observed["seed"], 2);
}

TEST(Suite, ParallelRunKeepsManifestOrder) {
    Json checks = Json::array();
    for (int t = 3; t <= 8; ++t)
        checks.push_back({{"id", "k" + std::to_string(t)},
                          {"op", "count_cliques"},
                          {"args", {{"graph", "K8"}, {"t", t}}},
                          {"source", "trivial"},
                          {"expect", binomial(8, t)}});
    auto m = manifest_of(checks);
    SuiteOptions opt;
    opt.jobs = 4;
    auto rep = run_suite(m, "demo", opt);
    ASSERT_EQ(rep.checks.size(), 6u);
    EXPECT_TRUE(rep.passed());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        EXPECT_EQ(rep.checks[i].index, i);
        EXPECT_EQ(rep.checks[i].id, "k" + std::to_string(i + 3));
    }
    EXPECT_NE(log_line(rep, rep.checks[0]).find("[trivial] PASS demo/k3"), std::string::npos);
    EXPECT_THROW(run_suite(m, "missing"), std::invalid_argument);
    auto j = to_json(rep);
    EXPECT_EQ(j["seed"], opt.seed);
    EXPECT_EQ(j["passed"], true);
}

TEST(Suite, FailingCheckFailsTheSuite) {
    Json checks = Json::array({check("count_cliques", {{"graph", "K4"}, {"t", 3}}, {{"expect", 4}}),
                               check("count_cliques", {{"graph", "K4"}, {"t", 3}}, {{"expect", 5}})});
    auto rep = run_suite(manifest_of(checks), "demo");
    EXPECT_FALSE(rep.passed());
    EXPECT_TRUE(rep.checks[0].passed);
    EXPECT_FALSE(rep.checks[1].passed);
}

TEST(Suite, ShippedManifestIsWellFormed) {
    auto m = load_manifest(TURANREG_DEFAULT_MANIFEST);
    const std::vector<std::string> want{"mantel",   "odd-girth", "supersaturation", "table1",
                                        "examples", "goodman",   "c5-props",        "constructions"};
    EXPECT_EQ(suite_ids(m), want);
    for (const auto& id : want) {
        const auto& checks = m["suites"][id]["checks"];
        EXPECT_FALSE(checks.empty()) << id;
        for (const auto& c : checks) {
            auto src = c.value("source", "");
            EXPECT_TRUE(src == "published" || src == "trivial" || src == "derived") << id;
            EXPECT_TRUE(c.contains("op")) << id;
        }
    }
    EXPECT_EQ(m["suites"]["table1"]["checks"].size(), 10u);
}

TEST(Table, CsvLayout) {
    auto t = census_table(4, 6, 8);
    EXPECT_TRUE(t.has_reference);
    EXPECT_EQ(table_csv(t), "n\\m,11,12,13,14,15,16\n6,7,8,,,,\n7,,8,7,7,,\n8,,,,8,8,8\n");
}

TEST(Table, JsonKeyedByCell) {
    auto j = table_json(census_table(4, 6, 8));
    EXPECT_EQ(j["reference"], "published table");
    ASSERT_EQ(j["cells"].size(), 8u);
    EXPECT_EQ(j["cells"][0]["n"], 6);
    EXPECT_EQ(j["cells"][0]["m"], 11);
    EXPECT_EQ(j["cells"][0]["max_k3"], 7);
}

TEST(Table, NewRangesAreFlagged) {
    auto t = census_table(5, 7, 8);
    EXPECT_FALSE(t.has_reference);
    EXPECT_EQ(table_json(t)["reference"], "no published reference");
    for (const auto& c : t.cells) {
        auto [low, high] = gls_critical_range(c.n, 5);
        EXPECT_GT(c.m, low);
        EXPECT_LE(c.m, high);
        EXPECT_EQ(max_kt(c.n, c.m, 5, 3).objective, c.value);
    }
    EXPECT_THROW(census_table(4, 6, 11), std::invalid_argument);
}
