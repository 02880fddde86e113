#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turanreg/turanreg.hpp"

#ifndef TURANREG_DEFAULT_MANIFEST
#define TURANREG_DEFAULT_MANIFEST "suites/manifest.json"
#endif

using namespace turanreg;

namespace {

struct Globals {
    std::size_t jobs = 1;
    std::uint64_t seed = SuiteOptions{}.seed;
    bool allow_large = false;
    std::size_t witness_cap = kDefaultWitnessCap;

    SearchOptions search() const {
        SearchOptions o;
        o.jobs = jobs;
        o.witness_cap = witness_cap;
        o.allow_large = allow_large;
        return o;
    }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"turan-reg: regular Turan numbers by exhaustive search and explicit constructions"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", g.seed, "Seed for every randomized check");
    app.add_flag("--allow-large", g.allow_large, "Lift the enumeration caps");
    app.add_option("--witness-cap", g.witness_cap, "Witnesses kept per result")->check(CLI::Range(1, 1 << 20));

    // exr
    auto* exr = app.add_subcommand("exr", "Exact regular Turan number by exhaustive search");
    std::size_t exr_n = 0;
    std::string exr_h = "K3";
    bool exr_all = false, exr_closed = false;
    exr->add_option("--n,-n", exr_n, "Order")->required();
    exr->add_option("--forbid,-H", exr_h, "Forbidden pattern: K3, C<odd>, odd-family:<l>, clique:<t>, star:<s>, cycle:<m>, g6:<code>");
    exr->add_flag("--all-witnesses", exr_all, "Enumerate every extremal class instead of stopping at the first");
    exr->add_flag("--closed-form", exr_closed, "Also report the closed-form value");

    // census-triangles
    auto* ct = app.add_subcommand("census-triangles", "Triangle extremes: min over k-regular graphs, or max given m and r");
    std::size_t ct_n = 0, ct_k = 0, ct_m = 0, ct_r = 0;
    ct->add_option("--n,-n", ct_n, "Order")->required();
    auto* ct_k_opt = ct->add_option("--k,-k", ct_k, "Regular degree (minimum triangle count)");
    auto* ct_m_opt = ct->add_option("--m,-m", ct_m, "Edge count (maximum triangle count)");
    ct->add_option("--r,-r", ct_r, "Maximum degree with --m");
    ct_k_opt->excludes(ct_m_opt);

    // max-cliques
    auto* mc = app.add_subcommand("max-cliques", "Maximum k_t or total clique count given n, m and maximum degree r");
    std::size_t mc_n = 0, mc_m = 0, mc_r = 0, mc_t = 3;
    bool mc_total = false, mc_profile = false;
    mc->add_option("--n,-n", mc_n)->required();
    mc->add_option("--m,-m", mc_m)->required();
    mc->add_option("--r,-r", mc_r)->required();
    mc->add_option("--t,-t", mc_t, "Clique size");
    mc->add_flag("--total", mc_total, "Maximize k(G), the number of cliques with at least 2 vertices");
    mc->add_flag("--profile", mc_profile, "With --total: print (k3, ..., k_r) for every extremal class");

    // max-copies
    auto* mp = app.add_subcommand("max-copies", "Maximum number of copies of a pattern given n and maximum degree r");
    std::size_t mp_n = 0, mp_r = 0;
    std::string mp_pattern;
    mp->add_option("--n,-n", mp_n)->required();
    mp->add_option("--r,-r", mp_r)->required();
    mp->add_option("--pattern,-p", mp_pattern, "Graph spec, e.g. C5, K4, K2,3, g6:<code>")->required();

    // probe
    auto* pr = app.add_subcommand("probe", "Small-n data for an open conjecture or question (reports only)");
    std::string pr_name;
    ProbeRange pr_range;
    std::string pr_pattern;
    pr->add_option("name", pr_name, "gls-critical | conj55 | odd-girth-question | cycle-question")->required();
    pr->add_option("--n-min", pr_range.n_min)->required();
    pr->add_option("--n-max", pr_range.n_max)->required();
    pr->add_option("--r,-r", pr_range.r, "Degree bound");
    pr->add_option("--length", pr_range.cycle_length, "Cycle length for cycle-question");
    pr->add_option("--pattern", pr_pattern, "Graph spec for odd-girth-question");

    // construct
    auto* co = app.add_subcommand("construct", "Build and validate an explicit construction");
    std::string co_name, co_out = "g6", co_file;
    std::vector<std::string> co_params;
    bool co_certify = false;
    co->add_option("name", co_name, "Construction name")->required()->check(CLI::IsMember(construction_names()));
    co->add_option("--param,-p", co_params, "Parameter key=value (n, l, k, r)");
    co->add_option("--out", co_out, "Graph output format")->check(CLI::IsMember({"g6", "edges", "none"}));
    co->add_option("--file,-o", co_file, "Write the graph here instead of stdout");
    co->add_flag("--certify", co_certify, "Print the JSON certificate to stdout");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
    GenFilter en_f;
    std::size_t en_k = 0, en_m = 0, en_d = 0;
    bool en_by_edges = false, en_count = false;
    en->add_option("--n,-n", en_f.n)->required();
    auto* en_k_opt = en->add_option("--regular-k,-k", en_k, "Regular degree");
    auto* en_m_opt = en->add_option("--edges,-m", en_m, "Edge count");
    auto* en_d_opt = en->add_option("--max-degree,-d", en_d, "Maximum degree");
    en->add_flag("--connected", en_f.connected, "Connected graphs only");
    en->add_flag("--by-edges", en_by_edges, "Use edge augmentation instead of vertex augmentation");
    en->add_flag("--count", en_count, "Print only the statistics as JSON");
    std::string en_out;
    en->add_option("--out,-o", en_out, "Write graph6 lines to this file");

    // suite
    auto* su = app.add_subcommand("suite", "Run verification suites from the manifest");
    std::vector<std::string> su_ids;
    std::string su_manifest = TURANREG_DEFAULT_MANIFEST, su_report;
    bool su_list = false, su_all = false;
    su->add_option("ids", su_ids, "Suite ids");
    su->add_option("--manifest", su_manifest, "Manifest file");
    su->add_option("--report", su_report, "Write the JSON report here");
    su->add_flag("--list", su_list, "List suites");
    su->add_flag("--all", su_all, "Run every suite");

    // table
    auto* tb = app.add_subcommand("table", "Recompute the maximum-k3 table over the critical regime");
    std::size_t tb_r = 4, tb_lo = 6, tb_hi = 8;
    std::string tb_format = "csv", tb_out;
    tb->add_option("--r,-r", tb_r);
    tb->add_option("--n-min", tb_lo);
    tb->add_option("--n-max", tb_hi);
    tb->add_option("--format", tb_format)->check(CLI::IsMember({"csv", "json"}));
    tb->add_option("--out,-o", tb_out, "Output file");

    // info
    auto* in = app.add_subcommand("info", "Invariants of a graph given as a spec");
    std::string in_spec;
    in->add_option("graph", in_spec, "Graph spec, e.g. petersen, K5+C7, g6:<code>")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto so = g.search();
        if (exr->parsed()) {
            auto opt = so;
            opt.all_witnesses = exr_all;
            auto h = parse_hspec(exr_h);
            auto j = to_json(exr_exact(exr_n, h, opt));
            j["n"] = exr_n;
            j["h"] = hspec_name(h);
            if (exr_closed) {
                if (auto* fam = std::get_if<FamilySpec>(&h)) {
                    auto cf = exr_closed_form(exr_n, *fam);
                    j["closed_form"] = {{"value", cf.value}, {"exact", cf.exact}};
                }
            }
            print_json(j);
        } else if (ct->parsed()) {
            if (*ct_k_opt) {
                print_json(to_json(min_triangles_regular(ct_n, ct_k, so)));
            } else if (*ct_m_opt) {
                print_json(to_json(max_kt(ct_n, ct_m, ct_r ? ct_r : ct_n - 1, 3, so)));
            } else {
                throw std::invalid_argument("census-triangles needs --k or --m");
            }
        } else if (mc->parsed()) {
            if (mc_total) {
                auto opt = so;
                if (mc_profile) opt.witness_cap = std::max<std::size_t>(opt.witness_cap, 1024);
                auto res = max_k_total(mc_n, mc_m, mc_r, opt);
                auto j = to_json(res);
                if (res.objective) j["without_edges"] = *res.objective - static_cast<std::int64_t>(mc_m);
                if (mc_profile) {
                    nlohmann::json profiles = nlohmann::json::array();
                    for (const auto& w : res.witnesses) {
                        auto gr = graph6_decode(w);
                        nlohmann::json p = nlohmann::json::array();
                        for (std::size_t t = 3; t <= std::max<std::size_t>(mc_r, 3); ++t) p.push_back(count_cliques(gr, t));
                        profiles.push_back(p);
                    }
                    j["profiles"] = profiles;
                }
                print_json(j);
            } else {
                print_json(to_json(max_kt(mc_n, mc_m, mc_r, mc_t, so)));
            }
        } else if (mp->parsed()) {
            auto j = to_json(max_copies_free(mp_n, graph_from_spec(mp_pattern), mp_r, so));
            j["pattern"] = mp_pattern;
            print_json(j);
        } else if (pr->parsed()) {
            if (!pr_pattern.empty()) pr_range.pattern = graph_from_spec(pr_pattern);
            print_json(to_json(probe_conjecture(pr_name, pr_range, so)));
        } else if (co->parsed()) {
            ParamMap params;
            for (const auto& p : co_params) {
                auto one = parse_params(p);
                params.insert(one.begin(), one.end());
            }
            auto c = build_construction(co_name, params);
            auto v = validate(c);
            std::ostringstream os;
            if (co_out == "g6") os << graph6_encode(c.graph) << '\n';
            else if (co_out == "edges") write_edge_list(os, c.graph);
            if (co_out != "none") {
                if (co_certify && co_file.empty()) std::cerr << os.str();
                else write_text(co_file, os.str());
            }
            if (co_certify) print_json(certificate_json(c, v));
            if (!v.ok) {
                for (const auto& chk : v.checks)
                    if (!chk.ok)
                        std::cerr << "validation failed: " << chk.property << " expected " << chk.expected
                                  << ", observed " << chk.observed << '\n';
                return 2;
            }
        } else if (en->parsed()) {
            if (*en_k_opt) en_f.regular_k = en_k;
            if (*en_m_opt) en_f.edge_count = en_m;
            if (*en_d_opt) en_f.max_degree = en_d;
            GenOptions go{g.jobs, g.allow_large};
            GenStats st;
            if (en_count) {
                st = en_by_edges ? enumerate_graphs_by_edges(en_f, [](const Graph&) {}, go)
                                 : enumerate_graphs(en_f, [](const Graph&) {}, go);
                print_json(to_json(st));
            } else {
                std::ofstream file;
                if (!en_out.empty()) {
                    file.open(en_out);
                    if (!file) throw std::runtime_error("cannot write '" + en_out + "'");
                }
                std::ostream& os = en_out.empty() ? std::cout : file;
                auto emit = [&os](const Graph& gr) { os << graph6_encode(gr) << '\n'; };
                st = en_by_edges ? enumerate_graphs_by_edges(en_f, emit, go) : enumerate_graphs(en_f, emit, go);
                std::cerr << "classes: " << st.classes << '\n';
                if (st.infeasible) std::cerr << "infeasible: " << st.reason << '\n';
            }
        } else if (su->parsed()) {
            auto manifest = load_manifest(su_manifest);
            if (su_list) {
                for (const auto& id : suite_ids(manifest))
                    std::cout << id << ": " << manifest["suites"][id].value("description", "") << '\n';
                return 0;
            }
            if (su_all) su_ids = suite_ids(manifest);
            if (su_ids.empty()) throw std::invalid_argument("name a suite or pass --all");
            SuiteOptions sopt;
            sopt.jobs = g.jobs;
            sopt.seed = g.seed;
            sopt.allow_large = g.allow_large;
            nlohmann::json reports = nlohmann::json::array();
            bool ok = true;
            std::cout << "seed " << g.seed << '\n';
            for (const auto& id : su_ids) {
                auto rep = run_suite(manifest, id, sopt);
                for (const auto& c : rep.checks) std::cout << log_line(rep, c) << '\n';
                std::cout << "suite " << id << ": " << (rep.passed() ? "PASS" : "FAIL") << '\n';
                ok = ok && rep.passed();
                reports.push_back(to_json(rep));
            }
            if (!su_report.empty()) write_text(su_report, nlohmann::json{{"seed", g.seed}, {"suites", reports}}.dump(2) + "\n");
            return ok ? 0 : 1;
        } else if (tb->parsed()) {
            auto t = census_table(tb_r, tb_lo, tb_hi, so);
            write_text(tb_out, tb_format == "csv" ? table_csv(t) : table_json(t).dump(2) + "\n");
            if (!t.has_reference) std::cerr << "note: no published reference for this range\n";
        } else if (in->parsed()) {
            auto gr = graph_from_spec(in_spec);
            nlohmann::json j{{"order", gr.order()}, {"size", gr.size()}};
            auto d = gr.regular_degree();
            j["regular_degree"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
            j["connected"] = is_connected(gr);
            auto og = odd_girth(gr);
            j["odd_girth"] = og ? nlohmann::json(*og) : nlohmann::json(nullptr);
            j["triangles"] = count_cliques(gr, 3);
            if (gr.order() <= kMaxCanonicalOrder) j["canonical_graph6"] = canonical_label(gr).bytes;
            j["goodman_defect"] = goodman_defect(gr);
            print_json(j);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
