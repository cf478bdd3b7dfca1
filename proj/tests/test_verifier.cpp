#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "vedeg/octane.hpp"
#include "vedeg/tree_canon.hpp"
#include "vedeg/verifier.hpp"

using namespace vedeg;

TEST_SUITE_BEGIN("verifier");

TEST_CASE("tree canonical form identifies isomorphism classes") {
    // P4 and relabelings
    const Graph p4 = path_graph(4);
    const Graph p4b = Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}});  // 2-0-3-1
    CHECK(tree_canonical_form(p4) == tree_canonical_form(p4b));
    CHECK(tree_canonical_form(star_graph(4)) != tree_canonical_form(p4));

    std::set<std::string> forms;
    for (const auto& rec : octane_isomers())
        forms.insert(tree_canonical_form(rec.skeleton));
    CHECK(forms.size() == 18);

    CHECK_THROWS_AS(tree_canonical_form(complete_graph(3)), GraphError);
}

TEST_CASE("degree inequalities over exhaustive small classes") {
    // ve_degree(v) >= degree(v); ev_degree(e) >= 3 on connected graphs with
    // n >= 3, and exactly 2 only on K_2.
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const SmallGraph& sg) {
            const Graph g = sg.to_graph();
            for (int v = 0; v < n; ++v)
                CHECK(g.ve_degree(v) >= g.degree(v));
            for (const auto& e : g.edges()) {
                if (n >= 3)
                    CHECK(g.ev_degree(e) >= 3);
                else
                    CHECK(g.ev_degree(e) == 2);
            }
        });
}

TEST_CASE("fast kernel agrees with the reference evaluation everywhere") {
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_tree(n, [&](const SmallGraph& g) {
            CHECK(evaluate_fast(g) == evaluate_reference(g.to_graph()));
        });
    for (int n = 2; n <= 5; ++n)
        for_each_connected_graph(n, [&](const SmallGraph& g) {
            CHECK(evaluate_fast(g) == evaluate_reference(g.to_graph()));
        });
}

TEST_CASE("scan engines produce identical results") {
    for (int n = 2; n <= 6; ++n) {
        const ClassScan parallel = scan_class(GraphClass::Trees, n, Engine::FastParallel);
        const ClassScan serial = scan_class(GraphClass::Trees, n, Engine::FastSerial);
        const ClassScan reference = scan_class(GraphClass::Trees, n, Engine::Reference);
        CHECK(parallel == serial);
        CHECK(serial == reference);
        CHECK(parallel.graphs == labeled_tree_count(n));
    }
    for (int n = 2; n <= 5; ++n) {
        const ClassScan parallel = scan_class(GraphClass::Connected, n, Engine::FastParallel);
        const ClassScan serial = scan_class(GraphClass::Connected, n, Engine::FastSerial);
        const ClassScan reference = scan_class(GraphClass::Connected, n, Engine::Reference);
        CHECK(parallel == serial);
        CHECK(serial == reference);
    }
    CHECK(scan_class(GraphClass::Connected, 4, Engine::FastParallel).graphs == 38);
}

TEST_CASE("identity reports hold on exhaustive small classes") {
    const auto reports = verify_identities(6, 5);
    REQUIRE(reports.size() == kNumIdentities);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.holds);
        CHECK(r.expected_to_hold);
        CHECK(r.graphs_checked > 0);
        CHECK(r.counterexamples.empty());
    }
    // Obs2.5 applies to every scanned graph:
    // trees 2..6 (1+3+16+125+1296) plus connected 2..5 (1+4+38+728)
    CHECK(reports[0].graphs_checked == 1441 + 771);
}

TEST_CASE("bound reports: true claims hold, printed slips are contradicted") {
    VerifyOptions opts;
    opts.n_trees = 6;
    opts.n_graphs = 5;
    const ScanSet scans = run_scans(opts);
    const auto reports = bound_reports(scans);
    CHECK(all_as_expected(reports));

    int contradicted = 0;
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.holds == r.expected_to_hold);
        if (!r.expected_to_hold) {
            ++contradicted;
            CHECK_FALSE(r.holds);
            REQUIRE(r.counterexamples.size() == 1);
            CHECK(r.counterexamples[0].observed != r.counterexamples[0].claimed);
        }
    }
    // four printed slips, evaluated at n=5 and n=6 where applicable:
    // Thm4.7-lower-printed (connected, n=5), Thm4.10-lower-printed (trees, 5 and 6),
    // Thm4.10-star-printed (trees, 5 and 6), Thm4.12-lower-printed (trees, 5 and 6)
    CHECK(contradicted == 7);
}

TEST_CASE("bound reports carry extremal witnesses of the right shape") {
    VerifyOptions opts;
    opts.n_trees = 6;
    opts.n_graphs = 4;
    const ScanSet scans = run_scans(opts);
    for (const auto& r : bound_reports(scans)) {
        if (r.id != "Sbeta-tree-max" || r.n_lo != 6)
            continue;
        REQUIRE(r.extremal.has_value());
        CHECK(r.extremal->max_value == 50);  // 2(n-1)^2 at n=6
        CHECK(tree_canonical_form(r.extremal->max_graph) == tree_canonical_form(star_graph(6)));
        CHECK(r.extremal->min_value == 32);  // 8n-16 at n=6
        CHECK(tree_canonical_form(r.extremal->min_graph) == tree_canonical_form(path_graph(6)));
    }
}

TEST_CASE("spec operation verify_bounds filters by index and class") {
    const auto reports = verify_bounds("Salpha", 5, 6, GraphClass::Trees, Engine::FastSerial);
    REQUIRE(reports.size() == 4);  // {Salpha-tree-min, Thm4.8-upper} x {n=5, n=6}
    for (const auto& r : reports) {
        CHECK(r.graph_class == "trees");
        CHECK(r.holds);
    }
    CHECK_THROWS_AS(verify_bounds("W", 5, 6, GraphClass::Trees), GraphError);
}

TEST_CASE("witness tie-break picks the lexicographically smallest attainer") {
    // All labeled paths on 4 vertices attain min S; the witness must be the
    // lexicographically smallest labeled path edge list: (0,1)(0,2)(1,3).
    const ClassScan scan = scan_class(GraphClass::Trees, 4, Engine::FastParallel);
    CHECK(scan.extremal[0].min_value == 34);
    CHECK(scan.extremal[0].min_witness.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
    // ... and the star centered at 0 for the max
    CHECK(scan.extremal[0].max_value == 48);
    CHECK(scan.extremal[0].max_witness.edge_list() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("report output formats") {
    VerifyOptions opts;
    opts.n_trees = 5;
    opts.n_graphs = 4;
    const auto reports = verify_all(opts);

    std::ostringstream text;
    write_reports_text(text, reports);
    CHECK(text.str().find("Obs2.5") != std::string::npos);
    CHECK(text.str().find("holds") != std::string::npos);

    std::ostringstream jsonl;
    write_reports_jsonl(jsonl, reports);
    std::istringstream lines(jsonl.str());
    std::string line;
    size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("id"));
        CHECK(j.contains("class"));
        CHECK(j.contains("n"));
        CHECK(j.contains("graphs_checked"));
        CHECK((j["status"] == "holds" || j["status"] == "fails"));
        ++count;
    }
    CHECK(count == reports.size());

    // deterministic across runs
    std::ostringstream again;
    write_reports_jsonl(again, verify_all(opts));
    CHECK(again.str() == jsonl.str());
}

TEST_SUITE_END();
