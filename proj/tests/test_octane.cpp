#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "vedeg/alkane.hpp"
#include "vedeg/indices.hpp"
#include "vedeg/octane.hpp"
#include "vedeg/tree_canon.hpp"

using namespace vedeg;

TEST_SUITE_BEGIN("octane");

TEST_CASE("dataset shape and spot values") {
    const auto& recs = octane_isomers();
    REQUIRE(recs.size() == 18);
    CHECK(recs[0].name == "n-octane");
    CHECK(recs[0].entropy == 111.70);
    CHECK(recs[0].acen_fac == 0.39790);
    CHECK(recs[0].hvap == 73.19);
    CHECK(recs[0].dhvap == 9.915);
    CHECK(recs[17].name == "2,2,3,3-tetramethylbutane");

    const auto& tmp = recs[14];  // 2,2,4-trimethyl-pentane
    CHECK(tmp.name == "2,2,4-trimethyl-pentane");
    CHECK(tmp.acen_fac == 0.30537);
    CHECK(tmp.hvap == 64.87);

    for (const auto& r : recs) {
        CHECK(r.skeleton.vertex_count() == 8);
        CHECK(r.skeleton.is_tree());
        CHECK(r.skeleton == parse_alkane(r.smiles));
    }
}

TEST_CASE("the 18 skeletons are pairwise non-isomorphic") {
    std::set<std::string> forms;
    for (const auto& r : octane_isomers())
        forms.insert(tree_canonical_form(r.skeleton));
    CHECK(forms.size() == 18);
}

TEST_CASE("golden table spot rows") {
    const auto& gold = golden_index_table();
    REQUIRE(gold.size() == 18);
    // 3-ethyl-hexane
    CHECK(gold[4].m1 == 28);
    CHECK(gold[4].m2 == 28);
    CHECK(gold[4].w == 72);
    CHECK(gold[4].r == 3.846);
    CHECK(gold[4].s == 118);
    CHECK(gold[4].s_alpha == 114);
    CHECK(gold[4].s_beta == 56);
    CHECK(gold[4].s_mu == 115);
    CHECK(gold[4].r_ve == 1.964);
    // 2,3,3-trimethyl-pentane
    CHECK(gold[15].m1 == 34);
    CHECK(gold[15].s == 176);
    CHECK(gold[15].s_alpha == 164);
    CHECK(gold[15].r_ve == 1.489);
    // the published table itself satisfies S^beta = 2*M2 row for row
    for (const auto& row : gold)
        CHECK(row.s_beta == 2 * row.m2);
}

TEST_CASE("computed indices reproduce the golden table up to its two misprints") {
    const auto& recs = octane_isomers();
    const auto& gold = golden_index_table();
    const auto& misprints = golden_misprints();
    REQUIRE(misprints.size() == 2);
    CHECK(misprints[0].row == 2);
    CHECK(misprints[0].column == "Salpha");
    CHECK(misprints[1].row == 8);
    CHECK(misprints[1].column == "Ralpha");

    for (int i = 0; i < 18; ++i) {
        const IndexVector iv = index_vector(recs[i].skeleton);
        CHECK(iv.m1 == gold[i].m1);
        CHECK(iv.m2 == gold[i].m2);
        CHECK(iv.wiener == gold[i].w);
        CHECK(iv.s_ev == gold[i].s);
        CHECK(iv.s_beta == gold[i].s_beta);
        CHECK(iv.s_mu == gold[i].s_mu);
        CHECK(std::abs(iv.randic - gold[i].r) < 5e-4);
        if (i == 2) {
            CHECK(iv.s_alpha == 108);  // printed 98 is irreconcilable with the row
            CHECK(gold[i].s_alpha == 98);
        } else {
            CHECK(iv.s_alpha == gold[i].s_alpha);
        }
        if (i == 8) {
            CHECK(iv.r_ve == doctest::Approx(1.8019141338792093).epsilon(1e-12));
            CHECK(gold[i].r_ve == 1.801);  // rounds to 1.802, off by more than 5e-4
        } else {
            CHECK(std::abs(iv.r_ve - gold[i].r_ve) < 5e-4);
        }
        // trees: total ev-degree equals M1
        CHECK(iv.t_total == iv.m1);
    }
}

TEST_CASE("dataset CSV export is byte-exact") {
    std::ostringstream out;
    write_dataset_csv(out);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "name,smiles,entropy,acen_fac,hvap,dhvap");
    std::getline(lines, line);
    CHECK(line == "n-octane,CCCCCCCC,111.70,0.39790,73.19,9.915");
    int count = 1;
    std::string last = line;
    while (std::getline(lines, line)) {
        ++count;
        last = line;
    }
    CHECK(count == 18);
    CHECK(last == "\"2,2,3,3-tetramethylbutane\",CC(C)(C)C(C)(C)C,93.06,0.25529,66.20,8.410");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("name lookup is case- and hyphen-insensitive") {
    CHECK(find_isomer("n-octane") == 0);
    CHECK(find_isomer("N-Octane") == 0);
    CHECK(find_isomer("noctane") == 0);
    CHECK(find_isomer("2,2,3,3-tetramethyl-butane") == 17);
    CHECK(find_isomer("2,2,3,3-Tetramethylbutane") == 17);
    CHECK(find_isomer("decane") == -1);
    CHECK(normalize_name("2-Methyl-Heptane") == "2methylheptane");
}

TEST_SUITE_END();
