#include "doctest.h"

#include <set>

#include "support/testutil.hpp"
#include "wlkit/cfi.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/wl.hpp"

using namespace wlkit;

TEST_CASE("cfi over K4 is the 4x4 rook's graph") {
    CfiGraph a = cfi(complete_graph(4));
    CHECK(a.base.vertex_count() == 16);
    CHECK(basic_stats(a.base).regular_degree == 6);
    CHECK(is_isomorphic(a.base, testutil::rook_graph(4)));
}

TEST_CASE("cfi counts and degrees") {
    CfiGraph pet = cfi(petersen());
    CHECK(pet.base.vertex_count() == 40);
    CHECK(basic_stats(pet.base).regular_degree == 6);
    CHECK(max_common_neighbors(pet.base) == 2);  // (k-2) * 2^{k-2} for k=3

    CfiGraph t3 = cfi(torus(3));
    CHECK(t3.base.vertex_count() == 72);
    CHECK(basic_stats(t3.base).regular_degree == 16);

    CHECK_THROWS_AS(cfi(path_graph(3)), std::invalid_argument);   // not regular
    CHECK_THROWS_AS(cfi(disjoint_union(cycle_graph(3), cycle_graph(3))),
                    std::invalid_argument);  // disconnected
}

TEST_CASE("cells and interspaces have the regularized structure") {
    Graph f = petersen();
    std::vector<int> twist = edge_indices(f, {{0, 1}});
    for (const CfiGraph& a : {cfi(f), cfi(f, twist)}) {
        const int k = a.k;
        const int half = 1 << (k - 2);
        for (auto& cell : a.cells) CHECK(static_cast<int>(cell.size()) == (1 << (k - 1)));
        // every interspace is 2 K_{half,half}, matched or crossed by the
        // twist set
        for (int e = 0; e < f.edge_count(); ++e) {
            auto [v, u] = f.edges()[e];
            bool twisted = std::find(a.twists.begin(), a.twists.end(), e) != a.twists.end();
            for (int b : {0, 1}) {
                auto xv = a.slice(v, u, b);
                auto xu = a.slice(u, v, twisted ? 1 - b : b);
                CHECK(static_cast<int>(xv.size()) == half);
                for (int x : xv)
                    for (int y : xu) CHECK(a.base.adjacent(x, y));
                // and nothing across the halves
                auto xu_other = a.slice(u, v, twisted ? b : 1 - b);
                for (int x : xv)
                    for (int y : xu_other) CHECK(!a.base.adjacent(x, y));
            }
        }
    }
}

TEST_CASE("cfi_pair enforces the template assumption") {
    CHECK_THROWS_AS(cfi_pair(complete_graph(4)), std::invalid_argument);  // nu = 2 = 2k-4
    CHECK_THROWS_AS(cfi_pair(cycle_graph(6)), std::invalid_argument);     // degree 2

    auto [a, b] = cfi_pair(petersen());
    CHECK(a.base.vertex_count() == 40);
    CHECK(b.base.vertex_count() == 40);
    CHECK(!is_isomorphic(a.base, b.base));

    auto [a7, b7] = cfi_pair(cheng_oxley(7));
    CHECK(a7.base.vertex_count() == 56);
    CHECK(b7.base.vertex_count() == 56);
}

TEST_CASE("twist parity on the Petersen template") {
    Graph f = petersen();
    // same set: identical graphs
    CHECK(twist_parity_check(f, {}, {}));
    CHECK(twist_parity_check(f, {3}, {3}));
    // |R symdiff S| = 2: isomorphic
    CHECK(twist_parity_check(f, {}, {0, 7}));
    CHECK(twist_parity_check(f, {2}, {11}));
    // odd difference: not isomorphic
    CHECK(!twist_parity_check(f, {}, {5}));
    CHECK(!twist_parity_check(f, {0, 1}, {2}));
}

TEST_CASE("cell partition detection") {
    CHECK(is_cell_partition_detected(cfi(petersen())));
    CHECK(is_cell_partition_detected(cfi(torus(3))));
    // K4 fails the assumption and the rook's graph has extra symmetry
    CHECK(!is_cell_partition_detected(cfi(complete_graph(4))));
}

TEST_CASE("template analysis") {
    TemplateReport t3 = analyze_template(torus(3));
    CHECK(t3.k == 4);
    CHECK(t3.max_common_neighbors == 2);
    CHECK(t3.assumption_ok);
    CHECK(t3.separator_exact == 4);  // rook 3x3 is 4-connected

    TemplateReport k4 = analyze_template(complete_graph(4));
    CHECK(!k4.assumption_ok);

    TemplateReport c6 = analyze_template(cycle_graph(6));
    CHECK(c6.separator_exact == 2);  // two antipodal vertices

    TemplateReport pet = analyze_template(petersen());
    REQUIRE(pet.separator_exact.has_value());
    // bounds never exceed the exact value
    CHECK(pet.separator_bound_expansion <= *pet.separator_exact);
    CHECK(pet.separator_bound_diameter <= *pet.separator_exact);
    CHECK(t3.separator_bound_expansion <= *t3.separator_exact);
    CHECK(t3.separator_bound_diameter <= *t3.separator_exact);

    // beyond the exact budget only the bounds are reported
    TemplateReport co13 = analyze_template(cheng_oxley(13), 16);
    CHECK(!co13.separator_exact.has_value());
    CHECK(co13.separator_best_bound >= 1);
}

TEST_CASE("hard pair shapes") {
    HardPair pair = hard_pair(petersen());
    CHECK(pair.g.vertex_count() == 80);
    CHECK(pair.h.vertex_count() == 80);
    CHECK(pair.k_bound_exact);
    CHECK(pair.k_bound == 4);  // separator of Petersen

    HardPair torus4 = hard_pair(torus(4), 2, 0);  // no exact search
    CHECK(torus4.g.vertex_count() == 256);
    CHECK(!torus4.k_bound_exact);
    CHECK(torus4.k_bound >= 1);

    HardPair triple = hard_pair(petersen(), 3);
    CHECK(triple.g.vertex_count() == 120);
    CHECK(triple.h.vertex_count() == 120);

    CHECK_THROWS_AS(hard_pair(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("separator search on small graphs") {
    CHECK(min_separator_size(cycle_graph(6)) == 2);
    CHECK(min_separator_size(complete_graph(4)) == 2);  // leave at most 2 of 4
    CHECK(min_separator_size(path_graph(5)) == 1);
    CHECK(min_separator_size(petersen()) == 4);
}

TEST_CASE("vertex expansion on small graphs") {
    ExpansionResult c4 = vertex_expansion(cycle_graph(4));
    CHECK(c4.value == doctest::Approx(1.0));  // any 2-set has 2 outside neighbors

    ExpansionResult k4 = vertex_expansion(complete_graph(4));
    CHECK(k4.value == doctest::Approx(1.0));  // a 2-subset sees the other 2
}

TEST_CASE("cfi manifest json shape") {
    CfiGraph a = cfi(petersen(), {0});
    std::string json = cfi_manifest_json(a, 4);
    CHECK(json.find("\"k_bound\":4") != std::string::npos);
    CHECK(json.find("\"twists\"") != std::string::npos);
}
