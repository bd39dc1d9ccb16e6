#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "support/testutil.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/wl.hpp"

using namespace wlkit;

namespace {

std::map<int, std::set<int>> vertex_classes(const VertexColoring& coloring) {
    std::map<int, std::set<int>> classes;
    for (int v = 0; v < coloring.n; ++v) classes[coloring.color[v]].insert(v);
    return classes;
}

std::set<std::set<int>> class_family(const VertexColoring& coloring) {
    std::set<std::set<int>> family;
    for (auto& [c, members] : vertex_classes(coloring)) family.insert(members);
    return family;
}

}  // namespace

TEST_CASE("wl1 basics") {
    VertexColoring star = wl1(complete_bipartite(1, 3));
    CHECK(star.num_colors == 2);

    // regular uncolored graphs stay monochromatic
    for (const Graph& g : {cycle_graph(6), petersen(), torus(3), complete_graph(5)})
        CHECK(wl1(g).num_colors == 1);

    VertexColoring path = wl1(path_graph(5));
    CHECK(path.num_colors == 3);
}

TEST_CASE("wl1 on the individualized C7 complement") {
    Graph g = individualize(complement(cycle_graph(7)), 0);
    VertexColoring coloring = wl1(g);
    std::set<std::set<int>> expected{{0}, {1, 6}, {2, 5}, {3, 4}};
    CHECK(class_family(coloring) == expected);
}

TEST_CASE("individualize") {
    Graph g = individualize(complete_graph(3), 0);
    CHECK(g.vertex_color(0) == 1);
    CHECK(g.vertex_color(1) == 0);
    CHECK(wl1(g).num_colors == 2);
    CHECK_THROWS_AS(individualize(complete_graph(3), 3), std::out_of_range);

    // the special color is fresh even after chaining
    Graph gg = individualize(g, 1);
    CHECK(gg.vertex_color(1) == 2);
}

TEST_CASE("wl2 class counts on the named fixtures") {
    PairColoring c7c = wl2(complement(cycle_graph(7)));
    CHECK(c7c.num_colors == 4);  // diagonal + three orbitals

    PairColoring k4 = wl2(complete_graph(4));
    CHECK(k4.num_colors == 2);

    PairColoring pet = wl2(petersen());
    CHECK(pet.num_colors == 3);  // strongly regular: diagonal, edges, non-edges
}

TEST_CASE("wl2 loops never share colors with non-loops") {
    for (const Graph& g : {petersen(), path_graph(5), individualize(paley(13), 3)}) {
        PairColoring coloring = wl2(g);
        std::set<int> loop_colors, other_colors;
        for (int u = 0; u < coloring.n; ++u)
            for (int v = 0; v < coloring.n; ++v)
                (u == v ? loop_colors : other_colors).insert(coloring.at(u, v));
        for (int c : loop_colors) CHECK(!other_colors.count(c));
    }
}

TEST_CASE("wl2 determinism and equivariance under relabeling") {
    Graph g = paley(13);
    PairColoring first = wl2(g);
    PairColoring second = wl2(g);
    CHECK(first.color == second.color);

    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 3; ++rep) {
        auto perm = testutil::random_permutation(g.vertex_count(), rng);
        PairColoring relabeled = wl2(apply_permutation(g, perm));
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(relabeled.at(perm[u], perm[v]) == first.at(u, v));
    }
}

TEST_CASE("wl2 rounds stay small") {
    for (const Graph& g : {petersen(), complement(cycle_graph(7)), path_graph(9),
                           individualize(complement(cycle_graph(7)), 0)}) {
        PairColoring coloring = wl2(g);
        CHECK(coloring.rounds <= coloring.n);
    }
}

TEST_CASE("wlk agrees with wl2 for k=2") {
    for (const Graph& g : {petersen(), path_graph(5), complement(cycle_graph(7))}) {
        PairColoring two = wl2(g);
        TupleColoring general = wlk(g, 2);
        // same partition of V^2, possibly different ids
        std::map<int, int> forward;
        std::map<int, int> backward;
        bool same = true;
        for (int u = 0; u < g.vertex_count() && same; ++u)
            for (int v = 0; v < g.vertex_count() && same; ++v) {
                int a = two.at(u, v);
                int b = general.at({u, v});
                auto [it1, ins1] = forward.emplace(a, b);
                auto [it2, ins2] = backward.emplace(b, a);
                if (it1->second != b || it2->second != a) same = false;
            }
        CHECK(same);
    }
}

TEST_CASE("wlk on K4 with k=3 splits by equality pattern only") {
    TupleColoring coloring = wlk(complete_graph(4), 3);
    // patterns: all equal; three position pairs; all distinct
    CHECK(coloring.num_colors == 5);
    std::map<std::vector<int>, int> pattern_color;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                std::vector<int> pattern{0, a == b ? 0 : 1, c == a ? 0 : (c == b ? 1 : 2)};
                int color = coloring.at({a, b, c});
                auto [it, inserted] = pattern_color.emplace(pattern, color);
                CHECK(it->second == color);
            }
}

TEST_CASE("wlk memory budget") {
    Graph g = complete_graph(40);
    std::size_t old_budget = memory_budget();
    set_memory_budget(1 << 20);
    CHECK_THROWS_AS(wlk(g, 4), BudgetError);
    try {
        wlk(g, 4);
    } catch (const BudgetError& e) {
        CHECK(e.required_bytes > e.available_bytes);
    }
    set_memory_budget(old_budget);
}

TEST_CASE("distinguish") {
    Graph k3 = complete_graph(3);
    CHECK(!distinguish(k3, k3, 2));
    CHECK(distinguish(k3, path_graph(3), 2));
    CHECK(distinguish(k3, path_graph(3), 3));

    // same degree sequence, different graphs
    Graph c6 = cycle_graph(6);
    Graph two_k3 = disjoint_union(k3, k3);
    CHECK(distinguish(c6, two_k3, 2));

    DistinguishReport report = distinguish_report(k3, path_graph(3), 2);
    CHECK(report.distinguished);
    CHECK(report.round >= 0);
}

TEST_CASE("indistinguishable graphs have equal degree sequences") {
    // fixture pairs; when distinguish says false the invariants must agree
    Graph a = paley(13);
    Graph b = circulant(13, {2, 11, 5, 8, 6, 7});  // another 6-regular circulant
    if (!distinguish(a, b, 2)) {
        auto degs = [](const Graph& g) {
            std::multiset<int> d;
            for (int v = 0; v < g.vertex_count(); ++v) d.insert(g.degree(v));
            return d;
        };
        CHECK(degs(a) == degs(b));
    }
}

TEST_CASE("distinguish monotone in k on fixtures") {
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3)));
    pairs.emplace_back(path_graph(4), disjoint_union(path_graph(3), empty_graph(1)));
    for (auto& [g, h] : pairs)
        if (distinguish(g, h, 2)) CHECK(distinguish(g, h, 3));
}

TEST_CASE("(s,k)-regularity") {
    CHECK(is_wl_sk_regular(cycle_graph(5), 1, 1));
    CHECK(!is_wl_sk_regular(path_graph(3), 1, 1));
    CHECK(!is_wl_sk_regular(path_graph(3), 1, 2));
    CHECK(is_wl_sk_regular(petersen(), 2, 2));
    CHECK(is_wl_sk_regular(petersen(), 1, 2));
    // regular but not strongly regular
    Graph c6 = cycle_graph(6);
    CHECK(is_wl_sk_regular(c6, 1, 1));
    CHECK(!is_wl_sk_regular(c6, 2, 2));
    CHECK_THROWS_AS(is_wl_sk_regular(c6, 3, 2), std::invalid_argument);
}
