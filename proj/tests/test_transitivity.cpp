#include "doctest.h"

#include <random>

#include "support/corpus.hpp"
#include "support/testutil.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/transitivity.hpp"
#include "wlkit/wl.hpp"

using namespace wlkit;

TEST_CASE("automorphism groups of named graphs") {
    AutomorphismReport c5 = automorphisms(cycle_graph(5));
    CHECK(c5.group_order == 10);
    CHECK(c5.vertex_orbits.size() == 1);
    CHECK(c5.arc_orbits.size() == 1);

    AutomorphismReport c7c = automorphisms(complement(cycle_graph(7)));
    CHECK(c7c.group_order == 14);
    CHECK(c7c.vertex_orbits.size() == 1);

    AutomorphismReport pet = automorphisms(petersen());
    CHECK(pet.group_order == 120);
    CHECK(pet.vertex_orbits.size() == 1);
    CHECK(pet.arc_orbits.size() == 1);

    AutomorphismReport p4 = automorphisms(path_graph(4));
    CHECK(p4.group_order == 2);
}

TEST_CASE("generators are verified automorphisms and order matches brute force") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 12; ++rep) {
        Graph g = testutil::random_graph(6, rng);
        AutomorphismReport report = automorphisms(g);
        for (auto& gen : report.generators) CHECK(is_automorphism(g, gen));
        CHECK(report.group_order == static_cast<unsigned long long>(
                                        testutil::brute_force_automorphism_count(g)));
    }
    // a couple of structured ones
    for (const Graph& g : {petersen(), complete_bipartite(2, 3), cycle_graph(8)})
        CHECK(automorphisms(g).group_order ==
              static_cast<unsigned long long>(testutil::brute_force_automorphism_count(g)));
}

TEST_CASE("automorphism groups of colored graphs") {
    Graph g = individualize(cycle_graph(5), 0);
    AutomorphismReport report = automorphisms(g);
    CHECK(report.group_order == 2);  // reflection through vertex 0

    // all individualized copies of a vertex-transitive graph are isomorphic
    Graph c7c = complement(cycle_graph(7));
    for (int u = 1; u < 7; ++u)
        CHECK(is_isomorphic(individualize(c7c, 0), individualize(c7c, u)));
}

TEST_CASE("wl invariance under oracle generators") {
    for (const Graph& g : {petersen(), complement(cycle_graph(7)), paley(13)}) {
        PairColoring coloring = wl2(g);
        AutomorphismReport report = automorphisms(g);
        for (auto& gen : report.generators)
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = 0; v < g.vertex_count(); ++v)
                    CHECK(coloring.at(gen[u], gen[v]) == coloring.at(u, v));
    }
}

TEST_CASE("disconnected graphs decompose") {
    Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
    AutomorphismReport report = automorphisms(two_k3);
    CHECK(report.group_order == 72);  // (3!)^2 * 2
    CHECK(report.vertex_orbits.size() == 1);
    CHECK(is_vertex_transitive_exact(two_k3));

    Graph mixed = disjoint_union(complete_graph(3), complete_graph(4));
    CHECK(!is_vertex_transitive_exact(mixed));
    CHECK(automorphisms(mixed).group_order == 6 * 24);

    // wreath order on three copies
    Graph three_k2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                                    complete_graph(2));
    CHECK(automorphisms(three_k2).group_order == 8 * 6);  // 2^3 * 3!
}

TEST_CASE("group order decimal for large groups") {
    AutomorphismReport k13 = automorphisms(complete_graph(13));
    CHECK(k13.order_fits);
    CHECK(k13.group_order == 6227020800ULL);  // 13!
    CHECK(k13.group_order_decimal == "6227020800");
}

TEST_CASE("exact transitivity queries") {
    CHECK(is_vertex_transitive_exact(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(!is_vertex_transitive_exact(disjoint_union(complete_graph(3), complete_graph(4))));
    CHECK(!is_arc_transitive_exact(complete_bipartite(1, 3)));  // (center,leaf) vs (leaf,center)
    CHECK(is_arc_transitive_exact(cycle_graph(5)));
    CHECK(is_arc_transitive_exact(petersen()));
    // edge- but not arc-orbit questions: the star has 2 arc orbits
    CHECK(automorphisms(complete_bipartite(1, 3)).arc_orbits.size() == 2);
}

TEST_CASE("isomorphism oracle") {
    Graph pet = petersen();
    std::mt19937_64 rng(7);
    auto perm = testutil::random_permutation(10, rng);
    CHECK(is_isomorphic(pet, apply_permutation(pet, perm)));
    CHECK(!is_isomorphic(pet, cycle_graph(10)));

    auto iso = find_isomorphism(pet, apply_permutation(pet, perm));
    REQUIRE(iso.has_value());
    for (auto [u, v] : pet.edges())
        CHECK(apply_permutation(pet, perm).adjacent((*iso)[u], (*iso)[v]));

    // colored graphs must match colors
    Graph a = individualize(cycle_graph(6), 0);
    Graph b = individualize(cycle_graph(6), 1);
    CHECK(is_isomorphic(a, b));
    CHECK(!is_isomorphic(a, cycle_graph(6)));
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS(automorphisms(empty_graph(121)), BudgetError);
    OracleOptions opts;
    opts.max_vertices = 10;
    CHECK_THROWS_AS(automorphisms(complete_graph(11), opts), BudgetError);
}

TEST_CASE("vertex-transitivity recognizer on named graphs") {
    RecognitionVerdict c7c = recognize_vertex_transitive_prime(complement(cycle_graph(7)));
    CHECK(c7c.yes());
    CHECK(c7c.d == 2);
    CHECK(c7c.constituent_count == 3);

    RecognitionVerdict p5 = recognize_vertex_transitive_prime(path_graph(5));
    CHECK(!p5.yes());
    CHECK(!p5.condition_diagonal);

    RecognitionVerdict paley29 = recognize_vertex_transitive_prime(paley(29));
    CHECK(paley29.yes());
    CHECK(paley29.d == 14);
    CHECK(paley29.constituent_count == 2);

    CHECK_THROWS_AS(recognize_vertex_transitive_prime(cycle_graph(6)), std::invalid_argument);

    // complete and empty graphs short-circuit
    CHECK(recognize_vertex_transitive_prime(complete_graph(7)).yes());
    CHECK(recognize_vertex_transitive_prime(complete_graph(7)).trivial);
    CHECK(recognize_vertex_transitive_prime(empty_graph(5)).yes());
}

TEST_CASE("arc-transitivity recognizer on named graphs") {
    CHECK(recognize_arc_transitive_prime(cycle_graph(5)).yes());
    CHECK(recognize_arc_transitive_prime(paley(13)).yes());
    CHECK(recognize_arc_transitive_prime(complete_graph(7)).yes());
    CHECK(recognize_arc_transitive_prime(empty_graph(7)).yes());

    // vertex-transitive circulant whose arcs split into two orbits
    Graph mixed = circulant(13, {1, 12, 5, 8, 2, 11});
    RecognitionVerdict verdict = recognize_arc_transitive_prime(mixed);
    CHECK(verdict.yes() == is_arc_transitive_exact(mixed));
}

TEST_CASE("recognizers agree with the oracle on all labeled 5-vertex graphs") {
    // the larger corpora live in the acceptance suite
    for (const Graph& g : corpus::labeled_graphs(5)) {
        bool exact = is_vertex_transitive_exact(g);
        CHECK(recognize_vertex_transitive_prime(g).yes() == exact);
        bool exact_arc = is_arc_transitive_exact(g);
        CHECK(recognize_arc_transitive_prime(g).yes() == exact_arc);
    }
}

TEST_CASE("circulant arc-transitivity fixture") {
    // connection set {1,5,8,12} is the order-4 subgroup of F_13^*, so
    // multiplications give a single arc orbit
    Graph g = circulant(13, {1, 12, 5, 8});
    CHECK(is_vertex_transitive_exact(g));
    CHECK(is_arc_transitive_exact(g));
    CHECK(recognize_arc_transitive_prime(g).yes());
    CHECK(!adjacency_is_split(closure(g), g));
}
