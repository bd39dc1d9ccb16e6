#include "doctest.h"

#include <random>

#include "support/testutil.hpp"
#include "wlkit/generators.hpp"
#include "wlkit/io.hpp"

using namespace wlkit;

TEST_CASE("graph6 known encodings") {
    // hand-checked against the format definition
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK(to_graph6(empty_graph(0)) == "?");

    CHECK(from_graph6("Bw") == complete_graph(3));
    CHECK(from_graph6("C~") == complete_graph(4));
    CHECK(from_graph6(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("graph6 round trip") {
    std::mt19937_64 rng(20240817);
    for (int n : {0, 1, 2, 5, 13, 40, 63, 100}) {
        for (int rep = 0; rep < 4; ++rep) {
            Graph g = testutil::random_graph(n, rng);
            CHECK(from_graph6(to_graph6(g)) == g);
        }
    }
    CHECK(from_graph6(to_graph6(petersen())) == petersen());
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);       // truncated bits
    CHECK_THROWS_AS(from_graph6("Bw    junk"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(std::string(1, char(20))), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g = petersen();
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(from_edge_list("2 1\n0 1\n") == complete_graph(2));
    CHECK_THROWS_AS(from_edge_list("3"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    Graph g = Graph::build(4, {{0, 1}, {2, 3}}, {0, 1, 1, 0});
    CHECK(from_json(to_json(g)) == g);
}

TEST_CASE("file io picks format by extension") {
    Graph g = paley(13);
    for (const char* name : {"/tmp/wlkit_io_test.g6", "/tmp/wlkit_io_test.json",
                             "/tmp/wlkit_io_test.txt"}) {
        write_graph_file(g, name);
        CHECK(read_graph_file(name) == g);
    }
}
