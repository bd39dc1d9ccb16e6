#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlkit/coherent.hpp"
#include "wlkit/graph.hpp"

namespace wlkit {

struct OracleOptions {
    int max_vertices = 120;   // refuse larger inputs
    int pair_refine_limit = 128;  // use 2-WL pruning up to this size, 1-WL above
    bool target_group_pruning = true;  // prune iso search with Aut(H) orbits
};

/// Exact automorphism data from the backtracking oracle.
struct AutomorphismReport {
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<int>> vertex_orbits;
    std::vector<std::vector<std::pair<int, int>>> arc_orbits;
    unsigned long long group_order = 0;  // valid iff order_fits
    bool order_fits = true;
    std::string group_order_decimal;     // always exact
};

/// Full automorphism search: generating set, exact order via a
/// stabilizer chain, vertex and arc orbits. Respects vertex colors.
/// Throws BudgetError when the graph exceeds the vertex budget.
AutomorphismReport automorphisms(const Graph& g, const OracleOptions& opts = {});

/// First isomorphism g -> h (vertex colors respected), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 const OracleOptions& opts = {});
bool is_isomorphic(const Graph& g, const Graph& h, const OracleOptions& opts = {});

bool is_vertex_transitive_exact(const Graph& g, const OracleOptions& opts = {});
bool is_arc_transitive_exact(const Graph& g, const OracleOptions& opts = {});

/// True iff perm is a color- and adjacency-preserving bijection.
bool is_automorphism(const Graph& g, const std::vector<int>& perm);

struct RecognitionVerdict {
    enum class Answer { yes, no, not_applicable };
    Answer answer = Answer::not_applicable;
    bool condition_diagonal = false;      // all loops equally colored
    bool condition_outdegree = false;     // constituents share one outdegree d
    bool condition_extensions = false;    // individualized profile for every u
    long long d = 0;
    long long constituent_count = 0;      // (p-1)/d when defined
    std::optional<int> witness_vertex;    // vertex failing the extension profile
    std::string note;
    bool trivial = false;                 // complete/empty short-circuit
    std::optional<bool> adjacency_split;  // filled by the arc recognizer

    bool yes() const { return answer == Answer::yes; }
};

/// Vertex-transitivity of a graph with a prime number of vertices from
/// the outdegree profile of the stable pair coloring and of its
/// one-point extensions. Complete and empty graphs short-circuit to
/// yes. Throws std::invalid_argument when the order is not prime.
RecognitionVerdict recognize_vertex_transitive_prime(const Graph& g);

/// Arc-transitivity on a prime number of vertices: vertex-transitive
/// and the adjacency relation not split.
RecognitionVerdict recognize_arc_transitive_prime(const Graph& g);

}  // namespace wlkit
