#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Thrown when an operation would exceed the configured memory budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::size_t required, std::size_t available);
    std::size_t required_bytes;
    std::size_t available_bytes;
};

/// Memory budget for tuple-space allocations (default 2 GiB).
void set_memory_budget(std::size_t bytes);
std::size_t memory_budget();

struct VertexColoring {
    int n = 0;
    std::vector<int> color;  // per vertex, dense ids 0..num_colors-1
    int num_colors = 0;
    int rounds = 0;
};

struct PairColoring {
    int n = 0;
    std::vector<int> color;  // row-major over V^2, dense ids
    int num_colors = 0;
    int rounds = 0;

    int at(int u, int v) const { return color[static_cast<std::size_t>(u) * n + v]; }
};

struct TupleColoring {
    int n = 0;
    int k = 0;
    std::vector<int> color;  // row-major over V^k, dense ids
    int num_colors = 0;
    int rounds = 0;

    std::size_t index(const std::vector<int>& tuple) const;
    int at(const std::vector<int>& tuple) const { return color[index(tuple)]; }
};

/// Classical degree refinement (1-WL) to the stable coloring. Color ids
/// are canonical: signatures are ranked lexicographically each round.
VertexColoring wl1(const Graph& g);

/// 2-WL refinement over V^2. Initial colors encode loop/edge/nonedge
/// plus the endpoint colors; each round recolors a pair by the multiset
/// of color pairs over all middle vertices.
PairColoring wl2(const Graph& g);

/// Copy of g with vertex u given a color unused elsewhere.
Graph individualize(const Graph& g, int u);

/// k-WL refinement over V^k, k >= 2. The initial color encodes the
/// equality pattern of the tuple, the ordered adjacency pattern and the
/// vertex colors. Throws BudgetError when n^k does not fit the budget.
TupleColoring wlk(const Graph& g, int k);

struct DistinguishReport {
    bool distinguished = false;
    int round = -1;  // first round with different palettes, -1 if none
    int rounds_to_stable = 0;
};

/// True iff k-WL tells g and h apart: both tuple spaces are refined in
/// lockstep with a shared signature dictionary and the final palettes
/// compared as multisets.
bool distinguish(const Graph& g, const Graph& h, int k);
DistinguishReport distinguish_report(const Graph& g, const Graph& h, int k);

/// True iff k-WL splits V^s only along initial colors: s-tuples (padded
/// by cloning the last vertex) get equal stable colors exactly when
/// their initial colors agree. Requires 1 <= s <= k.
bool is_wl_sk_regular(const Graph& g, int s, int k);

}  // namespace wlkit
