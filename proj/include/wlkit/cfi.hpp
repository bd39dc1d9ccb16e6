#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlkit/graph.hpp"
#include "wlkit/transitivity.hpp"

namespace wlkit {

/// Output of the regularized colorless CFI construction over a
/// k-regular connected template. Cell vertices carry no colors; the
/// cell and slice structure is kept alongside the base graph.
struct CfiGraph {
    Graph base;
    Graph template_graph;
    int k = 0;  // template degree
    std::vector<std::vector<int>> cells;  // base vertices per template vertex
    std::vector<int> cell_of;             // per base vertex
    // slice(v, u, b): the half of cell v in which the coordinate labeled
    // by neighbor u equals b.
    std::vector<int> twists;              // edge indices into template_graph.edges()

    const std::vector<int>& cell(int template_vertex) const { return cells[template_vertex]; }
    std::vector<int> slice(int v, int u, int bit) const;
};

struct TemplateReport {
    int k = 0;
    bool regular = false;
    bool connected = false;
    int max_common_neighbors = 0;
    bool assumption_ok = false;  // k >= 3, connected, nu < 2k-4
    std::optional<int> diameter;
    std::optional<int> separator_exact;       // when v(F) within budget
    std::optional<double> expansion_exact;    // vertex expansion, same budget
    int separator_bound_expansion = 0;        // from the expansion bound
    int separator_bound_diameter = 0;         // from the diameter bound
    int separator_best_bound = 0;             // max of the above, floored at 1
};

/// Set of template edges (as indices into F.edges()) from explicit
/// pairs; unknown edges throw.
std::vector<int> edge_indices(const Graph& f, const std::vector<std::pair<int, int>>& edges);

/// Builds the CFI graph over template F with the interspaces of the
/// edges in `twist_edges` (indices into F.edges()) crossed. F must be
/// k-regular with k >= 2 and connected.
CfiGraph cfi(const Graph& f, const std::vector<int>& twist_edges = {});

/// Untwisted/one-twist pair (A, B) over a template satisfying the
/// assumption (k >= 3, connected, nu(F) < 2k-4); B twists the
/// lexicographically smallest edge. Throws std::invalid_argument naming
/// the violated clause otherwise.
std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& f);

/// Exact isomorphism test between two twisted versions; returns true
/// iff they are isomorphic, which under the assumption happens exactly
/// when |R symdiff S| is even.
bool twist_parity_check(const Graph& f, const std::vector<int>& twists_r,
                        const std::vector<int>& twists_s, const OracleOptions& opts = {});

/// Template diagnostics: degree, connectivity, nu, diameter, exact
/// separator size and vertex expansion by exhaustive search when
/// v(F) <= exact_budget, and the two always-available lower bounds.
TemplateReport analyze_template(const Graph& f, int exact_budget = 16);

/// Minimum size of a vertex set whose removal leaves components of at
/// most v(F)/2 vertices. Exhaustive; exponential in v(F).
int min_separator_size(const Graph& f);

/// min |boundary(S)| / |S| over nonempty S with |S| <= v/2, plus the
/// minimizing ratio as a fraction.
struct ExpansionResult {
    double value = 0.0;
    long long boundary = 0;  // numerator of the minimizing ratio
    long long size = 1;      // denominator
};
ExpansionResult vertex_expansion(const Graph& f);

struct HardPair {
    Graph g;  // copies x A
    Graph h;  // (copies-1) x A plus one B
    int k_bound = 1;          // distinguish(g,h,k) = false for k < k_bound
    bool k_bound_exact = false;
    TemplateReport template_report;
};

/// The vertex-transitive vs non-vertex-transitive pair: G as `copies`
/// disjoint copies of A and H with one copy replaced by B.
HardPair hard_pair(const Graph& f, int copies = 2, int exact_budget = 16);

/// Builds the relation x ~ y iff nu(x,y) == nu(base) and checks its
/// connected components against the cell partition.
bool is_cell_partition_detected(const CfiGraph& a);

std::string cfi_manifest_json(const CfiGraph& a, const std::optional<int>& k_bound);

}  // namespace wlkit
