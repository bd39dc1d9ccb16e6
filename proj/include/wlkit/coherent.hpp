#pragma once

#include <string>
#include <vector>

#include "wlkit/graph.hpp"
#include "wlkit/wl.hpp"

namespace wlkit {

/// Partition of V^2 into basis relations together with the derived
/// tables. Relation ids are dense, reflexive relations first.
struct CoherentConfiguration {
    int n = 0;
    int num_relations = 0;
    std::vector<int> relation;            // n x n matrix, row-major
    std::vector<bool> reflexive;          // per relation
    std::vector<std::vector<int>> fibers; // point sets, one per reflexive relation
    std::vector<int> fiber_of;            // per point
    std::vector<long long> valency;       // per relation
    std::vector<int> transpose;           // per relation
    std::vector<int> source_fiber;        // per relation
    std::vector<int> target_fiber;        // per relation

    int at(int u, int v) const { return relation[static_cast<std::size_t>(u) * n + v]; }
};

struct ConstituentInfo {
    int relation_id = 0;
    long long outdegree = 0;
    bool reflexive = false;
};

struct CoherenceViolation {
    char axiom = '?';        // 'A', 'B' or 'C'
    std::string detail;
};

struct CoherenceReport {
    std::vector<CoherenceViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Coherent closure of a (colored) graph: the stable 2-WL partition
/// packaged as a configuration. Verifies the axioms; a failure here is
/// a refinement bug and throws std::logic_error.
CoherentConfiguration closure(const Graph& g);

/// Wraps an arbitrary relation matrix (dense ids) without verification;
/// for tests of verify_coherence on hand-built partitions.
CoherentConfiguration wrap_partition(int n, std::vector<int> relation_matrix);

/// Checks axioms A (loops separated), B (closed under transposition)
/// and C (intersection numbers constant per relation). Full mode checks
/// every pair; sample mode draws the given number of random pairs per
/// relation (seeded), for large instances.
CoherenceReport verify_coherence(const CoherentConfiguration& x, bool full = true,
                                 int samples = 1000, unsigned long long seed = 1);

/// Per-relation outdegree table.
std::vector<ConstituentInfo> constituents(const CoherentConfiguration& x);

/// True iff the diagonal consists of more than one relation.
bool diagonal_is_split(const CoherentConfiguration& x);

/// True iff the ordered adjacent pairs of g meet more than one basis
/// relation. x must be the closure of g.
bool adjacency_is_split(const CoherentConfiguration& x, const Graph& g);

/// Restriction to a union of fibers; throws if U is not fiber-closed.
CoherentConfiguration restrict_to(const CoherentConfiguration& x, const std::vector<int>& points);

/// Coherent closure of the one-point extension, computed by refining
/// the vertex-individualized graph.
CoherentConfiguration one_point_extension(const Graph& g, int u);

/// All irreflexive relations have valency 1.
bool is_semiregular(const CoherentConfiguration& x);

std::string coherent_to_json(const CoherentConfiguration& x);

}  // namespace wlkit
