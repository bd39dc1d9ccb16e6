#pragma once

// Exhaustive graph corpora for the agreement suites: all labeled graphs
// on n vertices, all graphs up to isomorphism by vertex augmentation
// with oracle-confirmed deduplication, and all circulants on a prime.

#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit::corpus {

/// All 2^(n choose 2) labeled graphs on n vertices (n <= 6 sensible).
std::vector<Graph> labeled_graphs(int n);

/// Representatives of all isomorphism classes on exactly n vertices.
/// Built by augmenting the (n-1)-vertex classes and deduplicating with
/// an invariant bucket plus the exact isomorphism oracle.
/// Known counts: 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 1..8.
const std::vector<Graph>& graphs_up_to_iso(int n);

/// All circulants on Z_p: one graph per nonempty symmetric connection
/// set (up to set identity, not isomorphism).
std::vector<Graph> all_circulants(int p);

}  // namespace wlkit::corpus
