#pragma once

// Test-side oracles, independent of the library paths they check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit::testutil {

// Strongly regular parameters by direct common-neighbor counting:
// regular, lambda constant over adjacent pairs, mu constant over
// non-adjacent pairs (vacuously constant when no such pair exists).
struct SrgParams {
    int n = 0, d = 0;
    std::optional<int> lambda, mu;
};

inline std::optional<SrgParams> srg_params(const Graph& g) {
    const int n = g.vertex_count();
    SrgParams params;
    params.n = n;
    if (n == 0) return params;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return std::nullopt;
    params.d = g.degree(0);
    AdjacencyBits bits(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = bits.common_neighbors(u, v);
            auto& slot = g.adjacent(u, v) ? params.lambda : params.mu;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return std::nullopt;
        }
    return params;
}

inline bool is_strongly_regular(const Graph& g) { return srg_params(g).has_value(); }

// Exhaustive automorphism count; n <= 10 or so.
inline long long brute_force_automorphism_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    AdjacencyBits bits(g);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (g.vertex_color(v) != g.vertex_color(perm[v])) ok = false;
        for (auto [u, v] : g.edges()) {
            if (!ok) break;
            if (!bits.adjacent(perm[u], perm[v])) ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph::build(n, std::move(edges));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// r x r rook's graph: vertices (i,j), adjacent iff same row or column.
inline Graph rook_graph(int r) {
    std::vector<Graph::Edge> edges;
    auto id = [r](int i, int j) { return i * r + j; };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (int jj = j + 1; jj < r; ++jj) edges.emplace_back(id(i, j), id(i, jj));
            for (int ii = i + 1; ii < r; ++ii) edges.emplace_back(id(i, j), id(ii, j));
        }
    return Graph::build(r * r, std::move(edges));
}

}  // namespace wlkit::testutil
