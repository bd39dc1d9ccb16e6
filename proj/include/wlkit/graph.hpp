#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wlkit {

/// Undirected simple graph on vertices 0..n-1 with an optional vertex
/// coloring (all zero by default). Immutable after construction; all
/// operations that "modify" a graph return a new one.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;

    /// Validates and builds. Edges may be given in any order and
    /// orientation; they are stored once as (min,max), sorted.
    /// Throws std::invalid_argument on loops, duplicates or
    /// out-of-range endpoints.
    static Graph build(int n, std::vector<Edge> edges,
                       std::vector<int> vertex_colors = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    const std::vector<int>& vertex_colors() const { return vcolor_; }
    int vertex_color(int v) const { return vcolor_[v]; }

    /// Copy with one vertex recolored.
    Graph with_vertex_color(int v, int color) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && vcolor_ == other.vcolor_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> vcolor_;
};

/// Row-per-vertex adjacency bitset, the hot-path representation for
/// common-neighbor counts and refinement kernels.
class AdjacencyBits {
public:
    explicit AdjacencyBits(const Graph& g);
    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const std::uint64_t> row(int u) const {
        return {rows_.data() + static_cast<std::size_t>(u) * words_, words_};
    }
    int common_neighbors(int u, int v) const;

private:
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by `vertices` (kept in the given order; vertex i of
/// the result is vertices[i]). Duplicates or out-of-range entries throw.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Relabeled copy: vertex v of g becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

/// Maximum number of common neighbors over distinct vertex pairs;
/// 0 when n <= 1.
int max_common_neighbors(const Graph& g);

/// Common neighbors of a single pair; throws if u == v.
int common_neighbor_count(const Graph& g, int u, int v);

struct BasicStats {
    std::optional<int> regular_degree;  // nullopt when degrees differ
    bool connected = false;
    std::optional<int> diameter;        // nullopt = infinite
    std::optional<int> girth;           // nullopt = acyclic
};

/// Exact degree/connectivity/diameter/girth by BFS.
BasicStats basic_stats(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_prime(long long n);

}  // namespace wlkit
