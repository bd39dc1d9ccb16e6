#include "wlkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <stdexcept>

namespace wlkit {

Graph Graph::build(int n, std::vector<Edge> edges, std::vector<int> vertex_colors) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    if (vertex_colors.empty()) {
        vertex_colors.assign(n, 0);
    } else if (static_cast<int>(vertex_colors.size()) != n) {
        throw std::invalid_argument("vertex color list has wrong length");
    }

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.vcolor_ = std::move(vertex_colors);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_vertex_color(int v, int color) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    Graph g = *this;
    g.vcolor_[v] = color;
    return g;
}

AdjacencyBits::AdjacencyBits(const Graph& g) {
    const int n = g.vertex_count();
    words_ = static_cast<std::size_t>((n + 63) / 64);
    rows_.assign(words_ * n, 0);
    for (auto [u, v] : g.edges()) {
        rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
}

int AdjacencyBits::common_neighbors(int u, int v) const {
    const std::uint64_t* a = rows_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* b = rows_.data() + static_cast<std::size_t>(v) * words_;
    int total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edges().size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::build(n, std::move(edges), g.vertex_colors());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    std::vector<Graph::Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    std::vector<int> colors = g.vertex_colors();
    colors.insert(colors.end(), h.vertex_colors().begin(), h.vertex_colors().end());
    return Graph::build(ng + h.vertex_count(), std::move(edges), std::move(colors));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> where(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
        if (where[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        where[v] = static_cast<int>(i);
    }
    std::vector<Graph::Edge> edges;
    std::vector<int> colors(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        colors[i] = g.vertex_color(vertices[i]);
        for (int w : g.neighbors(vertices[i]))
            if (where[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), where[w]);
    }
    return Graph::build(static_cast<int>(vertices.size()), std::move(edges), std::move(colors));
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<Graph::Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[perm[v]] = g.vertex_color(v);
    return Graph::build(n, std::move(edges), std::move(colors));
}

int max_common_neighbors(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    AdjacencyBits bits(g);
    int best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            best = std::max(best, bits.common_neighbors(u, v));
    return best;
}

int common_neighbor_count(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("common neighbors undefined for a vertex with itself");
    AdjacencyBits bits(g);
    return bits.common_neighbors(u, v);
}

namespace {

// Distances from src; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// Shortest cycle through any vertex, by BFS from every start.
std::optional<int> girth_bfs(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

}  // namespace

BasicStats basic_stats(const Graph& g) {
    BasicStats stats;
    const int n = g.vertex_count();
    if (n == 0) {
        stats.connected = true;
        stats.diameter = 0;
        return stats;
    }
    bool regular = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) regular = false;
    if (regular) stats.regular_degree = g.degree(0);

    int ecc_max = 0;
    bool connected = true;
    for (int s = 0; s < n && connected; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) connected = false;
            ecc_max = std::max(ecc_max, dist[v]);
        }
    }
    stats.connected = connected;
    if (connected) stats.diameter = ecc_max;
    stats.girth = girth_bfs(g);
    return stats;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace wlkit
