#include "wlkit/generators.hpp"

#include <stdexcept>
#include <string>

namespace wlkit {

Graph empty_graph(int n) { return Graph::build(n, {}); }

Graph complete_graph(int n) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Graph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, std::move(edges));
}

Graph complete_bipartite(int s, int t) {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return Graph::build(s + t, std::move(edges));
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::build(10, std::move(edges));
}

Graph circulant(int p, const std::set<int>& connection) {
    if (p < 1) throw std::invalid_argument("modulus must be positive");
    if (connection.empty()) throw std::invalid_argument("connection set is empty");
    for (int z : connection) {
        if (z <= 0 || z >= p)
            throw std::invalid_argument("connection set element " + std::to_string(z) +
                                        " out of range (0, " + std::to_string(p) + ")");
        if (!connection.count((p - z) % p))
            throw std::invalid_argument("connection set not symmetric: missing inverse of " +
                                        std::to_string(z));
    }
    std::vector<Graph::Edge> edges;
    for (int x = 0; x < p; ++x)
        for (int z : connection) {
            int y = (x + z) % p;
            if (x < y) edges.emplace_back(x, y);
        }
    return Graph::build(p, std::move(edges));
}

std::set<int> quadratic_residues(int p) {
    std::set<int> residues;
    for (long long x = 1; x < p; ++x) residues.insert(static_cast<int>(x * x % p));
    return residues;
}

Graph paley(int p) {
    if (!is_prime(p)) throw std::invalid_argument("Paley graph needs a prime order");
    if (p % 4 != 1)
        throw std::invalid_argument("Paley graph needs p == 1 (mod 4); "
                                    "otherwise the residues are not symmetric");
    return circulant(p, quadratic_residues(p));
}

Graph dihedral_cayley(int q, const std::set<int>& exponents) {
    if (q < 1) throw std::invalid_argument("group parameter must be positive");
    std::set<int> reduced;
    for (int e : exponents) {
        int r = ((e % q) + q) % q;
        if (!reduced.insert(r).second)
            throw std::invalid_argument("exponents not distinct mod q");
    }
    // b^i ~ a b^{(e-i) mod q}; reflections are involutions so the edge
    // set is symmetric by construction.
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < q; ++i)
        for (int e : reduced) edges.emplace_back(i, q + ((e - i) % q + q) % q);
    return Graph::build(2 * q, std::move(edges));
}

DihedralElement dihedral_vertex_label(int q, int vertex) {
    if (vertex < 0 || vertex >= 2 * q) throw std::out_of_range("vertex out of range");
    return DihedralElement{vertex >= q, vertex % q};
}

int smallest_cube_root(int p) {
    for (int r = 2; r < p; ++r) {
        long long r3 = static_cast<long long>(r) * r % p * r % p;
        if (r3 == 1) return r;
    }
    throw std::invalid_argument("no nontrivial cube root of 1 mod " + std::to_string(p));
}

Graph cheng_oxley(int p) {
    if (!is_prime(p)) throw std::invalid_argument("Cheng-Oxley graph needs a prime order");
    if (p % 3 != 1)
        throw std::invalid_argument("Cheng-Oxley graph needs p == 1 (mod 3); "
                                    "no nontrivial cube root of unity otherwise");
    int r = smallest_cube_root(p);
    return dihedral_cayley(p, {1, r, static_cast<int>(static_cast<long long>(r) * r % p)});
}

Graph torus(int l) {
    if (l < 3) throw std::invalid_argument("torus side must be at least 3");
    std::vector<Graph::Edge> edges;
    auto id = [l](int i, int j) { return ((i % l + l) % l) * l + ((j % l + l) % l); };
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int v = id(i, j);
            for (int w : {id(i + 1, j), id(i, j + 1)}) {
                edges.emplace_back(std::min(v, w), std::max(v, w));
            }
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::build(l * l, std::move(edges));
}

}  // namespace wlkit
