#pragma once

#include <set>
#include <vector>

#include "wlkit/graph.hpp"

namespace wlkit {

/// Element of the dihedral group of order 2q: reflection^a * rotation^i.
struct DihedralElement {
    bool reflection = false;
    int exponent = 0;  // in [0, q)
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int s, int t);
Graph petersen();

/// Cayley graph of Z_p with connection set Z. Requires Z nonempty,
/// 0-free and symmetric (Z == -Z mod p).
Graph circulant(int p, const std::set<int>& connection);

/// Quadratic residues mod p, excluding 0.
std::set<int> quadratic_residues(int p);

/// Paley graph: circulant on the quadratic residues. Requires p prime,
/// p == 1 (mod 4).
Graph paley(int p);

/// Cayley graph of the dihedral group of order 2q whose connection set
/// is the reflections {a*b^e : e in exponents}. Vertex numbering:
/// rotation b^i -> i, reflection a*b^i -> q+i.
Graph dihedral_cayley(int q, const std::set<int>& exponents);

/// Label of a dihedral Cayley vertex under the numbering above.
DihedralElement dihedral_vertex_label(int q, int vertex);

/// The unique cubic arc-transitive graph on 2p vertices for prime
/// p == 1 (mod 3), as the dihedral Cayley graph on exponents
/// {1, r, r^2} with r the smallest nontrivial cube root of 1 mod p.
Graph cheng_oxley(int p);

/// Smallest r in (1, p) with r^3 == 1 (mod p).
int smallest_cube_root(int p);

/// 4-regular l x l grid on the torus; vertex (i,j) -> i*l + j. l >= 3.
Graph torus(int l);

}  // namespace wlkit
