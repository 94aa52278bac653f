#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tsurf/geometry.hpp"

namespace tsurf {

// Finite multigraph: loops and parallel edges allowed, edge order carries no
// meaning. A loop contributes 2 to its vertex degree.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n_vertices) : n_(n_vertices) {
    if (n_vertices < 1) throw InvalidParameter("multigraph needs >= 1 vertex");
  }
  Multigraph(int n_vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int u, int v);
  int degree(int v) const;
  int loop_count(int v) const;
  int multiplicity(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  std::vector<int> isolated_vertices() const;
  // Copy with all isolated vertices dropped (remaining vertices reindexed in
  // order).
  Multigraph without_isolated_vertices() const;

 private:
  int n_ = 1;
  std::vector<std::pair<int, int>> edges_;  // stored with first <= second
};

Multigraph complete_graph(int n);
Multigraph wedge_graph(int n);  // one vertex, n loops
// 2m parallel edges between each consecutive pair v_i, v_{i+1 mod n}.
Multigraph family_p_graph(int n, int m);
// m loops at every vertex plus m parallel edges between consecutive pairs.
Multigraph family_q_graph(int n, int m);
// Removes one copy per listed edge; throws if a listed edge is absent.
Multigraph delete_edges(const Multigraph& g, const std::vector<std::pair<int, int>>& edges);

// Multigraph isomorphism (multiplicities and loop counts preserved) by
// invariant refinement plus backtracking. Returns a vertex bijection
// (image[v] in b for v in a) or nullopt. Intended for desk-scale graphs.
std::optional<std::vector<int>> isomorphic(const Multigraph& a, const Multigraph& b);

struct WaleckiDecomposition {
  // cycles[l-1] is the Hamiltonian cycle C_l as a vertex sequence of length n.
  std::vector<std::vector<int>> cycles;
  // permutations[l-1][i] is the successor of vertex i along C_l.
  std::vector<std::vector<int>> permutations;
};

// Edge-disjoint Hamiltonian decomposition of K_n for odd n >= 5. Cycle l is
// (0, l, l+1, l-1, l+2, l-2, ...) with nonzero entries reduced mod n-1 into
// {1..n-1}.
WaleckiDecomposition walecki(int n);

}  // namespace tsurf
