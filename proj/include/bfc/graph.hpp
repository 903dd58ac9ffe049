#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bfc {

struct Edge {
  int tail = 0;
  int head = 0;
};

/// Undirected graph together with an orientation. Vertex indices are 0-based
/// internally; scenario files speak 1-based. Immutable after construction.
class OrientedGraph {
 public:
  /// Validates the invariants: n >= 2, no self-loops, no duplicate undirected
  /// edges, all indices in [0, n). Throws InvalidGraph.
  OrientedGraph(int n, std::vector<Edge> edges);

  /// Builds from undirected pairs, orienting each edge tail = smaller index,
  /// head = larger.
  static OrientedGraph from_undirected(int n,
                                       const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Adjacency lists of the underlying undirected graph.
  const std::vector<std::vector<int>>& neighbors() const { return neighbors_; }

  /// Copy with edge k's orientation reversed.
  OrientedGraph with_flipped_edge(int k) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
};

/// Incidence matrix H (m×n, entries {0,±1}; +1 at the head, −1 at the tail)
/// together with its d-dimensional expansion H̄ = H ⊗ I_d.
struct IncidenceMatrix {
  Eigen::MatrixXd H;
  int d = 1;
  Eigen::MatrixXd Hbar;
};

IncidenceMatrix incidence_matrix(const OrientedGraph& g, int d = 1);

/// True iff the underlying undirected graph is connected.
bool has_spanning_tree(const OrientedGraph& g);

/// True iff the underlying undirected graph has no cycle.
bool is_acyclic(const OrientedGraph& g);

/// L = H̄ᵀ H̄ ∈ R^{dn×dn}. Symmetric PSD; rank dn−d with null space
/// Span{1_n ⊗ I_d} when the graph is connected.
Eigen::MatrixXd graph_laplacian(const IncidenceMatrix& inc);

}  // namespace bfc
