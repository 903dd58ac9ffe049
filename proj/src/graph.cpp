#include "bfc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bfc/errors.hpp"
#include "bfc/linalg.hpp"

namespace bfc {

namespace {

// Union-find over vertex indices.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns false if x and y were already joined.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent_[rx] = ry;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

OrientedGraph::OrientedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 2) throw InvalidGraph("graph needs at least 2 vertices, got " + std::to_string(n_));
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw InvalidGraph("edge " + std::to_string(k) + " has a vertex outside [0, " +
                         std::to_string(n_) + ")");
    if (e.tail == e.head)
      throw InvalidGraph("edge " + std::to_string(k) + " is a self-loop at vertex " +
                         std::to_string(e.tail));
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert(key).second)
      throw InvalidGraph("duplicate undirected edge {" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + "}");
  }
  neighbors_.assign(n_, {});
  for (const Edge& e : edges_) {
    neighbors_[e.tail].push_back(e.head);
    neighbors_[e.head].push_back(e.tail);
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

OrientedGraph OrientedGraph::from_undirected(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    edges.push_back({std::min(a, b), std::max(a, b)});
  return OrientedGraph(n, std::move(edges));
}

OrientedGraph OrientedGraph::with_flipped_edge(int k) const {
  std::vector<Edge> edges = edges_;
  std::swap(edges.at(k).tail, edges.at(k).head);
  return OrientedGraph(n_, std::move(edges));
}

IncidenceMatrix incidence_matrix(const OrientedGraph& g, int d) {
  const int m = g.edge_count(), n = g.vertex_count();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, n);
  for (int k = 0; k < m; ++k) {
    h(k, g.edges()[k].tail) = -1.0;
    h(k, g.edges()[k].head) = 1.0;
  }
  return IncidenceMatrix{h, d, kron_identity(h, d)};
}

bool has_spanning_tree(const OrientedGraph& g) {
  DisjointSet ds(g.vertex_count());
  int components = g.vertex_count();
  for (const Edge& e : g.edges())
    if (ds.unite(e.tail, e.head)) --components;
  return components == 1;
}

bool is_acyclic(const OrientedGraph& g) {
  DisjointSet ds(g.vertex_count());
  for (const Edge& e : g.edges())
    if (!ds.unite(e.tail, e.head)) return false;
  return true;
}

Eigen::MatrixXd graph_laplacian(const IncidenceMatrix& inc) {
  return inc.Hbar.transpose() * inc.Hbar;
}

}  // namespace bfc
