#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctw/graph.hpp"

namespace ctw {

// Tree of bags over the vertices of a host graph. Nodes are indexed 0..n-1;
// the tree structure is an explicit edge list. A decomposition may carry a
// designated root, in which case parent/children accessors are available.
class Decomposition {
 public:
  Decomposition(const Graph& g, std::vector<VertexSet> bags,
                std::vector<std::pair<int, int>> tree_edges);

  int node_count() const { return static_cast<int>(bags_.size()); }
  const VertexSet& bag(int t) const { return bags_[static_cast<size_t>(t)]; }
  VertexSet& mutable_bag(int t) { return bags_[static_cast<size_t>(t)]; }
  const std::vector<std::pair<int, int>>& tree_edges() const { return tree_edges_; }
  const std::vector<int>& tree_neighbors(int t) const {
    return tree_adj_[static_cast<size_t>(t)];
  }
  uint64_t graph_fingerprint() const { return graph_fingerprint_; }
  int graph_vertex_count() const { return graph_vertex_count_; }

  bool has_root() const { return root_ >= 0; }
  int root() const { return root_; }
  void set_root(int r);
  int parent(int t) const { return parent_[static_cast<size_t>(t)]; }
  const std::vector<int>& children(int t) const { return children_[static_cast<size_t>(t)]; }
  // Nodes in root-first order (every node appears after its parent).
  const std::vector<int>& preorder() const { return preorder_; }

 private:
  std::vector<VertexSet> bags_;
  std::vector<std::pair<int, int>> tree_edges_;
  std::vector<std::vector<int>> tree_adj_;
  uint64_t graph_fingerprint_ = 0;
  int graph_vertex_count_ = 0;
  int root_ = -1;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> preorder_;
};

struct ValidationReport {
  bool vertex_coverage = false;     // every graph vertex lies in some bag
  bool edge_coverage = false;       // every graph edge lies in some bag
  bool coherence = false;           // nodes holding any fixed vertex form a subtree
  std::string detail;               // human-readable witness for the first failure
  bool ok() const { return vertex_coverage && edge_coverage && coherence; }
};

ValidationReport validate(const Graph& g, const Decomposition& d);

int width(const Decomposition& d);

// All bags connected in g.
bool is_connected_decomposition(const Graph& g, const Decomposition& d);

// For every tree edge, the union of bags on each side is connected in g.
bool is_stable(const Graph& g, const Decomposition& d);

// Union of bags over the component of the tree containing `t` after removing
// the tree edge {t, away_from}.
VertexSet side_bag_union(const Decomposition& d, int t, int away_from);

// Union of bags over the subtree rooted at t (requires a root).
VertexSet subtree_bag_union(const Decomposition& d, int t);

Decomposition reroot(const Decomposition& d, int new_root);

// Contract tree edges whose bags are nested (one bag a subset of the other),
// keeping the superset bag. Preserves validity, connectedness and stability.
Decomposition simplify(const Graph& g, const Decomposition& d);

// Single-node decomposition holding every vertex.
Decomposition trivial_decomposition(const Graph& g);

}  // namespace ctw
