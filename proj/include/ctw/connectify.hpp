#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"

namespace ctw {

// Forest over graph vertices recording which path fragments a node has
// already absorbed. The construction only ever adds edges between distinct
// components; add_edge reports a would-be cycle instead of applying it.
class BookkeepingForest {
 public:
  explicit BookkeepingForest(int universe);

  bool has_vertex(int v) const { return parent_[static_cast<size_t>(v)] >= 0; }
  void ensure_vertex(int v);

  // False (and no change) when u and v already lie in the same component,
  // i.e. the edge would close a cycle. Both ends must be present.
  bool add_edge(int u, int v);
  // Testing hook: records the edge even when it closes a cycle.
  void force_add_edge(int u, int v);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  int component_count() const { return component_count_; }
  bool acyclic() const { return edge_count_ == vertex_count_ - component_count_; }
  bool same_component(int u, int v) const;

 private:
  int find(int v) const;
  mutable std::vector<int> parent_;  // -1 marks an absent vertex
  int vertex_count_ = 0;
  int edge_count_ = 0;
  int component_count_ = 0;
};

// One reconnection step: `path` was added at `node`, its interior living in
// the subtree of `child`. Component counts refer to the part of `node`.
struct PathAddition {
  int node = -1;
  Path path;
  int child = -1;
  int components_before = 0;
  int components_after = 0;
};

// Walks a stable tree-decomposition root-first and reconnects every part by
// absorbing shortest admissible paths, yielding a connected decomposition of
// the same tree shape. Parts only ever grow; each addition is mirrored into
// per-node bookkeeping forests that certify the size bounds.
class ConstructionState {
 public:
  // Requires a connected graph and a valid, stable decomposition of it.
  // Roots the tree at node 0 when no root is designated.
  ConstructionState(const Graph& g, Decomposition d);

  const Graph& graph() const { return *g_; }
  // Tree plus the current (grown) parts.
  const Decomposition& current() const { return d_; }
  const VertexSet& part(int t) const { return d_.bag(t); }
  const VertexSet& original_part(int t) const {
    return original_[static_cast<size_t>(t)];
  }
  // Union of the current parts over the subtree below t.
  VertexSet subtree_union(int t) const;
  const BookkeepingForest& bookkeeping(int t) const {
    return book_[static_cast<size_t>(t)];
  }
  const std::vector<PathAddition>& additions() const { return additions_; }
  int additions_at(int t) const { return per_node_[static_cast<size_t>(t)]; }

  // Shortest path confined to the subtree union of t whose ends lie in two
  // distinct components of the part of t and whose interior avoids every
  // component. nullopt when the part is already connected.
  std::optional<Path> find_admissible_path(int t) const;

  // Applies the update rule for p at t: every node u below t absorbs the
  // slice of p inside its old subtree union, bookkeeping alongside. Throws
  // std::invalid_argument if p is not admissible at t and std::logic_error
  // if an internal invariant breaks (a bookkeeping cycle, or the component
  // count of the part of t dropping by anything other than one).
  void apply_update(int t, const Path& p);

  // Adds admissible paths at t until its part is connected; returns how many.
  int process_node(int t);

  // Processes all nodes root-first and returns the connected decomposition.
  Decomposition run();

 private:
  std::vector<VertexSet> snapshot_subtree_unions(int t) const;
  std::vector<int> subtree_nodes(int t) const;

  const Graph* g_;
  Decomposition d_;                    // bags hold the working parts
  std::vector<VertexSet> original_;    // parts as handed in
  std::vector<BookkeepingForest> book_;
  std::vector<PathAddition> additions_;
  std::vector<int> per_node_;
};

struct InvariantReport {
  bool valid = false;           // working parts still form a tree-decomposition
  bool stable = false;          // every side union still connected
  bool bookkeeping_ok = false;  // forests acyclic and tracking their parts
  std::string detail;
  bool ok() const { return valid && stable && bookkeeping_ok; }
};

InvariantReport check_invariants(const ConstructionState& state);

// Convenience wrapper: run the whole construction in one call.
Decomposition run_construction(const Graph& g, const Decomposition& stable);

}  // namespace ctw
