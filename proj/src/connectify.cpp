#include "ctw/connectify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctw {

BookkeepingForest::BookkeepingForest(int universe)
    : parent_(static_cast<size_t>(universe), -1) {}

void BookkeepingForest::ensure_vertex(int v) {
  auto& slot = parent_[static_cast<size_t>(v)];
  if (slot >= 0) return;
  slot = v;
  ++vertex_count_;
  ++component_count_;
}

int BookkeepingForest::find(int v) const {
  int root = v;
  while (parent_[static_cast<size_t>(root)] != root)
    root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(v)] != root) {
    int next = parent_[static_cast<size_t>(v)];
    parent_[static_cast<size_t>(v)] = root;
    v = next;
  }
  return root;
}

bool BookkeepingForest::same_component(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("bookkeeping: vertex not present");
  return find(u) == find(v);
}

bool BookkeepingForest::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("bookkeeping: edge end not present");
  int ru = find(u), rv = find(v);
  if (ru == rv) return false;
  parent_[static_cast<size_t>(ru)] = rv;
  ++edge_count_;
  --component_count_;
  return true;
}

void BookkeepingForest::force_add_edge(int u, int v) {
  if (!add_edge(u, v)) ++edge_count_;
}

ConstructionState::ConstructionState(const Graph& g, Decomposition d)
    : g_(&g), d_(std::move(d)) {
  if (!g.is_connected())
    throw std::invalid_argument("construction requires a connected graph");
  if (d_.graph_fingerprint() != g.fingerprint())
    throw std::invalid_argument("decomposition belongs to a different graph");
  if (!d_.has_root()) d_.set_root(0);
  auto report = validate(g, d_);
  if (!report.ok())
    throw std::invalid_argument("not a tree-decomposition: " + report.detail);
  if (!is_stable(g, d_))
    throw std::invalid_argument("construction requires a stable decomposition");

  int n = d_.node_count();
  original_.reserve(static_cast<size_t>(n));
  book_.reserve(static_cast<size_t>(n));
  per_node_.assign(static_cast<size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    original_.push_back(d_.bag(t));
    BookkeepingForest q(g.vertex_count());
    d_.bag(t).for_each([&](int v) { q.ensure_vertex(v); });
    book_.push_back(std::move(q));
  }
}

std::vector<int> ConstructionState::subtree_nodes(int t) const {
  // Root-first order within the subtree of t.
  std::vector<int> nodes;
  nodes.push_back(t);
  for (size_t i = 0; i < nodes.size(); ++i)
    for (int c : d_.children(nodes[i])) nodes.push_back(c);
  return nodes;
}

std::vector<VertexSet> ConstructionState::snapshot_subtree_unions(int t) const {
  // Indexed by node id; only entries inside the subtree of t are meaningful.
  std::vector<VertexSet> sub(static_cast<size_t>(d_.node_count()));
  auto nodes = subtree_nodes(t);
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    VertexSet u = d_.bag(*it);
    for (int c : d_.children(*it)) u |= sub[static_cast<size_t>(c)];
    sub[static_cast<size_t>(*it)] = std::move(u);
  }
  return sub;
}

VertexSet ConstructionState::subtree_union(int t) const {
  auto nodes = subtree_nodes(t);
  VertexSet u(g_->vertex_count());
  for (int s : nodes) u |= d_.bag(s);
  return u;
}

std::optional<Path> ConstructionState::find_admissible_path(int t) const {
  auto comps = components(*g_, d_.bag(t));
  if (comps.size() <= 1) return std::nullopt;
  return shortest_path_between_components(*g_, subtree_union(t), comps);
}

void ConstructionState::apply_update(int t, const Path& p) {
  const Graph& g = *g_;
  if (!Path::is_valid(g, p.vertices) || p.length() < 2)
    throw std::invalid_argument("not a path of length at least two");

  auto comps = components(g, d_.bag(t));
  auto comp_of = [&](int v) {
    for (size_t i = 0; i < comps.size(); ++i)
      if (comps[i].contains(v)) return static_cast<int>(i);
    return -1;
  };
  int ca = comp_of(p.front()), cb = comp_of(p.back());
  if (ca < 0 || cb < 0 || ca == cb)
    throw std::invalid_argument("path ends must lie in two distinct components of the part");
  auto internals = p.internals();
  for (int v : internals)
    if (comp_of(v) >= 0)
      throw std::invalid_argument("path interior must avoid the part");

  auto sub = snapshot_subtree_unions(t);
  for (int v : p.vertices)
    if (!sub[static_cast<size_t>(t)].contains(v))
      throw std::invalid_argument("path must stay inside the subtree union");

  // The interior lives in the subtree of exactly one child.
  int child = -1;
  for (int c : d_.children(t))
    if (sub[static_cast<size_t>(c)].contains(internals.front())) {
      child = c;
      break;
    }
  if (child < 0) throw std::logic_error("path interior outside every child subtree");
  for (int v : internals)
    if (!sub[static_cast<size_t>(child)].contains(v))
      throw std::logic_error("path interior spans several child subtrees");

  int before = static_cast<int>(comps.size());

  for (int u : subtree_nodes(t)) {
    const VertexSet& reach = sub[static_cast<size_t>(u)];
    auto& q = book_[static_cast<size_t>(u)];
    VertexSet& part = d_.mutable_bag(u);
    bool touched = false;
    for (int v : p.vertices) {
      if (!reach.contains(v)) continue;
      q.ensure_vertex(v);
      part.insert(v);
      touched = true;
    }
    if (!touched) continue;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      int x = p.vertices[i], y = p.vertices[i + 1];
      if (!reach.contains(x) || !reach.contains(y)) continue;
      if (!q.add_edge(x, y))
        throw std::logic_error("bookkeeping: path edge closed a cycle");
    }
  }

  int after = static_cast<int>(components(g, d_.bag(t)).size());
  if (after != before - 1)
    throw std::logic_error("part component count did not drop by one");

  additions_.push_back({t, p, child, before, after});
  ++per_node_[static_cast<size_t>(t)];
}

int ConstructionState::process_node(int t) {
  int added = 0;
  int limit = original_[static_cast<size_t>(t)].count();
  while (true) {
    auto p = find_admissible_path(t);
    if (!p) {
      if (!is_connected_in(*g_, d_.bag(t)))
        throw std::logic_error("part disconnected but no admissible path found");
      break;
    }
    apply_update(t, *p);
    if (++added > limit)
      throw std::logic_error("more additions than the part has vertices");
  }
  return added;
}

Decomposition ConstructionState::run() {
  for (int t : d_.preorder()) process_node(t);
  return d_;
}

InvariantReport check_invariants(const ConstructionState& state) {
  InvariantReport r;
  const Graph& g = state.graph();
  const Decomposition& d = state.current();

  auto v = validate(g, d);
  r.valid = v.ok();
  if (!r.valid) {
    r.detail = v.detail;
    return r;
  }
  r.stable = is_stable(g, d);
  if (!r.stable) {
    r.detail = "a side union came apart";
    return r;
  }
  r.bookkeeping_ok = true;
  for (int t = 0; t < d.node_count() && r.bookkeeping_ok; ++t) {
    const auto& q = state.bookkeeping(t);
    if (!q.acyclic()) {
      r.bookkeeping_ok = false;
      r.detail = "bookkeeping forest of node " + std::to_string(t) + " has a cycle";
      break;
    }
    if (q.vertex_count() != d.bag(t).count()) {
      r.bookkeeping_ok = false;
      r.detail = "bookkeeping of node " + std::to_string(t) + " lost track of its part";
      break;
    }
    bool match = true;
    d.bag(t).for_each([&](int x) { match = match && q.has_vertex(x); });
    if (!match) {
      r.bookkeeping_ok = false;
      r.detail = "bookkeeping of node " + std::to_string(t) + " holds foreign vertices";
    }
  }
  return r;
}

Decomposition run_construction(const Graph& g, const Decomposition& stable) {
  ConstructionState state(g, stable);
  return state.run();
}

}  // namespace ctw
