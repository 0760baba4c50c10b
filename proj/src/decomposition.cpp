#include "ctw/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ctw {

Decomposition::Decomposition(const Graph& g, std::vector<VertexSet> bags,
                             std::vector<std::pair<int, int>> tree_edges)
    : bags_(std::move(bags)),
      tree_edges_(std::move(tree_edges)),
      graph_fingerprint_(g.fingerprint()),
      graph_vertex_count_(g.vertex_count()) {
  const int n = node_count();
  if (n == 0) throw std::invalid_argument("decomposition needs at least one node");
  for (const auto& b : bags_)
    if (b.universe() != g.vertex_count())
      throw std::invalid_argument("bag universe does not match graph");
  if (static_cast<int>(tree_edges_.size()) != n - 1)
    throw std::invalid_argument("tree must have exactly node_count-1 edges");
  tree_adj_.assign(static_cast<size_t>(n), {});
  for (auto& [a, b] : tree_edges_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n || a == b) throw std::invalid_argument("bad tree edge");
    tree_adj_[static_cast<size_t>(a)].push_back(b);
    tree_adj_[static_cast<size_t>(b)].push_back(a);
  }
  std::sort(tree_edges_.begin(), tree_edges_.end());
  for (size_t i = 1; i < tree_edges_.size(); ++i)
    if (tree_edges_[i] == tree_edges_[i - 1])
      throw std::invalid_argument("duplicate tree edge");
  for (auto& a : tree_adj_) std::sort(a.begin(), a.end());
  // n-1 distinct edges + connectivity = tree.
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int u : tree_adj_[static_cast<size_t>(t)])
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = 1;
        ++reached;
        queue.push_back(u);
      }
  }
  if (reached != n) throw std::invalid_argument("tree edges do not connect all nodes");
}

void Decomposition::set_root(int r) {
  const int n = node_count();
  if (r < 0 || r >= n) throw std::invalid_argument("root out of range");
  root_ = r;
  parent_.assign(static_cast<size_t>(n), -1);
  children_.assign(static_cast<size_t>(n), {});
  preorder_.clear();
  preorder_.reserve(static_cast<size_t>(n));
  std::deque<int> queue{r};
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[static_cast<size_t>(r)] = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    preorder_.push_back(t);
    for (int u : tree_adj_[static_cast<size_t>(t)])
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = 1;
        parent_[static_cast<size_t>(u)] = t;
        children_[static_cast<size_t>(t)].push_back(u);
        queue.push_back(u);
      }
  }
}

ValidationReport validate(const Graph& g, const Decomposition& d) {
  ValidationReport r;
  if (d.graph_fingerprint() != g.fingerprint()) {
    r.detail = "decomposition was built over a different graph";
    return r;
  }
  const int n = d.node_count();

  VertexSet covered(g.vertex_count());
  for (int t = 0; t < n; ++t) covered |= d.bag(t);
  r.vertex_coverage = covered.count() == g.vertex_count();
  if (!r.vertex_coverage) {
    VertexSet missing = g.full_vertex_set() - covered;
    r.detail = "vertex '" + g.label(missing.first()) + "' lies in no bag";
    return r;
  }

  r.edge_coverage = true;
  for (const auto& [u, v] : g.edges()) {
    bool found = false;
    for (int t = 0; t < n && !found; ++t)
      found = d.bag(t).contains(u) && d.bag(t).contains(v);
    if (!found) {
      r.edge_coverage = false;
      r.detail = "edge {" + g.label(u) + "," + g.label(v) + "} lies in no bag";
      return r;
    }
  }

  // Coherence: for each vertex, the nodes whose bags contain it span exactly
  // holders-1 tree edges, i.e. they induce a connected subtree.
  r.coherence = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int holders = 0, internal_edges = 0;
    for (int t = 0; t < n; ++t)
      if (d.bag(t).contains(v)) ++holders;
    for (const auto& [a, b] : d.tree_edges())
      if (d.bag(a).contains(v) && d.bag(b).contains(v)) ++internal_edges;
    if (internal_edges != holders - 1) {
      r.coherence = false;
      r.detail = "nodes holding vertex '" + g.label(v) + "' are not a subtree";
      return r;
    }
  }
  return r;
}

int width(const Decomposition& d) {
  int w = -1;
  for (int t = 0; t < d.node_count(); ++t)
    w = std::max(w, static_cast<int>(d.bag(t).count()) - 1);
  return w;
}

bool is_connected_decomposition(const Graph& g, const Decomposition& d) {
  for (int t = 0; t < d.node_count(); ++t)
    if (!is_connected_in(g, d.bag(t))) return false;
  return true;
}

namespace {

// below[t] = union of bags in the subtree of t, rest[t] = union of the bags
// outside it, both for a fixed rooting at node 0.
struct SideUnions {
  std::vector<VertexSet> below, rest;
  std::vector<int> parent;
};

SideUnions side_unions(const Graph& g, const Decomposition& d) {
  Decomposition rooted = d;
  rooted.set_root(0);
  const int n = d.node_count();
  SideUnions s{std::vector<VertexSet>(static_cast<size_t>(n), VertexSet(g.vertex_count())),
               std::vector<VertexSet>(static_cast<size_t>(n), VertexSet(g.vertex_count())),
               {}};
  const auto& order = rooted.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int t = *it;
    s.below[static_cast<size_t>(t)] = rooted.bag(t);
    for (int c : rooted.children(t))
      s.below[static_cast<size_t>(t)] |= s.below[static_cast<size_t>(c)];
  }
  for (int t : order) {
    const auto& kids = rooted.children(t);
    VertexSet base = s.rest[static_cast<size_t>(t)] | rooted.bag(t);
    std::vector<VertexSet> suffix(kids.size() + 1, VertexSet(g.vertex_count()));
    for (size_t i = kids.size(); i-- > 0;)
      suffix[i] = suffix[i + 1] | s.below[static_cast<size_t>(kids[i])];
    VertexSet prefix(g.vertex_count());
    for (size_t i = 0; i < kids.size(); ++i) {
      s.rest[static_cast<size_t>(kids[i])] = base | prefix | suffix[i + 1];
      prefix |= s.below[static_cast<size_t>(kids[i])];
    }
  }
  s.parent.assign(static_cast<size_t>(n), -1);
  for (int t = 0; t < n; ++t) s.parent[static_cast<size_t>(t)] = rooted.parent(t);
  return s;
}

}  // namespace

bool is_stable(const Graph& g, const Decomposition& d) {
  if (d.node_count() == 1) return true;
  SideUnions s = side_unions(g, d);
  for (int t = 0; t < d.node_count(); ++t) {
    if (s.parent[static_cast<size_t>(t)] < 0) continue;
    if (!is_connected_in(g, s.below[static_cast<size_t>(t)])) return false;
    if (!is_connected_in(g, s.rest[static_cast<size_t>(t)])) return false;
  }
  return true;
}

VertexSet side_bag_union(const Decomposition& d, int t, int away_from) {
  VertexSet u(d.graph_vertex_count());
  std::vector<char> seen(static_cast<size_t>(d.node_count()), 0);
  seen[static_cast<size_t>(away_from)] = 1;
  std::deque<int> queue{t};
  seen[static_cast<size_t>(t)] = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    u |= d.bag(a);
    for (int b : d.tree_neighbors(a))
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = 1;
        queue.push_back(b);
      }
  }
  return u;
}

VertexSet subtree_bag_union(const Decomposition& d, int t) {
  if (!d.has_root()) throw std::invalid_argument("subtree_bag_union needs a rooted tree");
  if (t == d.root()) {
    VertexSet u(d.graph_vertex_count());
    for (int a = 0; a < d.node_count(); ++a) u |= d.bag(a);
    return u;
  }
  return side_bag_union(d, t, d.parent(t));
}

Decomposition reroot(const Decomposition& d, int new_root) {
  Decomposition out = d;
  out.set_root(new_root);
  return out;
}

Decomposition simplify(const Graph& g, const Decomposition& d) {
  const int n = d.node_count();
  std::vector<VertexSet> bags;
  bags.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) bags.push_back(d.bag(t));
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (auto [a, b] : d.tree_edges()) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<char> alive(static_cast<size_t>(n), 1);
  std::vector<int> merged_into(static_cast<size_t>(n));
  std::iota(merged_into.begin(), merged_into.end(), 0);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n && !changed; ++a) {
      if (!alive[static_cast<size_t>(a)]) continue;
      for (int b : adj[static_cast<size_t>(a)]) {
        if (b < a) continue;  // each live edge once, smallest pair first
        const auto& ba = bags[static_cast<size_t>(a)];
        const auto& bb = bags[static_cast<size_t>(b)];
        int keep, drop;
        if (ba.is_subset_of(bb)) {
          keep = b;
          drop = a;
          if (bb.is_subset_of(ba)) keep = a, drop = b;  // equal bags: keep smaller id
        } else if (bb.is_subset_of(ba)) {
          keep = a;
          drop = b;
        } else {
          continue;
        }
        auto& ka = adj[static_cast<size_t>(keep)];
        auto& da = adj[static_cast<size_t>(drop)];
        ka.erase(std::find(ka.begin(), ka.end(), drop));
        for (int x : da) {
          if (x == keep) continue;
          auto& xa = adj[static_cast<size_t>(x)];
          *std::find(xa.begin(), xa.end(), drop) = keep;
          ka.push_back(x);
        }
        std::sort(ka.begin(), ka.end());
        da.clear();
        alive[static_cast<size_t>(drop)] = 0;
        merged_into[static_cast<size_t>(drop)] = keep;
        changed = true;
        break;
      }
    }
  }

  std::vector<int> new_id(static_cast<size_t>(n), -1);
  std::vector<VertexSet> out_bags;
  for (int t = 0; t < n; ++t)
    if (alive[static_cast<size_t>(t)]) {
      new_id[static_cast<size_t>(t)] = static_cast<int>(out_bags.size());
      out_bags.push_back(bags[static_cast<size_t>(t)]);
    }
  std::vector<std::pair<int, int>> out_edges;
  for (int a = 0; a < n; ++a)
    if (alive[static_cast<size_t>(a)])
      for (int b : adj[static_cast<size_t>(a)])
        if (a < b) out_edges.emplace_back(new_id[static_cast<size_t>(a)],
                                          new_id[static_cast<size_t>(b)]);
  Decomposition out(g, std::move(out_bags), std::move(out_edges));
  if (d.has_root()) {
    int r = d.root();
    while (!alive[static_cast<size_t>(r)]) r = merged_into[static_cast<size_t>(r)];
    out.set_root(new_id[static_cast<size_t>(r)]);
  }
  return out;
}

Decomposition trivial_decomposition(const Graph& g) {
  return Decomposition(g, {g.full_vertex_set()}, {});
}

}  // namespace ctw
