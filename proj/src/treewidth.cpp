#include "ctw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <string>

namespace ctw {

namespace {

// Tree-decomposition from an elimination ordering: bag i is order[i] plus its
// neighbours in the partially eliminated graph, attached to the node of the
// earliest-eliminated such neighbour.
Decomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    VertexSet bag(n);
    bag.insert(v);
    int link = -1;
    for (int w : adj[static_cast<size_t>(v)]) {
      bag.insert(w);
      if (link == -1 || pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(link)]) link = w;
    }
    bags.push_back(std::move(bag));
    if (link != -1)
      edges.emplace_back(i, pos[static_cast<size_t>(link)]);
    else if (i + 1 < n)
      edges.emplace_back(i, i + 1);  // isolated remainder: chain the components

    std::vector<int> nb(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        adj[static_cast<size_t>(nb[a])].insert(nb[b]);
        adj[static_cast<size_t>(nb[b])].insert(nb[a]);
      }
    for (int w : nb) adj[static_cast<size_t>(w)].erase(v);
    adj[static_cast<size_t>(v)].clear();
  }
  return Decomposition(g, std::move(bags), std::move(edges));
}

struct Reduction {
  bool series = false;       // false: simplicial removal, true: degree-2 contraction
  int v = -1;
  std::vector<int> nbrs;     // sorted neighbourhood at removal time
};

// Bags (as sorted vertex lists) plus tree edges, grown by reattaching the
// reduced vertices in reverse order.
struct LiftState {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> holders;  // vertex -> node ids whose bag holds it

  explicit LiftState(int universe) : holders(static_cast<size_t>(universe)) {}

  int add_node(std::vector<int> bag, int attach) {
    int id = static_cast<int>(bags.size());
    for (int x : bag) holders[static_cast<size_t>(x)].push_back(id);
    bags.push_back(std::move(bag));
    if (attach >= 0) edges.emplace_back(attach, id);
    return id;
  }

  // Smallest node whose bag contains the (sorted) clique.
  int find_containing(const std::vector<int>& clique) const {
    if (clique.empty()) return 0;
    int probe = clique[0];
    for (int x : clique)
      if (holders[static_cast<size_t>(x)].size() < holders[static_cast<size_t>(probe)].size())
        probe = x;
    for (int node : holders[static_cast<size_t>(probe)])
      if (std::includes(bags[static_cast<size_t>(node)].begin(),
                        bags[static_cast<size_t>(node)].end(), clique.begin(), clique.end()))
        return node;
    return -1;
  }
};

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, const TreewidthOptions& opts) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("exact_treewidth: graph has no vertices");

  // Reduce: repeatedly remove simplicial vertices (width floor = degree) and
  // contract degree-2 vertices with nonadjacent neighbours while some cycle
  // exists (width floor = 2). Both rules are exact, so the treewidth is the
  // max of the floors and the kernel's treewidth.
  std::vector<std::set<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }
  std::vector<char> alive(static_cast<size_t>(n), 1);
  int alive_count = n;
  long edges_left = g.edge_count();
  int comp_count = static_cast<int>(components(g, g.full_vertex_set()).size());

  std::vector<Reduction> reds;
  int floor_width = 0;
  std::set<int> work;
  for (int v = 0; v < n; ++v) work.insert(v);

  while (!work.empty() && alive_count > 1) {
    int v = *work.begin();
    work.erase(work.begin());
    if (!alive[static_cast<size_t>(v)]) continue;
    auto& nv = adj[static_cast<size_t>(v)];

    bool simplicial = true;
    for (auto a = nv.begin(); a != nv.end() && simplicial; ++a)
      for (auto b = std::next(a); b != nv.end(); ++b)
        if (!adj[static_cast<size_t>(*a)].count(*b)) {
          simplicial = false;
          break;
        }
    if (simplicial) {
      int deg = static_cast<int>(nv.size());
      floor_width = std::max(floor_width, deg);
      reds.push_back({false, v, std::vector<int>(nv.begin(), nv.end())});
      if (deg == 0) --comp_count;
      for (int w : nv) {
        adj[static_cast<size_t>(w)].erase(v);
        work.insert(w);
      }
      edges_left -= deg;
      nv.clear();
      alive[static_cast<size_t>(v)] = 0;
      --alive_count;
      continue;
    }

    if (nv.size() == 2) {
      // Neighbours are nonadjacent here, otherwise v would be simplicial.
      bool has_cycle = edges_left - (alive_count - comp_count) > 0;
      if (has_cycle) {
        int a = *nv.begin(), b = *std::next(nv.begin());
        floor_width = std::max(floor_width, 2);
        reds.push_back({true, v, {a, b}});
        adj[static_cast<size_t>(a)].erase(v);
        adj[static_cast<size_t>(b)].erase(v);
        nv.clear();
        adj[static_cast<size_t>(a)].insert(b);
        adj[static_cast<size_t>(b)].insert(a);
        --edges_left;
        alive[static_cast<size_t>(v)] = 0;
        --alive_count;
        work.insert(a);
        work.insert(b);
        continue;
      }
    }
  }

  std::vector<int> kernel_vertices;
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<size_t>(v)]) kernel_vertices.push_back(v);
  const int k = static_cast<int>(kernel_vertices.size());
  const int limit = std::min(opts.exact_kernel_limit, 25);
  if (k > limit)
    throw SizeLimitError("exact treewidth: reduced kernel has " + std::to_string(k) +
                         " vertices, over the limit of " + std::to_string(limit));

  GraphBuilder kb;
  std::vector<int> kid(static_cast<size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    kid[static_cast<size_t>(kernel_vertices[static_cast<size_t>(i)])] = i;
    kb.add_vertex(g.label(kernel_vertices[static_cast<size_t>(i)]));
  }
  for (int v : kernel_vertices)
    for (int w : adj[static_cast<size_t>(v)])
      if (v < w) kb.add_edge(kid[static_cast<size_t>(v)], kid[static_cast<size_t>(w)]);
  Graph kernel = kb.build();

  // Subset dynamic program over elimination prefixes: f(S) is the best width
  // achievable while eliminating exactly the vertices of S first, where the
  // cost of eliminating v after S is the number of vertices outside S+v
  // reachable from v through S.
  std::vector<int> order(static_cast<size_t>(k));
  int kernel_width = 0;
  if (k >= 2) {
    std::vector<uint32_t> adjm(static_cast<size_t>(k), 0);
    for (const auto& [u, v] : kernel.edges()) {
      adjm[static_cast<size_t>(u)] |= uint32_t{1} << v;
      adjm[static_cast<size_t>(v)] |= uint32_t{1} << u;
    }
    auto cost = [&](uint32_t through, int v) -> int {
      uint32_t visited = uint32_t{1} << v, frontier = visited, reach = 0;
      while (frontier) {
        uint32_t nxt = 0;
        for (uint32_t f = frontier; f; f &= f - 1)
          nxt |= adjm[static_cast<size_t>(std::countr_zero(f))];
        nxt &= ~visited;
        visited |= nxt;
        reach |= nxt;
        frontier = nxt & through;
      }
      return std::popcount(reach & ~through);
    };

    const uint32_t full = (uint32_t{1} << k) - 1;
    std::vector<uint8_t> f(static_cast<size_t>(full) + 1, 0);
    std::vector<uint8_t> choice(static_cast<size_t>(full) + 1, 0);
    for (uint32_t S = 1; S <= full; ++S) {
      uint8_t best = 255, best_v = 0;
      for (uint32_t rest = S; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        uint32_t prefix = S & ~(uint32_t{1} << v);
        uint8_t val = std::max<uint8_t>(f[prefix], static_cast<uint8_t>(cost(prefix, v)));
        if (val < best) {
          best = val;
          best_v = static_cast<uint8_t>(v);
        }
      }
      f[S] = best;
      choice[S] = best_v;
    }
    kernel_width = f[full];
    uint32_t S = full;
    for (int i = k - 1; i >= 0; --i) {
      order[static_cast<size_t>(i)] = choice[S];
      S &= ~(uint32_t{1} << choice[S]);
    }
  }

  Decomposition kd = decomposition_from_order(kernel, order);

  LiftState ls(n);
  for (int t = 0; t < kd.node_count(); ++t) {
    std::vector<int> bag;
    kd.bag(t).for_each(
        [&](int kv) { bag.push_back(kernel_vertices[static_cast<size_t>(kv)]); });
    std::sort(bag.begin(), bag.end());
    ls.add_node(std::move(bag), -1);
  }
  for (const auto& [a, b] : kd.tree_edges()) ls.edges.emplace_back(a, b);

  for (auto it = reds.rbegin(); it != reds.rend(); ++it) {
    int attach = ls.find_containing(it->nbrs);
    if (attach < 0) throw std::logic_error("lift: no bag holds the reduced neighbourhood");
    std::vector<int> bag = it->nbrs;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), it->v), it->v);
    ls.add_node(std::move(bag), attach);
  }

  std::vector<VertexSet> bags;
  bags.reserve(ls.bags.size());
  for (const auto& b : ls.bags) bags.push_back(VertexSet::from_vertices(n, b));
  Decomposition dec(g, std::move(bags), std::move(ls.edges));

  TreewidthResult res{std::max(kernel_width, floor_width), std::move(dec)};
  if (width(res.decomposition) != res.width)
    throw std::logic_error("exact treewidth witness width mismatch");
  return res;
}

namespace {

std::vector<int> minfill_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)].insert(v);
    adj[static_cast<size_t>(v)].insert(u);
  }
  std::vector<char> alive(static_cast<size_t>(n), 1);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<size_t>(v)]) continue;
      const auto& nv = adj[static_cast<size_t>(v)];
      long fill = 0;
      for (auto a = nv.begin(); a != nv.end(); ++a)
        for (auto b = std::next(a); b != nv.end(); ++b)
          if (!adj[static_cast<size_t>(*a)].count(*b)) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    order.push_back(best);
    auto& nv = adj[static_cast<size_t>(best)];
    std::vector<int> nb(nv.begin(), nv.end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        adj[static_cast<size_t>(nb[a])].insert(nb[b]);
        adj[static_cast<size_t>(nb[b])].insert(nb[a]);
      }
    for (int w : nb) adj[static_cast<size_t>(w)].erase(best);
    nv.clear();
    alive[static_cast<size_t>(best)] = 0;
  }
  return order;
}

}  // namespace

Decomposition minfill_decomposition(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("minfill_decomposition: graph has no vertices");
  return decomposition_from_order(g, minfill_order(g));
}

namespace {

// Mutable rooted tree used while splitting nodes.
struct SplitTree {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> adj;  // undirected, only alive entries meaningful
  std::vector<char> alive;
  int root = 0;

  int add_node(VertexSet bag) {
    bags.push_back(std::move(bag));
    adj.emplace_back();
    alive.push_back(1);
    return static_cast<int>(bags.size()) - 1;
  }
  void link(int a, int b) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  void unlink(int a, int b) {
    auto& aa = adj[static_cast<size_t>(a)];
    aa.erase(std::find(aa.begin(), aa.end(), b));
    auto& bb = adj[static_cast<size_t>(b)];
    bb.erase(std::find(bb.begin(), bb.end(), a));
  }

  // BFS orientation from the current root over alive nodes.
  void orient(std::vector<int>& order, std::vector<int>& parent,
              std::vector<std::vector<int>>& children) const {
    size_t n = bags.size();
    parent.assign(n, -1);
    children.assign(n, {});
    order.clear();
    std::deque<int> queue{root};
    std::vector<char> seen(n, 0);
    seen[static_cast<size_t>(root)] = 1;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      order.push_back(t);
      for (int u : adj[static_cast<size_t>(t)])
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          parent[static_cast<size_t>(u)] = t;
          children[static_cast<size_t>(t)].push_back(u);
          queue.push_back(u);
        }
    }
  }
};

int component_index(const std::vector<VertexSet>& comps, int vertex) {
  if (vertex < 0) return 0;  // empty union fits anywhere
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].contains(vertex)) return static_cast<int>(i);
  throw std::logic_error("vertex not found in any component");
}

}  // namespace

Decomposition stabilize(const Graph& g, const Decomposition& d0) {
  if (!g.is_connected()) throw std::invalid_argument("stabilize expects a connected graph");
  Decomposition d = simplify(g, d0);
  const int nv = g.vertex_count();

  SplitTree st;
  for (int t = 0; t < d.node_count(); ++t) st.add_node(d.bag(t));
  for (const auto& [a, b] : d.tree_edges()) st.link(a, b);
  st.root = 0;

  std::vector<int> order, parent;
  std::vector<std::vector<int>> children;

  // Pass 1, leaves upward: make the bag union of every subtree connected.
  // Splitting a node u whose subtree union falls apart into components C_i
  // replaces u by one copy per C_i holding bag(u) ∩ C_i; every proper
  // descendant's subtree union is already connected, lies inside a single
  // C_i, and the whole subtree moves to that copy with its bag intact.
  st.orient(order, parent, children);
  auto subtree_union = [&](auto&& self, int t) -> VertexSet {
    VertexSet u = st.bags[static_cast<size_t>(t)];
    for (int c : children[static_cast<size_t>(t)]) u |= self(self, c);
    return u;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (u == st.root || !st.alive[static_cast<size_t>(u)]) continue;
    VertexSet xu = subtree_union(subtree_union, u);
    auto comps = components(g, xu);
    if (comps.size() <= 1) continue;

    int p = parent[static_cast<size_t>(u)];
    std::vector<int> kids = children[static_cast<size_t>(u)];
    std::vector<std::vector<int>> assigned(comps.size());
    for (int w : kids) {
      VertexSet wu = subtree_union(subtree_union, w);
      assigned[static_cast<size_t>(component_index(comps, wu.first()))].push_back(w);
    }
    st.unlink(p, u);
    for (int w : kids) st.unlink(u, w);
    st.alive[static_cast<size_t>(u)] = 0;
    children[static_cast<size_t>(u)].clear();
    {
      auto& pk = children[static_cast<size_t>(p)];
      pk.erase(std::find(pk.begin(), pk.end(), u));
    }
    for (size_t i = 0; i < comps.size(); ++i) {
      int copy = st.add_node(st.bags[static_cast<size_t>(u)] & comps[i]);
      parent.push_back(p);
      children.emplace_back(assigned[i]);  // may reallocate `children`
      st.link(p, copy);
      children[static_cast<size_t>(p)].push_back(copy);
      for (int w : assigned[i]) {
        st.link(copy, w);
        parent[static_cast<size_t>(w)] = copy;
      }
    }
  }

  // Pass 2: make the complement side of every tree edge connected, keeping
  // all subtree sides connected. Split the shallowest node u whose
  // complement union is disconnected, then reroot at u; each round removes
  // exactly one such node and creates none, so the round count is bounded
  // by the current node count.
  long rounds_left = static_cast<long>(st.bags.size()) + 16;
  std::vector<VertexSet> below;
  while (true) {
    st.orient(order, parent, children);
    below.assign(st.bags.size(), VertexSet(nv));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      below[static_cast<size_t>(*it)] = st.bags[static_cast<size_t>(*it)];
      for (int c : children[static_cast<size_t>(*it)])
        below[static_cast<size_t>(*it)] |= below[static_cast<size_t>(c)];
    }
    std::vector<VertexSet> above(st.bags.size(), VertexSet(nv));
    for (int t : order) {
      const auto& kids = children[static_cast<size_t>(t)];
      VertexSet base = above[static_cast<size_t>(t)] | st.bags[static_cast<size_t>(t)];
      std::vector<VertexSet> suffix(kids.size() + 1, VertexSet(nv));
      for (size_t i = kids.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] | below[static_cast<size_t>(kids[i])];
      VertexSet prefix(nv);
      for (size_t i = 0; i < kids.size(); ++i) {
        above[static_cast<size_t>(kids[i])] = base | prefix | suffix[i + 1];
        prefix |= below[static_cast<size_t>(kids[i])];
      }
    }

    int u = -1;
    for (int t : order) {  // BFS order: shallowest first
      if (t == st.root) continue;
      if (!is_connected_in(g, above[static_cast<size_t>(t)])) {
        u = t;
        break;
      }
    }
    if (u == -1) break;
    if (--rounds_left < 0) throw std::logic_error("stabilize failed to converge");

    int p = parent[static_cast<size_t>(u)];
    auto comps = components(g, above[static_cast<size_t>(u)]);
    struct RegionChild {
      int node;
      int comp;
    };
    std::vector<RegionChild> region_children;
    for (int x : children[static_cast<size_t>(p)])
      if (x != u)
        region_children.push_back(
            {x, component_index(comps, below[static_cast<size_t>(x)].first())});
    if (p != st.root) {
      int gp = parent[static_cast<size_t>(p)];
      region_children.push_back(
          {gp, component_index(comps, above[static_cast<size_t>(p)].first())});
    }

    for (const auto& rc : region_children) st.unlink(p, rc.node);
    st.unlink(p, u);
    st.alive[static_cast<size_t>(p)] = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
      int copy = st.add_node(st.bags[static_cast<size_t>(p)] & comps[i]);
      st.link(u, copy);
      for (const auto& rc : region_children)
        if (rc.comp == static_cast<int>(i)) st.link(copy, rc.node);
    }
    st.root = u;
  }

  std::vector<int> new_id(st.bags.size(), -1);
  std::vector<VertexSet> out_bags;
  for (size_t t = 0; t < st.bags.size(); ++t)
    if (st.alive[t]) {
      new_id[t] = static_cast<int>(out_bags.size());
      out_bags.push_back(st.bags[t]);
    }
  std::vector<std::pair<int, int>> out_edges;
  for (size_t a = 0; a < st.bags.size(); ++a)
    if (st.alive[a])
      for (int b : st.adj[a])
        if (static_cast<int>(a) < b)
          out_edges.emplace_back(new_id[a], new_id[static_cast<size_t>(b)]);
  return simplify(g, Decomposition(g, std::move(out_bags), std::move(out_edges)));
}

}  // namespace ctw
