#include "ctw/brambles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ctw/connectify.hpp"
#include "ctw/cycle_space.hpp"

namespace ctw {

BrambleCheck is_bramble(const Graph& g, const Bramble& b) {
  BrambleCheck r;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) {
      r.detail = "element " + std::to_string(i) + " is empty";
      return r;
    }
    if (!is_connected_in(g, b[i])) {
      r.detail = "element " + std::to_string(i) + " is disconnected";
      return r;
    }
  }
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!touches(g, b[i], b[j])) {
        r.detail = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                   " do not touch";
        return r;
      }
  r.ok = true;
  return r;
}

int bramble_order(const Graph& g, const Bramble& b) {
  if (b.empty()) return 0;
  VertexSet universe(g.vertex_count());
  for (const auto& el : b) universe |= el;
  auto ground = universe.vertices();
  int m = static_cast<int>(ground.size());
  if (m > 20) throw SizeLimitError("bramble union too large for exhaustive order");

  std::vector<uint32_t> element_masks;
  element_masks.reserve(b.size());
  for (const auto& el : b) {
    uint32_t mask = 0;
    for (int i = 0; i < m; ++i)
      if (el.contains(ground[static_cast<size_t>(i)])) mask |= 1u << i;
    element_masks.push_back(mask);
  }

  for (int k = 1; k <= m; ++k) {
    // Gosper's hack: all m-bit masks of popcount k, ascending.
    uint32_t mask = (1u << k) - 1;
    uint32_t limit = 1u << m;
    while (mask < limit) {
      bool hits_all = true;
      for (uint32_t el : element_masks)
        if ((el & mask) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) return k;
      uint32_t c = mask & -mask;
      uint32_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::logic_error("bramble has no cover inside its own union");
}

ConnectedOrderResult connected_order(const Graph& g, const Bramble& b) {
  if (b.empty()) return {0, VertexSet(g.vertex_count())};
  if (g.vertex_count() > 16)
    throw SizeLimitError("graph too large for exhaustive connected order");

  ConnectedOrderResult result;
  bool found = false;
  enumerate_connected_sets(g, g.vertex_count(), [&](const VertexSet& s) {
    for (const auto& el : b)
      if (!s.intersects(el)) return true;
    result.order = s.count();
    result.witness = s;
    found = true;
    return false;
  });
  if (!found)
    throw std::invalid_argument("no connected cover exists; not a bramble");
  return result;
}

int covering_part(const Decomposition& d, const Bramble& b) {
  for (int t = 0; t < d.node_count(); ++t) {
    bool covers = true;
    for (const auto& el : b)
      if (!d.bag(t).intersects(el)) {
        covers = false;
        break;
      }
    if (covers) return t;
  }
  return -1;
}

Bramble cycle_arc_bramble(const Graph& g, const Cycle& c) {
  if (!c.is_valid(g)) throw std::invalid_argument("not a cycle of the graph");
  int m = c.length();
  int arc = m / 2;
  Bramble b;
  b.reserve(static_cast<size_t>(m));
  for (int start = 0; start < m; ++start) {
    VertexSet s(g.vertex_count());
    for (int off = 0; off < arc; ++off)
      s.insert(c.vertices[static_cast<size_t>((start + off) % m)]);
    b.push_back(std::move(s));
  }
  return b;
}

Bramble cycle_arc_bramble(const Graph& cycle_graph) {
  int n = cycle_graph.vertex_count();
  if (n < 3 || cycle_graph.edge_count() != n || !cycle_graph.is_connected())
    throw std::invalid_argument("graph is not a cycle");
  for (int v = 0; v < n; ++v)
    if (cycle_graph.degree(v) != 2)
      throw std::invalid_argument("graph is not a cycle");

  Cycle c;
  c.vertices.reserve(static_cast<size_t>(n));
  int prev = -1, cur = 0;
  do {
    c.vertices.push_back(cur);
    const auto& nb = cycle_graph.neighbors(cur);
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  } while (cur != 0);
  return cycle_arc_bramble(cycle_graph, c);
}

WeakWidthBound wctw_upper(const Graph& g, const TreewidthOptions& opts) {
  auto exact = exact_treewidth(g, opts);
  auto stable = stabilize(g, exact.decomposition);
  return wctw_upper(g, stable, ell(g));
}

WeakWidthBound wctw_upper(const Graph& g, const Decomposition& stable, int ell_value) {
  if (ell_value < 3) throw std::invalid_argument("cycle space generator length below 3");
  WeakWidthBound out{0, width(stable), ell_value, stable, {}};
  int half = ell_value / 2;
  int n = stable.node_count();
  out.supersets.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    // Reroot at t and reconnect only the (new) root part. Updates touch
    // descendants only, so the grown root part is final.
    ConstructionState state(g, reroot(stable, t));
    state.process_node(t);
    for (const auto& add : state.additions())
      if (add.path.length() > half)
        throw std::logic_error("admissible path at the root exceeded half the generator length");
    VertexSet superset = state.part(t);
    if (!is_connected_in(g, superset))
      throw std::logic_error("reconnected root part is not connected");
    int cap = (stable.bag(t).count() - 1) * half + 1;
    if (superset.count() > cap)
      throw std::logic_error("connected superset exceeded its guaranteed size");
    out.value = std::max(out.value, superset.count() - 1);
    out.supersets.push_back(std::move(superset));
  }
  return out;
}

int wctw_exact_small(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 8) throw SizeLimitError("graph too large for exact weak connected width");

  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
  }

  auto connected_mask = [&](uint32_t mask) {
    uint32_t seed = mask & -mask;
    uint32_t reach = seed;
    while (true) {
      uint32_t grow = reach;
      for (int v = 0; v < n; ++v)
        if (reach & (1u << v)) grow |= adj[static_cast<size_t>(v)] & mask;
      if (grow == reach) break;
      reach = grow;
    }
    return reach == mask;
  };

  // minsup[m]: size of the smallest connected superset of m.
  const int kInf = 1 << 20;
  std::vector<int> minsup(static_cast<size_t>(full) + 1, kInf);
  for (uint32_t s = 1; s <= full; ++s) {
    if (!connected_mask(s)) continue;
    int size = std::popcount(s);
    for (uint32_t sub = s; sub; sub = (sub - 1) & s)
      minsup[sub] = std::min(minsup[sub], size);
  }

  // h[S]: best achievable over orders eliminating S first; the bag created
  // when eliminating v after W is v plus the vertices reachable through W.
  std::vector<int> h(static_cast<size_t>(full) + 1, kInf);
  h[0] = 0;
  for (uint32_t s = 1; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      uint32_t w = s & ~(1u << v);
      uint32_t closed = w | (1u << v);
      uint32_t reach = 1u << v;
      while (true) {
        uint32_t grow = reach;
        for (int x = 0; x < n; ++x)
          if (reach & (1u << x)) grow |= adj[static_cast<size_t>(x)] & closed;
        if (grow == reach) break;
        reach = grow;
      }
      uint32_t boundary = 0;
      for (int x = 0; x < n; ++x)
        if (reach & (1u << x)) boundary |= adj[static_cast<size_t>(x)];
      uint32_t bag = (boundary & ~closed) | (1u << v);
      int cost = std::max(h[w], minsup[bag]);
      h[s] = std::min(h[s], cost);
    }
  }
  if (h[full] >= kInf) throw std::logic_error("no elimination order admits connected supersets");
  return h[full] - 1;
}

BrambleBoundReport check_bramble_bound(const Graph& g, const Bramble& b, int tw,
                                       int ell_value) {
  BrambleBoundReport r;
  r.connected_order = connected_order(g, b).order;
  r.tw = tw;
  r.ell = ell_value;
  r.bound = static_cast<long>(tw) * (ell_value / 2) + 1;
  r.holds = r.connected_order <= r.bound;
  return r;
}

}  // namespace ctw
