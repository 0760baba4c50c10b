#include "ctw/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ctw {

namespace {

std::string num_label(int i) { return std::to_string(i + 1); }

}  // namespace

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(num_label(i));
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(num_label(i));
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex(num_label(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

std::vector<int> SubdividedComplete::path(int i, int j) const {
  std::vector<int> p;
  p.push_back(branch[static_cast<size_t>(i)]);
  for (int v : inner[static_cast<size_t>(i)][static_cast<size_t>(j)]) p.push_back(v);
  p.push_back(branch[static_cast<size_t>(j)]);
  return p;
}

int SubdividedComplete::width_target() const {
  return (n - 1) * (k + 1) - (k + 1) / 2;
}

SubdividedComplete subdivided_complete(int n, int k) {
  if (n < 3 || n > 9) throw std::invalid_argument("branch count must be in 3..9");
  if (k < 0) throw std::invalid_argument("subdivision count must be nonnegative");

  SubdividedComplete fam;
  fam.n = n;
  fam.k = k;
  GraphBuilder b;
  for (int i = 0; i < n; ++i)
    fam.branch.push_back(b.add_vertex("a" + std::to_string(i + 1)));

  fam.inner.assign(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string stem = "s" + std::to_string(i + 1) + std::to_string(j + 1);
      std::vector<int> in;
      int prev = fam.branch[static_cast<size_t>(i)];
      for (int m = 1; m <= k; ++m) {
        int v = b.add_vertex(k == 1 ? stem : stem + "_" + std::to_string(m));
        b.add_edge(prev, v);
        in.push_back(v);
        prev = v;
      }
      b.add_edge(prev, fam.branch[static_cast<size_t>(j)]);
      fam.inner[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(in);
    }
  fam.graph = b.build();
  return fam;
}

Decomposition subdivided_complete_witness(const SubdividedComplete& fam) {
  const Graph& g = fam.graph;
  int n = fam.n, k = fam.k;
  int take = (k + 2) / 2;  // ceil((k+1)/2) vertices off the a1-a2 path

  auto add_path = [&](VertexSet& s, int i, int j) {
    for (int v : fam.path(i, j)) s.insert(v);
  };

  // Root: everything into a2, plus the near-b half of the a1-a2 path.
  VertexSet root_bag(g.vertex_count());
  for (int c = 2; c < n; ++c) add_path(root_bag, 1, c);
  // Twin leaf: everything into a1, plus the near-a half.
  VertexSet twin_bag(g.vertex_count());
  for (int c = 2; c < n; ++c) add_path(twin_bag, 0, c);

  const auto& ab = fam.inner[0][1];
  if (k == 0) {
    root_bag.insert(fam.branch[0]);
    twin_bag.insert(fam.branch[1]);
  } else {
    for (int m = 0; m < take; ++m) {
      root_bag.insert(ab[ab.size() - 1 - static_cast<size_t>(m)]);
      twin_bag.insert(ab[static_cast<size_t>(m)]);
    }
  }

  std::vector<VertexSet> bags{root_bag, twin_bag};
  std::vector<std::pair<int, int>> edges{{0, 1}};
  for (int c = 2; c < n; ++c)
    for (int d = c + 1; d < n; ++d) {
      VertexSet leaf(g.vertex_count());
      add_path(leaf, c, d);
      edges.emplace_back(0, static_cast<int>(bags.size()));
      bags.push_back(std::move(leaf));
    }

  Decomposition dec(g, std::move(bags), std::move(edges));
  dec.set_root(0);
  return dec;
}

VertexSet branch_component(const SubdividedComplete& fam, const VertexSet& x) {
  const Graph& g = fam.graph;
  if (x.count() > fam.width_target())
    throw std::invalid_argument("set larger than the family's width target");
  if (!is_connected_in(g, x)) throw std::invalid_argument("set is not connected");

  auto comps = components(g, g.full_vertex_set() - x);
  const VertexSet* home = nullptr;
  for (int a : fam.branch) {
    if (x.contains(a)) continue;
    const VertexSet* here = nullptr;
    for (const auto& c : comps)
      if (c.contains(a)) {
        here = &c;
        break;
      }
    if (home == nullptr) home = here;
    if (here != home)
      throw std::logic_error("leftover branch vertices split across components");
  }
  if (home == nullptr)
    throw std::logic_error("set swallowed every branch vertex");
  return *home;
}

SubdividedGrid subdivided_grid(int n) {
  if (n < 2) throw std::invalid_argument("grid side must be at least 2");
  SubdividedGrid fam;
  fam.n = n;
  GraphBuilder b;
  fam.at.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      fam.at[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          b.add_vertex("g" + std::to_string(r + 1) + "_" + std::to_string(c + 1));

  auto cell = [&](int r, int c) { return fam.at[static_cast<size_t>(r)][static_cast<size_t>(c)]; };
  auto join = [&](int u, int v, bool boundary, const std::string& label) {
    if (boundary) {
      b.add_edge(u, v);
    } else {
      int w = b.add_vertex(label);
      b.add_edge(u, w);
      b.add_edge(w, v);
    }
  };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::string suffix = std::to_string(r + 1) + "_" + std::to_string(c + 1);
      if (c + 1 < n) join(cell(r, c), cell(r, c + 1), r == 0 || r == n - 1, "h" + suffix);
      if (r + 1 < n) join(cell(r, c), cell(r + 1, c), c == 0 || c == n - 1, "v" + suffix);
    }
  fam.graph = b.build();

  auto& ring = fam.boundary.vertices;
  for (int c = 0; c < n; ++c) ring.push_back(cell(0, c));
  for (int r = 1; r < n; ++r) ring.push_back(cell(r, n - 1));
  for (int c = n - 2; c >= 0; --c) ring.push_back(cell(n - 1, c));
  for (int r = n - 2; r >= 1; --r) ring.push_back(cell(r, 0));
  return fam;
}

const std::vector<int>& DualityFamily::connector(int i, int j, int k) const {
  return connectors[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]
                   [static_cast<size_t>(k - 1)];
}

DualityFamily duality_family(int n) {
  if (n < 4) throw std::invalid_argument("family parameter must be at least 4");
  DualityFamily fam;
  fam.n = n;
  GraphBuilder b;

  fam.x.assign(3, {});
  for (int i = 0; i < 3; ++i) {
    for (int j = 1; j <= 2 * n; ++j)
      fam.x[static_cast<size_t>(i)].push_back(
          b.add_vertex("x" + std::to_string(i) + "_" + std::to_string(j)));
    for (int j = 0; j + 1 < 2 * n; ++j)
      b.add_edge(fam.x[static_cast<size_t>(i)][static_cast<size_t>(j)],
                 fam.x[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
  }
  for (int k = 1; k <= 4 * n; ++k)
    fam.y.push_back(b.add_vertex("y_" + std::to_string(k)));
  for (int k = 0; k + 1 < 4 * n; ++k)
    b.add_edge(fam.y[static_cast<size_t>(k)], fam.y[static_cast<size_t>(k + 1)]);

  fam.connectors.assign(
      3, std::vector<std::vector<std::vector<int>>>(static_cast<size_t>(2 * n)));
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      auto& per_j = fam.connectors[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
      per_j.resize(static_cast<size_t>(4 * n));
      for (int k = 1; k <= 4 * n; ++k) {
        int len = (k == n + j) ? n : 5 * n;
        std::string stem = "p" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                           std::to_string(k) + "_";
        std::vector<int> in;
        int prev = fam.x[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
        for (int m = 1; m < len; ++m) {
          int v = b.add_vertex(stem + std::to_string(m));
          b.add_edge(prev, v);
          in.push_back(v);
          prev = v;
        }
        b.add_edge(prev, fam.y[static_cast<size_t>(k - 1)]);
        per_j[static_cast<size_t>(k - 1)] = std::move(in);
      }
    }

  int len_c = 16 * n + 2;
  fam.cycle.resize(static_cast<size_t>(len_c));
  fam.cycle[0] = b.add_vertex("a");
  for (int p = 1; p < len_c; ++p)
    fam.cycle[static_cast<size_t>(p)] =
        (p == 8 * n + 1) ? b.add_vertex("b") : b.add_vertex("c_" + std::to_string(p));
  fam.a = fam.cycle[0];
  fam.b = fam.cycle[static_cast<size_t>(8 * n + 1)];
  for (int p = 0; p < len_c; ++p)
    b.add_edge(fam.cycle[static_cast<size_t>(p)],
               fam.cycle[static_cast<size_t>((p + 1) % len_c)]);

  b.add_edge(fam.a, fam.x[0][0]);
  b.add_edge(fam.a, fam.y[0]);
  b.add_edge(fam.b, fam.x[0][static_cast<size_t>(2 * n - 1)]);
  b.add_edge(fam.b, fam.y[static_cast<size_t>(4 * n - 1)]);

  fam.graph = b.build();
  return fam;
}

Graph duality_graph(int n) { return duality_family(n).graph; }

namespace {

// Witness scaffolding shared between the decomposition and its supersets:
// node order is hub, then per i the chain nodes t{i}_j with their connector
// leaves, then the two cycle chains.
struct WitnessLayout {
  VertexSet hub;
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> chain_node;  // chain_node[i * (2n-1) + (j-1)]
  std::vector<int> side0, side1;
};

WitnessLayout witness_layout(const DualityFamily& fam) {
  const Graph& g = fam.graph;
  int n = fam.n;
  WitnessLayout w;

  w.hub = VertexSet(g.vertex_count());
  for (int v : fam.y) w.hub.insert(v);
  w.hub.insert(fam.a);
  w.hub.insert(fam.b);
  w.bags.push_back(w.hub);

  auto connector_bag = [&](int i, int j, int k) {
    VertexSet s(g.vertex_count());
    s.insert(fam.x[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
    for (int v : fam.connector(i, j, k)) s.insert(v);
    s.insert(fam.y[static_cast<size_t>(k - 1)]);
    return s;
  };

  for (int i = 0; i < 3; ++i) {
    int prev = 0;
    for (int j = 1; j <= 2 * n - 1; ++j) {
      VertexSet bag = w.hub;
      bag.insert(fam.x[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
      bag.insert(fam.x[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      int node = static_cast<int>(w.bags.size());
      w.chain_node.push_back(node);
      w.bags.push_back(std::move(bag));
      w.edges.emplace_back(prev, node);
      prev = node;

      for (int k = 1; k <= 4 * n; ++k) {
        w.edges.emplace_back(node, static_cast<int>(w.bags.size()));
        w.bags.push_back(connector_bag(i, j, k));
      }
      if (j == 2 * n - 1)
        for (int k = 1; k <= 4 * n; ++k) {
          w.edges.emplace_back(node, static_cast<int>(w.bags.size()));
          w.bags.push_back(connector_bag(i, 2 * n, k));
        }
    }
  }

  // Cycle side one: positions 1..8n; side two: positions 8n+2..16n+1.
  auto pos = [&](int p) { return fam.cycle[static_cast<size_t>(p)]; };
  auto make_sides = [&](std::vector<int>& out, bool first_side) {
    VertexSet near_a(g.vertex_count()), near_b(g.vertex_count());
    near_a.insert(fam.a);
    near_a.insert(fam.b);
    near_b.insert(fam.b);
    if (first_side) {
      for (int p = 1; p <= 3 * n; ++p) near_a.insert(pos(p));
      for (int p = 3 * n; p <= 8 * n; ++p) near_b.insert(pos(p));
    } else {
      for (int p = 16 * n + 1; p >= 13 * n + 2; --p) near_a.insert(pos(p));
      for (int p = 13 * n + 2; p >= 8 * n + 2; --p) near_b.insert(pos(p));
    }
    int first = static_cast<int>(w.bags.size());
    w.bags.push_back(std::move(near_a));
    w.bags.push_back(std::move(near_b));
    w.edges.emplace_back(0, first);
    w.edges.emplace_back(first, first + 1);
    out = {first, first + 1};
  };
  make_sides(w.side0, true);
  make_sides(w.side1, false);
  return w;
}

}  // namespace

Decomposition duality_witness(const DualityFamily& fam) {
  auto w = witness_layout(fam);
  Decomposition d(fam.graph, std::move(w.bags), std::move(w.edges));
  d.set_root(0);
  return d;
}

std::vector<VertexSet> duality_witness_supersets(const DualityFamily& fam) {
  auto w = witness_layout(fam);
  int n = fam.n;
  std::vector<VertexSet> sup = w.bags;

  // Chain nodes reach Q through their short connector; the x pair rides
  // along its own path edge.
  size_t idx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 2 * n - 1; ++j) {
      int node = w.chain_node[idx++];
      for (int v : fam.connector(i, j, n + j)) sup[static_cast<size_t>(node)].insert(v);
    }

  // The near-a cycle pieces pick up the whole path P0 to reach b.
  for (int node : {w.side0[0], w.side1[0]})
    for (int v : fam.x[0]) sup[static_cast<size_t>(node)].insert(v);
  return sup;
}

Cycle duality_c_prime(const DualityFamily& fam) {
  Cycle c;
  c.vertices.push_back(fam.a);
  for (int p = 1; p <= 8 * fam.n; ++p)
    c.vertices.push_back(fam.cycle[static_cast<size_t>(p)]);
  c.vertices.push_back(fam.b);
  for (int k = 4 * fam.n; k >= 1; --k)
    c.vertices.push_back(fam.y[static_cast<size_t>(k - 1)]);
  return c;
}

Bramble duality_segment_bramble(const DualityFamily& fam) {
  Cycle c = duality_c_prime(fam);
  int m = c.length();           // 12n+2
  int span = 6 * fam.n + 2;     // any two such segments share a vertex
  Bramble b;
  b.reserve(static_cast<size_t>(m));
  for (int start = 0; start < m; ++start) {
    VertexSet s(fam.graph.vertex_count());
    for (int off = 0; off < span; ++off)
      s.insert(c.vertices[static_cast<size_t>((start + off) % m)]);
    b.push_back(std::move(s));
  }
  return b;
}

VertexSet duality_star_element(const DualityFamily& fam, int i, int j, int k) {
  VertexSet s(fam.graph.vertex_count());
  s.insert(fam.x[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
  for (int kk = 1; kk <= 4 * fam.n; ++kk)
    for (int v : fam.connector(i, j, kk)) s.insert(v);
  s.insert(fam.y[static_cast<size_t>(k - 1)]);
  return s;
}

}  // namespace ctw
