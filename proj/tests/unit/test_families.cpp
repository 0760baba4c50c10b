#include <doctest.h>

#include <set>

#include "ctw/brambles.hpp"
#include "ctw/cycle_space.hpp"
#include "ctw/families.hpp"
#include "ctw/treewidth.hpp"
#include "support.hpp"

using namespace ctw;
using namespace ctw::testing;

TEST_CASE("basic families") {
  Graph p = path_graph(4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 3);
  CHECK(p.label(0) == "1");

  Graph c = cycle_graph(5);
  CHECK(c.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

  Graph k = complete_graph(5);
  CHECK(k.edge_count() == 10);
}

TEST_CASE("subdivided complete graph layout") {
  auto fam = subdivided_complete(4, 1);
  CHECK(fam.graph.vertex_count() == 10);
  CHECK(fam.graph.edge_count() == 12);
  CHECK(fam.graph.label(fam.branch[0]) == "a1");
  CHECK(fam.graph.vertex_by_label("s24").has_value());
  CHECK(fam.width_target() == 5);

  auto p13 = fam.path(0, 2);
  REQUIRE(p13.size() == 3);
  CHECK(p13.front() == fam.branch[0]);
  CHECK(p13.back() == fam.branch[2]);
  CHECK(fam.graph.label(p13[1]) == "s13");

  auto deep = subdivided_complete(3, 2);
  CHECK(deep.graph.vertex_count() == 9);  // 3 branch + 3 pairs * 2
  CHECK(deep.graph.vertex_by_label("s23_2").has_value());
  CHECK(deep.path(1, 2).size() == 4);
  CHECK(deep.width_target() == 5);  // 2*3 - 1

  CHECK(subdivided_complete(4, 0).graph.edge_count() == 6);  // plain K4
  CHECK_THROWS_AS(subdivided_complete(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(subdivided_complete(10, 1), std::invalid_argument);
}

TEST_CASE("subdivided complete with one midpoint per edge of K3 is the 6-cycle") {
  auto fam = subdivided_complete(3, 1);
  CHECK(fam.graph.vertex_count() == 6);
  CHECK(fam.graph.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(fam.graph.degree(v) == 2);
  CHECK(girth(fam.graph) == 6);
}

TEST_CASE("witness decomposition realizes the target width, connected") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {3, 2}, {5, 1}}) {
    auto fam = subdivided_complete(n, k);
    auto d = subdivided_complete_witness(fam);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(validate(fam.graph, d).ok());
    CHECK(is_connected_decomposition(fam.graph, d));
    CHECK(width(d) == fam.width_target());
  }
}

TEST_CASE("witness handles the unsubdivided clique too") {
  auto fam = subdivided_complete(4, 0);
  auto d = subdivided_complete_witness(fam);
  CHECK(validate(fam.graph, d).ok());
  CHECK(is_connected_decomposition(fam.graph, d));
  CHECK(width(d) == fam.width_target());  // 3*1 - 0 = 3
}

TEST_CASE("branch component is well defined for small connected blockers") {
  auto fam = subdivided_complete(4, 1);
  const Graph& g = fam.graph;

  auto c1 = branch_component(fam, by_labels(g, {"s12"}));
  CHECK(c1.count() == 9);  // everything else stays connected
  for (int i = 0; i < 4; ++i) CHECK(c1.contains(fam.branch[static_cast<size_t>(i)]));

  auto c2 = branch_component(fam, by_labels(g, {"a1", "s12"}));
  CHECK_FALSE(c2.contains(*g.vertex_by_label("a1")));
  CHECK(c2.contains(fam.branch[1]));
  CHECK(c2.contains(fam.branch[3]));

  CHECK_THROWS_AS(branch_component(fam, by_labels(g, {"a1", "a2"})),
                  std::invalid_argument);  // disconnected blocker
  CHECK_THROWS_AS(branch_component(fam, g.full_vertex_set()), std::invalid_argument);
}

TEST_CASE("subdivided grid layout and boundary") {
  auto fam = subdivided_grid(4);
  const Graph& g = fam.graph;
  CHECK(g.vertex_count() == 28);
  CHECK(g.edge_count() == 36);
  CHECK(g.vertex_by_label("g1_1").has_value());
  CHECK(g.vertex_by_label("h2_2").has_value());
  CHECK_FALSE(g.vertex_by_label("h1_1").has_value());  // boundary edge, unsubdivided

  CHECK(fam.boundary.length() == 12);
  CHECK(fam.boundary.is_valid(g));
  CHECK(is_geodesic_cycle(g, fam.boundary));

  // Interior edges are subdivided: corner-adjacent interior pairs sit at
  // distance 2.
  auto d = bfs_distances(g, fam.at[1][1]);
  CHECK(d[static_cast<size_t>(fam.at[1][2])] == 2);
  CHECK(d[static_cast<size_t>(fam.at[0][1])] == 2);
  // Boundary edges are not.
  CHECK(g.has_edge(fam.at[0][0], fam.at[0][1]));

  auto small = subdivided_grid(2);  // no interior edges at all
  CHECK(small.graph.vertex_count() == 4);
  CHECK(small.graph.edge_count() == 4);
  CHECK_THROWS_AS(subdivided_grid(1), std::invalid_argument);
}

TEST_CASE("duality family counts and contacts") {
  auto fam = duality_family(4);
  const Graph& g = fam.graph;
  const int n = 4;
  CHECK(g.vertex_count() == 7018);
  CHECK(g.edge_count() == 7402);

  CHECK(g.label(fam.a) == "a");
  CHECK(g.label(fam.b) == "b");
  CHECK(static_cast<int>(fam.cycle.size()) == 16 * n + 2);
  CHECK(fam.cycle[0] == fam.a);
  CHECK(fam.cycle[static_cast<size_t>(8 * n + 1)] == fam.b);

  // Contact edges.
  CHECK(g.has_edge(fam.a, fam.x[0][0]));
  CHECK(g.has_edge(fam.a, fam.y[0]));
  CHECK(g.has_edge(fam.b, fam.x[0][2 * n - 1]));
  CHECK(g.has_edge(fam.b, fam.y[4 * n - 1]));

  // Connector lengths: short exactly when k = n + j.
  CHECK(fam.connector(1, 2, n + 2).size() == static_cast<size_t>(n - 1));
  CHECK(fam.connector(1, 2, 1).size() == static_cast<size_t>(5 * n - 1));

  // The big cycle really is a cycle in the graph.
  for (size_t i = 0; i < fam.cycle.size(); ++i)
    CHECK(g.has_edge(fam.cycle[i], fam.cycle[(i + 1) % fam.cycle.size()]));

  CHECK_THROWS_AS(duality_family(3), std::invalid_argument);
}

TEST_CASE("duality auxiliary cycle and bramble") {
  auto fam = duality_family(4);
  const Graph& g = fam.graph;
  const int n = 4;

  Cycle cp = duality_c_prime(fam);
  CHECK(cp.length() == 12 * n + 2);
  CHECK(cp.is_valid(g));

  Bramble segs = duality_segment_bramble(fam);
  CHECK(static_cast<int>(segs.size()) == 12 * n + 2);
  for (const auto& s : segs) {
    CHECK(s.count() == 6 * n + 2);
    CHECK(is_connected_in(g, s));
  }
  // More than half the cycle each, so any two overlap.
  CHECK(segs[0].intersects(segs[static_cast<size_t>(6 * n + 1)]));

  VertexSet el = duality_star_element(fam, 1, 3, 2);
  CHECK(is_connected_in(g, el));
  CHECK(el.contains(fam.x[1][2]));
  CHECK(el.contains(fam.y[1]));
  // 4n-1 long connectors, one short one, plus the two endpoints.
  CHECK(el.count() == 2 + (4 * n - 1) * (5 * n - 1) + (n - 1));
}

TEST_CASE("duality witness bags sit inside small connected supersets") {
  auto fam = duality_family(4);
  auto d = duality_witness(fam);
  auto sup = duality_witness_supersets(fam);
  const int n = 4;

  CHECK(d.node_count() == 24 * n * n + 6 * n + 2);
  REQUIRE(sup.size() == static_cast<size_t>(d.node_count()));
  for (int t = 0; t < d.node_count(); ++t) {
    CHECK(d.bag(t).is_subset_of(sup[static_cast<size_t>(t)]));
    CHECK(sup[static_cast<size_t>(t)].count() <= 5 * n + 3);
  }
}
