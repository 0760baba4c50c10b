#include <doctest.h>

#include "ctw/brambles.hpp"
#include "ctw/cycle_space.hpp"
#include "ctw/families.hpp"
#include "support.hpp"

using namespace ctw;
using namespace ctw::testing;

TEST_CASE("bramble recognition with witnesses") {
  Graph g = cycle_graph(6);
  Bramble arcs{by_labels(g, {"1", "2", "3"}), by_labels(g, {"3", "4", "5"}),
               by_labels(g, {"5", "6", "1"})};
  CHECK(is_bramble(g, arcs).ok);

  Bramble apart{by_labels(g, {"1"}), by_labels(g, {"4"})};
  auto r1 = is_bramble(g, apart);
  CHECK_FALSE(r1.ok);
  CHECK(r1.detail.find("touch") != std::string::npos);

  Bramble torn{by_labels(g, {"1", "3"})};
  auto r2 = is_bramble(g, torn);
  CHECK_FALSE(r2.ok);
  CHECK(r2.detail.find("disconnected") != std::string::npos);

  Bramble hollow{by_labels(g, {"1"}), VertexSet(6)};
  CHECK_FALSE(is_bramble(g, hollow).ok);
}

TEST_CASE("orders of the K4 singleton bramble") {
  Graph g = complete_graph(4);
  Bramble singles;
  for (int v = 0; v < 4; ++v) singles.push_back(VertexSet::of(4, {v}));
  REQUIRE(is_bramble(g, singles).ok);
  CHECK(bramble_order(g, singles) == 4);  // only the full set meets all
  auto co = connected_order(g, singles);
  CHECK(co.order == 4);
  CHECK(co.witness == g.full_vertex_set());
}

TEST_CASE("connected order can exceed the plain order") {
  Graph g = cycle_graph(6);
  Bramble arcs = cycle_arc_bramble(g);
  REQUIRE(is_bramble(g, arcs).ok);
  CHECK(bramble_order(g, arcs) == 2);  // {1,4} hits every 3-arc
  auto co = connected_order(g, arcs);
  CHECK(co.order == 4);  // ceil(6/2) + 1
  CHECK(is_connected_in(g, co.witness));
  CHECK(co.witness.count() == 4);
  for (const auto& el : arcs) CHECK(el.intersects(co.witness));
}

TEST_CASE("cycle arc bramble shape") {
  Graph g = cycle_graph(7);
  Bramble arcs = cycle_arc_bramble(g);
  CHECK(arcs.size() == 7);
  for (const auto& el : arcs) {
    CHECK(el.count() == 3);  // floor(7/2)
    CHECK(is_connected_in(g, el));
  }
  CHECK(connected_order(g, arcs).order == 5);  // ceil(7/2) + 1

  Cycle c{{0, 1, 2, 3, 4, 5, 6}};
  Bramble same = cycle_arc_bramble(g, c);
  CHECK(same.size() == arcs.size());

  CHECK_THROWS_AS(cycle_arc_bramble(path_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(cycle_arc_bramble(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("covering part finds the node whose bag hits everything") {
  Graph g = cycle_graph(6);
  Decomposition d(g,
                  {by_labels(g, {"1", "2", "6"}), by_labels(g, {"2", "3", "4", "5", "6"}),
                   by_labels(g, {"3", "4", "5"})},
                  {{0, 1}, {1, 2}});
  Bramble arcs{by_labels(g, {"2", "3"}), by_labels(g, {"4", "5"}), by_labels(g, {"6"})};
  CHECK(covering_part(d, arcs) == 1);
  Bramble elsewhere{by_labels(g, {"1"})};
  CHECK(covering_part(d, elsewhere) == 0);
}

TEST_CASE("bramble order bound tw*floor(ell/2)+1 on explicit brambles") {
  Graph c6 = cycle_graph(6);
  auto rep = check_bramble_bound(c6, cycle_arc_bramble(c6), 2, 6);
  CHECK(rep.connected_order == 4);
  CHECK(rep.bound == 7);
  CHECK(rep.holds);

  Graph k4 = complete_graph(4);
  Bramble singles;
  for (int v = 0; v < 4; ++v) singles.push_back(VertexSet::of(4, {v}));
  auto rep2 = check_bramble_bound(k4, singles, 3, 3);
  CHECK(rep2.connected_order == 4);
  CHECK(rep2.bound == 4);
  CHECK(rep2.holds);
}

TEST_CASE("weak width upper bound wraps every part in a connected superset") {
  Graph g = cycle_graph(6);
  auto wb = wctw_upper(g);
  CHECK(wb.tw == 2);
  CHECK(wb.ell == 6);
  CHECK(wb.value == 3);
  REQUIRE(wb.supersets.size() == static_cast<size_t>(wb.decomposition.node_count()));
  for (int t = 0; t < wb.decomposition.node_count(); ++t) {
    const auto& s = wb.supersets[static_cast<size_t>(t)];
    CHECK(wb.decomposition.bag(t).is_subset_of(s));
    CHECK(is_connected_in(g, s));
    CHECK(s.count() <= wb.value + 1);
  }
}

TEST_CASE("weak width upper bound stays within tw*floor(ell/2) on random graphs") {
  RandomGraphStream stream(314);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = stream.next(9);
    auto wb = wctw_upper(g);
    CAPTURE(trial);
    CHECK(wb.value <= wb.tw * (wb.ell / 2));
    if (g.vertex_count() <= 8) CHECK(wctw_exact_small(g) <= wb.value);
  }
}

TEST_CASE("exact weak width on small graphs") {
  CHECK(wctw_exact_small(path_graph(5)) == 1);
  CHECK(wctw_exact_small(cycle_graph(4)) == 2);
  CHECK(wctw_exact_small(cycle_graph(6)) == 3);
  CHECK(wctw_exact_small(complete_graph(4)) == 3);
  CHECK(wctw_exact_small(subdivided_complete(3, 1).graph) == 3);
  CHECK(wctw_exact_small(graph_from_edges("a b\nb c\nb d\n")) == 1);  // star
  CHECK_THROWS_AS(wctw_exact_small(cycle_graph(9)), SizeLimitError);
}

TEST_CASE("size limits guard the exhaustive searches") {
  Graph big = subdivided_grid(4).graph;  // 28 vertices
  Bramble b{big.full_vertex_set()};
  CHECK_THROWS_AS(bramble_order(big, b), SizeLimitError);
  CHECK_THROWS_AS(connected_order(big, b), SizeLimitError);
}
