#include <doctest.h>

#include <numeric>

#include "ctw/cycle_space.hpp"
#include "ctw/families.hpp"
#include "support.hpp"

using namespace ctw;
using namespace ctw::testing;

namespace {

Graph theta_graph() {
  // Two hubs joined by three length-2 paths: cyclomatic 2, all cycles C4.
  return graph_from_edges("a x\nx b\na y\ny b\na z\nz b\n");
}

Graph petersen() {
  std::ostringstream edges;
  for (int i = 0; i < 5; ++i) {
    edges << "o" << i << " o" << (i + 1) % 5 << "\n";
    edges << "i" << i << " i" << (i + 2) % 5 << "\n";
    edges << "o" << i << " i" << i << "\n";
  }
  return graph_from_edges(edges.str());
}

}  // namespace

TEST_CASE("cyclomatic number") {
  CHECK(cyclomatic_number(path_graph(7)) == 0);
  CHECK(cyclomatic_number(cycle_graph(7)) == 1);
  CHECK(cyclomatic_number(complete_graph(4)) == 3);
  CHECK(cyclomatic_number(theta_graph()) == 2);
  CHECK(cyclomatic_number(graph_from_edges("a b\nc d\nd e\ne c\n")) == 1);
  CHECK(cyclomatic_number(petersen()) == 6);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(9)) == 9);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(theta_graph()) == 4);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(subdivided_grid(4).graph) == 6);
  CHECK_FALSE(girth(path_graph(5)).has_value());
}

TEST_CASE("cycle enumeration is canonical and complete") {
  CHECK(cycles_upto(cycle_graph(6), 6).size() == 1);
  CHECK(cycles_upto(complete_graph(4), 4).size() == 7);  // 4 triangles + 3 squares
  CHECK(cycles_upto(complete_graph(4), 3).size() == 4);
  CHECK(cycles_upto(theta_graph(), 10).size() == 3);

  for (const auto& c : cycles_upto(complete_graph(5), 5)) {
    CHECK(c.is_valid(complete_graph(5)));
    CHECK(c.canonical().vertices == c.vertices);
  }

  int count = 0;
  for_each_cycle(petersen(), 5, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  CHECK(count == 12);  // the pentagons of the Petersen graph

  int stopped = 0;
  for_each_cycle(complete_graph(5), 5, [&](const std::vector<int>&) {
    return ++stopped < 3;
  });
  CHECK(stopped == 3);
}

TEST_CASE("generator length ell on fixed graphs") {
  CHECK(ell(cycle_graph(6)) == 6);
  CHECK(ell(complete_graph(4)) == 3);
  CHECK(ell(theta_graph()) == 4);
  CHECK(ell(subdivided_complete(4, 1).graph) == 6);
  CHECK(ell(subdivided_complete(3, 2).graph) == 9);
  CHECK(ell(subdivided_grid(4).graph) == 8);
  CHECK_THROWS_AS(ell(path_graph(4)), std::invalid_argument);
}

TEST_CASE("rank certificate boundary around ell") {
  for (const Graph& g : {cycle_graph(6), complete_graph(4), theta_graph(),
                         subdivided_grid(3).graph, petersen()}) {
    int L = ell(g);
    int full = cyclomatic_number(g);
    CHECK(cycle_rank_upto(g, L) == full);
    CHECK(cycle_rank_upto(g, L - 1) < full);
  }
}

TEST_CASE("minimum cycle basis elements are cycles and span") {
  RandomGraphStream stream(1234);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = stream.next(10);
    if (cyclomatic_number(g) == 0) continue;
    auto basis = min_cycle_basis(g);
    CAPTURE(trial);
    CHECK(static_cast<int>(basis.size()) == cyclomatic_number(g));
    int last = 0;
    for (const auto& el : basis) {
      CHECK(el.length == static_cast<int>(el.edge_ids.size()));
      CHECK(el.length >= girth(g).value());
      CHECK(el.length >= last);
      last = el.length;
      // Every element is an even subgraph: each vertex meets an even number
      // of its edges.
      std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
      for (int e : el.edge_ids) {
        ++deg[static_cast<size_t>(g.edges()[static_cast<size_t>(e)].first)];
        ++deg[static_cast<size_t>(g.edges()[static_cast<size_t>(e)].second)];
      }
      for (int d : deg) CHECK(d % 2 == 0);
    }
  }
}

TEST_CASE("ell and the minimum-basis value agree") {
  RandomGraphStream stream(4321);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = stream.next(10);
    if (cyclomatic_number(g) == 0) continue;
    CAPTURE(trial);
    CHECK(ell(g) == ell_via_min_basis(g));
  }
  CHECK(ell_via_min_basis(petersen()) == ell(petersen()));
}

TEST_CASE("geodesic cycles") {
  Graph c6 = cycle_graph(6);
  CHECK(is_geodesic_cycle(c6, cycles_upto(c6, 6).front()));

  Graph k4 = complete_graph(4);
  for (const auto& c : cycles_upto(k4, 4)) {
    if (c.length() == 3)
      CHECK(is_geodesic_cycle(k4, c));
    else
      CHECK_FALSE(is_geodesic_cycle(k4, c));  // opposite corners have a shortcut
  }
}

TEST_CASE("geodesic cycle bound report") {
  auto fam = subdivided_grid(4);
  Cycle boundary{fam.boundary};
  REQUIRE(boundary.is_valid(fam.graph));
  REQUIRE(is_geodesic_cycle(fam.graph, boundary));
  auto rep = check_geodesic_bound(fam.graph, boundary, 4);
  CHECK(rep.cycle_length == 12);
  CHECK(rep.ell == 8);
  CHECK(rep.tw == 4);
  CHECK(rep.holds);
}
