#include <doctest.h>

#include "ctw/families.hpp"
#include "ctw/treewidth.hpp"
#include "support.hpp"

using namespace ctw;
using namespace ctw::testing;

TEST_CASE("exact treewidth on fixed graphs") {
  CHECK(exact_treewidth(path_graph(6)).width == 1);
  CHECK(exact_treewidth(cycle_graph(6)).width == 2);
  CHECK(exact_treewidth(complete_graph(4)).width == 3);
  CHECK(exact_treewidth(complete_graph(7)).width == 6);
  CHECK(exact_treewidth(subdivided_complete(4, 1).graph).width == 3);
  CHECK(exact_treewidth(subdivided_grid(3).graph).width == 3);
  GraphBuilder b;
  b.add_vertex("x");
  CHECK(exact_treewidth(b.build()).width == 0);
}

TEST_CASE("exact treewidth witness matches the reported width") {
  RandomGraphStream stream(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = stream.next(9);
    auto res = exact_treewidth(g);
    CAPTURE(trial);
    CHECK(validate(g, res.decomposition).ok());
    CHECK(width(res.decomposition) == res.width);
    CHECK(res.width == oracle_treewidth(g));
  }
}

TEST_CASE("kernel limit raises SizeLimitError, not a wrong answer") {
  Graph g = subdivided_grid(4).graph;  // kernel: the 4x4 grid, 16 vertices
  CHECK_THROWS_AS(exact_treewidth(g, TreewidthOptions{10}), SizeLimitError);
  CHECK(exact_treewidth(g, TreewidthOptions{16}).width == 4);
}

TEST_CASE("reductions alone solve series-parallel-ish inputs regardless of limit") {
  // Cycles reduce to a triangle by degree-2 contractions, so even a tiny
  // kernel limit suffices.
  CHECK(exact_treewidth(cycle_graph(30), TreewidthOptions{3}).width == 2);
  CHECK(exact_treewidth(path_graph(40), TreewidthOptions{1}).width == 1);
}

TEST_CASE("min-fill gives a valid upper bound witness") {
  RandomGraphStream stream(99);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = stream.next(10);
    auto d = minfill_decomposition(g);
    CAPTURE(trial);
    CHECK(validate(g, d).ok());
    CHECK(width(d) >= exact_treewidth(g).width);
  }
  // On chordal-friendly inputs min-fill is exact.
  CHECK(width(minfill_decomposition(complete_graph(5))) == 4);
  CHECK(width(minfill_decomposition(path_graph(7))) == 1);
}

TEST_CASE("stabilize output is stable, valid, and no wider") {
  RandomGraphStream stream(5150);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = stream.next(11);
    auto d = minfill_decomposition(g);
    auto s = stabilize(g, d);
    CAPTURE(trial);
    CHECK(validate(g, s).ok());
    CHECK(is_stable(g, s));
    CHECK(width(s) <= width(d));
  }
}

TEST_CASE("stabilize keeps exact width, realizing a stable minimum decomposition") {
  RandomGraphStream stream(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = stream.next(9);
    auto res = exact_treewidth(g);
    auto s = stabilize(g, res.decomposition);
    CAPTURE(trial);
    CHECK(is_stable(g, s));
    CHECK(width(s) == res.width);
  }
}

TEST_CASE("stabilize fixes the disconnected-bag-union fixture") {
  Graph g = cycle_graph(6);
  Decomposition d(g, {by_labels(g, {"2", "3", "4", "6"}),
                      by_labels(g, {"1", "2", "4", "5", "6"})},
                  {{0, 1}});
  REQUIRE_FALSE(is_stable(g, d));
  auto s = stabilize(g, d);
  CHECK(validate(g, s).ok());
  CHECK(is_stable(g, s));
  CHECK(width(s) <= width(d));
}

TEST_CASE("stabilize requires a connected graph") {
  Graph g = graph_from_edges("a b\nc d\n");
  CHECK_THROWS_AS(stabilize(g, trivial_decomposition(g)), std::invalid_argument);
}
