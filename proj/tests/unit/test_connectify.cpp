#include <doctest.h>

#include "ctw/connectify.hpp"
#include "ctw/cycle_space.hpp"
#include "ctw/families.hpp"
#include "ctw/treewidth.hpp"
#include "support.hpp"

using namespace ctw;
using namespace ctw::testing;

namespace {

Decomposition c6_fixture(const Graph& g, int root = 0) {
  std::vector<VertexSet> bags{
      by_labels(g, {"1", "2", "6"}),
      by_labels(g, {"2", "5", "6"}),
      by_labels(g, {"2", "3", "5"}),
      by_labels(g, {"3", "4", "5"}),
  };
  Decomposition d(g, std::move(bags), {{0, 1}, {1, 2}, {2, 3}});
  d.set_root(root);
  return d;
}

}  // namespace

TEST_CASE("bookkeeping forest tracks components and rejects cycles") {
  BookkeepingForest f(6);
  CHECK(f.vertex_count() == 0);
  f.ensure_vertex(0);
  f.ensure_vertex(1);
  f.ensure_vertex(2);
  CHECK(f.component_count() == 3);
  CHECK(f.add_edge(0, 1));
  CHECK(f.add_edge(1, 2));
  CHECK(f.component_count() == 1);
  CHECK(f.same_component(0, 2));
  CHECK(f.acyclic());

  CHECK_FALSE(f.add_edge(0, 2));  // would close a cycle
  CHECK(f.edge_count() == 2);
  CHECK(f.acyclic());

  f.force_add_edge(0, 2);
  CHECK(f.edge_count() == 3);
  CHECK_FALSE(f.acyclic());

  f.ensure_vertex(0);  // idempotent
  CHECK(f.vertex_count() == 3);
  CHECK(f.has_vertex(2));
  CHECK_FALSE(f.has_vertex(5));
}

TEST_CASE("worked C6 run: one addition, exact final parts") {
  Graph g = cycle_graph(6);
  ConstructionState state(g, c6_fixture(g));
  Decomposition out = state.run();

  REQUIRE(state.additions().size() == 1);
  const auto& add = state.additions().front();
  CHECK(add.node == 1);
  CHECK(add.child == 2);
  CHECK(add.components_before == 2);
  CHECK(add.components_after == 1);
  std::vector<std::string> walked;
  for (int v : add.path.vertices) walked.push_back(g.label(v));
  CHECK(walked == std::vector<std::string>{"2", "3", "4", "5"});

  CHECK(out.bag(0) == by_labels(g, {"1", "2", "6"}));
  CHECK(out.bag(1) == by_labels(g, {"2", "3", "4", "5", "6"}));
  CHECK(out.bag(2) == by_labels(g, {"2", "3", "4", "5"}));
  CHECK(out.bag(3) == by_labels(g, {"3", "4", "5"}));
  CHECK(width(out) == 4);
  CHECK(is_connected_decomposition(g, out));
  CHECK(check_invariants(state).ok());
}

TEST_CASE("admissible path search") {
  Graph g = cycle_graph(6);
  ConstructionState state(g, c6_fixture(g));

  // Node 1 ({2,5,6}) splits into {2} and {5,6}; vertex 1 is outside the
  // subtree union so the connector must walk the long way round.
  auto p = state.find_admissible_path(1);
  REQUIRE(p.has_value());
  CHECK(p->length() == 3);
  CHECK_FALSE(state.subtree_union(1).contains(*g.vertex_by_label("1")));

  // Node 0 ({1,2,6}) is already connected.
  CHECK_FALSE(state.find_admissible_path(0).has_value());
}

TEST_CASE("apply_update rejects paths that are not admissible") {
  Graph g = cycle_graph(6);
  auto id = [&](const char* l) { return *g.vertex_by_label(l); };

  SUBCASE("not a path in the graph") {
    ConstructionState state(g, c6_fixture(g));
    CHECK_THROWS_AS(state.apply_update(1, Path{{id("2"), id("4")}}),
                    std::invalid_argument);
  }
  SUBCASE("endpoints in the same component") {
    ConstructionState state(g, c6_fixture(g));
    CHECK_THROWS_AS(state.apply_update(1, Path{{id("5"), id("6")}}),
                    std::invalid_argument);
  }
  SUBCASE("interior leaves the subtree union") {
    ConstructionState state(g, c6_fixture(g));
    CHECK_THROWS_AS(state.apply_update(1, Path{{id("2"), id("1"), id("6")}}),
                    std::invalid_argument);
  }
  SUBCASE("interior touches the part") {
    ConstructionState state(g, c6_fixture(g));
    // 6-5-4-3-2 joins the two components but walks through 5, a part vertex.
    CHECK_THROWS_AS(
        state.apply_update(1, Path{{id("6"), id("5"), id("4"), id("3"), id("2")}}),
        std::invalid_argument);
  }
}

TEST_CASE("process_node is a no-op on connected parts") {
  Graph g = complete_graph(4);
  auto stable = stabilize(g, exact_treewidth(g).decomposition);
  ConstructionState state(g, stable);
  for (int t = 0; t < stable.node_count(); ++t) CHECK(state.process_node(t) == 0);
  CHECK(state.additions().empty());
}

TEST_CASE("construction needs a stable decomposition and a connected graph") {
  Graph g = cycle_graph(6);
  Decomposition unstable(g, {by_labels(g, {"2", "3", "4", "6"}),
                             by_labels(g, {"1", "2", "4", "5", "6"})},
                         {{0, 1}});
  CHECK_THROWS_AS(ConstructionState(g, unstable), std::invalid_argument);

  Graph split = graph_from_edges("a b\nc d\n");
  CHECK_THROWS_AS(ConstructionState(split, trivial_decomposition(split)),
                  std::invalid_argument);

  Graph other = cycle_graph(5);
  CHECK_THROWS_AS(ConstructionState(other, c6_fixture(g)), std::invalid_argument);
}

TEST_CASE("every intermediate state keeps the invariants") {
  RandomGraphStream stream(404);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = stream.next(10);
    auto stable = stabilize(g, exact_treewidth(g).decomposition);
    ConstructionState state(g, stable);
    int ell_value = cyclomatic_number(g) > 0 ? ell(g) : 0;
    CAPTURE(trial);

    for (int t : state.current().preorder()) {
      while (true) {
        auto p = state.find_admissible_path(t);
        if (!p) break;
        if (ell_value > 0)
          CHECK(static_cast<int>(p->vertices.size()) <= ell_value - 1);
        state.apply_update(t, *p);
        auto inv = check_invariants(state);
        CAPTURE(inv.detail);
        CHECK(inv.ok());
      }
      CHECK(state.additions_at(t) <= state.original_part(t).count() - 1);
    }
    CHECK(is_connected_decomposition(g, state.current()));
  }
}

TEST_CASE("final width respects the ell-based budget") {
  RandomGraphStream stream(808);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = stream.next(10);
    int tw = exact_treewidth(g).width;
    auto out = run_construction(g, stabilize(g, exact_treewidth(g).decomposition));
    CAPTURE(trial);
    CHECK(is_connected_decomposition(g, out));
    CHECK(validate(g, out).ok());
    if (cyclomatic_number(g) > 0)
      CHECK(width(out) <= tw * (ell(g) - 2));
    else
      CHECK(width(out) == tw);
  }
}

TEST_CASE("parts only grow and keep their originals") {
  Graph g = cycle_graph(6);
  ConstructionState state(g, c6_fixture(g, 2));
  state.run();
  for (int t = 0; t < 4; ++t)
    CHECK(state.original_part(t).is_subset_of(state.part(t)));
}
