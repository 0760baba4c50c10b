#include "ctw/pipeline.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ctw/cycle_space.hpp"

namespace ctw {

PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");

  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<PathAddition> trace;
  int width_used = 0;
  bool exact = true;
  bool any_cycle = false;
  int ell_max = 0;

  auto comps = components(g, g.full_vertex_set());
  for (const auto& comp : comps) {
    auto [sub, old_ids] = induced_subgraph(g, comp);

    Decomposition start = trivial_decomposition(sub);
    if (opts.heuristic) {
      try {
        start = exact_treewidth(sub, opts.tw).decomposition;
      } catch (const SizeLimitError&) {
        start = minfill_decomposition(sub);
        exact = false;
      }
    } else {
      start = exact_treewidth(sub, opts.tw).decomposition;
    }
    width_used = std::max(width_used, width(start));

    if (cyclomatic_number(sub) > 0) {
      any_cycle = true;
      ell_max = std::max(ell_max, ell(sub));
    }

    // Splice this component's tree into the global one.
    int base = static_cast<int>(bags.size());
    ConstructionState probe(sub, stabilize(sub, start));
    Decomposition finished = probe.run();
    for (int t = 0; t < finished.node_count(); ++t) {
      VertexSet global(g.vertex_count());
      finished.bag(t).for_each([&](int v) { global.insert(old_ids[static_cast<size_t>(v)]); });
      bags.push_back(std::move(global));
    }
    for (auto [u, v] : finished.tree_edges())
      tree_edges.emplace_back(base + u, base + v);
    if (base > 0) tree_edges.emplace_back(0, base);

    for (const auto& add : probe.additions()) {
      PathAddition global = add;
      global.node += base;
      global.child += base;
      for (int& v : global.path.vertices) v = old_ids[static_cast<size_t>(v)];
      trace.push_back(std::move(global));
    }
  }

  PipelineResult out{Decomposition(g, std::move(bags), std::move(tree_edges)),
                     std::move(trace),
                     width_used,
                     exact,
                     !any_cycle,
                     ell_max,
                     0,
                     0,
                     false};
  out.decomposition.set_root(0);
  out.achieved = width(out.decomposition);
  out.bound = out.forest ? width_used
                         : static_cast<long>(width_used) * (ell_max - 2);
  out.bound_holds = out.achieved <= out.bound;
  return out;
}

Graph random_connected_graph(int n, int extra_edges, unsigned seed) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  std::mt19937 rng(seed);
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace(pick(rng), i);
  }

  long max_extra = static_cast<long>(n) * (n - 1) / 2 - static_cast<long>(edges.size());
  extra_edges = static_cast<int>(std::min<long>(extra_edges, max_extra));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int added = 0; added < extra_edges;) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (edges.emplace(std::min(u, v), std::max(u, v)).second) ++added;
  }

  GraphBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex();
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

}  // namespace ctw
