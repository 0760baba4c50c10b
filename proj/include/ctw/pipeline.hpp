#pragma once

#include <vector>

#include "ctw/connectify.hpp"
#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"
#include "ctw/treewidth.hpp"

namespace ctw {

struct PipelineOptions {
  // Fall back to min-fill when a component exceeds the exact solver limit
  // (instead of propagating SizeLimitError).
  bool heuristic = false;
  TreewidthOptions tw;
};

struct PipelineResult {
  Decomposition decomposition;      // connected decomposition of the input
  std::vector<PathAddition> trace;  // node ids refer to `decomposition`
  int width_used = 0;               // width of the starting decomposition
  bool exact = true;                // false once any component used min-fill
  bool forest = false;
  int ell = 0;                      // 0 for forests
  int achieved = 0;                 // width of `decomposition`
  long bound = 0;                   // width_used*(ell-2), or width_used for forests
  bool bound_holds = false;
};

// Per component: (exact or heuristic) treewidth, stabilize, reconnect; the
// component trees are then linked into one tree over the whole graph.
PipelineResult run_pipeline(const Graph& g, const PipelineOptions& opts = {});

// Seeded generator for test and demo inputs: a random tree plus extra random
// edges (connected, simple; extra_edges is capped by the complete graph).
Graph random_connected_graph(int n, int extra_edges, unsigned seed);

}  // namespace ctw
