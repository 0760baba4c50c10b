#pragma once

#include <string>
#include <vector>

#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"
#include "ctw/treewidth.hpp"

namespace ctw {

// A bramble is a family of connected vertex sets whose pairwise unions are
// connected (equivalently: any two elements intersect or are joined by an
// edge).
using Bramble = std::vector<VertexSet>;

struct BrambleCheck {
  bool ok = false;
  std::string detail;  // witness for the first violation
};
BrambleCheck is_bramble(const Graph& g, const Bramble& b);

// Minimum size of a set meeting every element; exhaustive over subsets of
// the union of the elements. SizeLimitError when that union exceeds 20
// vertices.
int bramble_order(const Graph& g, const Bramble& b);

// Minimum size of a *connected* set meeting every element, with a witness.
// Exhaustive over connected sets; SizeLimitError beyond 16 graph vertices.
struct ConnectedOrderResult {
  int order = 0;
  VertexSet witness;
};
ConnectedOrderResult connected_order(const Graph& g, const Bramble& b);

// Smallest tree node whose part meets every element, -1 if none exists
// (which cannot happen when d is a valid decomposition of g).
int covering_part(const Decomposition& d, const Bramble& b);

// The arcs of floor(len/2) consecutive vertices along the given cycle; for
// a cycle of length m this bramble has connected order ceil(m/2) + 1.
Bramble cycle_arc_bramble(const Graph& g, const Cycle& c);
// Convenience for graphs that are themselves cycles.
Bramble cycle_arc_bramble(const Graph& cycle_graph);

// Upper bound on the weak connected width: every part of a stable
// minimum-width decomposition is wrapped in a connected superset obtained by
// rerooting at that part and reconnecting it. value = max superset size - 1.
struct WeakWidthBound {
  int value = 0;
  int tw = 0;
  int ell = 0;
  Decomposition decomposition;          // the stable decomposition used
  std::vector<VertexSet> supersets;     // per node, connected, contains bag
};
WeakWidthBound wctw_upper(const Graph& g, const TreewidthOptions& opts = {});
WeakWidthBound wctw_upper(const Graph& g, const Decomposition& stable, int ell_value);

// Exact weak connected width by subset dynamic programming over elimination
// orders, costing each bag by its smallest connected superset. Limited to
// graphs with at most 8 vertices (SizeLimitError otherwise).
int wctw_exact_small(const Graph& g);

// The connected order of any bramble is at most tw * floor(ell/2) + 1.
struct BrambleBoundReport {
  int connected_order = 0;
  int tw = 0;
  int ell = 0;
  long bound = 0;
  bool holds = false;
};
BrambleBoundReport check_bramble_bound(const Graph& g, const Bramble& b, int tw,
                                       int ell_value);

}  // namespace ctw
