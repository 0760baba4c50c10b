#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ctw/graph.hpp"

namespace ctw {

// Dimension of the cycle space: |E| - |V| + number of components.
int cyclomatic_number(const Graph& g);

// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

// Calls fn once per simple cycle of length <= max_len, in canonical form
// (smallest vertex first, oriented toward its smaller cycle neighbour).
// Return false from fn to stop. Cycles arrive grouped by start vertex, not
// globally sorted.
void for_each_cycle(const Graph& g, int max_len,
                    const std::function<bool(const std::vector<int>&)>& fn);

// All simple cycles of length <= max_len, sorted by length then vertex
// sequence. Exponential in general; intended for small graphs.
std::vector<Cycle> cycles_upto(const Graph& g, int max_len);

// GF(2) rank of the span of all cycles of length <= max_len.
int cycle_rank_upto(const Graph& g, int max_len);

// Smallest L such that the cycles of length <= L generate the whole cycle
// space. Throws std::invalid_argument on forests.
int ell(const Graph& g);

// Same value computed independently: the longest cycle in a minimum cycle
// basis obtained by greedy selection over the Horton candidate set.
int ell_via_min_basis(const Graph& g);

// Minimum cycle basis underlying ell_via_min_basis, as edge-id vectors
// paired with their lengths, sorted by length.
struct BasisElement {
  std::vector<int> edge_ids;
  int length = 0;
};
std::vector<BasisElement> min_cycle_basis(const Graph& g);

// Whether the cycle realizes the graph distance between each pair of its
// vertices.
bool is_geodesic_cycle(const Graph& g, const Cycle& c);

// Lower-bound certificate: a geodesic cycle of length k forces
// tw >= k / ell. `tw` is the caller's treewidth value for g.
struct GeodesicBoundReport {
  int cycle_length = 0;
  int ell = 0;
  int tw = 0;
  bool holds = false;  // tw * ell >= cycle_length
};
GeodesicBoundReport check_geodesic_bound(const Graph& g, const Cycle& c, int tw);

}  // namespace ctw
