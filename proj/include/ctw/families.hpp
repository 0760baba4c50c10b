#pragma once

#include <vector>

#include "ctw/brambles.hpp"
#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"

namespace ctw {

// Vertices labeled "1".."n".
Graph path_graph(int n);
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1

// K_n with every edge subdivided by k fresh vertices (k = 0 keeps K_n).
// Branch vertices are a1..an; subdivision vertices between ai and aj are
// s{i}{j} for k = 1 and s{i}{j}_{m} (m counted from the ai end) for k >= 2.
// Single-digit branch indices only, hence n <= 9.
struct SubdividedComplete {
  int n = 0;
  int k = 0;
  Graph graph;
  std::vector<int> branch;                           // branch[i] is a{i+1}
  std::vector<std::vector<std::vector<int>>> inner;  // inner[i][j], i < j, from the ai end
  // Full branch-to-branch path including both ends; i < j.
  std::vector<int> path(int i, int j) const;
  // The connected width this family realizes: (n-1)(k+1) - floor((k+1)/2).
  int width_target() const;
};
SubdividedComplete subdivided_complete(int n, int k);

// Star-shaped connected decomposition of width exactly width_target():
// the root collects all paths into one fixed branch vertex plus the near
// half of the path to a second one, a twin leaf does the same for the other
// end, and one leaf per remaining branch pair holds that full path.
Decomposition subdivided_complete_witness(const SubdividedComplete& fam);

// Component of fam.graph - x containing every branch vertex outside x.
// Requires x connected of size at most width_target(); such a set can
// neither swallow all branch vertices nor separate the leftovers.
VertexSet branch_component(const SubdividedComplete& fam, const VertexSet& x);

// n-by-n grid whose interior edges are subdivided once; the boundary ring
// survives unsubdivided and is returned as a cycle of length 4(n-1). Grid
// vertices are g{row}_{col} (1-based); subdivision vertices h{r}_{c} (on the
// edge toward column c+1) and v{r}_{c} (toward row r+1).
struct SubdividedGrid {
  int n = 0;
  Graph graph;
  std::vector<std::vector<int>> at;  // at[row][col], 0-based
  Cycle boundary;
};
SubdividedGrid subdivided_grid(int n);

// Family separating connected width from the connected order of brambles.
// Three paths P_i = x{i}_1..x{i}_{2n}, a path Q = y_1..y_{4n}, a connector
// from every x{i}_j to every y_k (short, n edges, when k = n+j; long, 5n
// edges, otherwise), and a cycle of length 16n+2 with antipodal vertices
// a, b glued to x0_1/y_1 and x0_{2n}/y_{4n} respectively.
struct DualityFamily {
  int n = 0;
  Graph graph;
  int a = -1;
  int b = -1;
  std::vector<std::vector<int>> x;  // x[i][j-1], i in {0,1,2}, j in 1..2n
  std::vector<int> y;               // y[k-1], k in 1..4n
  std::vector<int> cycle;           // cyclic order; cycle[0] = a, cycle[8n+1] = b
  // Interior of the connector from x{i}_j to y_k, ordered from the x end.
  const std::vector<int>& connector(int i, int j, int k) const;

  std::vector<std::vector<std::vector<std::vector<int>>>> connectors;  // [i][j-1][k-1]
};
DualityFamily duality_family(int n);  // n >= 4
Graph duality_graph(int n);

// Decomposition witnessing that every part fits in a connected set of size
// 5n+3: a hub holding Q+{a,b}, three chains tracking consecutive x pairs,
// one leaf per connector, and two short chains covering the cycle.
Decomposition duality_witness(const DualityFamily& fam);
// Connected supersets aligned with the witness nodes; sizes <= 5n+3.
std::vector<VertexSet> duality_witness_supersets(const DualityFamily& fam);

// Cycle through a, one side of the big cycle, b, and Q; length 12n+2.
Cycle duality_c_prime(const DualityFamily& fam);
// All 12n+2 segments of that cycle with 6n+2 vertices; any two overlap.
Bramble duality_segment_bramble(const DualityFamily& fam);
// Star element: x{i}_j, the interiors of all its connectors, and y_k.
VertexSet duality_star_element(const DualityFamily& fam, int i, int j, int k);

}  // namespace ctw
