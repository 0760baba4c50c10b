#pragma once

#include <iosfwd>

#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"

namespace ctw {

// GraphViz rendering of the decomposition tree, one node per bag. When
// `grown` is non-null it must hold one vertex set per node; those vertices
// are rendered in color to mark what a construction trace added.
void decomposition_to_dot(const Graph& g, const Decomposition& d, std::ostream& out,
                          const std::vector<VertexSet>* grown = nullptr);

void graph_to_dot(const Graph& g, std::ostream& out);

}  // namespace ctw
