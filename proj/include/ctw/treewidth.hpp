#pragma once

#include <stdexcept>

#include "ctw/decomposition.hpp"
#include "ctw/graph.hpp"

namespace ctw {

// Thrown when an exact routine would exceed its configured size limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TreewidthOptions {
  // The subset dynamic program runs on the graph left after simplicial and
  // degree-2 reductions; this bounds that kernel, not the input.
  int exact_kernel_limit = 20;
};

struct TreewidthResult {
  int width = 0;
  Decomposition decomposition;
};

// Exact treewidth with a witness decomposition of that width.
TreewidthResult exact_treewidth(const Graph& g, const TreewidthOptions& opts = {});

// Min-fill elimination heuristic; width is an upper bound on the treewidth.
Decomposition minfill_decomposition(const Graph& g);

// Turn a valid decomposition of a connected graph into a stable one of the
// same or smaller width by splitting nodes whose side unions are disconnected.
Decomposition stabilize(const Graph& g, const Decomposition& d);

}  // namespace ctw
