// True-twin partition: x and y are true twins when N[x] = N[y].
#pragma once

#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

struct TwinPartition {
  std::vector<VertexSet> classes;       // covers V, ascending by minimum member
  std::vector<VertexSet> nonsingleton;  // the classes with at least two members
};

TwinPartition true_twin_classes(const Graph& g);

}  // namespace locdim
