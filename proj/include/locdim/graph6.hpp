// Header-less graph6 encoding: order prefix, then the upper triangle of the
// adjacency matrix column by column in 6-bit groups, each group offset by 63.
#pragma once

#include <string>
#include <string_view>

#include "locdim/graph.hpp"

namespace locdim {

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace locdim
