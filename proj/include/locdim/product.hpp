// Lexicographic products G o H with one factor graph per base vertex.
// Product vertices are labeled block by block: the copy of member i
// occupies a contiguous id range starting at offsets[i].
#pragma once

#include <utility>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

struct Family {
  Graph base;
  std::vector<Graph> members;  // one per base vertex, in label order
};

// Validates: one member per base vertex, every member non-trivial (order >= 1).
Family make_family(Graph base, std::vector<Graph> members);

struct ProductGraph {
  Graph graph;
  std::vector<int> offsets;  // offsets[i] = first id of block i; back() = order

  int vertex_id(int block, int within) const;
  std::pair<int, int> locate(int id) const;  // inverse of vertex_id
};

ProductGraph product(const Family& fam);

// Distance in the product between (i, b) and (j, d) without building it:
// base distance across blocks, member distance truncated at 2 inside one.
// Requires a connected base of order >= 2.
int product_distance(const Family& fam, int i, int b, int j, int d);

}  // namespace locdim
