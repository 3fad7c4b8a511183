// Named small-graph families and the graph operations the dimension formulas
// are built from.
#pragma once

#include "locdim/graph.hpp"

namespace locdim {

Graph path_graph(int n);              // P_n, n >= 1
Graph cycle_graph(int n);             // C_n, n >= 3
Graph complete_graph(int n);          // K_n, n >= 1
Graph empty_graph(int n);             // N_n, n >= 1
Graph complete_bipartite(int r, int s);  // K_{r,s}, r, s >= 1

// Disjoint copies of g and h, then every g-vertex joined to every h-vertex.
// Vertices of g keep their labels; vertex v of h becomes g.order() + v.
Graph join(const Graph& g, const Graph& h);

// Disjoint copies only, same labeling convention as join.
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

// Subgraph induced by the vertices in keep, relabeled 0.. in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace locdim
