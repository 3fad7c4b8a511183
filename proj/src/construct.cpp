#include "locdim/construct.hpp"

namespace locdim {

namespace {

void check_min_order(const char* name, int n, int least) {
  if (n < least)
    throw std::invalid_argument(std::string(name) + " needs order >= " + std::to_string(least) +
                                ", got " + std::to_string(n));
}

}  // namespace

Graph path_graph(int n) {
  check_min_order("path", n, 1);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  check_min_order("cycle", n, 3);
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  check_min_order("complete graph", n, 1);
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) {
  check_min_order("empty graph", n, 1);
  return Graph(n);
}

Graph complete_bipartite(int r, int s) {
  check_min_order("bipartite side", r, 1);
  check_min_order("bipartite side", s, 1);
  Graph g(r + s);
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) g.add_edge(u, r + v);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> old_id = set_members(keep);
  Graph out(static_cast<int>(old_id.size()));
  for (std::size_t v = 1; v < old_id.size(); ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (g.adjacent(old_id[u], old_id[v])) out.add_edge(static_cast<int>(u), static_cast<int>(v));
  return out;
}

}  // namespace locdim
