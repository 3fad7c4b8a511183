#include "locdim/graph.hpp"

namespace locdim {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for_each_member(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet set_from(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= set_of(v);
  return s;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](int v) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n_; ++v)
    for_each_member(adj_[v] & (set_of(v) - 1), [&](int u) { out.emplace_back(u, v); });
  return out;
}

Graph Graph::with_edge_flipped(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] ^= set_of(v);
  g.adj_[v] ^= set_of(u);
  return g;
}

}  // namespace locdim
