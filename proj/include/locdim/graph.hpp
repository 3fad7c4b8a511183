// Simple undirected graphs on at most 64 labeled vertices, one adjacency
// bitmask per vertex. Vertex sets throughout the library are uint64_t masks.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locdim {

using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet set_of(int v) { return VertexSet{1} << v; }
inline constexpr bool set_contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int set_min(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for each member of s in ascending order.
template <typename F>
void for_each_member(VertexSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> set_members(VertexSet s);
VertexSet set_from(std::initializer_list<int> vs);
std::string set_to_string(VertexSet s);

// Malformed textual input; offset is the byte position of the problem.
struct parse_error : std::runtime_error {
  std::size_t offset;
  parse_error(const std::string& what, std::size_t at)
      : std::runtime_error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// A configured resource limit (graph order, search cap, ...) was exceeded.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : n_(order), adj_(check_order(order), 0) {}

  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    adj_[u] |= set_of(v);
    adj_[v] |= set_of(u);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return set_contains(adj_[u], v);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexSet closed_neighborhood(int v) const { return neighbors(v) | set_of(v); }

  int degree(int v) const { return set_size(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += set_size(row);
    return twice / 2;
  }

  // All vertices as a mask.
  VertexSet vertex_set() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

  // Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

  // Copy with the edge u-v added if absent, removed if present.
  Graph with_edge_flipped(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("negative graph order");
    if (order > kMaxOrder)
      throw cap_error("graph order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(kMaxOrder));
    return order;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

}  // namespace locdim
