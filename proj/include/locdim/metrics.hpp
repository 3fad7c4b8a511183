// Shortest-path metrics and the structural invariants derived from them.
#pragma once

#include <limits>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int order) : n_(order), d_(static_cast<std::size_t>(order) * order, kUnreachable) {}

  int order() const { return n_; }

  int at(int u, int v) const {
    check(u);
    check(v);
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }

  void set(int u, int v, int dist) {
    check(u);
    check(v);
    d_[static_cast<std::size_t>(u) * n_ + v] = dist;
    d_[static_cast<std::size_t>(v) * n_ + u] = dist;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
  }

  int n_ = 0;
  std::vector<int> d_;
};

// All-pairs distances by breadth-first search from every vertex; unreachable
// pairs hold kUnreachable.
DistanceMatrix distance_matrix(const Graph& g);

// Single-source distances, -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

// min(d(x, y), t); unreachable pairs collapse to t. Requires t >= 1.
int truncated_distance(const DistanceMatrix& dm, int t, int x, int y);

bool is_connected(const Graph& g);

// Connected components as vertex masks, ascending by minimum member.
std::vector<VertexSet> components(const Graph& g);

// Both require a connected graph.
int radius(const Graph& g);
int diameter(const Graph& g);

// Length of a shortest cycle, kInfiniteGirth for forests.
int girth(const Graph& g);

bool is_bipartite(const Graph& g);

}  // namespace locdim
