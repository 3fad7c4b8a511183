#include "locdim/metrics.hpp"

#include <algorithm>

namespace locdim {

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  dist[src] = 0;
  VertexSet seen = set_of(src);
  VertexSet frontier = seen;
  int d = 0;
  while (frontier) {
    VertexSet next = 0;
    for_each_member(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= ~seen;
    ++d;
    for_each_member(next, [&](int v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist = bfs_distances(g, s);
    for (int v = 0; v < g.order(); ++v)
      if (dist[v] >= 0) dm.set(s, v, dist[v]);
  }
  return dm;
}

int truncated_distance(const DistanceMatrix& dm, int t, int x, int y) {
  if (t < 1) throw std::invalid_argument("truncation index must be >= 1, got " + std::to_string(t));
  return std::min(dm.at(x, y), t);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet todo = g.vertex_set();
  while (todo) {
    int s = set_min(todo);
    VertexSet comp = set_of(s);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_member(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

int eccentricity_extreme(const Graph& g, bool want_min) {
  if (!is_connected(g)) throw std::domain_error("graph is disconnected");
  if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
  int best = want_min ? kUnreachable : 0;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> dist = bfs_distances(g, v);
    int ecc = *std::max_element(dist.begin(), dist.end());
    best = want_min ? std::min(best, ecc) : std::max(best, ecc);
  }
  return best;
}

}  // namespace

int radius(const Graph& g) { return eccentricity_extreme(g, true); }

int diameter(const Graph& g) { return eccentricity_extreme(g, false); }

int girth(const Graph& g) {
  // Breadth-first search from every vertex; each non-tree edge closes a walk
  // of length dist(u) + dist(w) + 1, and the minimum over all roots is exact.
  int n = g.order();
  auto edge_list = g.edges();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue[0] = s;
    int head = 0, tail = 1;
    while (head < tail) {
      int v = queue[head++];
      for_each_member(g.neighbors(v), [&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue[tail++] = w;
        }
      });
    }
    for (auto [u, w] : edge_list) {
      if (dist[u] < 0 || dist[w] < 0) continue;
      if (parent[u] == w || parent[w] == u) continue;
      best = std::min(best, dist[u] + dist[w] + 1);
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      bool odd = false;
      for_each_member(g.neighbors(v), [&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          odd = true;
        }
      });
      if (odd) return false;
    }
  }
  return true;
}

}  // namespace locdim
