#include "locdim/solver.hpp"

#include "locdim/metrics.hpp"

namespace locdim {

GeneratorKind GeneratorKind::truncated(int t) {
  if (t < 1) throw std::invalid_argument("truncation index must be >= 1, got " + std::to_string(t));
  return {Truncated, t};
}

namespace {

void check_kind(const Graph& g, GeneratorKind kind) {
  if (kind.needs_connected() && !is_connected(g))
    throw std::domain_error("metric generators need a connected graph");
}

void check_cap(const Graph& g, const SolverOptions& opts) {
  if (g.order() > opts.order_cap)
    throw cap_error("order " + std::to_string(g.order()) + " exceeds solver cap " +
                    std::to_string(opts.order_cap));
}

bool hits_all(std::span<const VertexSet> sets, VertexSet s) {
  for (VertexSet m : sets)
    if (!(m & s)) return false;
  return true;
}

// Walks k-subsets of members in lexicographic order, calling f with each
// mask until f returns true; reports whether any call did.
template <typename F>
bool for_each_combination(const std::vector<int>& members, int k, F&& f) {
  int n = static_cast<int>(members.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= set_of(members[i]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VertexSet min_hitting_set(std::span<const VertexSet> sets, VertexSet universe) {
  for (VertexSet m : sets)
    if (!(m & universe)) throw std::invalid_argument("set not hittable within universe");
  std::vector<int> members = set_members(universe);
  for (int k = 0; k <= static_cast<int>(members.size()); ++k) {
    VertexSet found = 0;
    bool ok = for_each_combination(members, k, [&](VertexSet s) {
      if (!hits_all(sets, s)) return false;
      found = s;
      return true;
    });
    if (ok) return found;
  }
  return universe;  // unreachable: the full universe hits every set
}

std::vector<VertexSet> all_minimum_hitting_sets(std::span<const VertexSet> sets,
                                                VertexSet universe, std::size_t cap) {
  int k = set_size(min_hitting_set(sets, universe));
  std::vector<VertexSet> out;
  for_each_combination(set_members(universe), k, [&](VertexSet s) {
    if (!hits_all(sets, s)) return false;
    if (out.size() >= cap)
      throw cap_error("more than " + std::to_string(cap) + " minimum sets requested");
    out.push_back(s);
    return false;
  });
  return out;
}

std::vector<VertexSet> separation_requirements(const Graph& g, GeneratorKind kind) {
  check_kind(g, kind);
  if (kind.variant == GeneratorKind::Truncated && kind.t < 1)
    throw std::invalid_argument("truncation index must be >= 1");
  DistanceMatrix dm = distance_matrix(g);
  int t = kind.variant == GeneratorKind::Truncated ? kind.t
          : (kind.variant == GeneratorKind::Adjacency ||
             kind.variant == GeneratorKind::LocalAdjacency)
              ? 2
              : 0;
  auto rho = [&](int a, int b) { return t ? truncated_distance(dm, t, a, b) : dm.at(a, b); };

  std::vector<VertexSet> out;
  for (int y = 1; y < g.order(); ++y)
    for (int x = 0; x < y; ++x) {
      if (kind.local() && !g.adjacent(x, y)) continue;
      VertexSet sep = 0;
      for (int s = 0; s < g.order(); ++s)
        if (rho(s, x) != rho(s, y)) sep |= set_of(s);
      out.push_back(sep);
    }
  return out;
}

bool is_generator(const Graph& g, VertexSet s, GeneratorKind kind) {
  if (s & ~g.vertex_set()) throw std::out_of_range("generator contains vertices outside the graph");
  auto sets = separation_requirements(g, kind);
  return hits_all(sets, s);
}

DimensionResult dimension(const Graph& g, GeneratorKind kind, const SolverOptions& opts) {
  check_cap(g, opts);
  auto sets = separation_requirements(g, kind);
  VertexSet witness = min_hitting_set(sets, g.vertex_set());
  return {set_size(witness), witness, std::nullopt};
}

std::vector<VertexSet> all_minimum_bases(const Graph& g, GeneratorKind kind,
                                         const SolverOptions& opts) {
  check_cap(g, opts);
  auto sets = separation_requirements(g, kind);
  return all_minimum_hitting_sets(sets, g.vertex_set(), opts.basis_cap);
}

DimensionResult dim_t(const Graph& g, int t, const SolverOptions& opts) {
  return dimension(g, GeneratorKind::truncated(t), opts);
}

}  // namespace locdim
