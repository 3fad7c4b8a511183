#include "locdim/classify.hpp"

#include "locdim/construct.hpp"
#include "locdim/metrics.hpp"

namespace locdim {

bool in_phi(const Graph& h) { return h.edge_count() == 0; }

std::pair<bool, DominationWitness> g_membership(const Graph& h, const SolverOptions& opts) {
  DominationWitness w;
  if (h.order() == 0) return {false, w};
  for (VertexSet basis : all_minimum_bases(h, GeneratorKind::local_adjacency(), opts)) {
    int dominator = -1;
    for (int v = 0; v < h.order() && dominator < 0; ++v)
      if ((basis & h.neighbors(v)) == basis) dominator = v;
    if (dominator < 0) {
      w.dominated.clear();
      w.violating_basis = basis;
      return {false, w};
    }
    w.dominated.emplace_back(basis, dominator);
  }
  return {true, w};
}

bool in_family_g(const Graph& h, const SolverOptions& opts) {
  return g_membership(h, opts).first;
}

bool in_family_g_prime(const Graph& h, const SolverOptions& opts) {
  if (h.order() == 0) return false;
  Graph apexed = join(h, complete_graph(1));
  int apex = h.order();
  for (VertexSet basis : all_minimum_bases(apexed, GeneratorKind::local_metric(), opts))
    if (set_contains(basis, apex)) return true;
  return false;
}

FamilyMembership classify_family(const Graph& h, const SolverOptions& opts) {
  FamilyMembership m;
  m.in_phi = in_phi(h);
  auto [in_g, witness] = g_membership(h, opts);
  m.in_g = in_g;
  m.witness = std::move(witness);
  m.in_g_prime = in_family_g_prime(h, opts);
  return m;
}

bool has_local_adjacency_dimension_one(const Graph& h) {
  if (h.edge_count() == 0 || !is_bipartite(h)) return false;
  VertexSet with_edges = 0;
  int count = 0;
  for (VertexSet comp : components(h))
    if (set_size(comp) >= 2) {
      with_edges = comp;
      ++count;
    }
  return count == 1 && radius(induced_subgraph(h, with_edges)) <= 2;
}

}  // namespace locdim
