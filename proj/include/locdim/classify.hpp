// Membership tests for the graph families the product formulas branch on.
//
// A graph lies in the dominated family when every one of its minimum local
// adjacency generators fits inside some open neighborhood N(v). The apex
// family contains h when some minimum local metric generator of K_1 + h uses
// the added apex vertex. The two families coincide; tests assert it, the
// code keeps both definitions runnable.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "locdim/graph.hpp"
#include "locdim/solver.hpp"

namespace locdim {

struct DominationWitness {
  // One (basis, dominating vertex) entry per minimum local adjacency basis
  // when dominated; otherwise the basis no vertex dominates.
  std::vector<std::pair<VertexSet, int>> dominated;
  std::optional<VertexSet> violating_basis;
};

struct FamilyMembership {
  bool in_phi = false;      // no edges at all
  bool in_g = false;        // every minimum local adjacency basis dominated
  bool in_g_prime = false;  // some minimum local metric basis of K_1 + h uses the apex
  DominationWitness witness;
};

bool in_phi(const Graph& h);

// The order-0 graph is defined to lie outside both families.
std::pair<bool, DominationWitness> g_membership(const Graph& h, const SolverOptions& opts = {});
bool in_family_g(const Graph& h, const SolverOptions& opts = {});
bool in_family_g_prime(const Graph& h, const SolverOptions& opts = {});

FamilyMembership classify_family(const Graph& h, const SolverOptions& opts = {});

// Closed-form test for local adjacency dimension exactly 1: some edges,
// bipartite, exactly one component with an edge, and that component has
// radius <= 2.
bool has_local_adjacency_dimension_one(const Graph& h);

}  // namespace locdim
