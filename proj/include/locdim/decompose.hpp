// Closed-form local dimension of a lexicographic product, computed from the
// base's true-twin structure and per-member family membership instead of a
// search over the product.
//
// Ingredients, for a family over a connected base G of order >= 2:
//   T    union of the nonsingleton true-twin classes of G
//   V_E  vertices outside T whose member graph has no edges
//   I    vertices whose member graph lies in the dominated family
//   I'_j I intersected with twin class U_j, minus one representative
//   X_E  I minus the union of the I'_j
// Two adjacent X_E vertices form a residual pair when every vertex outside
// V_E and the pair itself sits at equal distance from both; rho is the size
// of a smallest subset of X_E meeting a distance witness for every residual
// pair. The primed variants use the distance truncated at 2.
//
// local metric dimension of the product    = sum adim + twin surplus + rho
// local adjacency dimension of the product = sum adim + twin surplus + rho'
#pragma once

#include <span>

#include "locdim/product.hpp"
#include "locdim/solver.hpp"
#include "locdim/twins.hpp"

namespace locdim {

struct HittingSet {
  int value = 0;
  VertexSet witness = 0;
};

struct DecompositionReport {
  TwinPartition twin;
  VertexSet T = 0;
  VertexSet V_E = 0;
  VertexSet I = 0;
  VertexSet X_E = 0;
  // Aligned with twin.nonsingleton: I within the class, the chosen
  // representative (-1 when the class misses I), and the leftovers.
  std::vector<VertexSet> I_parts;
  std::vector<int> representatives;
  std::vector<VertexSet> I_primes;
  std::vector<std::pair<int, int>> r_pairs;
  std::vector<std::pair<int, int>> r_prime_pairs;
  HittingSet rho;
  HittingSet rho_prime;
  int tau = 0;  // nonsingleton classes meeting I
  // Per-member data the formulas reuse.
  std::vector<int> member_adim;
  std::vector<bool> member_in_phi;
  std::vector<bool> member_in_g;
};

// Representatives default to the minimum index of each I_part; an explicit
// choice (one entry per nonsingleton class, -1 for default) must pick a
// member of the class's I_part. The reported dimensions never depend on it.
DecompositionReport decompose(const Family& fam, const SolverOptions& opts = {});
DecompositionReport decompose(const Family& fam, std::span<const int> representatives,
                              const SolverOptions& opts = {});

struct FormulaTerms {
  int sum_adim = 0;    // sum of member local adjacency dimensions
  int twin_term = 0;   // sum over classes of max(|I_part| - 1, 0)
  int separation = 0;  // rho or rho'
  int value = 0;
};

FormulaTerms local_metric_terms(const DecompositionReport& rep);
FormulaTerms local_adjacency_terms(const DecompositionReport& rep);

FormulaTerms product_local_metric_dimension(const Family& fam, const SolverOptions& opts = {});
FormulaTerms product_local_adjacency_dimension(const Family& fam, const SolverOptions& opts = {});

// Same value through one-point joins: sum over members of the local metric
// dimension of K_1 + H_i, minus the number of twin classes (singleton ones
// included) holding a dominated-family member, plus rho.
struct ApexFormulaTerms {
  int sum_apex_dims = 0;
  int dominated_classes = 0;
  int separation = 0;
  int value = 0;
};

ApexFormulaTerms product_dimension_via_apex(const Family& fam, const SolverOptions& opts = {});

// True exactly when rho' = 0, i.e. when both product dimensions collapse to
// sum + twin surplus: every adjacent base pair from distinct twin classes
// either has a member outside the dominated family, or some vertex beyond
// the pair lies in exactly one of the two open neighborhoods and outside V_E.
bool equality_condition(const Family& fam, const SolverOptions& opts = {});

}  // namespace locdim
