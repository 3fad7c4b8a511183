#include "locdim/decompose.hpp"

#include <functional>

#include "locdim/classify.hpp"
#include "locdim/construct.hpp"
#include "locdim/metrics.hpp"

namespace locdim {

namespace {

void check_base(const Family& fam) {
  if (fam.base.order() < 2) throw std::invalid_argument("decomposition needs a base of order >= 2");
  if (!is_connected(fam.base)) throw std::domain_error("decomposition needs a connected base");
}

// Residual pairs and the hitting-set bound over them, in the metric rho.
void residual_pairs(const Graph& base, const DecompositionReport& rep,
                    const std::function<int(int, int)>& rho,
                    std::vector<std::pair<int, int>>& pairs, HittingSet& bound) {
  std::vector<int> xs = set_members(rep.X_E);
  std::vector<VertexSet> witness_sets;
  for (std::size_t b = 0; b < xs.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) {
      int x = xs[a], y = xs[b];
      if (!base.adjacent(x, y)) continue;
      VertexSet others = base.vertex_set() & ~(rep.V_E | set_of(x) | set_of(y));
      bool residual = true;
      for_each_member(others, [&](int u) {
        if (rho(u, x) != rho(u, y)) residual = false;
      });
      if (!residual) continue;
      pairs.emplace_back(x, y);
      VertexSet w = 0;
      for_each_member(rep.X_E, [&](int u) {
        if (rho(u, x) != rho(u, y)) w |= set_of(u);
      });
      witness_sets.push_back(w);
    }
  bound.witness = min_hitting_set(witness_sets, rep.X_E);
  bound.value = set_size(bound.witness);
}

}  // namespace

DecompositionReport decompose(const Family& fam, const SolverOptions& opts) {
  return decompose(fam, {}, opts);
}

DecompositionReport decompose(const Family& fam, std::span<const int> representatives,
                              const SolverOptions& opts) {
  check_base(fam);
  DecompositionReport rep;
  rep.twin = true_twin_classes(fam.base);
  for (VertexSet cls : rep.twin.nonsingleton) rep.T |= cls;

  for (int i = 0; i < fam.base.order(); ++i) {
    const Graph& m = fam.members[i];
    rep.member_adim.push_back(dimension(m, GeneratorKind::local_adjacency(), opts).value);
    rep.member_in_phi.push_back(in_phi(m));
    rep.member_in_g.push_back(in_family_g(m, opts));
    if (rep.member_in_phi[i] && !set_contains(rep.T, i)) rep.V_E |= set_of(i);
    if (rep.member_in_g[i]) rep.I |= set_of(i);
  }

  if (!representatives.empty() &&
      representatives.size() != rep.twin.nonsingleton.size())
    throw std::invalid_argument("one representative entry per nonsingleton twin class expected");

  VertexSet dropped = 0;
  for (std::size_t j = 0; j < rep.twin.nonsingleton.size(); ++j) {
    VertexSet part = rep.twin.nonsingleton[j] & rep.I;
    rep.I_parts.push_back(part);
    int chosen = -1;
    if (part) {
      chosen = representatives.empty() || representatives[j] < 0 ? set_min(part)
                                                                 : representatives[j];
      if (!set_contains(part, chosen))
        throw std::invalid_argument("representative " + std::to_string(chosen) +
                                    " is not a dominated-family member of its twin class");
      ++rep.tau;
    }
    rep.representatives.push_back(chosen);
    VertexSet prime = chosen < 0 ? 0 : part & ~set_of(chosen);
    rep.I_primes.push_back(prime);
    dropped |= prime;
  }
  rep.X_E = rep.I & ~dropped;

  DistanceMatrix dm = distance_matrix(fam.base);
  residual_pairs(fam.base, rep, [&](int u, int v) { return dm.at(u, v); }, rep.r_pairs, rep.rho);
  residual_pairs(
      fam.base, rep, [&](int u, int v) { return truncated_distance(dm, 2, u, v); },
      rep.r_prime_pairs, rep.rho_prime);
  return rep;
}

namespace {

FormulaTerms terms_from(const DecompositionReport& rep, int separation) {
  FormulaTerms t;
  for (int a : rep.member_adim) t.sum_adim += a;
  for (VertexSet part : rep.I_parts)
    if (part) t.twin_term += set_size(part) - 1;
  t.separation = separation;
  t.value = t.sum_adim + t.twin_term + t.separation;
  return t;
}

}  // namespace

FormulaTerms local_metric_terms(const DecompositionReport& rep) {
  return terms_from(rep, rep.rho.value);
}

FormulaTerms local_adjacency_terms(const DecompositionReport& rep) {
  return terms_from(rep, rep.rho_prime.value);
}

FormulaTerms product_local_metric_dimension(const Family& fam, const SolverOptions& opts) {
  return local_metric_terms(decompose(fam, opts));
}

FormulaTerms product_local_adjacency_dimension(const Family& fam, const SolverOptions& opts) {
  return local_adjacency_terms(decompose(fam, opts));
}

ApexFormulaTerms product_dimension_via_apex(const Family& fam, const SolverOptions& opts) {
  DecompositionReport rep = decompose(fam, opts);
  ApexFormulaTerms t;
  for (const Graph& m : fam.members)
    t.sum_apex_dims +=
        dimension(join(m, complete_graph(1)), GeneratorKind::local_metric(), opts).value;
  t.dominated_classes = rep.tau + set_size(rep.I & ~rep.T);
  t.separation = rep.rho.value;
  t.value = t.sum_apex_dims - t.dominated_classes + t.separation;
  return t;
}

bool equality_condition(const Family& fam, const SolverOptions& opts) {
  DecompositionReport rep = decompose(fam, opts);
  std::vector<int> class_of(fam.base.order());
  for (std::size_t c = 0; c < rep.twin.classes.size(); ++c)
    for_each_member(rep.twin.classes[c], [&](int v) { class_of[v] = static_cast<int>(c); });
  for (auto [i, j] : fam.base.edges()) {
    if (class_of[i] == class_of[j]) continue;
    if (!rep.member_in_g[i] || !rep.member_in_g[j]) continue;
    VertexSet sym = (fam.base.neighbors(i) ^ fam.base.neighbors(j)) & ~(set_of(i) | set_of(j));
    if (!(sym & ~rep.V_E)) return false;
  }
  return true;
}

}  // namespace locdim
