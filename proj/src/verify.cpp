#include "locdim/verify.hpp"

#include <chrono>
#include <random>

#include "locdim/construct.hpp"
#include "locdim/graph6.hpp"
#include "locdim/metrics.hpp"

namespace locdim {

VerificationReport verify_instance(const FamilySpec& spec, const VerifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  const Family& fam = spec.family;
  VerificationReport rep;
  rep.base_spec = spec.base_spec;
  rep.member_specs = spec.member_specs;

  rep.decomposition = decompose(fam, opts.solver);
  rep.local_metric = local_metric_terms(rep.decomposition);
  rep.local_adjacency = local_adjacency_terms(rep.decomposition);
  rep.via_apex = product_dimension_via_apex(fam, opts.solver);

  rep.checks.push_back({"apex_formula_matches_direct_formula",
                        rep.via_apex.value == rep.local_metric.value});
  rep.checks.push_back({"rho_prime_at_least_rho",
                        rep.decomposition.rho_prime.value >= rep.decomposition.rho.value});

  Graph prod = opts.product_override ? *opts.product_override : product(fam).graph;
  if (prod.order() > opts.solver.order_cap) {
    rep.status = VerifyStatus::Skip;
    rep.skip_reason = "product order " + std::to_string(prod.order()) + " exceeds solver cap " +
                      std::to_string(opts.solver.order_cap);
  } else {
    rep.brute_local_metric = dimension(prod, GeneratorKind::local_metric(), opts.solver).value;
    rep.brute_local_adjacency =
        dimension(prod, GeneratorKind::local_adjacency(), opts.solver).value;
    rep.checks.push_back({"local_metric_formula_matches_brute_force",
                          rep.local_metric.value == *rep.brute_local_metric});
    rep.checks.push_back({"local_adjacency_formula_matches_brute_force",
                          rep.local_adjacency.value == *rep.brute_local_adjacency});
    rep.checks.push_back(
        {"dimensions_equal_iff_rho_values_equal",
         (*rep.brute_local_metric == *rep.brute_local_adjacency) ==
             (rep.decomposition.rho.value == rep.decomposition.rho_prime.value)});
  }

  if (rep.status != VerifyStatus::Skip) {
    rep.status = VerifyStatus::Pass;
    for (const CheckResult& c : rep.checks)
      if (!c.pass) rep.status = VerifyStatus::Fail;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::vector<Graph> enumerate_small_connected(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument(
        "labeled enumeration is capped at order 5; pass larger bases as graph6 specs");
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < slots.size(); ++e)
      if ((mask >> e) & 1) g.add_edge(slots[e].first, slots[e].second);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

namespace {

void tally(SweepSummary& summary, const VerificationReport& rep) {
  ++summary.instances;
  switch (rep.status) {
    case VerifyStatus::Pass:
      ++summary.passed;
      break;
    case VerifyStatus::Skip:
      ++summary.skipped;
      break;
    case VerifyStatus::Fail:
      ++summary.failed;
      summary.failures.push_back(rep);
      break;
  }
}

FamilySpec assemble(const Graph& base, const std::string& base_spec,
                    const std::vector<Graph>& pool, const std::vector<std::string>& pool_specs,
                    const std::vector<int>& pick) {
  FamilySpec spec;
  spec.base_spec = base_spec;
  std::vector<Graph> members;
  for (int p : pick) {
    members.push_back(pool[p]);
    spec.member_specs.push_back(pool_specs[p]);
  }
  spec.family = make_family(base, std::move(members));
  return spec;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
  if (cfg.pool_specs.empty()) throw std::invalid_argument("sweep needs a non-empty member pool");
  if (cfg.max_base_order < 2) throw std::invalid_argument("sweep needs base orders >= 2");

  std::vector<Graph> pool;
  for (const std::string& s : cfg.pool_specs) pool.push_back(parse_graph_spec(s));

  // Bases grouped by order, each group in a fixed order.
  std::vector<std::vector<Graph>> by_order(cfg.max_base_order + 1);
  if (cfg.base_specs.empty()) {
    for (int n = 2; n <= cfg.max_base_order; ++n) by_order[n] = enumerate_small_connected(n);
  } else {
    for (const std::string& s : cfg.base_specs) {
      Graph g = parse_graph_spec(s);
      if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("sweep bases must be connected with order >= 2: " + s);
      if (g.order() <= cfg.max_base_order) by_order[g.order()].push_back(g);
    }
  }

  SweepSummary summary;
  summary.config = cfg;
  VerifyOptions vopts;
  vopts.solver = cfg.solver;

  // Exhaustive member tuples for small bases.
  for (int n = 2; n <= std::min(cfg.exhaustive_max_order, cfg.max_base_order); ++n)
    for (const Graph& base : by_order[n]) {
      std::string base_spec = "g6:" + to_graph6(base);
      std::vector<int> pick(n, 0);
      while (true) {
        tally(summary, verify_instance(
                           assemble(base, base_spec, pool, cfg.pool_specs, pick), vopts));
        int slot = n - 1;
        while (slot >= 0 && pick[slot] == static_cast<int>(pool.size()) - 1) pick[slot--] = 0;
        if (slot < 0) break;
        ++pick[slot];
      }
    }

  // Seeded random draws for the rest.
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  for (int n = cfg.exhaustive_max_order + 1; n <= cfg.max_base_order; ++n) {
    if (by_order[n].empty()) continue;
    for (int s = 0; s < cfg.samples; ++s) {
      const Graph& base = by_order[n][draw(by_order[n].size())];
      std::vector<int> pick;
      for (int i = 0; i < n; ++i) pick.push_back(static_cast<int>(draw(pool.size())));
      tally(summary, verify_instance(
                         assemble(base, "g6:" + to_graph6(base), pool, cfg.pool_specs, pick),
                         vopts));
    }
  }
  return summary;
}

}  // namespace locdim
