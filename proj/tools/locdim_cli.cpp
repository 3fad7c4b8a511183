// locdim: exact local metric / local adjacency dimensions of graphs and
// of lexicographic products, with closed-form decomposition and brute-force
// cross-checking.
//
//   locdim invariants <graphspec> [--json]
//   locdim product <familyfile> [--emit-g6]
//   locdim decompose <familyfile> [--json]
//   locdim verify <familyfile> [--json] [--cap N] [--flip-edge U,V]
//   locdim sweep --max-base-order N --pool <file> [--samples K] [--seed S] ...
//
// Exit codes: 0 ok / pass, 1 error / fail, 2 verification skipped, 64 usage.
#include <iostream>

#include <CLI11.hpp>

#include "locdim/classify.hpp"
#include "locdim/construct.hpp"
#include "locdim/graph6.hpp"
#include "locdim/json_io.hpp"
#include "locdim/metrics.hpp"

namespace {

using namespace locdim;

std::string girth_text(int g) { return g == kInfiniteGirth ? "inf" : std::to_string(g); }

Json classes_json(const std::vector<VertexSet>& classes) {
  Json out = Json::array();
  for (VertexSet c : classes) {
    Json members = Json::array();
    for_each_member(c, [&](int v) { members.push_back(v); });
    out.push_back(members);
  }
  return out;
}

int run_invariants(const std::string& spec, bool as_json, int cap) {
  Graph g = load_graph_spec(spec);
  SolverOptions opts;
  opts.order_cap = cap;
  bool connected = is_connected(g);

  std::optional<int> dim, dim_local, rad;
  int adim = dimension(g, GeneratorKind::adjacency(), opts).value;
  int adim_local = dimension(g, GeneratorKind::local_adjacency(), opts).value;
  if (connected && g.order() > 0) {
    dim = dimension(g, GeneratorKind::metric(), opts).value;
    dim_local = dimension(g, GeneratorKind::local_metric(), opts).value;
    rad = radius(g);
  }
  TwinPartition twin = true_twin_classes(g);
  FamilyMembership fam = classify_family(g, opts);

  if (as_json) {
    Json j;
    j["spec"] = spec;
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["connected"] = connected;
    j["dim"] = dim ? Json(*dim) : Json(nullptr);
    j["adim"] = adim;
    j["dim_l"] = dim_local ? Json(*dim_local) : Json(nullptr);
    j["adim_l"] = adim_local;
    j["radius"] = rad ? Json(*rad) : Json(nullptr);
    int gir = girth(g);
    j["girth"] = gir == kInfiniteGirth ? Json("inf") : Json(gir);
    j["twin_classes"] = classes_json(twin.classes);
    j["in_phi"] = fam.in_phi;
    j["in_g"] = fam.in_g;
    j["in_g_prime"] = fam.in_g_prime;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  auto opt_text = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("n/a (disconnected)");
  };
  std::cout << "graph " << spec << ": order " << g.order() << ", " << g.edge_count()
            << " edges, " << (connected ? "connected" : "disconnected") << "\n"
            << "  dim     " << opt_text(dim) << "\n"
            << "  adim    " << adim << "\n"
            << "  dim_l   " << opt_text(dim_local) << "\n"
            << "  adim_l  " << adim_local << "\n"
            << "  radius  " << opt_text(rad) << "\n"
            << "  girth   " << girth_text(girth(g)) << "\n";
  std::cout << "  twin classes:";
  for (VertexSet c : twin.classes) std::cout << " " << set_to_string(c);
  std::cout << "\n  families: phi=" << (fam.in_phi ? "yes" : "no")
            << " g=" << (fam.in_g ? "yes" : "no")
            << " g_prime=" << (fam.in_g_prime ? "yes" : "no") << "\n";
  return 0;
}

int run_product(const std::string& path, bool emit_g6) {
  FamilySpec spec = load_family_file(path);
  ProductGraph prod = product(spec.family);
  if (emit_g6) {
    std::cout << to_graph6(prod.graph) << "\n";
    return 0;
  }
  std::cout << "product of base " << spec.base_spec << " (order " << spec.family.base.order()
            << ") with " << spec.member_specs.size() << " members: order "
            << prod.graph.order() << ", " << prod.graph.edge_count() << " edges\n";
  for (std::size_t i = 0; i < spec.member_specs.size(); ++i)
    std::cout << "  block " << i << " (" << spec.member_specs[i] << "): vertices "
              << prod.offsets[i] << ".." << prod.offsets[i + 1] - 1 << "\n";
  std::cout << "graph6: " << to_graph6(prod.graph) << "\n";
  return 0;
}

void print_terms(const char* label, const FormulaTerms& t) {
  std::cout << "  " << label << " = " << t.sum_adim << " + " << t.twin_term << " + "
            << t.separation << " = " << t.value << "\n";
}

int run_decompose(const std::string& path, bool as_json, int cap) {
  FamilySpec spec = load_family_file(path);
  SolverOptions opts;
  opts.order_cap = cap;
  DecompositionReport rep = decompose(spec.family, opts);
  if (as_json) {
    Json j;
    j["base"] = spec.base_spec;
    j["members"] = spec.member_specs;
    j["report"] = to_json(rep);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "decomposition of " << path << " (base " << spec.base_spec << ")\n";
  std::cout << "  T = " << set_to_string(rep.T) << ", V_E = " << set_to_string(rep.V_E)
            << ", I = " << set_to_string(rep.I) << ", X_E = " << set_to_string(rep.X_E) << "\n";
  std::cout << "  residual pairs:";
  for (auto [a, b] : rep.r_pairs) std::cout << " (" << a << "," << b << ")";
  std::cout << "\n  residual pairs (truncated):";
  for (auto [a, b] : rep.r_prime_pairs) std::cout << " (" << a << "," << b << ")";
  std::cout << "\n  rho = " << rep.rho.value << " via " << set_to_string(rep.rho.witness)
            << ", rho' = " << rep.rho_prime.value << " via "
            << set_to_string(rep.rho_prime.witness) << ", tau = " << rep.tau << "\n";
  print_terms("local metric dimension   ", local_metric_terms(rep));
  print_terms("local adjacency dimension", local_adjacency_terms(rep));
  return 0;
}

int run_verify(const std::string& path, bool as_json, int cap,
               const std::optional<std::pair<int, int>>& flip) {
  FamilySpec spec = load_family_file(path);
  VerifyOptions opts;
  opts.solver.order_cap = cap;
  if (flip) {
    Graph prod = product(spec.family).graph;
    opts.product_override = prod.with_edge_flipped(flip->first, flip->second);
  }
  VerificationReport rep = verify_instance(spec, opts);
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "verify " << path << " (base " << rep.base_spec << ")\n";
    print_terms("local metric dimension   ", rep.local_metric);
    print_terms("local adjacency dimension", rep.local_adjacency);
    std::cout << "  via apex joins: " << rep.via_apex.value << "\n";
    if (rep.brute_local_metric)
      std::cout << "  brute force: dim_l " << *rep.brute_local_metric << ", adim_l "
                << *rep.brute_local_adjacency << "\n";
    for (const CheckResult& c : rep.checks)
      std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "\n";
    switch (rep.status) {
      case VerifyStatus::Pass:
        std::cout << "PASS\n";
        break;
      case VerifyStatus::Fail:
        std::cout << "FAIL\n";
        break;
      case VerifyStatus::Skip:
        std::cout << "SKIP: " << rep.skip_reason << "\n";
        break;
    }
  }
  switch (rep.status) {
    case VerifyStatus::Pass:
      return 0;
    case VerifyStatus::Fail:
      return 1;
    case VerifyStatus::Skip:
      return 2;
  }
  return 1;
}

int cmd_sweep(const SweepConfig& cfg, bool as_json) {
  SweepSummary summary = run_sweep(cfg);
  if (as_json) {
    std::cout << to_json(summary).dump(2) << "\n";
  } else {
    std::cout << "sweep: " << summary.instances << " instances, " << summary.passed
              << " passed, " << summary.failed << " failed, " << summary.skipped
              << " skipped\n";
    for (const VerificationReport& f : summary.failures) {
      std::cout << "FAIL base " << f.base_spec << " members";
      for (const std::string& m : f.member_specs) std::cout << " " << m;
      std::cout << "\n" << to_json(f).dump(2) << "\n";
    }
  }
  return summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local metric and local adjacency dimensions of graphs and lexicographic products"};
  app.require_subcommand(1);

  std::string graphspec, family_path, pool_path, bases_path, flip_text;
  bool as_json = false, emit_g6 = false;
  int cap = SolverOptions{}.order_cap;
  SweepConfig cfg;

  auto* inv = app.add_subcommand("invariants", "dimension and structure invariants of one graph");
  inv->add_option("graphspec", graphspec, "named token, g6:<string>, or @file")->required();
  inv->add_flag("--json", as_json, "emit JSON");
  inv->add_option("--cap", cap, "solver order cap");

  auto* prod = app.add_subcommand("product", "build the lexicographic product of a family file");
  prod->add_option("familyfile", family_path)->required();
  prod->add_flag("--emit-g6", emit_g6, "print only the product graph6 string");

  auto* dec = app.add_subcommand("decompose", "twin / family decomposition of a family file");
  dec->add_option("familyfile", family_path)->required();
  dec->add_flag("--json", as_json, "emit JSON");
  dec->add_option("--cap", cap, "solver order cap");

  auto* ver = app.add_subcommand("verify", "check the closed forms against brute force");
  ver->add_option("familyfile", family_path)->required();
  ver->add_flag("--json", as_json, "emit JSON");
  ver->add_option("--cap", cap, "solver order cap");
  ver->add_option("--flip-edge", flip_text,
                  "flip product edge U,V before brute force (fault injection)");

  auto* swp = app.add_subcommand("sweep", "verify a stream of product instances");
  swp->add_option("--max-base-order", cfg.max_base_order, "largest base order")->required();
  swp->add_option("--pool", pool_path, "member pool file, one spec per line")->required();
  swp->add_option("--samples", cfg.samples, "random instances per non-exhaustive base order");
  swp->add_option("--seed", cfg.seed, "random seed");
  swp->add_option("--exhaustive-max-order", cfg.exhaustive_max_order,
                  "largest base order swept exhaustively");
  swp->add_option("--bases", bases_path, "explicit base list file instead of enumeration");
  swp->add_option("--cap", cfg.solver.order_cap, "solver order cap");
  swp->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (inv->parsed()) return run_invariants(graphspec, as_json, cap);
    if (prod->parsed()) return run_product(family_path, emit_g6);
    if (dec->parsed()) return run_decompose(family_path, as_json, cap);
    if (ver->parsed()) {
      std::optional<std::pair<int, int>> flip;
      if (!flip_text.empty()) {
        std::size_t comma = flip_text.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("--flip-edge expects U,V");
        flip = {std::stoi(flip_text.substr(0, comma)), std::stoi(flip_text.substr(comma + 1))};
      }
      return run_verify(family_path, as_json, cap, flip);
    }
    if (swp->parsed()) {
      cfg.pool_specs = read_spec_lines(pool_path);
      if (!bases_path.empty()) cfg.base_specs = read_spec_lines(bases_path);
      return cmd_sweep(cfg, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
