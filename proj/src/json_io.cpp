#include "locdim/json_io.hpp"

namespace locdim {

namespace {

Json set_json(VertexSet s) {
  Json out = Json::array();
  for_each_member(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet set_from_json(const Json& j) {
  VertexSet s = 0;
  for (int v : j) s |= set_of(v);
  return s;
}

Json set_list_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(set_json(s));
  return out;
}

std::vector<VertexSet> set_list_from_json(const Json& j) {
  std::vector<VertexSet> out;
  for (const Json& s : j) out.push_back(set_from_json(s));
  return out;
}

Json pair_list_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (auto [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

std::vector<std::pair<int, int>> pair_list_from_json(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const Json& p : j) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return out;
}

const char* status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return "pass";
    case VerifyStatus::Fail:
      return "fail";
    case VerifyStatus::Skip:
      return "skip";
  }
  return "fail";
}

VerifyStatus status_from(const std::string& s) {
  if (s == "pass") return VerifyStatus::Pass;
  if (s == "skip") return VerifyStatus::Skip;
  return VerifyStatus::Fail;
}

}  // namespace

Json to_json(const HittingSet& h) {
  return Json{{"value", h.value}, {"witness", set_json(h.witness)}};
}

HittingSet hitting_set_from_json(const Json& j) {
  return {j.at("value").get<int>(), set_from_json(j.at("witness"))};
}

Json to_json(const TwinPartition& t) {
  return Json{{"classes", set_list_json(t.classes)},
              {"nonsingleton", set_list_json(t.nonsingleton)}};
}

TwinPartition twin_partition_from_json(const Json& j) {
  return {set_list_from_json(j.at("classes")), set_list_from_json(j.at("nonsingleton"))};
}

Json to_json(const DecompositionReport& rep) {
  Json j;
  j["twin"] = to_json(rep.twin);
  j["T"] = set_json(rep.T);
  j["V_E"] = set_json(rep.V_E);
  j["I"] = set_json(rep.I);
  j["I_parts"] = set_list_json(rep.I_parts);
  j["representatives"] = rep.representatives;
  j["I_prime"] = set_list_json(rep.I_primes);
  j["X_E"] = set_json(rep.X_E);
  j["R_pairs"] = pair_list_json(rep.r_pairs);
  j["R_prime_pairs"] = pair_list_json(rep.r_prime_pairs);
  j["rho"] = to_json(rep.rho);
  j["rho_prime"] = to_json(rep.rho_prime);
  j["tau"] = rep.tau;
  j["member_adim"] = rep.member_adim;
  j["member_in_phi"] = rep.member_in_phi;
  j["member_in_g"] = rep.member_in_g;
  return j;
}

DecompositionReport decomposition_from_json(const Json& j) {
  DecompositionReport rep;
  rep.twin = twin_partition_from_json(j.at("twin"));
  rep.T = set_from_json(j.at("T"));
  rep.V_E = set_from_json(j.at("V_E"));
  rep.I = set_from_json(j.at("I"));
  rep.I_parts = set_list_from_json(j.at("I_parts"));
  rep.representatives = j.at("representatives").get<std::vector<int>>();
  rep.I_primes = set_list_from_json(j.at("I_prime"));
  rep.X_E = set_from_json(j.at("X_E"));
  rep.r_pairs = pair_list_from_json(j.at("R_pairs"));
  rep.r_prime_pairs = pair_list_from_json(j.at("R_prime_pairs"));
  rep.rho = hitting_set_from_json(j.at("rho"));
  rep.rho_prime = hitting_set_from_json(j.at("rho_prime"));
  rep.tau = j.at("tau").get<int>();
  rep.member_adim = j.at("member_adim").get<std::vector<int>>();
  rep.member_in_phi = j.at("member_in_phi").get<std::vector<bool>>();
  rep.member_in_g = j.at("member_in_g").get<std::vector<bool>>();
  return rep;
}

Json to_json(const FormulaTerms& t) {
  return Json{{"sum_adim", t.sum_adim},
              {"twin_term", t.twin_term},
              {"separation", t.separation},
              {"value", t.value}};
}

FormulaTerms formula_terms_from_json(const Json& j) {
  return {j.at("sum_adim").get<int>(), j.at("twin_term").get<int>(),
          j.at("separation").get<int>(), j.at("value").get<int>()};
}

Json to_json(const ApexFormulaTerms& t) {
  return Json{{"sum_apex_dims", t.sum_apex_dims},
              {"dominated_classes", t.dominated_classes},
              {"separation", t.separation},
              {"value", t.value}};
}

ApexFormulaTerms apex_terms_from_json(const Json& j) {
  return {j.at("sum_apex_dims").get<int>(), j.at("dominated_classes").get<int>(),
          j.at("separation").get<int>(), j.at("value").get<int>()};
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["base"] = rep.base_spec;
  j["members"] = rep.member_specs;
  j["local_metric"] = to_json(rep.local_metric);
  j["local_adjacency"] = to_json(rep.local_adjacency);
  j["via_apex"] = to_json(rep.via_apex);
  j["brute_local_metric"] =
      rep.brute_local_metric ? Json(*rep.brute_local_metric) : Json(nullptr);
  j["brute_local_adjacency"] =
      rep.brute_local_adjacency ? Json(*rep.brute_local_adjacency) : Json(nullptr);
  Json checks = Json::array();
  for (const CheckResult& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  j["status"] = status_name(rep.status);
  j["skip_reason"] = rep.skip_reason;
  j["decomposition"] = to_json(rep.decomposition);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport rep;
  rep.base_spec = j.at("base").get<std::string>();
  rep.member_specs = j.at("members").get<std::vector<std::string>>();
  rep.local_metric = formula_terms_from_json(j.at("local_metric"));
  rep.local_adjacency = formula_terms_from_json(j.at("local_adjacency"));
  rep.via_apex = apex_terms_from_json(j.at("via_apex"));
  if (!j.at("brute_local_metric").is_null())
    rep.brute_local_metric = j.at("brute_local_metric").get<int>();
  if (!j.at("brute_local_adjacency").is_null())
    rep.brute_local_adjacency = j.at("brute_local_adjacency").get<int>();
  for (const Json& c : j.at("checks"))
    rep.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>()});
  rep.status = status_from(j.at("status").get<std::string>());
  rep.skip_reason = j.at("skip_reason").get<std::string>();
  rep.decomposition = decomposition_from_json(j.at("decomposition"));
  rep.elapsed_ms = j.at("elapsed_ms").get<double>();
  return rep;
}

Json to_json(const SweepSummary& summary) {
  Json cfg;
  cfg["max_base_order"] = summary.config.max_base_order;
  cfg["exhaustive_max_order"] = summary.config.exhaustive_max_order;
  cfg["pool"] = summary.config.pool_specs;
  cfg["samples"] = summary.config.samples;
  cfg["seed"] = summary.config.seed;
  cfg["solver_cap"] = summary.config.solver.order_cap;
  cfg["bases"] = summary.config.base_specs;
  Json j;
  j["config"] = cfg;
  j["instances"] = summary.instances;
  j["passed"] = summary.passed;
  j["failed"] = summary.failed;
  j["skipped"] = summary.skipped;
  Json failures = Json::array();
  for (const VerificationReport& f : summary.failures) failures.push_back(to_json(f));
  j["failures"] = failures;
  return j;
}

SweepSummary sweep_summary_from_json(const Json& j) {
  SweepSummary summary;
  const Json& cfg = j.at("config");
  summary.config.max_base_order = cfg.at("max_base_order").get<int>();
  summary.config.exhaustive_max_order = cfg.at("exhaustive_max_order").get<int>();
  summary.config.pool_specs = cfg.at("pool").get<std::vector<std::string>>();
  summary.config.samples = cfg.at("samples").get<int>();
  summary.config.seed = cfg.at("seed").get<std::uint64_t>();
  summary.config.solver.order_cap = cfg.at("solver_cap").get<int>();
  summary.config.base_specs = cfg.at("bases").get<std::vector<std::string>>();
  summary.instances = j.at("instances").get<int>();
  summary.passed = j.at("passed").get<int>();
  summary.failed = j.at("failed").get<int>();
  summary.skipped = j.at("skipped").get<int>();
  for (const Json& f : j.at("failures")) summary.failures.push_back(verification_from_json(f));
  return summary;
}

}  // namespace locdim
