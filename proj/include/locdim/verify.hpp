// Cross-checks the closed-form product dimensions against exhaustive search
// on the built product, instance by instance or in bulk sweeps.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "locdim/decompose.hpp"
#include "locdim/graph_spec.hpp"

namespace locdim {

struct CheckResult {
  std::string name;
  bool pass = false;
};

enum class VerifyStatus { Pass, Fail, Skip };

struct VerificationReport {
  std::string base_spec;
  std::vector<std::string> member_specs;
  DecompositionReport decomposition;
  FormulaTerms local_metric;
  FormulaTerms local_adjacency;
  ApexFormulaTerms via_apex;
  std::optional<int> brute_local_metric;
  std::optional<int> brute_local_adjacency;
  std::vector<CheckResult> checks;
  VerifyStatus status = VerifyStatus::Fail;
  std::string skip_reason;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  SolverOptions solver;
  // Verify against this product instead of the built one (fault injection).
  std::optional<Graph> product_override;
};

VerificationReport verify_instance(const FamilySpec& spec, const VerifyOptions& opts = {});

// All connected graphs on n labeled vertices, ascending edge-mask order.
// Capped at n <= 5; larger bases come in through graph6 files.
std::vector<Graph> enumerate_small_connected(int n);

struct SweepConfig {
  int max_base_order = 4;
  int exhaustive_max_order = 3;  // orders above draw random samples instead
  std::vector<std::string> pool_specs;
  int samples = 500;  // random instances per base order above the exhaustive cut
  std::uint64_t seed = 1;
  SolverOptions solver;
  std::vector<std::string> base_specs;  // optional explicit bases, else enumerated
};

struct SweepSummary {
  SweepConfig config;
  int instances = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<VerificationReport> failures;
};

SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace locdim
