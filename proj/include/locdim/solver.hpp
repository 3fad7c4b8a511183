// Exact minimum metric / adjacency generators via a hitting-set search.
//
// A vertex s separates the pair (x, y) when rho(s, x) != rho(s, y) for the
// metric rho selected by the kind. A set S is a generator exactly when it
// hits the separator set of every required pair: pairs with an endpoint in S
// need no outside witness, and both endpoints always lie in their own
// separator set, so the two formulations coincide.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "locdim/graph.hpp"

namespace locdim {

struct GeneratorKind {
  enum Variant { Metric, Adjacency, LocalMetric, LocalAdjacency, Truncated };

  Variant variant = Metric;
  int t = 0;  // only meaningful for Truncated

  static GeneratorKind metric() { return {Metric, 0}; }
  static GeneratorKind adjacency() { return {Adjacency, 0}; }
  static GeneratorKind local_metric() { return {LocalMetric, 0}; }
  static GeneratorKind local_adjacency() { return {LocalAdjacency, 0}; }
  static GeneratorKind truncated(int t);

  // Local kinds only need to tell adjacent pairs apart.
  bool local() const { return variant == LocalMetric || variant == LocalAdjacency; }
  // Kinds evaluated in the untruncated shortest-path metric.
  bool needs_connected() const { return variant == Metric || variant == LocalMetric; }
};

struct SolverOptions {
  int order_cap = 16;               // largest order the exhaustive search accepts
  std::size_t basis_cap = 1000000;  // most minimum sets all_minimum_bases will collect
};

struct DimensionResult {
  int value = 0;
  VertexSet witness = 0;  // lexicographically least minimum generator
  std::optional<std::vector<VertexSet>> all_bases;
};

// Separator set of every required pair, in edge-list order for local kinds
// and column-major pair order otherwise.
std::vector<VertexSet> separation_requirements(const Graph& g, GeneratorKind kind);

bool is_generator(const Graph& g, VertexSet s, GeneratorKind kind);

DimensionResult dimension(const Graph& g, GeneratorKind kind, const SolverOptions& opts = {});

// Every minimum generator, in ascending lexicographic order.
std::vector<VertexSet> all_minimum_bases(const Graph& g, GeneratorKind kind,
                                         const SolverOptions& opts = {});

// Dimension of (V, min(d, t)). t = 1 forces order - 1, t = 2 matches the
// adjacency kind, t >= diameter matches the metric kind on connected graphs.
DimensionResult dim_t(const Graph& g, int t, const SolverOptions& opts = {});

// Smallest subset of universe meeting every set, lexicographically least
// among the minimums. Every set must intersect the universe.
VertexSet min_hitting_set(std::span<const VertexSet> sets, VertexSet universe);

std::vector<VertexSet> all_minimum_hitting_sets(std::span<const VertexSet> sets,
                                                VertexSet universe, std::size_t cap);

}  // namespace locdim
