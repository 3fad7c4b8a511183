#include <doctest.h>

#include <random>
#include <vector>

#include "locdim/construct.hpp"
#include "locdim/graph.hpp"
#include "locdim/metrics.hpp"
#include "locdim/solver.hpp"
#include "oracle.hpp"

using namespace locdim;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng() % 2) g.add_edge(u, v);
  return g;
}

const std::vector<std::pair<GeneratorKind, oracle::Kind>> kKindPairs = {
    {GeneratorKind::metric(), oracle::Kind::Metric},
    {GeneratorKind::adjacency(), oracle::Kind::Adjacency},
    {GeneratorKind::local_metric(), oracle::Kind::LocalMetric},
    {GeneratorKind::local_adjacency(), oracle::Kind::LocalAdjacency},
};

}  // namespace

TEST_CASE("generator kinds") {
  CHECK(GeneratorKind::metric().needs_connected());
  CHECK(GeneratorKind::local_metric().needs_connected());
  CHECK_FALSE(GeneratorKind::adjacency().needs_connected());
  CHECK_FALSE(GeneratorKind::truncated(3).needs_connected());
  CHECK(GeneratorKind::local_adjacency().local());
  CHECK_FALSE(GeneratorKind::truncated(2).local());
  CHECK(GeneratorKind::truncated(2).t == 2);
  CHECK_THROWS_AS(GeneratorKind::truncated(0), std::invalid_argument);
}

TEST_CASE("separation requirements") {
  Graph p4 = path_graph(4);
  auto reqs = separation_requirements(p4, GeneratorKind::local_adjacency());
  REQUIRE(reqs.size() == 3);  // one per edge, edge-list order
  CHECK(reqs[0] == set_from({0, 1, 2}));
  CHECK(reqs[1] == set_from({0, 1, 2, 3}));
  CHECK(reqs[2] == set_from({1, 2, 3}));

  auto metric_reqs = separation_requirements(p4, GeneratorKind::metric());
  CHECK(metric_reqs.size() == 6);  // every unordered pair
  for (const auto& kinds : kKindPairs) {
    for (VertexSet s : separation_requirements(p4, kinds.first)) CHECK(set_size(s) >= 2);
  }

  CHECK_THROWS_AS(separation_requirements(empty_graph(3), GeneratorKind::metric()),
                  std::domain_error);
  CHECK_THROWS_AS(separation_requirements(empty_graph(3), GeneratorKind::local_metric()),
                  std::domain_error);
  CHECK(separation_requirements(empty_graph(3), GeneratorKind::adjacency()).size() == 3);
  CHECK(separation_requirements(empty_graph(3), GeneratorKind::local_adjacency()).empty());
}

TEST_CASE("is_generator on pinned instances") {
  CHECK(is_generator(path_graph(4), set_from({1}), GeneratorKind::local_adjacency()));
  CHECK_FALSE(is_generator(path_graph(4), 0, GeneratorKind::local_adjacency()));

  Graph k4 = complete_graph(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      CHECK_FALSE(is_generator(k4, set_from({u, v}), GeneratorKind::local_adjacency()));
  CHECK(is_generator(k4, set_from({0, 1, 2}), GeneratorKind::local_adjacency()));

  CHECK_FALSE(is_generator(cycle_graph(4), set_from({0}), GeneratorKind::metric()));
  CHECK(is_generator(cycle_graph(4), set_from({0, 1}), GeneratorKind::metric()));

  CHECK(is_generator(empty_graph(5), 0, GeneratorKind::local_adjacency()));
  CHECK_FALSE(is_generator(empty_graph(5), 0, GeneratorKind::adjacency()));

  CHECK_THROWS_AS(is_generator(path_graph(4), set_of(4), GeneratorKind::adjacency()),
                  std::out_of_range);
  CHECK_THROWS_AS(is_generator(empty_graph(3), 0, GeneratorKind::metric()), std::domain_error);
}

TEST_CASE("is_generator agrees with the reference check") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng);
    VertexSet s = rng() & (g.vertex_set());
    for (const auto& [kind, okind] : kKindPairs) {
      if (kind.needs_connected() && !is_connected(g)) continue;
      CHECK(is_generator(g, s, kind) == oracle::is_generator(g, oracle::mask_to_vector(s), okind));
    }
  }
}

TEST_CASE("dimension on pinned instances") {
  CHECK(dimension(cycle_graph(8), GeneratorKind::local_adjacency()).value == 2);
  CHECK(dimension(complete_graph(5), GeneratorKind::local_adjacency()).value == 4);

  DimensionResult n7 = dimension(empty_graph(7), GeneratorKind::local_adjacency());
  CHECK(n7.value == 0);
  CHECK(n7.witness == 0);

  DimensionResult p4 = dimension(path_graph(4), GeneratorKind::local_adjacency());
  CHECK(p4.value == 1);
  CHECK(p4.witness == set_of(1));

  CHECK(dimension(path_graph(6), GeneratorKind::local_metric()).value == 1);
  CHECK(dimension(path_graph(5), GeneratorKind::metric()).value == 1);
  CHECK(dimension(cycle_graph(4), GeneratorKind::metric()).value == 2);
  CHECK(dimension(complete_graph(4), GeneratorKind::metric()).value == 3);

  CHECK_THROWS_AS(dimension(empty_graph(3), GeneratorKind::metric()), std::domain_error);
  CHECK_THROWS_AS(dimension(empty_graph(3), GeneratorKind::local_metric()), std::domain_error);

  try {
    dimension(path_graph(17), GeneratorKind::adjacency());
    FAIL("cap not enforced");
  } catch (const cap_error& e) {
    std::string what = e.what();
    CHECK(what.find("17") != std::string::npos);
    CHECK(what.find("16") != std::string::npos);
  }
  SolverOptions wide;
  wide.order_cap = 20;
  CHECK(dimension(path_graph(17), GeneratorKind::adjacency(), wide).value > 0);
}

TEST_CASE("dimension value and least witness agree with the reference search") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng);
    for (const auto& [kind, okind] : kKindPairs) {
      if (kind.needs_connected() && !is_connected(g)) continue;
      DimensionResult got = dimension(g, kind);
      auto [value, witness] = oracle::dimension(g, okind);
      CHECK(got.value == value);
      CHECK(got.witness == witness);
      CHECK(is_generator(g, got.witness, kind));
      CHECK(set_size(got.witness) == got.value);
    }
  }
}

TEST_CASE("all minimum bases") {
  CHECK(all_minimum_bases(path_graph(4), GeneratorKind::local_adjacency()) ==
        std::vector<VertexSet>{set_of(1), set_of(2)});
  CHECK(all_minimum_bases(complete_graph(3), GeneratorKind::local_adjacency()) ==
        std::vector<VertexSet>{set_from({0, 1}), set_from({0, 2}), set_from({1, 2})});
  CHECK(all_minimum_bases(empty_graph(3), GeneratorKind::local_adjacency()) ==
        std::vector<VertexSet>{0});

  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng);
    for (const auto& [kind, okind] : kKindPairs) {
      if (kind.needs_connected() && !is_connected(g)) continue;
      CHECK(all_minimum_bases(g, kind) == oracle::all_minimum_bases(g, okind));
    }
  }

  SolverOptions tight;
  tight.basis_cap = 2;
  CHECK_THROWS_AS(all_minimum_bases(complete_graph(3), GeneratorKind::local_adjacency(), tight),
                  cap_error);
}

TEST_CASE("truncated dimensions") {
  // t = 1 leaves every pair at distance 1, so only the complement of a
  // singleton resolves anything: the value is always order - 1.
  CHECK(dim_t(path_graph(5), 1).value == 4);
  CHECK(dim_t(empty_graph(4), 1).value == 3);
  CHECK(dim_t(complete_graph(3), 1).value == 2);

  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng);
    CHECK(dim_t(g, 1).value == n - 1);
    CHECK(dim_t(g, 2).value == dimension(g, GeneratorKind::adjacency()).value);
    int prev = n - 1;
    for (int t = 1; t <= 7; ++t) {
      int cur = dim_t(g, t).value;
      CHECK(cur <= prev);
      prev = cur;
    }
    if (is_connected(g) && n >= 2) {
      int diam = diameter(g);
      CHECK(dim_t(g, diam == 0 ? 1 : diam).value ==
            dimension(g, GeneratorKind::metric()).value);
    }
  }

  CHECK(dim_t(cycle_graph(6), 2).value == dimension(cycle_graph(6), GeneratorKind::adjacency()).value);
  CHECK_THROWS_AS(dim_t(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("minimum hitting sets") {
  std::vector<VertexSet> sets = {set_from({0, 1}), set_from({1, 2})};
  CHECK(min_hitting_set(sets, set_from({0, 1, 2})) == set_of(1));

  std::vector<VertexSet> disjoint = {set_of(0), set_of(2)};
  CHECK(min_hitting_set(disjoint, set_from({0, 1, 2})) == set_from({0, 2}));

  CHECK(min_hitting_set({}, set_from({0, 1})) == 0);

  // The universe restricts the candidates, not the sets' contents.
  std::vector<VertexSet> wide = {set_from({0, 3}), set_from({1, 3})};
  CHECK(min_hitting_set(wide, set_from({0, 1, 3})) == set_of(3));
  CHECK(min_hitting_set(wide, set_from({0, 1})) == set_from({0, 1}));

  std::vector<VertexSet> unhittable = {set_of(3)};
  CHECK_THROWS_AS(min_hitting_set(unhittable, set_from({0, 1, 2})), std::invalid_argument);

  CHECK(all_minimum_hitting_sets(std::vector<VertexSet>{set_from({0, 1})}, set_from({0, 1, 2}),
                                 10) == std::vector<VertexSet>{set_of(0), set_of(1)});
  CHECK_THROWS_AS(all_minimum_hitting_sets(std::vector<VertexSet>{set_from({0, 1})},
                                           set_from({0, 1, 2}), 1),
                  cap_error);
}
