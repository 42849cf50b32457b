#include <random>
#include <stdexcept>

#include "apx/apex.hpp"
#include "apx/graph.hpp"
#include "apx/planarity.hpp"
#include "doctest.h"

using namespace apx;

namespace {

Graph random_graph(std::mt19937& rng, int n, int m) {
  Graph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.size() < std::min(m, n * (n - 1) / 2)) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

// Exhaustive oracle over all vertex subsets of size <= k.
bool brute_apex(const Graph& g, int k) {
  const int n = g.order();
  for (Row s = 0; s < (Row{1} << n); ++s) {
    if (std::popcount(s) <= k && planar(delete_vertices(g, s))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("named graphs") {
  const ApexVerdict k5 = is_n_apex(complete_graph(5), 1);
  CHECK(k5.is_n_apex);
  CHECK(k5.witness.size() == 1);
  CHECK(!is_n_apex(complete_graph(6), 1).is_n_apex);
  CHECK(is_n_apex(complete_graph(6), 1).refuted > 0);
  CHECK(!is_n_apex(complete_graph(7), 2).is_n_apex);
  CHECK(apex_number(complete_graph(7), 4) == 3);
  CHECK(apex_number(petersen_graph(), 4) == 2);
  CHECK(apex_number(cycle_graph(8), 4) == 0);
  CHECK(apex_number(complete_graph(9), 4) == std::nullopt);
  CHECK(!is_n_apex(heawood_graph(), 2).is_n_apex);
  CHECK(is_n_apex(heawood_graph(), 3).is_n_apex);
  CHECK_THROWS_AS(is_n_apex(complete_graph(3), -1), std::invalid_argument);
}

TEST_CASE("Petersen apex number against brute force") {
  const Graph p = petersen_graph();
  for (int v = 0; v < 10; ++v) CHECK(!planar(delete_vertices(p, bit(v))));
  bool pair_found = false;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) pair_found |= planar(delete_vertices(p, bit(a) | bit(b)));
  CHECK(pair_found);
}

TEST_CASE("agreement with exhaustive subsets") {
  std::mt19937 rng(21);
  for (int t = 0; t < 400; ++t) {
    const int n = 5 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, n + static_cast<int>(rng() % (2 * n + 4)));
    for (int k = 0; k <= 2; ++k) {
      const ApexVerdict v = is_n_apex(g, k);
      CHECK(v.is_n_apex == brute_apex(g, k));
      if (v.is_n_apex) CHECK(planar(delete_vertices(g, v.witness)));
    }
  }
}

TEST_CASE("monotone in the budget") {
  std::mt19937 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 9 + static_cast<int>(rng() % 4), 20 + static_cast<int>(rng() % 12));
    bool prev = false;
    for (int k = 0; k <= 4; ++k) {
      const bool now = is_n_apex(g, k).is_n_apex;
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  const Graph g = disjoint_union(complete_graph(5), complete_bipartite(3, 3));
  const ApexVerdict a = is_n_apex(g, 2);
  const ApexVerdict b = is_n_apex(g, 2);
  CHECK(a.is_n_apex);
  CHECK(a.witness == b.witness);
}
