#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "apx/graph.hpp"
#include "apx/isomorphism.hpp"
#include "doctest.h"

using namespace apx;

namespace {

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Brute force: least edge mask over all n! relabelings.
std::uint64_t brute_canon(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (g.has_edge(p[i], p[j])) m |= std::uint64_t{1} << k;
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

TEST_CASE("certificate applies the labeling") {
  std::mt19937 rng(1);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_graph(rng, static_cast<int>(rng() % 20), 0.35);
    const CanonicalCertificate c = canonical_form(g);
    CHECK(relabel(g, c.labeling) == c.canonical);
  }
}

TEST_CASE("relabeling invariance") {
  std::mt19937 rng(2);
  const Graph pet = petersen_graph();
  const std::string key = canonical_key(pet);
  for (int t = 0; t < 1000; ++t) CHECK(canonical_key(relabel(pet, random_perm(rng, 10))) == key);
  const std::string k5 = canonical_key(complete_graph(5));
  for (int t = 0; t < 50; ++t) CHECK(canonical_key(relabel(complete_graph(5), random_perm(rng, 5))) == k5);
  for (int t = 0; t < 400; ++t) {
    const int n = static_cast<int>(rng() % 24);
    const Graph g = random_graph(rng, n, t % 2 ? 0.2 : 0.5);
    CHECK(canonical_key(relabel(g, random_perm(rng, n))) == canonical_key(g));
  }
}

TEST_CASE("regular and symmetric graphs") {
  std::mt19937 rng(3);
  const Graph graphs[] = {heawood_graph(), complete_bipartite(4, 4), cycle_graph(12),
                          disjoint_union(cycle_graph(6), cycle_graph(6)), Graph(20), complete_graph(16)};
  for (const Graph& g : graphs) {
    const std::string key = canonical_key(g);
    for (int t = 0; t < 30; ++t) CHECK(canonical_key(relabel(g, random_perm(rng, g.order()))) == key);
  }
  // Two non-isomorphic 3-regular graphs with equal degree data.
  Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(!are_isomorphic(prism, complete_bipartite(3, 3)));
  CHECK(!are_isomorphic(complete_bipartite(3, 3), cycle_graph(6)));
  CHECK(!are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("agreement with brute-force canonical form on small graphs") {
  std::mt19937 rng(4);
  std::map<std::uint64_t, std::string> by_brute;
  std::map<std::string, std::uint64_t> by_ours;
  for (int t = 0; t < 1500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, 0.5);
    const std::uint64_t b = brute_canon(g) * 8 + n;
    const std::string k = canonical_key(g);
    auto [it, fresh] = by_brute.emplace(b, k);
    if (!fresh) CHECK(it->second == k);
    auto [jt, fresh2] = by_ours.emplace(k, b);
    if (!fresh2) CHECK(jt->second == b);
  }
}

TEST_CASE("automorphism orbits") {
  const CanonicalLabeling pet = canonical_labeling(petersen_graph());
  for (int v = 0; v < 10; ++v) CHECK(pet.orbit[v] == 0);
  for (const auto& gamma : pet.generators) CHECK(relabel(petersen_graph(), gamma) == petersen_graph());
  const CanonicalLabeling path = canonical_labeling(path_graph(5));
  CHECK(path.orbit == std::vector<int>{0, 1, 2, 1, 0});
}

TEST_CASE("Petersen under a Kneser relabeling") {
  // Vertices are 2-subsets of {0..4}; adjacency is disjointness.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph kneser(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) kneser.add_edge(i, j);
    }
  CHECK(are_isomorphic(kneser, petersen_graph()));
}

TEST_CASE("nabla-y images of K6 are all isomorphic") {
  const Graph k6 = complete_graph(6);
  const Graph p7 = nabla_y(k6, 0, 1, 2);
  for (const auto& t : triangles(k6)) CHECK(are_isomorphic(p7, nabla_y(k6, t[0], t[1], t[2])));
}

TEST_CASE("coloured canonical keys") {
  const Graph p = path_graph(3);
  const int end_red[] = {1, 0, 0};
  const int other_end_red[] = {0, 0, 1};
  const int middle_red[] = {0, 1, 0};
  CHECK(canonical_key(p, end_red) == canonical_key(p, other_end_red));
  CHECK(canonical_key(p, end_red) != canonical_key(p, middle_red));
}

TEST_CASE("dedup") {
  std::mt19937 rng(5);
  std::vector<Graph> k4s;
  for (int t = 0; t < 20; ++t) k4s.push_back(relabel(complete_graph(4), random_perm(rng, 4)));
  CHECK(dedup(k4s).size() == 1);
  CHECK(dedup(std::vector<Graph>{}).empty());
  std::vector<Graph> mixed;
  for (int t = 0; t < 300; ++t) mixed.push_back(random_graph(rng, 5, 0.5));
  const auto a = dedup(mixed, 1);
  const auto b = dedup(mixed, 4);
  CHECK(a == b);
  CHECK(a.front() == mixed.front());
}
