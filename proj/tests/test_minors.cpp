#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>

#include "apx/apex.hpp"
#include "apx/errors.hpp"
#include "apx/graph.hpp"
#include "apx/isomorphism.hpp"
#include "apx/minors.hpp"
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

// Exhaustive oracle: every map from host vertices to pattern vertices or
// "unused", checked as a minor model.
bool brute_minor(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  std::vector<int> label(n, 0);
  while (true) {
    MinorModel m;
    m.branch_sets.assign(k, 0);
    for (int v = 0; v < n; ++v)
      if (label[v] < k) m.branch_sets[label[v]] |= bit(v);
    if (verify_model(g, h, m)) return true;
    int i = 0;
    while (i < n && ++label[i] > k) label[i++] = 0;
    if (i == n) return false;
  }
}

Graph subdivide(const Graph& g, EdgeId e) {
  Graph h = g;
  h.remove_edge(e.u, e.v);
  const int s = h.add_vertex();
  h.add_edge(e.u, s);
  h.add_edge(s, e.v);
  return h;
}

// Exhaustive oracle for split K3,3: partitions into six blocks that induce
// trees, with exactly one host edge per K3,3 edge and none elsewhere.
bool brute_split_k33(const Graph& g) {
  const int n = g.order();
  if (n < 6) return false;
  std::vector<int> block(n, 0);
  bool found = false;
  const Graph k33 = complete_bipartite(3, 3);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (found) return;
    if (n - v < 6 - used) return;
    if (v == n) {
      if (used != 6) return;
      std::array<Row, 6> sets{};
      for (int x = 0; x < n; ++x) sets[block[x]] |= bit(x);
      for (Row s : sets) {
        const Graph t = induced_subgraph(g, s);
        if (!is_connected(t) || t.size() != t.order() - 1) return;
      }
      Graph q(6);
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
          int c = 0;
          for (int x : bits_of(sets[a])) c += std::popcount(g.row(x) & sets[b]);
          if (c > 1) return;
          if (c == 1) q.add_edge(a, b);
        }
      found = are_isomorphic(q, k33);
      return;
    }
    for (int b = 0; b <= std::min(used, 5); ++b) {
      block[v] = b;
      rec(v + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

TEST_CASE("named minor relations") {
  CHECK(has_minor(complete_graph(7), complete_graph(6)).found);
  CHECK(!has_minor(complete_graph(5), complete_bipartite(3, 3)).found);
  const MinorResult p = has_minor(petersen_graph(), complete_graph(5), true);
  CHECK(p.found);
  REQUIRE(p.model.has_value());
  CHECK(verify_model(petersen_graph(), complete_graph(5), *p.model));
  CHECK(has_minor(petersen_graph(), complete_bipartite(3, 3)).found);
  CHECK(!has_minor(petersen_graph(), complete_graph(6)).found);
  CHECK(!has_minor(cycle_graph(8), complete_graph(4)).found);
  CHECK(has_minor(cycle_graph(8), complete_graph(3)).found);
  CHECK(has_minor(complete_graph(4), Graph(4)).found);
  CHECK(!has_minor(complete_graph(4), Graph(5)).found);
  CHECK(has_minor(Graph(3), Graph(0)).found);
  // Isolated pattern vertices need spare host vertices.
  CHECK(!has_minor(complete_graph(5), disjoint_union(complete_graph(5), Graph(1))).found);
  CHECK(has_minor(disjoint_union(complete_graph(5), path_graph(2)), disjoint_union(complete_graph(5), Graph(1))).found);
}

TEST_CASE("agreement with exhaustive models") {
  std::mt19937 rng(31);
  for (int t = 0; t < 150; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(rng, n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)));
    const int k = 1 + static_cast<int>(rng() % 4);
    const Graph h = random_graph(rng, k, static_cast<int>(rng() % (k * (k - 1) / 2 + 1)));
    const MinorResult r = has_minor(g, h, true);
    CHECK(r.found == brute_minor(g, h));
    if (r.found) CHECK(verify_model(g, h, *r.model));
    CHECK(has_minor(g, h).found == r.found);
  }
}

TEST_CASE("planarity agrees with the Kuratowski minor test") {
  std::mt19937 rng(32);
  const Graph k5 = complete_graph(5);
  const Graph k33 = complete_bipartite(3, 3);
  for (int t = 0; t < 600; ++t) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, n + static_cast<int>(rng() % (2 * n)));
    CHECK(planar(g) == (!has_minor(g, k5).found && !has_minor(g, k33).found));
  }
}

TEST_CASE("simplification is a minor and transitivity holds") {
  std::mt19937 rng(33);
  for (int t = 0; t < 100; ++t) {
    const int n = 6 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, n + static_cast<int>(rng() % n));
    const Graph s = simplify(g).simplified;
    const MinorResult r = has_minor(g, s, true);
    CHECK(r.found);
    if (r.found) CHECK(verify_model(g, s, *r.model));
  }
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(rng, 8, 16);
    const Graph h = contract_edge(g, g.edges()[rng() % g.size()]);
    const Graph k = delete_vertices(h, bit(static_cast<int>(rng() % h.order())));
    CHECK(has_minor(g, h).found);
    CHECK(has_minor(h, k).found);
    CHECK(has_minor(g, k).found);
  }
}

TEST_CASE("cancellation") {
  std::atomic<bool> stop{true};
  const MinorResult r = has_minor(heawood_graph(), complete_graph(5), false, &stop);
  CHECK(r.cancelled);
  CHECK(!r.found);
}

TEST_CASE("minor minimality") {
  CHECK(is_minor_minimal(complete_graph(6), Property::NA).minimal);
  CHECK(is_minor_minimal(complete_graph(7), Property::N2A).minimal);
  const MinimalityResult k7 = is_minor_minimal(complete_graph(7), Property::NA);
  CHECK(!k7.minimal);
  CHECK(k7.has_property);
  REQUIRE(k7.failing_child.has_value());
  CHECK(!is_n_apex(*k7.failing_child, 1).is_n_apex);
  CHECK(is_minor_minimal(complete_graph(5), Property::NonPlanar).minimal);
  CHECK(is_minor_minimal(complete_bipartite(3, 3), Property::NonPlanar).minimal);
  CHECK(!is_minor_minimal(petersen_graph(), Property::NonPlanar).minimal);
  CHECK(is_minor_minimal(petersen_graph(), Property::NA).minimal);
  const MinimalityResult planar_input = is_minor_minimal(complete_graph(4), Property::NonPlanar);
  CHECK(!planar_input.has_property);
  CHECK(!planar_input.minimal);
  CHECK(!is_minor_minimal(disjoint_union(complete_graph(6), Graph(1)), Property::NA).minimal);
}

TEST_CASE("one-step children of a minimal graph lose the property") {
  const Graph g = petersen_graph();
  REQUIRE(is_minor_minimal(g, Property::NA).minimal);
  for (const EdgeId& e : g.edges()) {
    CHECK(is_n_apex(delete_edge(g, e), 1).is_n_apex);
    CHECK(is_n_apex(contract_edge(g, e), 1).is_n_apex);
  }
}

TEST_CASE("branch vertices") {
  Graph k33 = subdivide(subdivide(complete_bipartite(3, 3), {0, 3}), {1, 4});
  CHECK(branch_vertices(k33) == 0b111111);
  CHECK(branch_vertices(petersen_graph()) == 0b1111111111);
  CHECK(branch_vertices(cycle_graph(7)) == 0);
}

TEST_CASE("nearness") {
  const Graph p = petersen_graph();
  for (int v = 0; v < 10; ++v) {
    const NearnessReport r = nearness(p, v);
    CHECK(std::popcount(r.branch) == 6);
    CHECK(r.near_vertices == r.branch);
    CHECK(na_by_nearness(p, v));
  }
  // K3,3 plus a vertex joined to one side.
  Graph one_side = complete_bipartite(3, 3);
  const int x = one_side.add_vertex();
  for (int i = 0; i < 3; ++i) one_side.add_edge(x, i);
  const NearnessReport r = nearness(one_side, x);
  CHECK(r.near_vertices == 0b000111);
  CHECK(!na_by_nearness(one_side, x));
  CHECK(is_n_apex(one_side, 1).is_n_apex);
  // Degree 2 attachment.
  Graph two = complete_bipartite(3, 3);
  const int y = two.add_vertex();
  two.add_edge(y, 0);
  two.add_edge(y, 3);
  CHECK(!na_by_nearness(two, y));
  // Isolated designated vertex on a split K3,3.
  Graph iso = subdivide(complete_bipartite(3, 3), {0, 4});
  const int z = iso.add_vertex();
  CHECK(nearness(iso, z).near_vertices == 0);
  // A neighbour interior to a subdivided edge makes the vertex near that edge.
  Graph e = subdivide(complete_bipartite(3, 3), {0, 4});
  const int w = e.add_vertex();
  e.add_edge(w, 6);
  const NearnessReport re = nearness(e, w);
  CHECK(re.near_vertices == (bit(0) | bit(4)));
  REQUIRE(re.near_edges.size() == 1);
  CHECK(re.near_edges[0] == EdgeId(0, 4));
  CHECK_THROWS_AS(nearness(complete_graph(7), 0), DomainError);
  try {
    nearness(disjoint_union(complete_graph(4), Graph(1)), 4);
  } catch (const DomainError& err) {
    CHECK(std::string(err.what()).find("4 vertices and 6 edges") != std::string::npos);
  }
}

TEST_CASE("split K3,3 recognition") {
  const Graph k33 = complete_bipartite(3, 3);
  CHECK(is_split_of(k33, k33));
  // Split vertex 0 into 0 (keeping 3) and a new vertex (keeping 4, 5).
  Graph s = k33;
  s.remove_edge(0, 4);
  s.remove_edge(0, 5);
  const int t = s.add_vertex();
  s.add_edge(0, t);
  s.add_edge(t, 4);
  s.add_edge(t, 5);
  CHECK(is_split_of(s, k33));
  CHECK(brute_split_k33(s));
  CHECK(!is_split_of(petersen_graph(), k33));
  CHECK(!brute_split_k33(petersen_graph()));
  CHECK_THROWS_AS(is_split_of(k33, complete_graph(5)), DomainError);
  std::mt19937 rng(34);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = k33;
    const int steps = static_cast<int>(rng() % 4);
    for (int i = 0; i < steps; ++i) {
      const auto es = g.edges();
      const EdgeId e = es[rng() % es.size()];
      switch (rng() % 3) {
        case 0:
          g = subdivide(g, e);
          break;
        case 1: {
          const int p = g.add_vertex();
          g.add_edge(e.u, p);
          break;
        }
        default: {
          const int u = static_cast<int>(rng() % g.order());
          const int v = static_cast<int>(rng() % g.order());
          if (u != v) g.add_edge(u, v);
        }
      }
    }
    CHECK(is_split_of(g, k33) == brute_split_k33(g));
  }
}
