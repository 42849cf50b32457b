#pragma once

// Simple undirected graphs on at most 64 vertices, one machine word per
// adjacency row, plus the elementary edits the rest of the library is built on.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace apx {

using Row = std::uint64_t;
inline constexpr int kMaxVertices = 64;

constexpr Row bit(int v) { return Row{1} << v; }

// Iterate the set bits of a row: for (int v : bits_of(r)) ...
class BitRange {
 public:
  class iterator {
   public:
    explicit iterator(Row r) : r_(r) {}
    int operator*() const { return std::countr_zero(r_); }
    iterator& operator++() {
      r_ &= r_ - 1;
      return *this;
    }
    bool operator==(const iterator& o) const { return r_ == o.r_; }

   private:
    Row r_;
  };
  explicit BitRange(Row r) : r_(r) {}
  iterator begin() const { return iterator(r_); }
  iterator end() const { return iterator(0); }

 private:
  Row r_;
};
inline BitRange bits_of(Row r) { return BitRange(r); }

struct EdgeId {
  int u = 0;
  int v = 0;
  EdgeId() = default;
  EdgeId(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const EdgeId&) const = default;
};

class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices. Throws CapacityError when n > 64.
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const EdgeId> edges);

  int order() const { return n_; }
  int size() const;
  Row row(int v) const { return adj_[v]; }
  Row vertex_mask() const { return n_ == 64 ? ~Row{0} : bit(n_) - 1; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<EdgeId> edges() const;
  std::vector<int> neighbors(int v) const;

  // Builders. Both throw std::invalid_argument on a loop or an out-of-range id.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  // Appends an isolated vertex and returns its id.
  int add_vertex();

  bool operator==(const Graph& o) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

// Standard constructions.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(std::span<const int> parts);
Graph petersen_graph();
Graph heawood_graph();
Graph disjoint_union(const Graph& a, const Graph& b);
// Returns g with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

// Induced subgraph on V(g) minus the given set; survivors keep relative order.
Graph delete_vertices(const Graph& g, Row removed);
Graph delete_vertices(const Graph& g, std::span<const int> removed);
// Induced subgraph on the given mask, ids re-densified in ascending order.
Graph induced_subgraph(const Graph& g, Row keep);

// Both throw std::invalid_argument when e is not an edge of g.
Graph delete_edge(const Graph& g, EdgeId e);
// Merges e.v into e.u (the smaller id), drops the loop and collapses parallels.
// e.v's id disappears and higher ids shift down by one.
Graph contract_edge(const Graph& g, EdgeId e);

// Replace triangle abc by a new vertex (id = order) joined to a, b, c.
Graph nabla_y(const Graph& g, int a, int b, int c);
// Delete degree-3 vertex v and make its neighbours pairwise adjacent.
Graph y_nabla(const Graph& g, int v);

// Ascending degree multiset.
std::vector<int> degree_sequence(const Graph& g);
bool is_connected(const Graph& g);
// Vertex masks of the connected components, ordered by smallest vertex.
std::vector<Row> components(const Graph& g);
int triangle_count(const Graph& g);
std::vector<std::array<int, 3>> triangles(const Graph& g);

struct SimplificationResult {
  Graph simplified;
  // branch_map[i] is the vertex of the input that survives as vertex i.
  std::vector<int> branch_map;
};

// Repeatedly deletes degree 0 and 1 vertices and suppresses degree 2 vertices
// (adding the bypass edge when absent) until none remain.
SimplificationResult simplify(const Graph& g);

}  // namespace apx
