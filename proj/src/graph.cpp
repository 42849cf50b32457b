#include "apx/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apx/errors.hpp"

namespace apx {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(n) + " vertices; at most 64 supported");
  }
  n_ = n;
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const EdgeId> edges) : Graph(n) {
  for (const EdgeId& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : bits_of(adj_[u] & ~((bit(u) << 1) - 1))) out.emplace_back(u, v);
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u : bits_of(adj_[v])) out.push_back(u);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::add_vertex() {
  if (n_ == kMaxVertices) throw CapacityError("graph already has 64 vertices");
  adj_[n_] = 0;
  return n_++;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n && n >= 3; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) n += p;
  Graph g(n);
  std::vector<int> part_of;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) part_of.insert(part_of.end(), parts[i], i);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph heawood_graph() {
  // LCF notation [5,-5]^7.
  Graph g(14);
  for (int i = 0; i < 14; ++i) {
    g.add_edge(i, (i + 1) % 14);
    if (i % 2 == 0) g.add_edge(i, (i + 5) % 14);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const EdgeId& e : a.edges()) g.add_edge(e.u, e.v);
  for (const EdgeId& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph h(g.order());
  for (const EdgeId& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

Graph induced_subgraph(const Graph& g, Row keep) {
  keep &= g.vertex_mask();
  std::array<int, kMaxVertices> new_id{};
  int n = 0;
  for (int v : bits_of(keep)) new_id[v] = n++;
  Graph h(n);
  for (int u : bits_of(keep)) {
    for (int v : bits_of(g.row(u) & keep)) {
      if (u < v) h.add_edge(new_id[u], new_id[v]);
    }
  }
  return h;
}

Graph delete_vertices(const Graph& g, Row removed) {
  if (removed & ~g.vertex_mask()) throw std::invalid_argument("vertex set out of range");
  return induced_subgraph(g, g.vertex_mask() & ~removed);
}

Graph delete_vertices(const Graph& g, std::span<const int> removed) {
  Row mask = 0;
  for (int v : removed) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
    mask |= bit(v);
  }
  return delete_vertices(g, mask);
}

namespace {

void require_edge(const Graph& g, EdgeId e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " not present");
  }
}

}  // namespace

Graph delete_edge(const Graph& g, EdgeId e) {
  require_edge(g, e);
  Graph h = g;
  h.remove_edge(e.u, e.v);
  return h;
}

Graph contract_edge(const Graph& g, EdgeId e) {
  require_edge(g, e);
  Graph merged = g;
  for (int w : bits_of(g.row(e.v))) {
    if (w != e.u) merged.add_edge(e.u, w);
  }
  return delete_vertices(merged, bit(e.v));
}

Graph nabla_y(const Graph& g, int a, int b, int c) {
  const bool distinct = a != b && b != c && a != c;
  const bool in_range = std::min({a, b, c}) >= 0 && std::max({a, b, c}) < g.order();
  if (!distinct || !in_range || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) {
    throw std::invalid_argument("nabla_y: {" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + "} is not a triangle");
  }
  Graph h = g;
  h.remove_edge(a, b);
  h.remove_edge(b, c);
  h.remove_edge(a, c);
  const int y = h.add_vertex();
  h.add_edge(y, a);
  h.add_edge(y, b);
  h.add_edge(y, c);
  return h;
}

Graph y_nabla(const Graph& g, int v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 3) {
    throw std::invalid_argument("y_nabla: vertex " + std::to_string(v) + " does not have degree 3");
  }
  Graph h = g;
  const std::vector<int> nb = g.neighbors(v);
  h.add_edge(nb[0], nb[1]);
  h.add_edge(nb[1], nb[2]);
  h.add_edge(nb[0], nb[2]);
  return delete_vertices(h, bit(v));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Row> components(const Graph& g) {
  std::vector<Row> out;
  Row unseen = g.vertex_mask();
  while (unseen) {
    Row comp = unseen & (~unseen + 1);
    Row frontier = comp;
    while (frontier) {
      Row next = 0;
      for (int v : bits_of(frontier)) next |= g.row(v);
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a) {
    const Row higher = ~((bit(a) << 1) - 1);
    for (int b : bits_of(g.row(a) & higher)) {
      const Row above_b = ~((bit(b) << 1) - 1);
      for (int c : bits_of(g.row(a) & g.row(b) & above_b)) out.push_back({a, b, c});
    }
  }
  return out;
}

int triangle_count(const Graph& g) { return static_cast<int>(triangles(g).size()); }

SimplificationResult simplify(const Graph& g) {
  std::array<Row, kMaxVertices> adj{};
  for (int v = 0; v < g.order(); ++v) adj[v] = g.row(v);
  Row alive = g.vertex_mask();
  auto deg = [&](int v) { return std::popcount(adj[v]); };
  auto remove = [&](int v) {
    for (int w : bits_of(adj[v])) adj[w] &= ~bit(v);
    adj[v] = 0;
    alive &= ~bit(v);
  };

  while (true) {
    // Steps 1-3: strip degree 0 and degree 1 vertices until none remain.
    while (true) {
      Row low = 0;
      for (int v : bits_of(alive)) {
        if (deg(v) <= 1) low |= bit(v);
      }
      if (!low) break;
      // Degree 0 first, then all degree 1 vertices at once.
      for (int v : bits_of(low)) {
        if (deg(v) == 0) remove(v);
      }
      Row ones = 0;
      for (int v : bits_of(low & alive)) {
        if (deg(v) == 1) ones |= bit(v);
      }
      for (int v : bits_of(ones)) remove(v);
    }
    // Step 4: suppress degree 2 vertices.
    for (int v = 0; v < g.order(); ++v) {
      if (!((alive >> v) & 1U) || deg(v) != 2) continue;
      const int a = std::countr_zero(adj[v]);
      const int b = 63 - std::countl_zero(adj[v]);
      remove(v);
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
    // Step 5.
    bool pending = false;
    for (int v : bits_of(alive)) pending |= deg(v) <= 2;
    if (!pending) break;
  }

  SimplificationResult out;
  Graph s(std::popcount(alive));
  std::array<int, kMaxVertices> new_id{};
  for (int v : bits_of(alive)) {
    new_id[v] = static_cast<int>(out.branch_map.size());
    out.branch_map.push_back(v);
  }
  for (int u : bits_of(alive)) {
    for (int v : bits_of(adj[u])) {
      if (u < v) s.add_edge(new_id[u], new_id[v]);
    }
  }
  out.simplified = s;
  return out;
}

}  // namespace apx
