#include "apx/minors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "apx/apex.hpp"
#include "apx/errors.hpp"
#include "apx/graph6.hpp"
#include "apx/isomorphism.hpp"
#include "apx/planarity.hpp"

namespace apx {

namespace {

Row neighborhood(const Graph& g, Row s) {
  Row r = 0;
  for (int v : bits_of(s)) r |= g.row(v);
  return r & ~s;
}

bool connected_within(const Graph& g, Row s) {
  if (!s) return false;
  Row seen = s & (~s + 1);
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    for (int v : bits_of(frontier)) next |= g.row(v);
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& g, const Graph& h, const std::atomic<bool>* cancel)
      : g_(g), h_(h), cancel_(cancel), sets_(h.order(), 0), assigned_(h.order(), false) {}

  bool run() {
    const int k = h_.order();
    for (int q = 0; q < k; ++q) {
      if (h_.degree(q) == 0) {
        ++isolated_;
      } else {
        active_.push_back(q);
      }
    }
    order_pattern();
    const CanonicalLabeling cl = canonical_labeling(g_);
    for (int v = 0; v < g_.order(); ++v)
      if (cl.orbit[v] == v) reps_ |= bit(v);
    return place(0, g_.vertex_mask());
  }

  bool cancelled() const { return stopped_; }
  const std::vector<Row>& sets() const { return sets_; }

 private:
  // Highest degree first, then repeatedly the vertex with the most already
  // ordered neighbours (ties: higher degree, then lower id).
  void order_pattern() {
    Row ordered = 0;
    while (order_.size() < active_.size()) {
      int best = -1;
      int best_links = -1;
      int best_deg = -1;
      for (int q : active_) {
        if (ordered & bit(q)) continue;
        const int links = std::popcount(h_.row(q) & ordered);
        const int deg = h_.degree(q);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = q;
          best_links = links;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      ordered |= bit(best);
    }
  }

  // Pattern neighbours of q not yet given a branch set.
  int unassigned_neighbors(int q) const {
    int c = 0;
    for (int x : bits_of(h_.row(q)))
      if (!assigned_[x]) ++c;
    return c;
  }

  // Every connected set containing root inside allowed, up to max_size vertices.
  void connected_sets(Row set, Row allowed, Row forbidden, int max_size, std::vector<Row>& out) {
    out.push_back(set);
    if (std::popcount(set) >= max_size) return;
    Row ext = neighborhood(g_, set) & allowed & ~forbidden;
    for (int x : bits_of(ext)) {
      connected_sets(set | bit(x), allowed, forbidden, max_size, out);
      forbidden |= bit(x);
    }
  }

  bool place(std::size_t idx, Row free) {
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
      stopped_ = true;
      return false;
    }
    if (idx == order_.size()) return true;
    const int q = order_[idx];
    const int remaining_after = static_cast<int>(order_.size() - idx - 1) + isolated_;
    const int max_size = std::popcount(free) - remaining_after;
    if (max_size < 1) return false;

    std::vector<int> placed_nbrs;
    for (int x : bits_of(h_.row(q)))
      if (assigned_[x]) placed_nbrs.push_back(x);

    Row roots;
    if (placed_nbrs.empty()) {
      roots = idx == 0 ? reps_ & free : free;
    } else {
      // Grow from the neighbour set with the smallest free boundary.
      int anchor = placed_nbrs.front();
      for (int x : placed_nbrs) {
        if (std::popcount(neighborhood(g_, sets_[x]) & free) < std::popcount(neighborhood(g_, sets_[anchor]) & free))
          anchor = x;
      }
      roots = neighborhood(g_, sets_[anchor]) & free;
    }

    std::vector<Row> cands;
    Row earlier = 0;
    for (int r : bits_of(roots)) {
      connected_sets(bit(r), free & ~earlier, 0, max_size, cands);
      earlier |= bit(r);
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](Row a, Row b) { return std::popcount(a) < std::popcount(b); });

    assigned_[q] = true;
    const int need_q = unassigned_neighbors(q);
    std::vector<Row> failed;
    for (Row b : cands) {
      bool ok = true;
      for (int x : placed_nbrs) {
        if (!(neighborhood(g_, b) & sets_[x])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const Row rest = free & ~b;
      if (std::popcount(neighborhood(g_, b) & rest) < need_q) continue;
      for (int x : placed_nbrs) {
        if (std::popcount(neighborhood(g_, sets_[x]) & rest) < unassigned_neighbors(x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (need_q == 0) {
        // No later set must touch b, so a failed subset rules out all supersets.
        bool dominated = false;
        for (Row f : failed) {
          if ((f & b) == f) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
      }
      sets_[q] = b;
      if (place(idx + 1, rest)) return true;
      if (stopped_) break;
      if (need_q == 0) failed.push_back(b);
    }
    assigned_[q] = false;
    sets_[q] = 0;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const std::atomic<bool>* cancel_;
  std::vector<Row> sets_;
  std::vector<char> assigned_;
  std::vector<int> active_;
  std::vector<int> order_;
  int isolated_ = 0;
  Row reps_ = 0;
  bool stopped_ = false;
};

int count_degree_at_least(const Graph& g, int d) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) c += g.degree(v) >= d ? 1 : 0;
  return c;
}

}  // namespace

MinorResult has_minor(const Graph& g, const Graph& h, bool want_model, const std::atomic<bool>* cancel) {
  MinorResult out;
  if (h.order() > g.order() || h.size() > g.size()) return out;
  if (count_degree_at_least(h, 3) > count_degree_at_least(g, 3)) return out;

  // With minimum degree 3 in the pattern, h is a minor of g iff it is a minor
  // of the simplification: a branch set never needs a vertex of degree <= 1,
  // and a degree 2 vertex can always be contracted into a neighbour.
  const bool reduce = h.order() > 0 && h.min_degree() >= 3 && !want_model;
  const Graph host = reduce ? simplify(g).simplified : g;
  if (reduce && (h.order() > host.order() || h.size() > host.size())) return out;

  MinorSearch search(host, h, cancel);
  out.found = search.run();
  out.cancelled = search.cancelled();
  if (out.found && want_model) {
    MinorModel m;
    std::vector<Row> sets = search.sets();
    // Isolated pattern vertices take the smallest unused host vertices.
    Row used = 0;
    for (Row s : sets) used |= s;
    for (int q = 0; q < h.order(); ++q) {
      if (sets[q] == 0) {
        const Row spare = host.vertex_mask() & ~used;
        sets[q] = spare & (~spare + 1);
        used |= sets[q];
      }
    }
    m.branch_sets = sets;
    if (!verify_model(g, h, m)) throw std::logic_error("minor model failed verification");
    out.model = std::move(m);
  }
  return out;
}

bool verify_model(const Graph& g, const Graph& h, const MinorModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != h.order()) return false;
  Row used = 0;
  for (Row s : model.branch_sets) {
    if (!s || (s & used) || (s & ~g.vertex_mask()) || !connected_within(g, s)) return false;
    used |= s;
  }
  for (const EdgeId& e : h.edges()) {
    if (!(neighborhood(g, model.branch_sets[e.u]) & model.branch_sets[e.v])) return false;
  }
  return true;
}

const char* property_name(Property p) {
  switch (p) {
    case Property::NonPlanar:
      return "nonplanar";
    case Property::NA:
      return "na";
    case Property::N2A:
      return "n2a";
  }
  return "?";
}

bool has_property(const Graph& g, Property p) {
  switch (p) {
    case Property::NonPlanar:
      return !planar(g);
    case Property::NA:
      return !is_n_apex(g, 1).is_n_apex;
    case Property::N2A:
      return !is_n_apex(g, 2).is_n_apex;
  }
  return false;
}

// Each property is closed upward under the minor order (if a minor of G is
// not n-apex, neither is G), and every proper minor of G is reached by a
// chain of single edge deletions, single contractions and isolated vertex
// deletions. Hence G is minor minimal exactly when it has the property and
// none of its one-step minors does.
MinimalityResult is_minor_minimal(const Graph& g, Property p) {
  MinimalityResult out;
  out.has_property = has_property(g, p);
  if (!out.has_property) return out;
  std::unordered_set<std::string> seen;
  auto test = [&](const Graph& child, const std::string& step) {
    if (!seen.insert(canonical_key(child)).second) return false;
    if (has_property(child, p)) {
      out.failing_child = child;
      out.failing_step = step;
      return true;
    }
    return false;
  };
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0 && test(delete_vertices(g, bit(v)), "delete isolated vertex " + std::to_string(v)))
      return out;
  }
  for (const EdgeId& e : g.edges()) {
    const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (test(delete_edge(g, e), "delete edge " + name)) return out;
    if (test(contract_edge(g, e), "contract edge " + name)) return out;
  }
  out.minimal = true;
  return out;
}

Row branch_vertices(const Graph& g) {
  Row r = 0;
  for (int v : simplify(g).branch_map) r |= bit(v);
  return r;
}

NearnessReport nearness(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  const Graph h = delete_vertices(g, bit(v));
  const SimplificationResult s = simplify(h);
  const bool k5 = are_isomorphic(s.simplified, complete_graph(5));
  const bool k33 = are_isomorphic(s.simplified, complete_bipartite(3, 3));
  if (!k5 && !k33) {
    throw DomainError("nearness: (G - " + std::to_string(v) + ") simplifies to a graph with " +
                      std::to_string(s.simplified.order()) + " vertices and " +
                      std::to_string(s.simplified.size()) + " edges (graph6 " + to_graph6(s.simplified) +
                      "), not K5 or K3,3");
  }
  // Ids of h map to g by skipping v.
  auto to_g = [v](int x) { return x < v ? x : x + 1; };
  Row branch = 0;
  for (int x : s.branch_map) branch |= bit(x);
  const Row nv = g.row(v);
  Row nv_h = 0;
  for (int x : bits_of(nv)) nv_h |= bit(x < v ? x : x - 1);

  NearnessReport out;
  out.vertex = v;
  out.simplified = s.simplified;
  Row near = nv_h & branch;
  std::set<EdgeId> near_edges;
  for (Row comp : components(induced_subgraph(h, h.vertex_mask() & ~branch))) {
    // comp is in ids of the induced subgraph; map back to ids of h.
    Row c = 0;
    int k = 0;
    for (int x : bits_of(h.vertex_mask() & ~branch)) {
      if (comp & bit(k)) c |= bit(x);
      ++k;
    }
    if (!(c & nv_h)) continue;
    const Row attach = neighborhood(h, c) & branch;
    near |= attach;
    if (std::popcount(attach) == 2) {
      const int a = std::countr_zero(attach);
      const int b = 63 - std::countl_zero(attach);
      int sa = -1;
      int sb = -1;
      for (std::size_t i = 0; i < s.branch_map.size(); ++i) {
        if (s.branch_map[i] == a) sa = static_cast<int>(i);
        if (s.branch_map[i] == b) sb = static_cast<int>(i);
      }
      if (s.simplified.has_edge(sa, sb)) near_edges.insert(EdgeId(to_g(a), to_g(b)));
    }
  }
  for (int x : bits_of(branch)) out.branch |= bit(to_g(x));
  for (int x : bits_of(near)) out.near_vertices |= bit(to_g(x));
  out.near_edges.assign(near_edges.begin(), near_edges.end());
  return out;
}

bool na_by_nearness(const Graph& g, int v) {
  const NearnessReport r = nearness(g, v);
  return r.near_vertices == r.branch;
}

// A graph is a split K3,3 iff it is connected, has |V| + 3 edges and
// simplifies to K3,3. Six tree branch sets with one edge per K3,3 edge give
// (|V| - 6) + 9 edges; conversely the cycle rank 4 of K3,3 is only preserved
// when no suppression discards an edge, so g is a subdivision of K3,3 with
// trees attached, and such graphs admit the tree partition.
bool is_split_of(const Graph& g, const Graph& pattern) {
  if (!are_isomorphic(pattern, complete_bipartite(3, 3))) {
    throw DomainError("is_split_of: only the K3,3 pattern is supported");
  }
  if (g.order() < 6 || g.size() != g.order() + 3 || !is_connected(g)) return false;
  return are_isomorphic(simplify(g).simplified, complete_bipartite(3, 3));
}

}  // namespace apx
