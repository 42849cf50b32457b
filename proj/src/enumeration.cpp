#include "apx/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "apx/apex.hpp"
#include "apx/families.hpp"
#include "apx/graph6.hpp"
#include "apx/isomorphism.hpp"
#include "apx/planarity.hpp"
#include "json.hpp"

namespace apx {

namespace {

// Constraints resolved for one target order.
struct Target {
  int order = 0;
  int lo = 0;
  int hi = 0;
  int dmin = 0;
  int dmax = 0;
  bool connected = false;
  std::vector<int> seq;
};

using Key = std::uint32_t;

// Canonical deletion prefers a vertex of largest (degree, neighbour degree
// sum, triangles through it).
Key vertex_key(const Graph& g, int v) {
  Key sum = 0;
  Key tri = 0;
  for (int u : bits_of(g.row(v))) {
    sum += static_cast<Key>(g.degree(u));
    tri += static_cast<Key>(std::popcount(g.row(u) & g.row(v)));
  }
  return static_cast<Key>(g.degree(v)) << 24 | sum << 12 | tri / 2;
}

class Generator {
 public:
  explicit Generator(const Target& t) : t_(t) {}

  // Depth-first from g. Graphs reaching stop_order are handed to on_stop;
  // complete graphs of the target order go to emit.
  void descend(const Graph& g, int stop_order, const std::function<void(const Graph&)>& on_node) {
    if (g.order() == t_.order) {
      if (final_ok(g)) on_node(g);
      return;
    }
    if (g.order() == stop_order) {
      on_node(g);
      return;
    }
    for_each_child(g, [&](const Graph& h) { descend(h, stop_order, on_node); });
  }

  Graph root() const { return Graph(1); }

  bool root_ok() const { return t_.order >= 1 && feasible(Graph(1)); }

 private:
  bool final_ok(const Graph& g) const {
    const int m = g.size();
    if (m < t_.lo || m > t_.hi) return false;
    if (g.order() > 0 && (g.min_degree() < t_.dmin || g.max_degree() > t_.dmax)) return false;
    if (t_.connected && !is_connected(g)) return false;
    if (!t_.seq.empty() && degree_sequence(g) != t_.seq) return false;
    return true;
  }

  // Necessary conditions for g to be the induced subgraph left after
  // canonical deletions from some target graph.
  bool feasible(const Graph& g) const {
    const int n = g.order();
    const int r = t_.order - n;
    const int m = g.size();
    int top = 0;
    int deficit = 0;
    int room = 0;
    for (int v = 0; v < n; ++v) {
      const int d = g.degree(v);
      if (d > t_.dmax || d + r < t_.dmin) return false;
      top = std::max(top, d);
      deficit += std::max(0, t_.dmin - d);
      room += std::min(t_.dmax - d, r);
    }
    if (r == 0) return m >= t_.lo && m <= t_.hi;
    // Every later vertex joins with at least the current maximum degree.
    const int least = std::max({deficit, (r * t_.dmin + deficit + 1) / 2, r * top});
    if (m + least > t_.hi) return false;
    const int most = std::min((r * t_.dmax + std::min(room, r * t_.dmax)) / 2, room + r * (r - 1) / 2);
    if (m + most < t_.lo) return false;
    if (top > t_.dmax) return false;
    if (!t_.seq.empty() && !sequence_feasible(g, r, top)) return false;
    return true;
  }

  // Old vertex v needs a target degree in [deg v, deg v + r]; each new vertex
  // needs one of at least the current maximum degree. Sweep targets upward,
  // giving each to the open interval that closes first.
  bool sequence_feasible(const Graph& g, int r, int top) const {
    std::vector<std::pair<int, int>> iv;
    for (int v = 0; v < g.order(); ++v) iv.emplace_back(g.degree(v), g.degree(v) + r);
    for (int i = 0; i < r; ++i) iv.emplace_back(top, kMaxVertices);
    std::sort(iv.begin(), iv.end());
    std::vector<int> open;  // right ends, min-heap
    std::size_t next = 0;
    for (int d : t_.seq) {
      while (next < iv.size() && iv[next].first <= d) {
        open.push_back(iv[next].second);
        std::push_heap(open.begin(), open.end(), std::greater<>());
        ++next;
      }
      while (!open.empty() && open.front() < d) return false;
      if (open.empty()) return false;
      std::pop_heap(open.begin(), open.end(), std::greater<>());
      open.pop_back();
    }
    return next == iv.size() && open.empty();
  }

  template <class F>
  void for_each_child(const Graph& g, F&& visit) {
    const int n = g.order();
    const int r_after = t_.order - n - 1;
    Row eligible = 0;
    int top = 0;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) < t_.dmax) eligible |= bit(v);
      top = std::max(top, g.degree(v));
    }
    const int kmin = std::max({0, t_.dmin - r_after, top});
    const int kmax = std::min(t_.dmax, std::popcount(eligible));
    if (kmin > kmax) return;

    const CanonicalLabeling parent = canonical_labeling(g);
    const bool symmetric = !parent.generators.empty();
    std::unordered_set<std::string> siblings;

    std::vector<int> pool;
    for (int v : bits_of(eligible)) pool.push_back(v);
    std::vector<int> pick;
    auto try_set = [&](Row s) {
      for (const auto& gamma : parent.generators) {
        Row img = 0;
        for (int v : bits_of(s)) img |= bit(gamma[v]);
        if (img < s) return;
      }
      Graph h = g;
      const int w = h.add_vertex();
      for (int v : bits_of(s)) h.add_edge(w, v);
      if (!feasible(h)) return;
      const Key kw = vertex_key(h, w);
      Row ties = 0;
      for (int v = 0; v < n; ++v) {
        const Key kv = vertex_key(h, v);
        if (kv > kw) return;
        if (kv == kw) ties |= bit(v);
      }
      std::string key;
      if (ties) {
        const CanonicalLabeling cl = canonical_labeling(h);
        int star = w;
        for (int v : bits_of(ties))
          if (cl.certificate.labeling[v] > cl.certificate.labeling[star]) star = v;
        if (cl.orbit[star] != cl.orbit[w]) return;
        if (symmetric) key = cl.certificate.bits();
      } else if (symmetric) {
        key = canonical_form(h).bits();
      }
      if (symmetric && !siblings.insert(key).second) return;
      visit(h);
    };
    std::function<void(std::size_t, int, Row)> choose = [&](std::size_t from, int left, Row s) {
      if (left == 0) {
        try_set(s);
        return;
      }
      for (std::size_t i = from; i + left <= pool.size(); ++i) choose(i + 1, left - 1, s | bit(pool[i]));
    };
    for (int k = kmin; k <= kmax; ++k) choose(0, k, 0);
  }

  Target t_;
};

std::vector<Target> resolve(const Constraints& c) {
  c.validate();
  std::vector<Target> out;
  if (c.degree_sequence) {
    Target t;
    t.seq = *c.degree_sequence;
    t.order = static_cast<int>(t.seq.size());
    t.lo = t.hi = std::accumulate(t.seq.begin(), t.seq.end(), 0) / 2;
    t.dmin = t.seq.empty() ? 0 : t.seq.front();
    t.dmax = t.seq.empty() ? 0 : t.seq.back();
    t.connected = c.connected;
    out.push_back(t);
    return out;
  }
  for (int n = c.min_order; n <= c.max_order; ++n) {
    Target t;
    t.order = n;
    t.lo = c.min_size;
    t.hi = std::min(c.max_size, n * (n - 1) / 2);
    t.dmin = c.min_degree;
    t.dmax = c.max_degree < 0 ? std::max(0, n - 1) : std::min(c.max_degree, std::max(0, n - 1));
    if (c.regular) {
      if (*c.regular * n % 2 != 0) continue;
      t.dmin = std::max(t.dmin, *c.regular);
      t.dmax = std::min(t.dmax, *c.regular);
      t.lo = std::max(t.lo, *c.regular * n / 2);
      t.hi = std::min(t.hi, *c.regular * n / 2);
    }
    t.connected = c.connected;
    if (t.lo > t.hi || t.dmin > t.dmax + (n == 0 ? t.dmin : 0)) continue;
    out.push_back(t);
  }
  return out;
}

bool empty_ok(const Target& t) { return t.order == 0 && t.lo <= 0 && t.seq.empty(); }

}  // namespace

Constraints Constraints::order(int n) {
  Constraints c;
  c.min_order = n;
  c.max_order = n;
  return c;
}

void Constraints::validate() const {
  auto fail = [](const std::string& why) { throw std::invalid_argument("inconsistent constraints: " + why); };
  if (degree_sequence) {
    const auto& s = *degree_sequence;
    if (static_cast<int>(s.size()) > kMaxGenerationOrder) fail("degree sequence longer than 24");
    if (!std::is_sorted(s.begin(), s.end())) fail("degree sequence must be ascending");
    if (!s.empty() && (s.front() < 0 || s.back() >= static_cast<int>(s.size())))
      fail("degree out of range for the sequence length");
    const int sum = std::accumulate(s.begin(), s.end(), 0);
    if (sum % 2) fail("degree sequence has odd sum");
    if (sum / 2 < min_size || sum / 2 > max_size) fail("degree sequence size outside the size range");
    if (!s.empty() && s.front() < min_degree) fail("degree sequence below the minimum degree");
    if (regular && (s.empty() ? false : (s.front() != *regular || s.back() != *regular)))
      fail("degree sequence is not regular");
    return;
  }
  if (min_order < 0 || max_order < min_order) fail("order range");
  if (max_order > kMaxGenerationOrder) fail("order above 24");
  if (min_size < 0 || max_size < min_size) fail("size range");
  if (min_degree < 0) fail("negative minimum degree");
  if (max_degree >= 0 && max_degree < min_degree) fail("maximum degree below minimum degree");
  if (regular) {
    const int k = *regular;
    if (k < 0 || k < min_degree || (max_degree >= 0 && k > max_degree)) fail("regular degree outside degree bounds");
    bool any = false;
    for (int n = min_order; n <= max_order; ++n) {
      if (k * n % 2 == 0 && k * n / 2 >= min_size && k * n / 2 <= max_size) any = true;
    }
    if (!any) fail("no order in range admits a " + std::to_string(k) + "-regular graph of allowed size");
  }
}

std::string Constraints::describe() const {
  std::string s;
  if (degree_sequence) {
    s = "degree sequence (";
    for (std::size_t i = 0; i < degree_sequence->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*degree_sequence)[i]);
    }
    s += ")";
  } else {
    s = "order " + std::to_string(min_order) + ".." + std::to_string(max_order) + ", size " +
        std::to_string(min_size) + ".." + std::to_string(max_size) + ", min degree " + std::to_string(min_degree);
    if (max_degree >= 0) s += ", max degree " + std::to_string(max_degree);
    if (regular) s += ", " + std::to_string(*regular) + "-regular";
  }
  s += connected ? ", connected" : ", connected or not";
  return s;
}

void generate(const Constraints& c, const std::function<void(const Graph&)>& visit) {
  for (const Target& t : resolve(c)) {
    if (t.order == 0) {
      if (empty_ok(t)) visit(Graph(0));
      continue;
    }
    Generator gen(t);
    if (!gen.root_ok()) continue;
    gen.descend(gen.root(), -1, visit);
  }
}

std::vector<Graph> generate_filtered(const Constraints& c, const std::function<bool(const Graph&)>& keep,
                                     int jobs) {
  std::vector<Graph> out;
  for (const Target& t : resolve(c)) {
    if (t.order == 0) {
      if (empty_ok(t) && keep(Graph(0))) out.push_back(Graph(0));
      continue;
    }
    Generator gen(t);
    if (!gen.root_ok()) continue;
    if (jobs <= 1 || t.order <= 4) {
      gen.descend(gen.root(), -1, [&](const Graph& g) {
        if (keep(g)) out.push_back(g);
      });
      continue;
    }
    // Expand level by level until there are enough subtrees to share out.
    std::vector<Graph> frontier = {gen.root()};
    int level = 1;
    while (level < t.order - 1 && frontier.size() < static_cast<std::size_t>(64 * jobs)) {
      std::vector<Graph> next;
      for (const Graph& g : frontier) gen.descend(g, level + 1, [&](const Graph& h) { next.push_back(h); });
      frontier = std::move(next);
      ++level;
    }
    std::vector<std::vector<Graph>> results(frontier.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_lock;
    std::exception_ptr error;
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
          Generator local(t);
          try {
            for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
              local.descend(frontier[i], -1, [&](const Graph& g) {
                if (keep(g)) results[i].push_back(g);
              });
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_lock);
            error = std::current_exception();
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& part : results)
      for (Graph& g : part) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> generate_all(const Constraints& c) {
  std::vector<Graph> out;
  generate(c, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> compose_unions(const std::vector<std::vector<Graph>>& parts, int total_size_bound) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::function<void(std::size_t, const Graph&)> rec = [&](std::size_t i, const Graph& acc) {
    if (i == parts.size()) {
      if (seen.insert(canonical_key(acc)).second) out.push_back(acc);
      return;
    }
    for (const Graph& p : parts[i]) {
      if (acc.size() + p.size() > total_size_bound || acc.order() + p.order() > kMaxVertices) continue;
      rec(i + 1, disjoint_union(acc, p));
    }
  };
  if (!parts.empty()) rec(0, Graph(0));
  return out;
}

ObstructionReport search_obstructions(Property p, int max_edges, const Constraints& scope, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  ObstructionReport rep;
  rep.property = p;
  rep.max_edges = max_edges;
  rep.jobs = std::max(1, jobs);
  Constraints c = scope;
  c.max_size = std::min(c.max_size, max_edges);
  if (!c.degree_sequence && c.max_order == 0) {
    c.min_order = std::max(c.min_order, 1);
    c.max_order = c.min_degree > 0 ? std::min(kMaxGenerationOrder, 2 * max_edges / c.min_degree) : kMaxGenerationOrder;
  }
  rep.scope = c;
  std::atomic<std::int64_t> generated{0};
  std::atomic<std::int64_t> nonplanar{0};
  std::atomic<std::int64_t> with_property{0};
  std::atomic<std::int64_t> minimal{0};
  // Cheapest tests first: planarity, then the apex search, then minimality.
  const auto keep = [&](const Graph& g) {
    ++generated;
    if (planar(g)) return false;
    ++nonplanar;
    const int budget = p == Property::N2A ? 2 : (p == Property::NA ? 1 : 0);
    if (budget > 0 && is_n_apex(g, budget).is_n_apex) return false;
    ++with_property;
    if (!is_minor_minimal(g, p).minimal) return false;
    ++minimal;
    return true;
  };
  std::vector<Graph> found = generate_filtered(c, keep, rep.jobs);
  for (const Graph& g : found) rep.members.push_back(canonical_form(g).canonical);
  std::sort(rep.members.begin(), rep.members.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return to_graph6(a) < to_graph6(b);
  });
  rep.counts = {generated.load(), nonplanar.load(), with_property.load(), minimal.load()};
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string report_json(const ObstructionReport& r, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["property"] = property_name(r.property);
  j["max_edges"] = r.max_edges;
  ordered_json scope;
  scope["description"] = r.scope.describe();
  if (r.scope.degree_sequence) {
    scope["degree_sequence"] = *r.scope.degree_sequence;
  } else {
    scope["min_order"] = r.scope.min_order;
    scope["max_order"] = r.scope.max_order;
    scope["min_size"] = r.scope.min_size;
    scope["max_size"] = r.scope.max_size;
    scope["min_degree"] = r.scope.min_degree;
    if (r.scope.max_degree >= 0) scope["max_degree"] = r.scope.max_degree;
    if (r.scope.regular) scope["regular"] = *r.scope.regular;
  }
  scope["connected_only"] = r.scope.connected;
  scope["unions_included"] = !r.scope.connected;
  j["scope"] = scope;
  ordered_json members = ordered_json::array();
  for (const Graph& g : r.members) {
    ordered_json m;
    m["graph6"] = to_graph6(g);
    const auto name = identify(g);
    m["name"] = name ? ordered_json(*name) : ordered_json(nullptr);
    m["order"] = g.order();
    m["size"] = g.size();
    members.push_back(m);
  }
  j["members"] = members;
  j["counts"] = {{"generated", r.counts.generated},
                 {"nonplanar", r.counts.nonplanar},
                 {"with_property", r.counts.with_property},
                 {"minimal", r.counts.minimal}};
  j["jobs"] = r.jobs;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace apx
