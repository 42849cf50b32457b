#include "apx/apex.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "apx/planarity.hpp"

namespace apx {

namespace {

class ApexSearch {
 public:
  explicit ApexSearch(std::int64_t& refuted) : refuted_(refuted) {}

  // Vertices are removed by clearing their edges, so ids stay stable.
  bool run(const Graph& h, int k, Row excluded, std::vector<int>& chosen) {
    if (planar(h)) return true;
    if (k == 0 || !edge_bound_allows(h, k)) {
      ++refuted_;
      return false;
    }
    // Any apex set meets every non-planar subgraph, in particular this one.
    const Row candidates = kuratowski_vertices(h) & ~excluded;
    Row tried = 0;
    for (int v : bits_of(candidates)) {
      Graph next = h;
      for (int w : bits_of(h.row(v))) next.remove_edge(v, w);
      chosen.push_back(v);
      if (run(next, k - 1, excluded | tried, chosen)) return true;
      chosen.pop_back();
      tried |= bit(v);
    }
    ++refuted_;
    return false;
  }

 private:
  // Deleting k vertices removes at most the k largest degrees worth of edges;
  // what is left must fit the planar bound 3n - 6 on the remaining vertices.
  static bool edge_bound_allows(const Graph& h, int k) {
    std::array<int, kMaxVertices> deg{};
    int active = 0;
    for (int v = 0; v < h.order(); ++v) {
      if (h.degree(v) > 0) deg[active++] = h.degree(v);
    }
    const int keep = active - k;
    if (keep < 3) return true;
    std::partial_sort(deg.begin(), deg.begin() + k, deg.begin() + active, std::greater<>());
    int removed = 0;
    for (int i = 0; i < k; ++i) removed += deg[i];
    return h.size() - removed <= 3 * keep - 6;
  }

  std::int64_t& refuted_;
};

}  // namespace

ApexVerdict is_n_apex(const Graph& g, int n) {
  if (n < 0) throw std::invalid_argument("apex budget must be non-negative");
  ApexVerdict out;
  out.budget = n;
  ApexSearch search(out.refuted);
  std::vector<int> chosen;
  out.is_n_apex = search.run(g, n, 0, chosen);
  if (out.is_n_apex) {
    std::sort(chosen.begin(), chosen.end());
    out.witness = chosen;
    const PlanarityResult check = is_planar(delete_vertices(g, chosen));
    if (!check.planar || !verify_embedding(delete_vertices(g, chosen), check.embedding)) {
      throw std::logic_error("apex witness failed independent planarity check");
    }
  }
  return out;
}

std::optional<int> apex_number(const Graph& g, int cap) {
  for (int n = 0; n <= cap; ++n) {
    if (is_n_apex(g, n).is_n_apex) return n;
  }
  return std::nullopt;
}

}  // namespace apx
