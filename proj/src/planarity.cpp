#include "apx/planarity.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace apx {

namespace {

// Left-right planarity test (Brandes' formulation of de Fraysseix-Rosenstiehl).
// Directed edges are numbered as the DFS orients them.
class LeftRight {
 public:
  explicit LeftRight(const Graph& g) : g_(g), n_(g.order()) {
    const int m = g.size();
    src_.reserve(m);
    dst_.reserve(m);
    id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    height_.assign(n_, -1);
    parent_edge_.assign(n_, -1);
    out_.resize(n_);
  }

  bool test() {
    if (n_ > 2 && g_.size() > 3 * n_ - 6) return false;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    const int m = static_cast<int>(src_.size());
    ref_.assign(m, -1);
    side_.assign(m, 1);
    lowpt_edge_.assign(m, -1);
    stack_bottom_.assign(m, -1);
    for (int v = 0; v < n_; ++v) sort_by_nesting(v);
    for (int r : roots_) {
      if (!testing(r)) return false;
    }
    return true;
  }

  Rotation embed() {
    const int m = static_cast<int>(src_.size());
    for (int e = 0; e < m; ++e) nesting_[e] *= sign(e);
    rot_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      sort_by_nesting(v);
      for (int e : out_[v]) rot_[v].push_back(dst_[e]);
    }
    left_ref_.assign(n_, -1);
    right_ref_.assign(n_, -1);
    for (int r : roots_) embedding_dfs(r);
    return rot_;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left;
    Interval right;
    int serial = 0;
    void swap() { std::swap(left, right); }
  };

  int edge(int v, int w) const { return id_[static_cast<std::size_t>(v) * n_ + w]; }

  bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  int top_serial() const { return stack_.empty() ? -1 : stack_.back().serial; }

  void push(ConflictPair p) {
    p.serial = next_serial_++;
    stack_.push_back(p);
  }

  void sort_by_nesting(int v) {
    std::stable_sort(out_[v].begin(), out_[v].end(), [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (int w : bits_of(g_.row(v))) {
      if (edge(v, w) != -1 || edge(w, v) != -1) continue;
      const int vw = static_cast<int>(src_.size());
      src_.push_back(v);
      dst_.push_back(w);
      id_[static_cast<std::size_t>(v) * n_ + w] = vw;
      out_[v].push_back(vw);
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_.push_back(0);
      if (height_[w] == -1) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) nesting_[vw] += 1;
      if (e != -1) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool testing(int v) {
    const int e = parent_edge_[v];
    const auto& adj = out_[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const int ei = adj[i];
      const int w = dst_[ei];
      stack_bottom_[ei] = top_serial();
      if (ei == parent_edge_[w]) {
        if (!testing(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.right = {ei, ei};
        push(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap();
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          ref_[p.right.low] = q.right.high;
        }
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (top_serial() != stack_bottom_[ei]);
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) q.swap();
      if (conflicting(q.right, ei)) return false;
      ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        ref_[p.left.low] = q.left.high;
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) push(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = src_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
      const ConflictPair p = stack_.back();
      stack_.pop_back();
      if (p.left.low != -1) side_[p.left.low] = -1;
    }
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != -1 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {
        ref_[p.left.low] = p.right.low;
        side_[p.left.low] = -1;
        p.left.low = -1;
      }
      while (p.right.high != -1 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        side_[p.right.low] = -1;
        p.right.low = -1;
      }
      // Re-pushing keeps the pair's identity for stack_bottom comparisons.
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  int sign(int e) {
    if (ref_[e] != -1) {
      side_[e] *= sign(ref_[e]);
      ref_[e] = -1;
    }
    return side_[e];
  }

  static std::size_t index_of(const std::vector<int>& r, int x) {
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), x) - r.begin());
  }
  // Rotations are stored clockwise with index 0 as the first neighbour.
  void insert_cw(int v, int w, int ref) {
    auto& r = rot_[v];
    r.insert(r.begin() + static_cast<long>(index_of(r, ref)) + 1, w);
  }
  void insert_ccw(int v, int w, int ref) {
    auto& r = rot_[v];
    r.insert(r.begin() + static_cast<long>(index_of(r, ref)), w);
  }

  void embedding_dfs(int v) {
    const std::vector<int> adj = out_[v];
    for (int ei : adj) {
      const int w = dst_[ei];
      if (ei == parent_edge_[w]) {
        rot_[w].insert(rot_[w].begin(), v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        embedding_dfs(w);
      } else if (side_[ei] == 1) {
        insert_cw(w, v, right_ref_[w]);
      } else {
        insert_ccw(w, v, left_ref_[w]);
        left_ref_[w] = v;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> src_, dst_, id_;
  std::vector<int> height_, parent_edge_, roots_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<std::vector<int>> out_;
  std::vector<int> ref_, side_, lowpt_edge_, stack_bottom_;
  std::vector<ConflictPair> stack_;
  int next_serial_ = 0;
  Rotation rot_;
  std::vector<int> left_ref_, right_ref_;
};

}  // namespace

Row KuratowskiWitness::vertices() const {
  Row r = 0;
  for (const auto& p : paths)
    for (int v : p) r |= bit(v);
  return r;
}

std::vector<EdgeId> KuratowskiWitness::edges() const {
  std::vector<EdgeId> out;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

bool planar(const Graph& g) {
  LeftRight lr(g);
  return lr.test();
}

Row kuratowski_vertices(const Graph& g) {
  Graph h = g;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) continue;
    Graph t = h;
    for (int w : bits_of(h.row(v))) t.remove_edge(v, w);
    if (!planar(t)) h = t;
  }
  Row r = 0;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) > 0) r |= bit(v);
  return r;
}

KuratowskiWitness kuratowski_witness(const Graph& g) {
  // Restrict to the first non-planar component, then shrink to an
  // edge-minimal non-planar subgraph, which is a Kuratowski subdivision.
  Graph h;
  bool found = false;
  for (Row comp : components(g)) {
    Graph c(g.order());
    for (int u : bits_of(comp))
      for (int v : bits_of(g.row(u) & comp))
        if (u < v) c.add_edge(u, v);
    if (!planar(c)) {
      h = c;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("kuratowski_witness: graph is planar");
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) continue;
    Graph t = h;
    for (int w : bits_of(h.row(v))) t.remove_edge(v, w);
    if (!planar(t)) h = t;
  }
  for (const EdgeId& e : h.edges()) {
    Graph t = h;
    t.remove_edge(e.u, e.v);
    if (!planar(t)) h = t;
  }

  KuratowskiWitness w;
  Row branch = 0;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) >= 3) {
      branch |= bit(v);
      w.branch.push_back(v);
    }
  }
  w.kind = w.branch.size() == 5 ? KuratowskiKind::K5 : KuratowskiKind::K33;
  for (int b : w.branch) {
    for (int x : bits_of(h.row(b))) {
      std::vector<int> path = {b};
      int prev = b;
      int cur = x;
      while (!(branch & bit(cur))) {
        path.push_back(cur);
        const Row next = h.row(cur) & ~bit(prev);
        prev = cur;
        cur = std::countr_zero(next);
      }
      path.push_back(cur);
      if (b < cur) w.paths.push_back(std::move(path));
    }
  }
  return w;
}

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult out;
  LeftRight lr(g);
  out.planar = lr.test();
  if (out.planar) {
    out.embedding = lr.embed();
  } else {
    out.witness = kuratowski_witness(g);
  }
  return out;
}

std::vector<std::vector<int>> trace_faces(const Graph& g, const Rotation& rot) {
  const int n = g.order();
  // Position of each neighbour inside rot[v] for O(1) predecessor lookup.
  std::vector<std::array<int, kMaxVertices>> pos(n);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
  std::vector<Row> used(n, 0);
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < n; ++v) {
    for (int w : rot[v]) {
      if (used[v] & bit(w)) continue;
      std::vector<int> face;
      int a = v;
      int b = w;
      while (!(used[a] & bit(b))) {
        used[a] |= bit(b);
        face.push_back(a);
        const auto& rb = rot[b];
        const int k = pos[b][a];
        const int c = rb[(k + rb.size() - 1) % rb.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool verify_embedding(const Graph& g, const Rotation& rot) {
  const int n = g.order();
  if (static_cast<int>(rot.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    Row seen = 0;
    for (int w : rot[v]) {
      if (w < 0 || w >= n || (seen & bit(w))) return false;
      seen |= bit(w);
    }
    if (seen != g.row(v)) return false;
  }
  const auto faces = trace_faces(g, rot);
  for (Row comp : components(g)) {
    int edges = 0;
    for (int v : bits_of(comp)) edges += g.degree(v);
    edges /= 2;
    if (edges == 0) continue;
    int f = 0;
    for (const auto& face : faces) f += (comp & bit(face.front())) ? 1 : 0;
    if (std::popcount(comp) - edges + f != 2) return false;
  }
  return true;
}

bool verify_witness(const Graph& g, const KuratowskiWitness& w) {
  const std::size_t nb = w.branch.size();
  const bool k5 = w.kind == KuratowskiKind::K5;
  if (nb != (k5 ? 5U : 6U) || w.paths.size() != (k5 ? 10U : 9U)) return false;
  Row branch = 0;
  for (int b : w.branch) {
    if (b < 0 || b >= g.order() || (branch & bit(b))) return false;
    branch |= bit(b);
  }
  Row interior = 0;
  std::set<std::pair<int, int>> pairs;
  Graph skeleton(g.order());
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    const int a = p.front();
    const int b = p.back();
    if (!(branch & bit(a)) || !(branch & bit(b)) || a == b) return false;
    if (!pairs.emplace(std::min(a, b), std::max(a, b)).second) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i + 1] < 0 || p[i + 1] >= g.order() || !g.has_edge(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if ((branch | interior) & bit(p[i])) return false;
      interior |= bit(p[i]);
    }
    skeleton.add_edge(a, b);
  }
  if (k5) return true;
  // The ten pairs above must be the nine cross pairs of a bipartition 3+3.
  const Graph s = induced_subgraph(skeleton, branch);
  if (s.size() != 9) return false;
  for (int v = 0; v < 6; ++v) {
    if (s.degree(v) != 3) return false;
    const Row nb_row = s.row(v);
    for (int x : bits_of(nb_row))
      if (s.row(x) & nb_row) return false;
  }
  return true;
}

}  // namespace apx
