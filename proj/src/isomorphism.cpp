#include "apx/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "apx/graph6.hpp"

namespace apx {

namespace {

using Trace = std::uint64_t;

void mix(Trace& h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
}

// Ordered partition of the vertex set. Cells are contiguous runs of lab;
// len and mask are meaningful only at cell start positions.
struct Partition {
  std::array<std::int8_t, kMaxVertices> lab{};
  std::array<std::int8_t, kMaxVertices> start_of{};
  std::array<std::int8_t, kMaxVertices> len{};
  std::array<Row, kMaxVertices> mask{};
  int cells = 0;
};

struct Leaf {
  bool set = false;
  int depth = 0;
  std::array<Trace, kMaxVertices + 1> inv{};
  std::array<int, kMaxVertices> path{};
  std::array<std::int8_t, kMaxVertices> lab{};
  std::array<Row, kMaxVertices> rows{};
};

// Lexicographic order on invariant prefixes; a proper prefix sorts first.
int compare_inv(const Trace* a, int alen, const Trace* b, int blen) {
  const int k = std::min(alen, blen);
  for (int i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return alen == blen ? 0 : (alen < blen ? -1 : 1);
}

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    }
    Partition p;
    int queue_len = 0;
    std::array<int, kMaxVertices> queue{};
    for (int i = 0; i < n_; ++i) {
      p.lab[i] = static_cast<std::int8_t>(order[i]);
      const bool fresh = i == 0 || (!colors.empty() && colors[order[i]] != colors[order[i - 1]]);
      if (fresh) {
        queue[queue_len++] = i;
        p.cells++;
        p.len[i] = 0;
        p.mask[i] = 0;
      }
      const int s = queue[queue_len - 1];
      p.start_of[order[i]] = static_cast<std::int8_t>(s);
      p.len[s]++;
      p.mask[s] |= bit(order[i]);
    }
    root_ = p;
    root_trace_ = refine(root_, queue.data(), queue_len);
  }

  void run() {
    cur_inv_[0] = root_trace_;
    dfs(0, root_);
  }

  const Leaf& best() const { return best_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }

 private:
  Trace refine(Partition& p, const int* initial, int count) {
    std::array<int, kMaxVertices> ring{};
    Row queued = 0;
    unsigned head = 0;
    unsigned tail = 0;
    for (int i = 0; i < count; ++i) {
      ring[tail++ % kMaxVertices] = initial[i];
      queued |= bit(initial[i]);
    }
    Trace h = 0x243f6a8885a308d3ULL;
    while (head != tail && p.cells < n_) {
      const int s = ring[head++ % kMaxVertices];
      queued &= ~bit(s);
      const Row splitter = p.mask[s];
      mix(h, static_cast<std::uint64_t>(s) << 8 | std::popcount(splitter));
      for (int c = 0; c < n_;) {
        const int L = p.len[c];
        if (L == 1) {
          ++c;
          continue;
        }
        std::array<int, kMaxVertices> cnt{};
        int lo = kMaxVertices;
        int hi = -1;
        for (int i = c; i < c + L; ++i) {
          cnt[i] = std::popcount(g_.row(p.lab[i]) & splitter);
          lo = std::min(lo, cnt[i]);
          hi = std::max(hi, cnt[i]);
        }
        if (lo == hi) {
          c += L;
          continue;
        }
        // Insertion sort of positions c..c+L-1 by count.
        for (int i = c + 1; i < c + L; ++i) {
          const int kv = cnt[i];
          const std::int8_t lv = p.lab[i];
          int j = i - 1;
          while (j >= c && cnt[j] > kv) {
            cnt[j + 1] = cnt[j];
            p.lab[j + 1] = p.lab[j];
            --j;
          }
          cnt[j + 1] = kv;
          p.lab[j + 1] = lv;
        }
        mix(h, static_cast<std::uint64_t>(c) << 16 | static_cast<std::uint64_t>(L));
        int fs = c;
        for (int i = c; i <= c + L; ++i) {
          if (i < c + L && cnt[i] == cnt[fs]) continue;
          Row m = 0;
          for (int k = fs; k < i; ++k) {
            m |= bit(p.lab[k]);
            p.start_of[p.lab[k]] = static_cast<std::int8_t>(fs);
          }
          p.len[fs] = static_cast<std::int8_t>(i - fs);
          p.mask[fs] = m;
          mix(h, static_cast<std::uint64_t>(cnt[fs]) << 8 | static_cast<std::uint64_t>(i - fs));
          if (!(queued & bit(fs))) {
            ring[tail++ % kMaxVertices] = fs;
            queued |= bit(fs);
          }
          if (fs != c) p.cells++;
          fs = i;
        }
        c += L;
      }
    }
    mix(h, static_cast<std::uint64_t>(p.cells));
    return h;
  }

  Trace individualize(Partition& p, int v) {
    const int s = p.start_of[v];
    const int L = p.len[s];
    int pos = s;
    while (p.lab[pos] != v) ++pos;
    std::swap(p.lab[pos], p.lab[s]);
    p.len[s] = 1;
    p.len[s + 1] = static_cast<std::int8_t>(L - 1);
    p.mask[s + 1] = p.mask[s] & ~bit(v);
    p.mask[s] = bit(v);
    for (int i = s + 1; i < s + L; ++i) p.start_of[p.lab[i]] = static_cast<std::int8_t>(s + 1);
    p.cells++;
    const int q[1] = {s};
    return refine(p, q, 1);
  }

  void canonical_rows(const Partition& p, std::array<Row, kMaxVertices>& rows) const {
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    for (int i = 0; i < n_; ++i) {
      Row r = 0;
      for (int u : bits_of(g_.row(p.lab[i]))) r |= bit(pos[u]);
      rows[i] = r;
    }
  }

  static bool rows_equal(const std::array<Row, kMaxVertices>& a, const std::array<Row, kMaxVertices>& b,
                         int n) {
    return std::equal(a.begin(), a.begin() + n, b.begin());
  }

  static int rows_compare(const std::array<Row, kMaxVertices>& a, const std::array<Row, kMaxVertices>& b,
                          int n) {
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void record(const Leaf& from, const Partition& p) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from.lab[i]] = p.lab[i];
    for (int v = 0; v < n_; ++v) {
      if (gamma[v] != v) {
        gens_.push_back(std::move(gamma));
        return;
      }
    }
  }

  int common_level(const Leaf& other, int depth) const {
    int k = 0;
    while (k < depth && k < other.depth && path_[k] == other.path[k]) ++k;
    return k;
  }

  void store(Leaf& leaf, const Partition& p, int depth, const std::array<Row, kMaxVertices>& rows) {
    leaf.set = true;
    leaf.depth = depth;
    std::copy(cur_inv_.begin(), cur_inv_.begin() + depth + 1, leaf.inv.begin());
    std::copy(path_.begin(), path_.begin() + depth, leaf.path.begin());
    leaf.lab = p.lab;
    leaf.rows = rows;
  }

  int leaf(int depth, const Partition& p) {
    std::array<Row, kMaxVertices> rows{};
    canonical_rows(p, rows);
    if (!first_.set) {
      store(first_, p, depth, rows);
      best_ = first_;
      return depth - 1;
    }
    const int inv_first = compare_inv(cur_inv_.data(), depth + 1, first_.inv.data(), first_.depth + 1);
    if (inv_first == 0 && rows_equal(rows, first_.rows, n_)) {
      record(first_, p);
      return common_level(first_, depth);
    }
    const int inv_best = compare_inv(cur_inv_.data(), depth + 1, best_.inv.data(), best_.depth + 1);
    const int cmp = inv_best != 0 ? inv_best : rows_compare(rows, best_.rows, n_);
    if (cmp == 0) {
      record(best_, p);
      return common_level(best_, depth);
    }
    if (cmp < 0) store(best_, p, depth, rows);
    return depth - 1;
  }

  int find(std::array<int, kMaxVertices>& uf, int v) const {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  }

  // Union-find over the generators that fix path_[0..level) pointwise.
  void stabilizer_orbits(int level, std::array<int, kMaxVertices>& uf) {
    std::iota(uf.begin(), uf.begin() + n_, 0);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (int k = 0; k < level && fixes; ++k) fixes = gamma[path_[k]] == path_[k];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(uf, v);
        const int b = find(uf, gamma[v]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  int dfs(int level, const Partition& p) {
    if (p.cells == n_) return leaf(level, p);
    int t = 0;
    while (p.len[t] == 1) ++t;
    const Row cell = p.mask[t];
    Row done = 0;
    std::array<int, kMaxVertices> uf{};
    std::size_t seen_gens = static_cast<std::size_t>(-1);
    for (int v : bits_of(cell)) {
      if (done) {
        if (seen_gens != gens_.size()) {
          stabilizer_orbits(level, uf);
          seen_gens = gens_.size();
        }
        bool pruned = false;
        for (int u : bits_of(done)) {
          if (find(uf, u) == find(uf, v)) {
            pruned = true;
            break;
          }
        }
        if (pruned) continue;
      }
      done |= bit(v);
      Partition child = p;
      path_[level] = v;
      cur_inv_[level + 1] = individualize(child, v);
      if (first_.set) {
        const int len = level + 2;
        const bool on_first =
            compare_inv(cur_inv_.data(), len, first_.inv.data(), std::min(len, first_.depth + 1)) == 0;
        const bool worse =
            compare_inv(cur_inv_.data(), len, best_.inv.data(), std::min(len, best_.depth + 1)) > 0;
        if (!on_first && worse) continue;
      }
      const int r = dfs(level + 1, child);
      if (r < level) return r;
    }
    return level - 1;
  }

  const Graph& g_;
  int n_;
  Partition root_;
  Trace root_trace_ = 0;
  std::array<Trace, kMaxVertices + 1> cur_inv_{};
  std::array<int, kMaxVertices> path_{};
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

std::string CanonicalCertificate::bits() const { return to_graph6(canonical); }

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  CanonicalLabeling out;
  if (n == 0) {
    out.certificate.canonical = Graph(0);
    return out;
  }
  Canonizer c(g, colors);
  c.run();
  const Leaf& best = c.best();
  out.certificate.labeling.resize(n);
  for (int i = 0; i < n; ++i) out.certificate.labeling[best.lab[i]] = i;
  Graph h(n);
  for (int i = 0; i < n; ++i) {
    for (int j : bits_of(best.rows[i])) {
      if (i < j) h.add_edge(i, j);
    }
  }
  out.certificate.canonical = h;
  out.generators = c.generators();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const auto& gamma : out.generators) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(gamma[v]);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  }
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v) out.orbit[v] = find(v);
  return out;
}

CanonicalCertificate canonical_form(const Graph& g) { return canonical_labeling(g).certificate; }

std::string canonical_key(const Graph& g, std::span<const int> colors) {
  const CanonicalLabeling cl = canonical_labeling(g, colors);
  std::string key = cl.certificate.bits();
  if (!colors.empty()) {
    std::vector<int> by_pos(g.order());
    for (int v = 0; v < g.order(); ++v) by_pos[cl.certificate.labeling[v]] = colors[v];
    key.push_back('|');
    for (int c : by_pos) {
      key += std::to_string(c);
      key.push_back(',');
    }
  }
  return key;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Graph> dedup(std::span<const Graph> graphs, int jobs) {
  std::vector<std::string> keys(graphs.size());
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, graphs.size()));
  if (workers <= 1 || graphs.size() < 64) {
    for (std::size_t i = 0; i < graphs.size(); ++i) keys[i] = canonical_key(graphs[i]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < graphs.size(); i += workers) keys[i] = canonical_key(graphs[i]);
      });
    }
  }
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (seen.insert(keys[i]).second) out.push_back(graphs[i]);
  }
  return out;
}

}  // namespace apx
