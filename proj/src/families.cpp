#include "apx/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "apx/graph6.hpp"
#include "apx/isomorphism.hpp"

namespace apx {

namespace {

std::string seq_string(const Graph& g) {
  std::string s;
  for (int d : degree_sequence(g)) s += std::to_string(d);
  return s;
}

std::vector<FamilyEntry> build(const Graph& seed) {
  const std::vector<Graph> all = move_closure(seed, true);
  std::unordered_set<std::string> ks;
  for (const Graph& g : move_closure(seed, false)) ks.insert(canonical_key(g));
  std::vector<FamilyEntry> out;
  for (const Graph& g : all) {
    FamilyEntry e;
    e.graph = g;
    e.order = g.order();
    e.size = g.size();
    e.nabla_y_only = ks.count(canonical_key(g)) > 0;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const FamilyEntry& a, const FamilyEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return to_graph6(a.graph) < to_graph6(b.graph);
  });
  return out;
}

void assign(FamilyEntry& e, const std::string& name) {
  if (!e.name.empty()) throw std::logic_error("catalog name clash: " + e.name + " / " + name);
  e.name = name;
}

// Systematic names for members without a name, keyed to order and the
// position among unnamed members of that order.
void name_rest(std::vector<FamilyEntry>& fam, const std::string& prefix) {
  std::map<int, int> next;
  for (FamilyEntry& e : fam) {
    if (!e.name.empty()) continue;
    const int i = ++next[e.order];
    std::string o = std::to_string(e.order);
    if (o.size() < 2) o = "0" + o;
    e.name = prefix + "-" + o + "-" + std::to_string(i);
  }
}

std::vector<FamilyEntry> build_petersen() {
  std::vector<FamilyEntry> fam = build(complete_graph(6));
  const int k331[] = {3, 3, 1};
  Graph k44e = complete_bipartite(4, 4);
  k44e.remove_edge(0, 4);
  for (FamilyEntry& e : fam) {
    const Graph& g = e.graph;
    if (are_isomorphic(g, complete_graph(6))) {
      assign(e, "K6");
    } else if (are_isomorphic(g, complete_multipartite(k331))) {
      assign(e, "K3,3,1");
    } else if (are_isomorphic(g, k44e)) {
      assign(e, "K4,4-e");
    } else if (are_isomorphic(g, petersen_graph())) {
      assign(e, "P10");
      e.aliases.push_back("Petersen");
    } else if (e.order >= 7 && e.order <= 9) {
      assign(e, "P" + std::to_string(e.order));
    }
  }
  name_rest(fam, "PF");
  return fam;
}

std::vector<FamilyEntry> build_heawood() {
  std::vector<FamilyEntry> fam = build(complete_graph(7));
  for (FamilyEntry& e : fam) {
    const Graph& g = e.graph;
    const std::string seq = seq_string(g);
    switch (e.order) {
      case 7:
        assign(e, "K7");
        e.aliases.push_back("graph 1");
        break;
      case 8:
        assign(e, "H8");
        break;
      case 9:
        if (!e.nabla_y_only) {
          assign(e, "E9");
          e.aliases.push_back("N9");
        }
        break;
      case 10:
        if (g.min_degree() >= 4) e.aliases.push_back("graph 20");
        break;
      case 11:
        if (seq == "33334444446") {
          assign(e, "C11");
          e.aliases.push_back("graph 10");
        } else if (seq == "33333444555") {
          assign(e, "E11");
          e.aliases.push_back("graph 8");
        } else if (seq == "33334444455") {
          assign(e, "H11");
          e.aliases.push_back("graph 11");
        } else if (seq == "33344444445") {
          assign(e, "N'11");
          e.aliases.push_back("graph 16");
        } else if (seq == "33444444444") {
          assign(e, "N11");
          e.aliases.push_back("graph 17");
        }
        break;
      case 12:
        if (seq == "333333344445") {
          assign(e, "C12");
          e.aliases.push_back("graph 13");
        } else if (seq == "333333444444") {
          if (triangle_count(g) == 0) {
            assign(e, "H12");
            e.aliases.push_back("graph 12");
          } else {
            assign(e, "N'12");
            e.aliases.push_back("graph 19");
          }
        }
        break;
      case 13:
        assign(e, "C13");
        e.aliases.push_back("graph 15");
        break;
      case 14:
        assign(e, "Heawood");
        e.aliases.push_back("C14");
        e.aliases.push_back("graph 18");
        break;
      default:
        break;
    }
  }
  name_rest(fam, "HW");
  return fam;
}

}  // namespace

std::vector<Graph> move_closure(const Graph& seed, bool with_y_nabla) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::deque<Graph> queue;
  auto visit = [&](const Graph& g) {
    const CanonicalCertificate c = canonical_form(g);
    if (seen.insert(c.bits()).second) {
      out.push_back(c.canonical);
      queue.push_back(c.canonical);
    }
  };
  visit(seed);
  while (!queue.empty()) {
    const Graph g = queue.front();
    queue.pop_front();
    for (const auto& t : triangles(g)) {
      if (g.order() < kMaxVertices) visit(nabla_y(g, t[0], t[1], t[2]));
    }
    if (!with_y_nabla) continue;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) visit(y_nabla(g, v));
    }
  }
  return out;
}

const std::vector<FamilyEntry>& petersen_family() {
  static const std::vector<FamilyEntry> fam = build_petersen();
  return fam;
}

const std::vector<FamilyEntry>& heawood_family() {
  static const std::vector<FamilyEntry> fam = build_heawood();
  return fam;
}

std::optional<std::string> identify(const Graph& g) {
  static const std::unordered_map<std::string, std::string> index = [] {
    std::unordered_map<std::string, std::string> m;
    for (const auto* fam : {&petersen_family(), &heawood_family()})
      for (const FamilyEntry& e : *fam) m.emplace(canonical_key(e.graph), e.name);
    return m;
  }();
  const auto it = index.find(canonical_key(g));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string catalog_text(const std::vector<FamilyEntry>& family) {
  std::string out;
  for (const FamilyEntry& e : family) out += to_graph6(e.graph) + "\t" + e.name + "\n";
  return out;
}

}  // namespace apx
