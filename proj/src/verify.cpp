#include "apx/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "apx/apex.hpp"
#include "apx/enumeration.hpp"
#include "apx/families.hpp"
#include "apx/graph6.hpp"
#include "apx/isomorphism.hpp"
#include "apx/minors.hpp"
#include "apx/planarity.hpp"
#include "json.hpp"

namespace apx {

namespace {

// Largest host order for the attachment pipelines; the class counts are
// already stable from 10 vertices on.
constexpr int kAttachmentHostOrder = 10;

// Exhaustive N2A sample for the Y-nabla pipeline: min degree 3, at most 21
// edges, up to this many vertices.
constexpr int kYNablaSearchOrder = 10;

std::string label(const Graph& g) {
  const auto name = identify(g);
  return name ? *name : to_graph6(canonical_form(g).canonical);
}

std::set<std::string> keys(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_key(g));
  return out;
}

std::string names(const std::vector<Graph>& gs) {
  std::string s;
  for (const Graph& g : gs) s += (s.empty() ? "" : ", ") + label(g);
  return s.empty() ? "none" : s;
}

void minimality_items(VerificationReport& r, const Graph& seed, std::size_t expect, Property p) {
  const auto family = move_closure(seed);
  r.items.push_back({"closure size", family.size() == expect,
                     std::to_string(family.size()) + " members, expected " + std::to_string(expect)});
  for (const Graph& g : family) {
    const MinimalityResult m = is_minor_minimal(g, p);
    std::string detail = m.minimal ? "minor-minimal" : !m.has_property ? "lacks the property" : "failing " + m.failing_step;
    r.items.push_back({label(g), m.minimal, detail});
  }
}

void y_nabla_item(VerificationReport& r, const Graph& g, const std::string& name) {
  int images = 0;
  int bad = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    ++images;
    if (!has_property(y_nabla(g, v), Property::N2A)) ++bad;
  }
  const std::string detail = images == 0 ? "no degree-3 vertex"
                                         : std::to_string(images - bad) + "/" + std::to_string(images) + " images N2A";
  r.items.push_back({name, bad == 0, detail});
}

void prop_ynabla(VerificationReport& r, int jobs) {
  for (const Graph& g : move_closure(complete_graph(7))) {
    if (g.order() > 10 || g.size() > 21 || !has_property(g, Property::N2A)) continue;
    y_nabla_item(r, g, label(g));
  }
  Constraints c;
  c.min_order = 1;
  c.max_order = kYNablaSearchOrder;
  c.min_degree = 3;
  c.max_size = 21;
  const auto found = generate_filtered(
      c, [](const Graph& g) { return !planar(g) && !is_n_apex(g, 2).is_n_apex; }, jobs);
  for (const Graph& g : found) y_nabla_item(r, g, "search " + to_graph6(canonical_form(g).canonical));
  r.items.push_back({"search sample", !found.empty(), std::to_string(found.size()) + " N2A graphs with min degree 3"});
}

void attachment_items(VerificationReport& r, int degree, std::size_t expect) {
  const auto classes = split_attachment_classes(kAttachmentHostOrder, degree);
  r.items.push_back({"class count", classes.size() == expect,
                     std::to_string(classes.size()) + " classes, expected " + std::to_string(expect)});
  for (const Graph& g : classes) {
    std::string detail = "(" + std::to_string(g.order()) + "," + std::to_string(g.size()) + ")";
    if (const auto name = identify(g)) detail += " " + *name;
    r.items.push_back({to_graph6(g), true, detail});
  }
  if (degree == 3) {
    const bool petersen = classes.size() == 1 && are_isomorphic(classes[0], petersen_graph());
    r.items.push_back({"Petersen graph", petersen, petersen ? "the only class" : names(classes)});
  }
}

void search_item(VerificationReport& r, const std::string& name, Property p, int max_edges, const Constraints& scope,
                 const std::vector<Graph>& expect, int jobs) {
  const ObstructionReport rep = search_obstructions(p, max_edges, scope, jobs);
  const bool ok = keys(rep.members) == keys(expect) && rep.members.size() == expect.size();
  r.items.push_back({name, ok, names(rep.members) + " from " + std::to_string(rep.counts.generated) + " graphs"});
}

std::vector<Graph> family_graphs(const std::vector<FamilyEntry>& fam) {
  std::vector<Graph> out;
  for (const FamilyEntry& e : fam) out.push_back(e.graph);
  return out;
}

void search_na(VerificationReport& r, int max_edges, int jobs) {
  Constraints c;
  c.min_degree = 3;
  search_item(r, "NA, at most " + std::to_string(max_edges) + " edges, min degree 3, unions included", Property::NA,
              max_edges, c, family_graphs(petersen_family()), jobs);
}

void search_n2a_14(VerificationReport& r, int jobs) {
  Constraints c = Constraints::order(14);
  c.regular = 3;
  search_item(r, "N2A cubic order 14, unions included", Property::N2A, 21, c, {heawood_graph()}, jobs);
}

void search_n2a_13(VerificationReport& r, int jobs) {
  const std::vector<std::vector<int>> seqs = {
      {3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 6},
      {3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 5},
      {3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4},
  };
  std::vector<Graph> c13;
  for (const FamilyEntry& e : heawood_family())
    if (e.name == "C13") c13.push_back(e.graph);
  for (const auto& seq : seqs) {
    Constraints c;
    c.degree_sequence = seq;
    const bool has_c13 = degree_sequence(c13.at(0)) == seq;
    search_item(r, "N2A degree sequence " + c.describe(), Property::N2A, 21, c,
                has_c13 ? c13 : std::vector<Graph>{}, jobs);
  }
}

}  // namespace

std::vector<std::string> verification_tags() {
  return {"petersen-mmna", "heawood-mmn2a", "prop-ynabla",     "lemma-da3",       "lemma-da4",
          "search-na-16",  "search-na-17",  "search-n2a-14-21", "search-n2a-13-21"};
}

VerificationReport run_verification(const std::string& tag, int jobs) {
  VerificationReport r;
  r.tag = tag;
  r.jobs = std::max(1, jobs);
  if (tag == "petersen-mmna") {
    minimality_items(r, complete_graph(6), 7, Property::NA);
  } else if (tag == "heawood-mmn2a") {
    minimality_items(r, complete_graph(7), 20, Property::N2A);
  } else if (tag == "prop-ynabla") {
    prop_ynabla(r, r.jobs);
  } else if (tag == "lemma-da3") {
    attachment_items(r, 3, 1);
  } else if (tag == "lemma-da4") {
    attachment_items(r, 4, 7);
  } else if (tag == "search-na-16") {
    search_na(r, 16, r.jobs);
  } else if (tag == "search-na-17") {
    search_na(r, 17, r.jobs);
  } else if (tag == "search-n2a-14-21") {
    search_n2a_14(r, r.jobs);
  } else if (tag == "search-n2a-13-21") {
    search_n2a_13(r, r.jobs);
  } else {
    throw std::invalid_argument("unknown verification tag '" + tag + "'");
  }
  r.pass = std::all_of(r.items.begin(), r.items.end(), [](const VerifyItem& i) { return i.pass; });
  return r;
}

std::string verification_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["tag"] = r.tag;
  j["pass"] = r.pass;
  j["environment"] = {{"version", kVersion}, {"jobs", r.jobs}};
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const VerifyItem& i : r.items) items.push_back({{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  j["items"] = items;
  return j.dump(2) + "\n";
}

std::vector<Graph> split_k33_hosts(int max_host_order) {
  const Graph k33 = complete_bipartite(3, 3);
  std::vector<Graph> out;
  for (int n = 6; n <= max_host_order; ++n) {
    // Connected with n + 3 edges: a subdivided K3,3 with trees hanging off.
    Constraints c = Constraints::order(n);
    c.min_size = c.max_size = n + 3;
    c.min_degree = 1;
    c.connected = true;
    generate(c, [&](const Graph& g) {
      if (is_split_of(g, k33)) out.push_back(g);
    });
  }
  return out;
}

void for_each_split_attachment(int max_host_order, int lo, int hi,
                               const std::function<void(const Graph&, const Graph&)>& visit) {
  for (const Graph& host : split_k33_hosts(max_host_order)) {
    const auto gens = canonical_labeling(host).generators;
    const int n = host.order();
    for (Row s = 0; s < (Row{1} << n); ++s) {
      const int d = std::popcount(s);
      if (d < lo || d > hi) continue;
      bool skip = false;
      for (const auto& gamma : gens) {
        Row img = 0;
        for (int v : bits_of(s)) img |= bit(gamma[v]);
        if (img < s) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      Graph g = host;
      const int a = g.add_vertex();
      for (int v : bits_of(s)) g.add_edge(a, v);
      visit(host, g);
    }
  }
}

std::vector<Graph> split_attachment_classes(int max_host_order, int degree) {
  std::map<std::string, Graph> classes;
  for_each_split_attachment(max_host_order, degree, degree, [&](const Graph&, const Graph& g) {
    if (is_n_apex(g, 1).is_n_apex) return;
    const Graph s = canonical_form(simplify(g).simplified).canonical;
    classes.emplace(to_graph6(s), s);
  });
  std::vector<Graph> out;
  for (auto& [k, g] : classes) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return to_graph6(a) < to_graph6(b);
  });
  return out;
}

}  // namespace apx
