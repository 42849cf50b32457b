#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apx/apex.hpp"
#include "apx/enumeration.hpp"
#include "apx/errors.hpp"
#include "apx/families.hpp"
#include "apx/graph6.hpp"
#include "apx/minors.hpp"
#include "apx/planarity.hpp"
#include "apx/verify.hpp"
#include "json.hpp"

using namespace apx;
using json = nlohmann::ordered_json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kVerifyFail = 2;
constexpr int kUsage = 64;
constexpr int kParse = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("APEXCTL_JOBS")) {
    int n = 0;
    const std::string s = env;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size() || n < 1) throw UsageError("APEXCTL_JOBS must be a positive integer");
    return n;
  }
  return 1;
}

// "-" or an empty argument reads one graph from stdin.
Graph read_graph(const std::string& arg) {
  if (!arg.empty() && arg != "-") return from_graph6(arg);
  std::string line;
  if (!std::getline(std::cin, line)) throw ParseError("no graph on stdin", 0);
  return from_graph6(line);
}

json edges_json(const std::vector<EdgeId>& es) {
  json a = json::array();
  for (const EdgeId& e : es) a.push_back({e.u, e.v});
  return a;
}

void emit(const json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << "\n"; }

// Runs f on one graph, or on every graph of the stdin stream in batch mode;
// the exit status is true only if every graph satisfies the predicate.
template <class F>
int for_inputs(bool batch, const std::string& arg, F&& f) {
  if (!batch) return f(read_graph(arg), false) ? kTrue : kFalse;
  bool all = true;
  for (const Graph& g : read_graph6_stream(std::cin)) all = f(g, true) && all;
  return all ? kTrue : kFalse;
}

bool cmd_planar(const Graph& g, bool compact) {
  const PlanarityResult r = is_planar(g);
  json j;
  j["schema"] = 1;
  j["graph6"] = to_graph6(g);
  j["planar"] = r.planar;
  if (r.planar) {
    j["embedding"] = r.embedding;
  } else {
    const KuratowskiWitness& w = *r.witness;
    j["witness"] = {{"kind", w.kind == KuratowskiKind::K5 ? "K5" : "K3,3"},
                    {"branch_vertices", w.branch},
                    {"paths", w.paths},
                    {"edges", edges_json(w.edges())}};
  }
  emit(j, compact);
  return r.planar;
}

bool cmd_apex(const Graph& g, int n, bool witness, bool compact) {
  const ApexVerdict v = is_n_apex(g, n);
  json j;
  j["schema"] = 1;
  j["graph6"] = to_graph6(g);
  j["n"] = n;
  j["is_n_apex"] = v.is_n_apex;
  if (witness && v.is_n_apex) j["witness"] = v.witness;
  emit(j, compact);
  return v.is_n_apex;
}

// Accepts "A" or "A..B".
std::pair<int, int> parse_range(const std::string& s, const std::string& what) {
  auto num = [&](std::string_view t) {
    int v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || v < 0) throw UsageError("bad " + what + " '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = num(s);
    return {v, v};
  }
  return {num(std::string_view(s).substr(0, dots)), num(std::string_view(s).substr(dots + 2))};
}

std::vector<int> parse_sequence(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // "3^12" repeats a degree.
    const auto caret = tok.find('^');
    const auto [d, d2] = parse_range(tok.substr(0, caret), "degree sequence");
    (void)d2;
    const int times = caret == std::string::npos ? 1 : parse_range(tok.substr(caret + 1), "degree sequence").first;
    out.insert(out.end(), times, d);
  }
  if (out.empty()) throw UsageError("empty degree sequence");
  std::sort(out.begin(), out.end());
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apex graph toolkit: planarity, apex tests, minors, families and obstruction searches"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("apexctl ") + kVersion);

  std::string g6;
  std::string pattern;
  bool batch = false;
  int budget = 1;
  bool witness = false;
  bool model = false;
  bool json_out = false;
  int vertex = 0;
  std::string family_name;
  bool family_names = false;
  bool family_g6 = false;
  std::string vertices;
  std::string edges;
  int min_degree = 0;
  int max_degree = -1;
  std::optional<int> regular;
  bool connected = false;
  bool nonplanar = false;
  std::string property;
  int max_edges = 0;
  std::string degree_seq;
  std::optional<int> jobs;
  bool full = false;
  std::string report;
  bool no_timing = false;
  std::string tag;

  auto* planar_cmd = app.add_subcommand("planar", "Planarity verdict with an embedding or Kuratowski witness");
  planar_cmd->add_option("graph6", g6, "graph (omit or '-' for stdin)");
  planar_cmd->add_flag("--batch", batch, "one JSON line per graph6 line on stdin");

  auto* apex_cmd = app.add_subcommand("apex", "Is the graph planar after deleting at most n vertices");
  apex_cmd->add_option("graph6", g6, "graph (omit or '-' for stdin)");
  apex_cmd->add_option("--n", budget, "deletion budget")->check(CLI::NonNegativeNumber);
  apex_cmd->add_flag("--witness", witness, "report the deleted vertices");
  apex_cmd->add_flag("--batch", batch, "one JSON line per graph6 line on stdin");

  auto* simplify_cmd = app.add_subcommand("simplify", "Strip degree 0/1 vertices and suppress degree 2 vertices");
  simplify_cmd->add_option("graph6", g6, "graph (omit or '-' for stdin)");
  simplify_cmd->add_flag("--json", json_out, "JSON with the branch vertex map");
  simplify_cmd->add_flag("--batch", batch, "one line per graph6 line on stdin");

  auto* minor_cmd = app.add_subcommand("minor", "Minor containment");
  minor_cmd->add_option("host", g6, "host graph")->required();
  minor_cmd->add_option("pattern", pattern, "pattern graph")->required();
  minor_cmd->add_flag("--model", model, "report branch sets");

  auto* near_cmd = app.add_subcommand("near", "Nearness of a vertex to the branch vertices of the rest");
  near_cmd->add_option("graph6", g6, "graph")->required();
  near_cmd->add_option("vertex", vertex, "vertex id")->required();

  auto* family_cmd = app.add_subcommand("family", "Petersen or Heawood family catalog");
  family_cmd->add_option("name", family_name, "heawood or petersen")
      ->required()
      ->check(CLI::IsMember({"heawood", "petersen"}));
  family_cmd->add_flag("--names", family_names, "graph6<TAB>name lines");
  family_cmd->add_flag("--g6", family_g6, "graph6 lines only");

  auto* enum_cmd = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
  enum_cmd->add_option("--vertices", vertices, "order, N or A..B")->required();
  enum_cmd->add_option("--edges", edges, "size, N or A..B");
  enum_cmd->add_option("--min-degree", min_degree, "minimum degree")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--max-degree", max_degree, "maximum degree")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--regular", regular, "regular degree")->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--connected", connected, "connected graphs only");
  enum_cmd->add_flag("--nonplanar", nonplanar, "non-planar graphs only");

  auto* search_cmd = app.add_subcommand("search", "Minor-minimal NA or N2A graphs within an edge bound");
  search_cmd->add_option("--property", property, "na or n2a")->required()->check(CLI::IsMember({"na", "n2a"}));
  search_cmd->add_option("--max-edges", max_edges, "edge bound")->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--degree-sequence", degree_seq, "e.g. 3^12,6");
  search_cmd->add_option("--vertices", vertices, "order, N or A..B");
  search_cmd->add_option("--min-degree", min_degree, "minimum degree (default 3)")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--regular", regular, "regular degree")->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--connected", connected, "skip disconnected graphs");
  search_cmd->add_option("--jobs", jobs, "worker threads (default APEXCTL_JOBS or 1)")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--full", full, "allow the unrestricted N2A search over all orders");
  search_cmd->add_option("--report", report, "also write the JSON report here");
  search_cmd->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-stable reports");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification pipeline");
  verify_cmd->add_option("tag", tag, "pipeline tag")->required();
  verify_cmd->add_option("--jobs", jobs, "worker threads (default APEXCTL_JOBS or 1)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--report", report, "also write the JSON report here");

  auto* tags_cmd = app.add_subcommand("tags", "List verification tags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (planar_cmd->parsed()) {
      return for_inputs(batch, g6, [](const Graph& g, bool compact) { return cmd_planar(g, compact); });
    }
    if (apex_cmd->parsed()) {
      return for_inputs(batch, g6, [&](const Graph& g, bool compact) { return cmd_apex(g, budget, witness, compact); });
    }
    if (simplify_cmd->parsed()) {
      return for_inputs(batch, g6, [&](const Graph& g, bool compact) {
        const SimplificationResult s = simplify(g);
        if (json_out) {
          emit({{"schema", 1}, {"graph6", to_graph6(s.simplified)}, {"branch_map", s.branch_map}}, compact);
        } else {
          std::cout << to_graph6(s.simplified) << "\n";
        }
        return true;
      });
    }
    if (minor_cmd->parsed()) {
      const Graph host = read_graph(g6);
      const Graph pat = from_graph6(pattern);
      const MinorResult r = has_minor(host, pat, model);
      json j;
      j["schema"] = 1;
      j["host"] = to_graph6(host);
      j["pattern"] = to_graph6(pat);
      j["found"] = r.found;
      if (model && r.model) {
        json sets = json::array();
        for (Row s : r.model->branch_sets) {
          std::vector<int> vs;
          for (int v : bits_of(s)) vs.push_back(v);
          sets.push_back(vs);
        }
        j["branch_sets"] = sets;
      }
      emit(j, false);
      return r.found ? kTrue : kFalse;
    }
    if (near_cmd->parsed()) {
      const Graph g = read_graph(g6);
      if (vertex < 0 || vertex >= g.order()) throw UsageError("vertex out of range");
      const NearnessReport r = nearness(g, vertex);
      auto ids = [](Row s) {
        std::vector<int> out;
        for (int v : bits_of(s)) out.push_back(v);
        return out;
      };
      const bool all = (r.near_vertices & r.branch) == r.branch;
      json j;
      j["schema"] = 1;
      j["graph6"] = to_graph6(g);
      j["vertex"] = vertex;
      j["simplified"] = to_graph6(r.simplified);
      j["branch_vertices"] = ids(r.branch);
      j["near_vertices"] = ids(r.near_vertices);
      j["near_edges"] = edges_json(r.near_edges);
      j["near_every_branch_vertex"] = all;
      emit(j, false);
      return all ? kTrue : kFalse;
    }
    if (family_cmd->parsed()) {
      const auto& fam = family_name == "heawood" ? heawood_family() : petersen_family();
      if (family_names) {
        std::cout << catalog_text(fam);
      } else if (family_g6) {
        for (const FamilyEntry& e : fam) std::cout << to_graph6(e.graph) << "\n";
      } else {
        json a = json::array();
        for (const FamilyEntry& e : fam) {
          a.push_back({{"name", e.name},
                       {"graph6", to_graph6(e.graph)},
                       {"order", e.order},
                       {"size", e.size},
                       {"aliases", e.aliases},
                       {"nabla_y_only", e.nabla_y_only}});
        }
        emit({{"schema", 1}, {"family", family_name}, {"members", a}}, false);
      }
      return kTrue;
    }
    if (enum_cmd->parsed()) {
      Constraints c;
      std::tie(c.min_order, c.max_order) = parse_range(vertices, "vertex count");
      if (!edges.empty()) std::tie(c.min_size, c.max_size) = parse_range(edges, "edge count");
      c.min_degree = min_degree;
      c.max_degree = max_degree;
      c.regular = regular;
      c.connected = connected;
      try {
        c.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      generate(c, [&](const Graph& g) {
        if (!nonplanar || !planar(g)) std::cout << to_graph6(g) << "\n";
      });
      return kTrue;
    }
    if (search_cmd->parsed()) {
      const Property p = property == "na" ? Property::NA : Property::N2A;
      Constraints c;
      c.min_degree = search_cmd->count("--min-degree") ? min_degree : 3;
      c.regular = regular;
      c.connected = connected;
      if (!degree_seq.empty()) c.degree_sequence = parse_sequence(degree_seq);
      if (!vertices.empty()) std::tie(c.min_order, c.max_order) = parse_range(vertices, "vertex count");
      const bool scoped = c.degree_sequence || !vertices.empty() || regular;
      if (p == Property::N2A && max_edges >= 21 && !scoped && !full) {
        throw UsageError("the unrestricted N2A search at 21 or more edges needs --full or a scope");
      }
      if (c.min_degree < 3) std::cerr << "warning: minimum degree below 3 widens the scope beyond what is needed\n";
      try {
        Constraints probe = c;
        probe.max_size = std::min(probe.max_size, max_edges);
        if (probe.max_order == 0 && !probe.degree_sequence) probe.max_order = kMaxGenerationOrder;
        probe.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const ObstructionReport r = search_obstructions(p, max_edges, c, jobs.value_or(default_jobs()));
      const std::string text = report_json(r, !no_timing);
      if (!report.empty()) write_file(report, text);
      std::cout << text;
      return kTrue;
    }
    if (verify_cmd->parsed()) {
      const auto known = verification_tags();
      if (std::find(known.begin(), known.end(), tag) == known.end()) throw UsageError("unknown verification tag '" + tag + "'");
      const VerificationReport r = run_verification(tag, jobs.value_or(default_jobs()));
      const std::string text = verification_json(r);
      if (!report.empty()) write_file(report, text);
      std::cout << text;
      return r.pass ? kTrue : kVerifyFail;
    }
    if (tags_cmd->parsed()) {
      for (const std::string& t : verification_tags()) std::cout << t << "\n";
      return kTrue;
    }
  } catch (const ParseError& e) {
    std::cerr << "apexctl: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapacityError& e) {
    std::cerr << "apexctl: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "apexctl: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "apexctl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "apexctl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
