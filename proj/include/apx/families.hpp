#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

struct FamilyEntry {
  std::string name;
  // Canonical representative.
  Graph graph;
  int order = 0;
  int size = 0;
  // Numbers used for members in the literature, e.g. "graph 18".
  std::vector<std::string> aliases;
  // Reachable from the seed by nabla-Y moves alone.
  bool nabla_y_only = false;
};

// Breadth-first closure of seed under nabla-Y on every triangle and (when
// with_y_nabla) Y-nabla on every degree 3 vertex, one canonical graph per
// isomorphism class, in discovery order.
std::vector<Graph> move_closure(const Graph& seed, bool with_y_nabla = true);

// Memoized catalogs, ordered by (order, canonical graph6).
const std::vector<FamilyEntry>& petersen_family();
const std::vector<FamilyEntry>& heawood_family();

// Name of the catalog member isomorphic to g, if any.
std::optional<std::string> identify(const Graph& g);

// One "graph6<TAB>name" line per member.
std::string catalog_text(const std::vector<FamilyEntry>& family);

}  // namespace apx
