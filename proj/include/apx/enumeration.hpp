#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apx/graph.hpp"
#include "apx/minors.hpp"

namespace apx {

inline constexpr int kMaxGenerationOrder = 24;

struct Constraints {
  int min_order = 0;
  int max_order = 0;
  int min_size = 0;
  int max_size = kMaxGenerationOrder * (kMaxGenerationOrder - 1) / 2;
  int min_degree = 0;
  // Negative means no bound beyond order - 1.
  int max_degree = -1;
  std::optional<int> regular;
  bool connected = false;
  // Exact ascending degree multiset; fixes order and size.
  std::optional<std::vector<int>> degree_sequence;

  static Constraints order(int n);
  // Throws std::invalid_argument when the fields contradict each other.
  void validate() const;
  std::string describe() const;
};

// Streams one graph per isomorphism class meeting c, by canonical
// augmentation: vertex addition, where the accepted new vertex must lie in
// the orbit of a canonically chosen vertex of largest (degree, neighbour
// degree sum, triangle count).
void generate(const Constraints& c, const std::function<void(const Graph&)>& visit);

// Graphs meeting c for which keep returns true, in the same order as
// generate. With jobs > 1 subtrees run on worker threads and keep must be
// thread-safe; the result does not depend on jobs.
std::vector<Graph> generate_filtered(const Constraints& c, const std::function<bool(const Graph&)>& keep,
                                     int jobs = 1);

std::vector<Graph> generate_all(const Constraints& c);

// One graph from each part, joined by disjoint union, keeping those with at
// most total_size_bound edges; isomorph-free, in product order.
std::vector<Graph> compose_unions(const std::vector<std::vector<Graph>>& parts, int total_size_bound);

struct ObstructionCounts {
  std::int64_t generated = 0;
  std::int64_t nonplanar = 0;
  std::int64_t with_property = 0;
  std::int64_t minimal = 0;
};

struct ObstructionReport {
  Property property = Property::NA;
  int max_edges = 0;
  Constraints scope;
  // Canonical forms, sorted by (order, graph6).
  std::vector<Graph> members;
  ObstructionCounts counts;
  std::int64_t elapsed_ms = 0;
  int jobs = 1;
};

// Minor-minimal graphs for the property among graphs in scope with at most
// max_edges edges. Orders default to 1..floor(2 max_edges / min_degree) when
// the scope does not fix them.
ObstructionReport search_obstructions(Property p, int max_edges, const Constraints& scope, int jobs = 1);

// JSON document for the report; timing fields are omitted when with_timing
// is false so that output is byte-stable.
std::string report_json(const ObstructionReport& r, bool with_timing = true);

}  // namespace apx
