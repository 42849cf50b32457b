#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

// branch_sets[q] is the host vertex set contracted onto pattern vertex q.
struct MinorModel {
  std::vector<Row> branch_sets;
};

struct MinorResult {
  bool found = false;
  bool cancelled = false;
  std::optional<MinorModel> model;
};

// Exact minor containment test. When cancel is set to true from another
// thread the search stops and reports cancelled.
MinorResult has_minor(const Graph& g, const Graph& h, bool want_model = false,
                      const std::atomic<bool>* cancel = nullptr);

// Branch sets non-empty, disjoint, connected, and every pattern edge is
// realised by a host edge.
bool verify_model(const Graph& g, const Graph& h, const MinorModel& model);

enum class Property { NonPlanar, NA, N2A };

const char* property_name(Property p);
bool has_property(const Graph& g, Property p);

struct MinimalityResult {
  bool minimal = false;
  bool has_property = false;
  // A one-step minor that still has the property.
  std::optional<Graph> failing_child;
  std::string failing_step;
};

MinimalityResult is_minor_minimal(const Graph& g, Property p);

// Vertices of g that survive simplification.
Row branch_vertices(const Graph& g);

struct NearnessReport {
  int vertex = 0;
  // Simplification of g - vertex; K5 or K3,3.
  Graph simplified;
  // Branch vertices of g - vertex, as ids of g.
  Row branch = 0;
  // Branch vertices the designated vertex is near, as ids of g.
  Row near_vertices = 0;
  // Edges of the simplification (named by their ends, ids of g) the vertex is near.
  std::vector<EdgeId> near_edges;
};

// Throws DomainError when g - v does not simplify to K5 or K3,3.
NearnessReport nearness(const Graph& g, int v);
bool na_by_nearness(const Graph& g, int v);

// Only K3,3 is supported as the pattern; others raise DomainError.
bool is_split_of(const Graph& g, const Graph& pattern);

}  // namespace apx
