#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

struct ApexVerdict {
  int budget = 0;
  bool is_n_apex = false;
  // Deleting these vertices leaves a planar graph (when is_n_apex).
  std::vector<int> witness;
  // Search nodes refuted, directly or by the edge-count bound.
  std::int64_t refuted = 0;
};

ApexVerdict is_n_apex(const Graph& g, int n);

// Least n <= cap with g n-apex, or nullopt when g is not cap-apex.
std::optional<int> apex_number(const Graph& g, int cap);

}  // namespace apx
