#pragma once

#include <functional>
#include <string>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

inline constexpr const char* kVersion = "1.0.0";

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string tag;
  std::vector<VerifyItem> items;
  // True exactly when every item passes.
  bool pass = false;
  int jobs = 1;
};

std::vector<std::string> verification_tags();

// Runs the named pipeline; inputs are regenerated, never read from files.
// Throws std::invalid_argument for an unknown tag.
VerificationReport run_verification(const std::string& tag, int jobs = 1);

std::string verification_json(const VerificationReport& r);

// Every connected split K3,3 host with at most max_host_order vertices, in
// generation order.
std::vector<Graph> split_k33_hosts(int max_host_order);

// For each host and each neighbourhood of a new vertex (numbered
// host.order()) with degree in [lo, hi], calls visit(host, host + vertex).
// Neighbourhoods equivalent under the host automorphism generators are
// partly skipped.
void for_each_split_attachment(int max_host_order, int lo, int hi,
                               const std::function<void(const Graph&, const Graph&)>& visit);

// Isomorphism classes of simplifications of the NA graphs made by attaching
// a vertex of the given degree to a split K3,3 host; canonical, sorted by
// (order, graph6).
std::vector<Graph> split_attachment_classes(int max_host_order, int degree);

}  // namespace apx
