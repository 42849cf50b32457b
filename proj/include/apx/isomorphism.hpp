#pragma once

#include <span>
#include <string>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

struct CanonicalCertificate {
  // The input relabeled so that vertex v becomes labeling[v].
  Graph canonical;
  std::vector<int> labeling;

  // Upper-triangle adjacency bits of canonical, packed as graph6.
  std::string bits() const;
  bool operator==(const CanonicalCertificate& o) const { return canonical == o.canonical; }
};

struct CanonicalLabeling {
  CanonicalCertificate certificate;
  // Automorphisms found during the search; they generate the full group.
  std::vector<std::vector<int>> generators;
  // orbit[v] is the smallest vertex in the automorphism orbit of v.
  std::vector<int> orbit;
};

// colors, when non-empty, gives one colour per vertex; only colour-preserving
// relabelings are considered and lower colours come first.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});
CanonicalCertificate canonical_form(const Graph& g);

// Compact isomorphism-class key (graph6 of the canonical graph, plus the
// colour sequence in canonical order when colours are given).
std::string canonical_key(const Graph& g, std::span<const int> colors = {});

bool are_isomorphic(const Graph& g, const Graph& h);

// One representative per isomorphism class, in first-seen order. jobs > 1
// computes canonical forms on worker threads.
std::vector<Graph> dedup(std::span<const Graph> graphs, int jobs = 1);

}  // namespace apx
