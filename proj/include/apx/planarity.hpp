#pragma once

#include <optional>
#include <vector>

#include "apx/graph.hpp"

namespace apx {

enum class KuratowskiKind { K5, K33 };

// A subdivision of K5 or K3,3 inside the host. Each path runs from one branch
// vertex to another; interiors are pairwise disjoint and avoid branch vertices.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;

  Row vertices() const;
  std::vector<EdgeId> edges() const;
};

// rotation[v] lists the neighbours of v in clockwise order.
using Rotation = std::vector<std::vector<int>>;

struct PlanarityResult {
  bool planar = false;
  Rotation embedding;
  std::optional<KuratowskiWitness> witness;
};

// Verdict plus certificate: an embedding when planar, otherwise a witness
// taken from the first non-planar component.
PlanarityResult is_planar(const Graph& g);

// Verdict only (no certificate), for hot loops.
bool planar(const Graph& g);

// Precondition: g is not planar.
KuratowskiWitness kuratowski_witness(const Graph& g);

// Vertex set of a vertex-minimal non-planar subgraph; it equals the vertex
// set of a Kuratowski subdivision. Precondition: g is not planar.
Row kuratowski_vertices(const Graph& g);

// Face boundaries as vertex cycles, following the rotation system.
std::vector<std::vector<int>> trace_faces(const Graph& g, const Rotation& rot);

// True when rot is a rotation system of g and every component with an edge
// satisfies V - E + F = 2.
bool verify_embedding(const Graph& g, const Rotation& rot);

// True when w is a genuine K5 or K3,3 subdivision contained in g.
bool verify_witness(const Graph& g, const KuratowskiWitness& w);

}  // namespace apx
