#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Cyclic neighbour order at each vertex of a combinatorial embedding.
using RotationSystem = std::vector<std::vector<Vertex>>;

enum class KuratowskiKind { None, K5, K33 };

struct PlanarityVerdict {
  bool planar = false;
  /// Present for planar graphs when witnesses were requested.
  std::optional<RotationSystem> rotation;
  /// Edge set of a K5 or K3,3 subdivision, for non-planar graphs when
  /// witnesses were requested.
  std::optional<EdgeList> kuratowski;
  /// Decided by m > 3n - 6 without running the embedding test.
  bool edge_bound_reject = false;
};

struct PlanarityOptions {
  bool want_witness = true;
};

/// Boyer-Myrvold edge addition (Boost.Graph) behind an m <= 3n - 6 gate.
PlanarityVerdict is_planar(const Graph& g, const PlanarityOptions& options = {});

struct EmbeddingCheck {
  bool valid = false;
  /// Total faces over all connected components.
  int faces = 0;
  std::string problem;
};

/// Checks that `rotation` lists each vertex's neighbours exactly once and
/// that every connected component satisfies n - m + f = 2 with faces traced
/// from the rotation system.
EmbeddingCheck check_rotation_system(const Graph& g, const RotationSystem& rotation);

/// Classifies an edge set of g as a subdivision of K5 or K3,3 (or None).
KuratowskiKind classify_kuratowski(const Graph& g, const EdgeList& edges);

std::string to_string(KuratowskiKind kind);

}  // namespace critgraph
