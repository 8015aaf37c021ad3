#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Raised instead of returning a wrong answer when a graph is outside the
/// exact range of the canonical labeling engine.
class AutomorphismBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest vertex count accepted by the canonical labeling engine.
inline constexpr int kMaxCanonVertices = 256;

struct CanonOptions {
  /// Search-tree node budget; exceeding it throws AutomorphismBoundError.
  std::uint64_t node_limit = 20'000'000;
};

struct CanonicalLabeling {
  /// labeling[p] is the vertex placed at canonical position p.
  std::vector<int> labeling;
  /// orbits[v] is the smallest vertex in the automorphism orbit of v.
  std::vector<int> orbits;
  /// |Aut(G)|; only meaningful when group_order_exact is true.
  std::uint64_t group_order = 1;
  bool group_order_exact = true;
  std::uint64_t nodes = 0;
};

/// Individualization-refinement search: equitable refinement by neighbor
/// counts, then backtracking over the first non-singleton cell, with
/// orbit pruning along the first path from automorphisms found at leaves.
CanonicalLabeling canonical_labeling(const Graph& g, const CanonOptions& options = {});

/// Same engine on raw rows of a graph with n <= 64 (one word per row).
CanonicalLabeling canonical_labeling_small(int n, std::span<const std::uint64_t> rows,
                                           const CanonOptions& options = {});

/// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

/// graph6 text of canonical_graph(g); equal strings iff isomorphic.
std::string canonical_graph6(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Exact order of the automorphism group.
/// Throws AutomorphismBoundError when n > kMaxCanonVertices, the node
/// budget runs out, or the order does not fit in 64 bits.
std::uint64_t automorphism_count(const Graph& g, const CanonOptions& options = {});

}  // namespace critgraph
