#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Total map vertex -> color in 1..k.
class Coloring {
 public:
  Coloring() = default;
  /// Throws std::invalid_argument when a color is outside 1..k.
  Coloring(std::vector<int> colors, int k);

  int colors() const { return k_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int operator[](Vertex v) const { return colors_.at(v); }
  const std::vector<int>& values() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t forced = 0;
};

struct ColoringOutcome {
  std::optional<Coloring> witness;
  SolveStats stats;

  bool colorable() const { return witness.has_value(); }
};

struct SolverOptions {
  /// Pre-color a greedily found maximal clique with 1, 2, ...
  bool clique_seed = true;
  /// Vertices placed last among equally ranked branching candidates.
  std::vector<Vertex> deprioritized;
};

/// True iff every edge is bichromatic. Throws std::invalid_argument when
/// the coloring does not cover exactly the vertices of g.
bool is_proper(const Graph& g, const Coloring& c);

/// Exact k-colorability: backtracking on the most constrained vertex
/// (smallest palette, then higher degree, then lower index) with forced-move
/// propagation, value symmetry breaking and an optional clique seed.
/// Deterministic for identical inputs. Requires 1 <= k <= 64.
ColoringOutcome find_coloring(const Graph& g, int k, const SolverOptions& options = {});

/// Least k <= max_k with g k-colorable, or nullopt when it exceeds max_k.
std::optional<int> chromatic_number(const Graph& g, int max_k);

struct EnumerationResult {
  std::uint64_t count = 0;
  /// True iff the emitted colorings are the complete set (count < cap).
  bool exhausted = false;
};

/// Emits distinct proper k-colorings in lexicographic order of the color
/// vector, stopping after `cap` of them. The callback may return false to
/// stop early (the result is then not exhausted).
EnumerationResult enumerate_colorings(const Graph& g, int k, std::uint64_t cap,
                                      const std::function<bool(const Coloring&)>& emit);

/// The explicit 3-coloring of H_k: w_i -> 1, u_{2i}, v_{2i} -> 2, odd u, v -> 3.
/// Indexed in build_H(k) vertex order.
Coloring canonical_coloring_H(int k);

}  // namespace critgraph
