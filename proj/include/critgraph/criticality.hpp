#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "critgraph/coloring.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

using Rational = boost::rational<long long>;

struct EdgeCheck {
  Edge edge;
  /// G - edge is (k-1)-colorable.
  bool colorable = false;
  std::optional<Coloring> witness;
};

struct VertexCheck {
  Vertex vertex = 0;
  bool colorable = false;
  std::optional<Coloring> witness;
};

struct CriticalityOptions {
  /// Also check G - v for every vertex.
  bool check_vertices = false;
  /// Keep one (k-1)-coloring per deleted edge in the report.
  bool keep_witnesses = true;
  /// Worker threads for the per-edge sweep; results are identical for any value.
  int jobs = 1;
};

struct CriticalityReport {
  int k = 0;
  /// G is k-colorable and not (k-1)-colorable.
  bool chromatic_ok = false;
  bool k_colorable = false;
  bool below_colorable = false;
  std::optional<Coloring> k_witness;
  std::vector<EdgeCheck> edges;
  std::vector<VertexCheck> vertices;
  /// First edge whose deletion keeps G out of reach of k-1 colors.
  std::optional<Edge> counterexample;

  bool critical() const { return chromatic_ok && !counterexample; }
};

/// k-criticality: chi(G) = k and G - e is (k-1)-colorable for every edge e.
/// Requires k >= 2.
CriticalityReport verify_k_critical(const Graph& g, int k, const CriticalityOptions& options = {});

/// ceil((5n - 2) / 3), the lower bound on edges of a 4-critical planar
/// graph on n vertices.
long long ky_bound(long long n);

struct DensityStats {
  long long n = 0;
  long long m = 0;
  Rational ratio;
  /// (7n - 13) / 3.
  Rational bound_7n13;
  long long ky_bound = 0;
  /// 3m = 7n - 13.
  bool meets_construction = false;
};

DensityStats density_stats(long long n, long long m);
DensityStats density_stats(const Graph& g);

}  // namespace critgraph
