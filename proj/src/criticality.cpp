#include "critgraph/criticality.hpp"

#include <stdexcept>

#include "critgraph/parallel.hpp"

namespace critgraph {

CriticalityReport verify_k_critical(const Graph& g, int k, const CriticalityOptions& options) {
  if (k < 2) throw std::invalid_argument("verify_k_critical requires k >= 2");
  CriticalityReport report;
  report.k = k;

  ColoringOutcome full = find_coloring(g, k);
  report.k_colorable = full.colorable();
  report.k_witness = full.witness;
  report.below_colorable = find_coloring(g, k - 1).colorable();
  report.chromatic_ok = report.k_colorable && !report.below_colorable;

  const EdgeList edges = g.edges();
  report.edges.resize(edges.size());
  parallel_for(edges.size(), options.jobs, [&](std::size_t i) {
    const Edge e = edges[i];
    SolverOptions solver;
    solver.deprioritized = {e.u, e.v};
    ColoringOutcome out = find_coloring(delete_edge(g, e.u, e.v), k - 1, solver);
    EdgeCheck& check = report.edges[i];
    check.edge = e;
    check.colorable = out.colorable();
    if (options.keep_witnesses) check.witness = std::move(out.witness);
  });
  for (const EdgeCheck& check : report.edges)
    if (!check.colorable) {
      report.counterexample = check.edge;
      break;
    }

  if (options.check_vertices) {
    report.vertices.resize(g.order());
    parallel_for(static_cast<std::size_t>(g.order()), options.jobs, [&](std::size_t i) {
      const auto v = static_cast<Vertex>(i);
      ColoringOutcome out = find_coloring(delete_vertex(g, v).graph, k - 1);
      VertexCheck& check = report.vertices[i];
      check.vertex = v;
      check.colorable = out.colorable();
      if (options.keep_witnesses) check.witness = std::move(out.witness);
    });
  }
  return report;
}

long long ky_bound(long long n) {
  const long long num = 5 * n - 2;
  return num >= 0 ? (num + 2) / 3 : -((-num) / 3);
}

DensityStats density_stats(long long n, long long m) {
  if (n < 1) throw std::invalid_argument("density_stats requires n >= 1");
  DensityStats s;
  s.n = n;
  s.m = m;
  s.ratio = Rational(m, n);
  s.bound_7n13 = Rational(7 * n - 13, 3);
  s.ky_bound = ky_bound(n);
  s.meets_construction = 3 * m == 7 * n - 13;
  return s;
}

DensityStats density_stats(const Graph& g) {
  return density_stats(g.order(), static_cast<long long>(g.size()));
}

}  // namespace critgraph
