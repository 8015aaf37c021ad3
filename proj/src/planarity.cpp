#include "critgraph/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace critgraph {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const Edge& e : g.edges()) {
    auto [edge, added] = boost::add_edge(e.u, e.v, bg);
    (void)added;
    boost::put(boost::edge_index, bg, edge, index++);
  }
  return bg;
}

bool planar_edges(int n, const EdgeList& edges) {
  BoostGraph bg = to_boost(new_graph(n, edges));
  return boost::boyer_myrvold_planarity_test(bg);
}

/// The Boost witness occasionally carries extra edges. Dropping every edge
/// whose removal keeps the set non-planar leaves an edge-minimal non-planar
/// graph, which is a subdivision of K5 or K3,3.
EdgeList minimize_witness(const Graph& g, EdgeList edges) {
  if (classify_kuratowski(g, edges) != KuratowskiKind::None) return edges;
  for (std::size_t i = 0; i < edges.size();) {
    EdgeList without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
    if (!planar_edges(g.order(), without)) edges = std::move(without);
    else ++i;
  }
  return edges;
}

}  // namespace

PlanarityVerdict is_planar(const Graph& g, const PlanarityOptions& options) {
  PlanarityVerdict out;
  const long long n = g.order();
  const long long m = static_cast<long long>(g.size());
  if (n >= 3 && m > 3 * n - 6) {
    out.edge_bound_reject = true;
    if (!options.want_witness) return out;
  }

  BoostGraph bg = to_boost(g);
  if (!options.want_witness) {
    out.planar = boost::boyer_myrvold_planarity_test(bg);
    return out;
  }

  std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
  std::vector<BoostEdge> kuratowski;
  out.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (out.planar) {
    RotationSystem rotation(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      for (const BoostEdge& e : embedding[v]) {
        auto s = static_cast<Vertex>(boost::source(e, bg));
        auto t = static_cast<Vertex>(boost::target(e, bg));
        rotation[v].push_back(s == v ? t : s);
      }
    out.rotation = std::move(rotation);
  } else {
    EdgeList edges;
    for (const BoostEdge& e : kuratowski)
      edges.emplace_back(static_cast<Vertex>(boost::source(e, bg)),
                         static_cast<Vertex>(boost::target(e, bg)));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.kuratowski = minimize_witness(g, std::move(edges));
  }
  return out;
}

EmbeddingCheck check_rotation_system(const Graph& g, const RotationSystem& rotation) {
  EmbeddingCheck out;
  const int n = g.order();
  if (static_cast<int>(rotation.size()) != n) {
    out.problem = "rotation system has wrong vertex count";
    return out;
  }
  // position of each neighbour inside the rotation at v
  std::vector<std::map<Vertex, std::size_t>> where(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> listed = rotation[v];
    std::sort(listed.begin(), listed.end());
    if (listed != g.neighbors(v)) {
      out.problem = "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours";
      return out;
    }
    for (std::size_t i = 0; i < rotation[v].size(); ++i) where[v][rotation[v][i]] = i;
  }

  // components
  std::vector<int> comp(n, -1);
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : rotation[u])
        if (comp[w] < 0) {
          comp[w] = components;
          stack.push_back(w);
        }
    }
    ++components;
  }

  std::vector<long long> verts(components, 0), edges(components, 0), faces(components, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++verts[comp[v]];
    edges[comp[v]] += static_cast<long long>(rotation[v].size());
  }
  for (auto& e : edges) e /= 2;

  // Trace faces: after traversing dart (u, v), continue with (v, w) where w
  // follows u in the rotation at v.
  std::set<std::pair<Vertex, Vertex>> used;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rotation[u]) {
      if (used.contains({u, v})) continue;
      Vertex a = u, b = v;
      while (!used.contains({a, b})) {
        used.insert({a, b});
        const auto& rot = rotation[b];
        Vertex next = rot[(where[b][a] + 1) % rot.size()];
        a = b;
        b = next;
      }
      ++faces[comp[u]];
    }

  for (int c = 0; c < components; ++c) {
    if (edges[c] == 0) faces[c] = 1;  // isolated vertex: the outer face
    out.faces += static_cast<int>(faces[c]);
    if (verts[c] - edges[c] + faces[c] != 2) {
      out.problem = "component " + std::to_string(c) + " has V - E + F = " +
                    std::to_string(verts[c] - edges[c] + faces[c]);
      return out;
    }
  }
  out.valid = true;
  return out;
}

KuratowskiKind classify_kuratowski(const Graph& g, const EdgeList& edges) {
  for (const Edge& e : edges)
    if (e.u == e.v || e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v))
      return KuratowskiKind::None;
  Graph h = new_graph(g.order(), edges);

  std::vector<Vertex> branch;
  int branch_degree = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    const int d = h.degree(v);
    if (d == 0 || d == 2) continue;
    if (d == 1) return KuratowskiKind::None;
    if (branch_degree != 0 && d != branch_degree) return KuratowskiKind::None;
    branch_degree = d;
    branch.push_back(v);
  }
  const bool k5 = branch.size() == 5 && branch_degree == 4;
  const bool k33 = branch.size() == 6 && branch_degree == 3;
  if (!k5 && !k33) return KuratowskiKind::None;

  std::vector<char> is_branch(h.order(), 0);
  for (Vertex b : branch) is_branch[b] = 1;
  std::vector<char> visited(h.order(), 0);
  std::set<std::pair<Vertex, Vertex>> links;
  std::size_t walks = 0;
  for (Vertex b : branch)
    for (Vertex first : h.neighbors(b)) {
      Vertex prev = b, cur = first;
      while (!is_branch[cur]) {
        visited[cur] = 1;
        auto nb = h.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur == b) return KuratowskiKind::None;
      links.insert({std::min(b, cur), std::max(b, cur)});
      ++walks;
    }
  // every path is walked from both ends; a repeated pair means a multi-edge
  if (walks != 2 * links.size()) return KuratowskiKind::None;
  for (Vertex v = 0; v < h.order(); ++v)
    if (h.degree(v) == 2 && !visited[v]) return KuratowskiKind::None;  // detached cycle

  if (k5) return links.size() == 10 ? KuratowskiKind::K5 : KuratowskiKind::None;
  if (links.size() != 9) return KuratowskiKind::None;
  // 3-regular simple graph on 6 vertices: K3,3 iff bipartite
  std::map<Vertex, int> side;
  side[branch[0]] = 0;
  std::vector<Vertex> stack{branch[0]};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : links) {
      if (a != x && b != x) continue;
      Vertex y = a == x ? b : a;
      auto it = side.find(y);
      if (it == side.end()) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      } else if (it->second == side[x]) {
        return KuratowskiKind::None;
      }
    }
  }
  return side.size() == 6 ? KuratowskiKind::K33 : KuratowskiKind::None;
}

std::string to_string(KuratowskiKind kind) {
  switch (kind) {
    case KuratowskiKind::K5: return "K5";
    case KuratowskiKind::K33: return "K3,3";
    case KuratowskiKind::None: return "none";
  }
  return "none";
}

}  // namespace critgraph
