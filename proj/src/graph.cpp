#include "critgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace critgraph {

namespace {

std::string vertex_text(Vertex v) { return std::to_string(v); }

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw GraphError("vertex " + vertex_text(v) + " out of range for n=" +
                     std::to_string(n_));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::invariants_hold() const {
  std::size_t twice = 0;
  for (Vertex u = 0; u < n_; ++u) {
    auto r = row(u);
    if ((r[u >> 6] >> (u & 63)) & 1u) return false;
    // bits beyond n in the last word must stay clear
    if (n_ % 64 != 0 && (r[words_ - 1] >> (n_ % 64)) != 0) return false;
    for (Vertex v : neighbors(u)) {
      if (!((row(v)[u >> 6] >> (u & 63)) & 1u)) return false;
      ++twice;
    }
  }
  return twice == 2 * m_;
}

void Graph::set_bit(Vertex u, Vertex v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

void Graph::clear_bit(Vertex u, Vertex v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
}

Graph new_graph(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw GraphError("edge (" + vertex_text(e.u) + "," + vertex_text(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + vertex_text(e.u));
    if (!g.has_edge(e.u, e.v)) {
      g.set_bit(e.u, e.v);
      g.set_bit(e.v, e.u);
      ++g.m_;
    }
  }
  assert(g.invariants_hold());
  return g;
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("self-loop at vertex " + vertex_text(u));
  if (g.has_edge(u, v))
    throw GraphError("(" + vertex_text(u) + "," + vertex_text(v) + ") is already an edge");
  Graph out = g;
  out.set_bit(u, v);
  out.set_bit(v, u);
  ++out.m_;
  assert(out.invariants_hold());
  return out;
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.has_edge(u, v))
    throw GraphError("(" + vertex_text(u) + "," + vertex_text(v) + ") is not an edge");
  Graph out = g;
  out.clear_bit(u, v);
  out.clear_bit(v, u);
  --out.m_;
  assert(out.invariants_hold());
  return out;
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw GraphError("vertex " + vertex_text(v) + " out of range for n=" +
                     std::to_string(g.order()));
  std::vector<int> map(g.order());
  for (int i = 0; i < g.order(); ++i) map[i] = i < v ? i : (i == v ? -1 : i - 1);
  EdgeList kept;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) kept.emplace_back(map[e.u], map[e.v]);
  return {new_graph(g.order() - 1, kept), std::move(map)};
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<int>(i);
  EdgeList kept;
  for (const Edge& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) kept.emplace_back(pos[e.u], pos[e.v]);
  return new_graph(static_cast<int>(keep.size()), kept);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw GraphError("relabel: permutation size mismatch");
  EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(perm[e.u], perm[e.v]);
  return new_graph(g.order(), out);
}

Graph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return new_graph(n, e);
}

Graph cycle_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return new_graph(n, e);
}

Graph path_graph(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return new_graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return new_graph(a + b, e);
}

}  // namespace critgraph
