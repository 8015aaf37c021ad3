#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgraph {

using Vertex = int;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as one fixed-width bitset row per vertex, packed
/// into 64-bit words. Values are immutable from the outside: every
/// mutation is a free function returning a new graph.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Words per adjacency row.
  int words() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  /// All edges in lexicographic (u, v) order.
  EdgeList edges() const;

  /// Symmetric, loop free, edge count consistent.
  bool invariants_hold() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend Graph new_graph(int, std::span<const Edge>);
  friend Graph add_edge(const Graph&, Vertex, Vertex);
  friend Graph delete_edge(const Graph&, Vertex, Vertex);

  void set_bit(Vertex u, Vertex v);
  void clear_bit(Vertex u, Vertex v);
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Builds a graph from an edge list; duplicate pairs collapse.
/// Throws GraphError on out-of-range endpoints or self-loops.
Graph new_graph(int n, std::span<const Edge> edges);

Graph add_edge(const Graph& g, Vertex u, Vertex v);

/// Throws GraphError when (u, v) is not an edge.
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

struct VertexDeletion {
  Graph graph;
  /// index_map[old] is the new index, or -1 for the removed vertex.
  /// Indices above the removed vertex shift down by one.
  std::vector<int> index_map;
};

VertexDeletion delete_vertex(const Graph& g, Vertex v);

/// Vertex degrees in ascending order.
std::vector<int> degree_sequence(const Graph& g);

int min_degree(const Graph& g);

bool is_connected(const Graph& g);

/// Subgraph induced by `keep` (in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace critgraph
