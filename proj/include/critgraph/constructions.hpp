#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/graph.hpp"

namespace critgraph {

enum class LabelLetter : unsigned char { U, V, W, X, Y };

/// Construction label: u_i, v_i, w_i, x_1..x_3 or y_1, y_2.
struct VertexLabel {
  LabelLetter letter = LabelLetter::U;
  int index = 0;

  static VertexLabel u(int i) { return {LabelLetter::U, i}; }
  static VertexLabel v(int i) { return {LabelLetter::V, i}; }
  static VertexLabel w(int i) { return {LabelLetter::W, i}; }
  static VertexLabel x(int i) { return {LabelLetter::X, i}; }
  static VertexLabel y(int i) { return {LabelLetter::Y, i}; }

  /// "u3", "v0", "w12", "x1", "y2".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static VertexLabel parse(std::string_view text);

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

using LabelSet = std::set<VertexLabel>;

enum class Family { H, G };

/// A graph together with its construction labels.
///
/// Vertex order is fixed: u_0..u_m, v_0..v_m, w_1..w_m, then for the G
/// family x_1, x_2, x_3, y_1, y_2, where m = k for H_k and m = 2k for G_k.
class LabeledGraph {
 public:
  LabeledGraph(Graph graph, Family family, int k, std::vector<VertexLabel> labels);

  const Graph& graph() const { return graph_; }
  Family family() const { return family_; }
  int k() const { return k_; }
  /// Index bound m of the underlying H_m (k for H_k, 2k for G_k).
  int span() const { return family_ == Family::H ? k_ : 2 * k_; }

  const VertexLabel& label(Vertex v) const { return labels_.at(v); }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  bool contains(const VertexLabel& l) const { return index_.contains(l); }
  /// Throws std::out_of_range for labels outside this graph.
  Vertex index_of(const VertexLabel& l) const;
  std::optional<Vertex> find(const VertexLabel& l) const;

  Edge edge(const VertexLabel& a, const VertexLabel& b) const {
    return {index_of(a), index_of(b)};
  }

 private:
  Graph graph_;
  Family family_;
  int k_;
  std::vector<VertexLabel> labels_;
  std::map<VertexLabel, Vertex> index_;
};

/// H_k: paths u_0..u_k and v_0..v_k, and each w_i (1 <= i <= k) joined to
/// u_{i-1}, u_i, v_{i-1}, v_i. 3k+2 vertices, 6k edges.
LabeledGraph build_H(int k);

/// G_k: H_{2k} plus x_1, x_2, x_3, y_1, y_2. 6k+7 vertices, 14k+12 edges.
LabeledGraph build_G(int k);

enum class LabelClass { U1, U2, W, V1, V2 };

std::string to_string(LabelClass c);
std::optional<LabelClass> parse_label_class(std::string_view text);

/// U1 = even u's (the H_{2k} neighbours of x_1), U2 = odd u's, W = all
/// w's, V1 = odd v's (the H_{2k} neighbours of y_1), V2 = even v's.
std::map<LabelClass, LabelSet> class_sets(int k);

struct HajosJoin {
  Graph graph;
  /// Index of each vertex of the first and second input in the result.
  std::vector<int> first_map;
  std::vector<int> second_map;
};

/// Hajos join: remove a1 b1 from g1 and a2 b2 from g2, identify a2 with
/// a1, add the edge b1 b2. The first input keeps its indices; the second
/// is appended after it, with a2 mapped onto a1.
/// Throws GraphError when either pair is not an edge.
HajosJoin hajos_join(const Graph& g1, Vertex a1, Vertex b1, const Graph& g2, Vertex a2,
                     Vertex b2);

}  // namespace critgraph
