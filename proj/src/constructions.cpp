#include "critgraph/constructions.hpp"

#include <charconv>
#include <stdexcept>

namespace critgraph {

std::string VertexLabel::to_string() const {
  static constexpr char kLetters[] = {'u', 'v', 'w', 'x', 'y'};
  return kLetters[static_cast<int>(letter)] + std::to_string(index);
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad vertex label '" + std::string(text) + "'");
  VertexLabel out;
  switch (text[0]) {
    case 'u': out.letter = LabelLetter::U; break;
    case 'v': out.letter = LabelLetter::V; break;
    case 'w': out.letter = LabelLetter::W; break;
    case 'x': out.letter = LabelLetter::X; break;
    case 'y': out.letter = LabelLetter::Y; break;
    default: throw std::invalid_argument("bad vertex label '" + std::string(text) + "'");
  }
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || out.index < 0)
    throw std::invalid_argument("bad vertex label '" + std::string(text) + "'");
  return out;
}

LabeledGraph::LabeledGraph(Graph graph, Family family, int k, std::vector<VertexLabel> labels)
    : graph_(std::move(graph)), family_(family), k_(k), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != graph_.order())
    throw GraphError("label count does not match vertex count");
  for (Vertex v = 0; v < graph_.order(); ++v)
    if (!index_.emplace(labels_[v], v).second)
      throw GraphError("duplicate label " + labels_[v].to_string());
}

Vertex LabeledGraph::index_of(const VertexLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw std::out_of_range("no vertex labeled " + l.to_string());
  return it->second;
}

std::optional<Vertex> LabeledGraph::find(const VertexLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Labels and edges of H_m in canonical index order.
void append_h(int m, std::vector<VertexLabel>& labels, EdgeList& edges) {
  for (int i = 0; i <= m; ++i) labels.push_back(VertexLabel::u(i));
  for (int i = 0; i <= m; ++i) labels.push_back(VertexLabel::v(i));
  for (int i = 1; i <= m; ++i) labels.push_back(VertexLabel::w(i));
  auto u = [](int i) { return i; };
  auto v = [m](int i) { return m + 1 + i; };
  auto w = [m](int i) { return 2 * (m + 1) + i - 1; };
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(u(i), u(i + 1));
    edges.emplace_back(v(i), v(i + 1));
  }
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(w(i), u(i - 1));
    edges.emplace_back(w(i), u(i));
    edges.emplace_back(w(i), v(i - 1));
    edges.emplace_back(w(i), v(i));
  }
}

}  // namespace

LabeledGraph build_H(int k) {
  if (k < 1) throw GraphError("build_H requires k >= 1, got " + std::to_string(k));
  std::vector<VertexLabel> labels;
  EdgeList edges;
  append_h(k, labels, edges);
  Graph g = new_graph(static_cast<int>(labels.size()), edges);
  return {std::move(g), Family::H, k, std::move(labels)};
}

LabeledGraph build_G(int k) {
  if (k < 1) throw GraphError("build_G requires k >= 1, got " + std::to_string(k));
  const int m = 2 * k;
  std::vector<VertexLabel> labels;
  EdgeList edges;
  append_h(m, labels, edges);
  const int base = static_cast<int>(labels.size());
  for (int i = 1; i <= 3; ++i) labels.push_back(VertexLabel::x(i));
  labels.push_back(VertexLabel::y(1));
  labels.push_back(VertexLabel::y(2));

  auto u = [](int i) { return i; };
  auto v = [m](int i) { return m + 1 + i; };
  const int w1 = 2 * (m + 1);
  const int x1 = base, x2 = base + 1, x3 = base + 2, y1 = base + 3, y2 = base + 4;

  for (int i = 0; i <= m; i += 2) edges.emplace_back(x1, u(i));
  for (int i = 1; i <= m - 1; i += 2) edges.emplace_back(y1, v(i));
  for (auto [a, b] : {std::pair{x1, x2}, {x1, x3}, {x1, y2}, {x2, y1}, {x2, y2}, {x2, v(0)},
                      {x2, x3}, {x3, y1}, {x3, v(m)}, {x3, u(m)}, {y2, w1}})
    edges.emplace_back(a, b);

  Graph g = new_graph(static_cast<int>(labels.size()), edges);
  return {std::move(g), Family::G, k, std::move(labels)};
}

std::string to_string(LabelClass c) {
  switch (c) {
    case LabelClass::U1: return "U1";
    case LabelClass::U2: return "U2";
    case LabelClass::W: return "W";
    case LabelClass::V1: return "V1";
    case LabelClass::V2: return "V2";
  }
  return "?";
}

std::optional<LabelClass> parse_label_class(std::string_view text) {
  if (text == "U1") return LabelClass::U1;
  if (text == "U2") return LabelClass::U2;
  if (text == "W") return LabelClass::W;
  if (text == "V1") return LabelClass::V1;
  if (text == "V2") return LabelClass::V2;
  return std::nullopt;
}

std::map<LabelClass, LabelSet> class_sets(int k) {
  if (k < 1) throw GraphError("class_sets requires k >= 1");
  std::map<LabelClass, LabelSet> out;
  auto& u1 = out[LabelClass::U1];
  auto& u2 = out[LabelClass::U2];
  auto& w = out[LabelClass::W];
  auto& v1 = out[LabelClass::V1];
  auto& v2 = out[LabelClass::V2];
  for (int i = 0; i <= 2 * k; ++i) {
    (i % 2 == 0 ? u1 : u2).insert(VertexLabel::u(i));
    (i % 2 == 0 ? v2 : v1).insert(VertexLabel::v(i));
    if (i >= 1) w.insert(VertexLabel::w(i));
  }
  return out;
}

HajosJoin hajos_join(const Graph& g1, Vertex a1, Vertex b1, const Graph& g2, Vertex a2,
                     Vertex b2) {
  if (a1 == b1 || !g1.has_edge(a1, b1))
    throw GraphError("hajos_join: first pair is not an edge of the first graph");
  if (a2 == b2 || !g2.has_edge(a2, b2))
    throw GraphError("hajos_join: second pair is not an edge of the second graph");
  const int n1 = g1.order();
  HajosJoin out;
  out.first_map.resize(n1);
  for (int i = 0; i < n1; ++i) out.first_map[i] = i;
  out.second_map.resize(g2.order());
  int next = n1;
  for (int i = 0; i < g2.order(); ++i) out.second_map[i] = i == a2 ? a1 : next++;

  EdgeList edges;
  for (const Edge& e : g1.edges())
    if (e != Edge(a1, b1)) edges.push_back(e);
  for (const Edge& e : g2.edges())
    if (e != Edge(a2, b2)) edges.emplace_back(out.second_map[e.u], out.second_map[e.v]);
  edges.emplace_back(b1, out.second_map[b2]);
  out.graph = new_graph(next, edges);
  return out;
}

}  // namespace critgraph
