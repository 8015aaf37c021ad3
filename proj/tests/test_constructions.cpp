#include <doctest.h>

#include "critgraph/constructions.hpp"
#include "critgraph/planarity.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

bool adjacent(const LabeledGraph& g, VertexLabel a, VertexLabel b) {
  return g.graph().has_edge(g.index_of(a), g.index_of(b));
}

}  // namespace

TEST_CASE("labels print and parse") {
  CHECK(VertexLabel::u(3).to_string() == "u3");
  CHECK(VertexLabel::y(2).to_string() == "y2");
  CHECK(VertexLabel::parse("w12") == VertexLabel::w(12));
  CHECK_THROWS_AS(VertexLabel::parse("z1"), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabel::parse("u"), std::invalid_argument);
  CHECK_THROWS_AS(VertexLabel::parse("u1x"), std::invalid_argument);
}

TEST_CASE("H_k structure") {
  for (int k = 1; k <= 8; ++k) {
    const LabeledGraph h = build_H(k);
    CHECK(h.graph().order() == 3 * k + 2);
    CHECK(h.graph().size() == static_cast<std::size_t>(6 * k));
    for (int i = 1; i <= k; ++i) {
      CHECK(adjacent(h, VertexLabel::u(i - 1), VertexLabel::u(i)));
      CHECK(adjacent(h, VertexLabel::v(i - 1), VertexLabel::v(i)));
      for (auto l : {VertexLabel::u(i - 1), VertexLabel::u(i), VertexLabel::v(i - 1), VertexLabel::v(i)})
        CHECK(adjacent(h, VertexLabel::w(i), l));
    }
  }
  CHECK_THROWS_AS(build_H(0), GraphError);
}

TEST_CASE("G_k counts and degree-3 vertices") {
  for (int k = 1; k <= 10; ++k) {
    const LabeledGraph g = build_G(k);
    CHECK(g.graph().order() == 6 * k + 7);
    CHECK(g.graph().size() == static_cast<std::size_t>(14 * k + 12));
    CHECK(3 * g.graph().size() == static_cast<std::size_t>(7 * g.graph().order() - 13));
    std::set<VertexLabel> deg3;
    for (Vertex v = 0; v < g.graph().order(); ++v) {
      CHECK(g.graph().degree(v) >= 3);
      if (g.graph().degree(v) == 3) deg3.insert(g.label(v));
    }
    std::set<VertexLabel> expected{VertexLabel::y(2), VertexLabel::u(0), VertexLabel::v(0), VertexLabel::v(2 * k)};
    if (k == 1) expected.insert(VertexLabel::y(1));  // y1 has the single odd neighbour v1
    CHECK(deg3 == expected);
  }
  CHECK_THROWS_AS(build_G(0), GraphError);
}

TEST_CASE("G_k attachment edges") {
  const int k = 3;
  const LabeledGraph g = build_G(k);
  const auto x = [](int i) { return VertexLabel::x(i); };
  const auto y = [](int i) { return VertexLabel::y(i); };
  for (int i = 0; i <= 2 * k; ++i) {
    CHECK(adjacent(g, x(1), VertexLabel::u(i)) == (i % 2 == 0));
    CHECK(adjacent(g, y(1), VertexLabel::v(i)) == (i % 2 == 1));
    CHECK_FALSE(adjacent(g, x(1), VertexLabel::v(i)));
  }
  CHECK(adjacent(g, x(1), x(2)));
  CHECK(adjacent(g, x(1), x(3)));
  CHECK(adjacent(g, x(1), y(2)));
  CHECK(adjacent(g, x(2), y(1)));
  CHECK(adjacent(g, x(2), y(2)));
  CHECK(adjacent(g, x(2), VertexLabel::v(0)));
  CHECK(adjacent(g, x(2), x(3)));
  CHECK(adjacent(g, x(3), y(1)));
  CHECK(adjacent(g, x(3), VertexLabel::v(2 * k)));
  CHECK(adjacent(g, x(3), VertexLabel::u(2 * k)));
  CHECK(adjacent(g, y(2), VertexLabel::w(1)));
  CHECK_FALSE(adjacent(g, x(1), y(1)));
  CHECK_THROWS_AS(g.index_of(VertexLabel::u(2 * k + 1)), std::out_of_range);
  CHECK_FALSE(g.find(VertexLabel::x(4)).has_value());
}

TEST_CASE("label classes") {
  const auto cls = class_sets(2);
  CHECK(cls.at(LabelClass::U1) == LabelSet{VertexLabel::u(0), VertexLabel::u(2), VertexLabel::u(4)});
  CHECK(cls.at(LabelClass::U2) == LabelSet{VertexLabel::u(1), VertexLabel::u(3)});
  CHECK(cls.at(LabelClass::V1) == LabelSet{VertexLabel::v(1), VertexLabel::v(3)});
  CHECK(cls.at(LabelClass::V2) == LabelSet{VertexLabel::v(0), VertexLabel::v(2), VertexLabel::v(4)});
  CHECK(cls.at(LabelClass::W).size() == 4);
  CHECK(parse_label_class("V1") == LabelClass::V1);
  CHECK_FALSE(parse_label_class("V3").has_value());
}

TEST_CASE("Hajos join of two K4 is the 4-critical Moser spindle") {
  const Graph k4 = complete_graph(4);
  const HajosJoin j = hajos_join(k4, 0, 1, k4, 0, 1);
  CHECK(j.graph.order() == 7);
  CHECK(j.graph.size() == 11);
  CHECK(j.second_map[0] == 0);
  CHECK(j.graph.has_edge(1, j.second_map[1]));
  CHECK_FALSE(j.graph.has_edge(0, 1));
  CHECK(oracle::critical(j.graph, 4));
  CHECK(is_planar(j.graph).planar);
  CHECK_THROWS_AS(hajos_join(path_graph(3), 0, 2, k4, 0, 1), GraphError);
}
