#include <doctest.h>

#include <random>

#include "critgraph/formats.hpp"
#include "critgraph/graph.hpp"
#include "oracles.hpp"

using namespace critgraph;

TEST_CASE("edges are normalized and deduplicated") {
  const std::vector<Edge> edges{{3, 1}, {1, 3}, {0, 2}};
  const Graph g = new_graph(4, edges);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges() == EdgeList{{0, 2}, {1, 3}});
  CHECK(g.invariants_hold());
}

TEST_CASE("bad edges are rejected") {
  const std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(new_graph(3, loop), GraphError);
  const std::vector<Edge> out{{0, 5}};
  CHECK_THROWS_AS(new_graph(3, out), GraphError);
  CHECK_THROWS_AS(delete_edge(path_graph(3), 0, 2), GraphError);
}

TEST_CASE("mutations return new graphs") {
  const Graph p = path_graph(4);
  const Graph q = add_edge(p, 0, 3);
  CHECK(p.size() == 3);
  CHECK(q.size() == 4);
  CHECK(q == cycle_graph(4));
  CHECK(delete_edge(q, 3, 0) == p);
}

TEST_CASE("vertex deletion shifts indices") {
  const Graph k4 = complete_graph(4);
  const VertexDeletion d = delete_vertex(k4, 1);
  CHECK(d.graph == complete_graph(3));
  CHECK(d.index_map == std::vector<int>{0, -1, 1, 2});
}

TEST_CASE("basic invariants of the standard builders") {
  CHECK(complete_graph(6).size() == 15);
  CHECK(cycle_graph(7).size() == 7);
  CHECK(complete_bipartite(3, 3).size() == 9);
  CHECK(min_degree(cycle_graph(5)) == 2);
  CHECK(degree_sequence(path_graph(3)) == std::vector<int>{1, 1, 2});
  CHECK(is_connected(path_graph(6)));
  CHECK_FALSE(is_connected(Graph(2)));
  const std::vector<Vertex> keep{0, 2, 4};
  CHECK(induced_subgraph(complete_graph(5), keep) == complete_graph(3));
}

TEST_CASE("rows wider than one word") {
  const Graph g = complete_graph(130);
  CHECK(g.words() == 3);
  CHECK(g.size() == 130u * 129u / 2u);
  CHECK(g.degree(129) == 129);
  CHECK(g.invariants_hold());
}

TEST_CASE("graph6 known encodings") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(complete_graph(2)) == "A_");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(decode_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(20251014);
  std::uniform_int_distribution<int> order(0, 80);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const std::string text = encode_graph6(g);
    REQUIRE(decode_graph6(text) == g);
  }
  // the long length prefix
  const Graph big = oracle::random_graph(rng, 300, 0.02);
  CHECK(encode_graph6(big)[0] == '~');
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 errors carry offsets") {
  try {
    decode_graph6("C~~");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    decode_graph6("C\x01");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(decode_graph6(""), FormatError);
  CHECK_THROWS_AS(decode_graph6("A`"), FormatError);  // nonzero padding bits
}

TEST_CASE("DIMACS round trip and validation") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + t % 20, 0.3);
    REQUIRE(decode_dimacs(encode_dimacs(g)) == g);
  }
  CHECK(decode_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n") == path_graph(3));
  CHECK_THROWS_AS(decode_dimacs("p edge 3 2\ne 1 2\n"), FormatError);
  CHECK_THROWS_AS(decode_dimacs("p edge 3 1\ne 1 4\n"), FormatError);
  CHECK_THROWS_AS(decode_dimacs("e 1 2\n"), FormatError);
}

TEST_CASE("text exports") {
  const Graph g = path_graph(3);
  CHECK(encode_edgelist(g) == "3 2\n0 1\n1 2\n");
  const std::string dot = encode_dot(g, [](Vertex v) { return "v" + std::to_string(v); });
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("v0 -- v1;") != std::string::npos);
  CHECK(decode_any("p edge 2 1\ne 1 2\n") == complete_graph(2));
  CHECK(decode_any("C~\n") == complete_graph(4));
}
