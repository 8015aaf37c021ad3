#include <doctest.h>

#include <random>

#include "critgraph/canon.hpp"
#include "critgraph/constructions.hpp"
#include "critgraph/formats.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

Graph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return new_graph(10, e);
}

Graph cube(int d) {
  EdgeList e;
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
  return new_graph(1 << d, e);
}

}  // namespace

TEST_CASE("automorphism counts of familiar graphs") {
  CHECK(automorphism_count(Graph(0)) == 1);
  CHECK(automorphism_count(Graph(5)) == 120);
  CHECK(automorphism_count(complete_graph(7)) == 5040);
  CHECK(automorphism_count(cycle_graph(9)) == 18);
  CHECK(automorphism_count(path_graph(6)) == 2);
  CHECK(automorphism_count(complete_bipartite(3, 4)) == 6 * 24);
  CHECK(automorphism_count(complete_bipartite(3, 3)) == 72);
  CHECK(automorphism_count(petersen()) == 120);
  CHECK(automorphism_count(cube(3)) == 48);
  CHECK(automorphism_count(cube(4)) == 384);
  CHECK(automorphism_count(complete_graph(20)) == 2432902008176640000ULL);
}

TEST_CASE("automorphism_count refuses what it cannot do exactly") {
  CHECK_THROWS_AS(automorphism_count(Graph(300)), AutomorphismBoundError);
  CHECK_THROWS_AS(automorphism_count(Graph(21)), AutomorphismBoundError);  // 21! overflows 64 bits
}

TEST_CASE("automorphism counts agree with brute force for every graph on up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    oracle::for_each_labeled_graph(n, [&](const Graph& g) { REQUIRE(automorphism_count(g) == oracle::automorphisms(g)); });
}

TEST_CASE("automorphism counts agree with brute force on random 7-vertex graphs") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 400; ++t) {
    const Graph g = oracle::random_graph(rng, 7, 0.2 + 0.6 * (t % 5) / 4.0);
    REQUIRE(automorphism_count(g) == oracle::automorphisms(g));
  }
}

TEST_CASE("orbits partition the vertices consistently with brute force") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(rng, 6, 0.5);
    const CanonicalLabeling c = canonical_labeling(g);
    // u, v share an orbit iff some automorphism maps u to v
    std::vector<int> p(6);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<char>> same(6, std::vector<char>(6, 0));
    do {
      bool ok = true;
      for (const Edge& e : g.edges()) ok = ok && g.has_edge(p[e.u], p[e.v]);
      if (ok)
        for (int v = 0; v < 6; ++v) same[v][p[v]] = 1;
    } while (std::next_permutation(p.begin(), p.end()));
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) REQUIRE((c.orbits[u] == c.orbits[v]) == static_cast<bool>(same[u][v]));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 40;
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const Graph h = relabel(g, oracle::random_permutation(rng, n));
    REQUIRE(canonical_graph6(g) == canonical_graph6(h));
    REQUIRE(are_isomorphic(g, h));
  }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
  // all graphs on 5 vertices: exactly 34 classes
  std::set<std::string> forms;
  oracle::for_each_labeled_graph(5, [&](const Graph& g) { forms.insert(canonical_graph6(g)); });
  CHECK(forms.size() == 34);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Graph a = oracle::random_graph(rng, 6, 0.5);
    const Graph b = oracle::random_graph(rng, 6, 0.5);
    REQUIRE(are_isomorphic(a, b) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("regular graphs with equal degree sequences are told apart") {
  // C6 and two triangles; the Petersen graph and the 5-prism
  EdgeList tri{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(are_isomorphic(cycle_graph(6), new_graph(6, tri)));
  EdgeList prism;
  for (int i = 0; i < 5; ++i) {
    prism.emplace_back(i, (i + 1) % 5);
    prism.emplace_back(i + 5, (i + 1) % 5 + 5);
    prism.emplace_back(i, i + 5);
  }
  CHECK_FALSE(are_isomorphic(petersen(), new_graph(10, prism)));
  CHECK(automorphism_count(new_graph(10, prism)) == 20);
}

TEST_CASE("canonical form survives relabeling of the constructions") {
  std::mt19937_64 rng(99);
  for (int k = 1; k <= 4; ++k) {
    const Graph g = build_G(k).graph();
    const Graph h = relabel(g, oracle::random_permutation(rng, g.order()));
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(automorphism_count(g) == automorphism_count(h));
  }
}
