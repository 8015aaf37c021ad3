#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with the algorithms they check beyond the Graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "critgraph/graph.hpp"

namespace oracle {

using critgraph::Edge;
using critgraph::Graph;
using critgraph::Vertex;

/// Calls fn(assignment) for every map V -> {0..k-1}; stops when fn returns false.
inline void for_each_assignment(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> a(n, 0);
  while (true) {
    if (!fn(a)) return;
    int i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) return;
  }
}

inline bool proper(const Graph& g, const std::vector<int>& a) {
  for (const Edge& e : g.edges())
    if (a[e.u] == a[e.v]) return false;
  return true;
}

inline bool colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  bool found = false;
  for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
    found = proper(g, a);
    return !found;
  });
  return found;
}

inline std::uint64_t count_colorings(const Graph& g, int k) {
  std::uint64_t count = 0;
  for_each_assignment(g.order(), k, [&](const std::vector<int>& a) {
    count += proper(g, a);
    return true;
  });
  return count;
}

/// k-critical straight from the definition.
inline bool critical(const Graph& g, int k) {
  if (colorable(g, k - 1) || !colorable(g, k)) return false;
  for (const Edge& e : g.edges())
    if (!colorable(critgraph::delete_edge(g, e.u, e.v), k - 1)) return false;
  return true;
}

/// Automorphisms by trying every permutation.
inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : edges)
      if (!g.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Isomorphism by trying every bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const Edge& e : edges)
      if (!b.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Enumerates partitions of a subset of V into exactly `blocks` nonempty
/// blocks (block[v] = -1 for unused vertices), in restricted-growth order.
inline void for_each_branch_partition(int n, int blocks, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> block(n, -1);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (n - v < blocks - used) return;
    if (v == n) {
      if (used == blocks) fn(block);
      return;
    }
    block[v] = -1;
    rec(v + 1, used);
    for (int b = 0; b < used; ++b) {
      block[v] = b;
      rec(v + 1, used);
    }
    if (used < blocks) {
      block[v] = used;
      rec(v + 1, used + 1);
    }
    block[v] = -1;
  };
  rec(0, 0);
}

/// Wagner: planar iff no K5 minor and no K3,3 minor. Branch sets must be
/// connected; the quotient must contain the target graph.
inline bool planar_by_minors(const Graph& g) {
  const int n = g.order();
  auto blocks_connected = [&](const std::vector<int>& block, int count) {
    for (int b = 0; b < count; ++b) {
      std::vector<Vertex> members;
      for (int v = 0; v < n; ++v)
        if (block[v] == b) members.push_back(v);
      std::vector<char> seen(n, 0);
      std::vector<Vertex> stack{members[0]};
      seen[members[0]] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (block[y] == b && !seen[y]) {
            seen[y] = 1;
            ++reached;
            stack.push_back(y);
          }
      }
      if (reached != members.size()) return false;
    }
    return true;
  };
  auto quotient = [&](const std::vector<int>& block, int count) {
    std::vector<std::vector<char>> adj(count, std::vector<char>(count, 0));
    for (const Edge& e : g.edges())
      if (block[e.u] >= 0 && block[e.v] >= 0 && block[e.u] != block[e.v])
        adj[block[e.u]][block[e.v]] = adj[block[e.v]][block[e.u]] = 1;
    return adj;
  };

  bool minor = false;
  if (n >= 5)
    for_each_branch_partition(n, 5, [&](const std::vector<int>& block) {
      if (minor) return;
      auto adj = quotient(block, 5);
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          if (!adj[a][b]) return;
      if (blocks_connected(block, 5)) minor = true;
    });
  if (!minor && n >= 6)
    for_each_branch_partition(n, 6, [&](const std::vector<int>& block) {
      if (minor) return;
      auto adj = quotient(block, 6);
      // choose the side containing block 0
      for (int s = 0; s < 64 && !minor; ++s) {
        if (!(s & 1) || std::popcount(static_cast<unsigned>(s)) != 3) continue;
        bool ok = true;
        for (int a = 0; a < 6 && ok; ++a)
          for (int b = 0; b < 6 && ok; ++b)
            if (((s >> a) & 1) && !((s >> b) & 1) && !adj[a][b]) ok = false;
        if (ok && blocks_connected(block, 6)) minor = true;
      }
    });
  return !minor;
}

/// Every labeled graph on n vertices (2^(n(n-1)/2) of them).
inline void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    fn(critgraph::new_graph(n, edges));
  }
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return critgraph::new_graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
