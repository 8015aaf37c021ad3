#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace critgraph {

/// Largest vertex count the search accepts.
inline constexpr int kMaxSearchOrder = 32;

struct SearchBudget {
  std::optional<double> seconds;
  /// Limit on generated tree nodes (accepted graphs at all levels).
  std::optional<std::uint64_t> nodes;
};

struct SearchOptions {
  int jobs = 1;
  /// Also prune the last level with m >= ceil((5n-2)/3). Off by default so
  /// that the bound is checked on every graph found rather than assumed.
  bool ky_prune = false;
  /// Called after each finished subtree with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct SearchStats {
  /// Accepted graphs per level (index = vertex count).
  std::vector<std::uint64_t> level_nodes;
  /// Final-level graphs handed to the independent verifier.
  std::uint64_t candidates = 0;
  /// Candidates the verifier rejected as not 4-critical or not planar.
  std::uint64_t verifier_rejects = 0;
  /// Survivors whose canonical form repeated an earlier survivor.
  std::uint64_t duplicates = 0;
  std::size_t subtrees = 0;
};

struct ExtremalResult {
  int n = 0;
  std::optional<int> f_n;
  std::optional<int> F_n;
  /// Non-isomorphic 4-critical planar graphs found.
  std::uint64_t count = 0;
  bool complete = false;
  /// Canonical graph6 of one graph with f_n and one with F_n edges.
  std::optional<std::string> witness_min;
  std::optional<std::string> witness_max;
  /// All survivors as canonical graph6, sorted.
  std::vector<std::string> survivors;
  std::map<int, std::uint64_t> edge_histogram;
  /// Survivors with fewer than ceil((5n-2)/3) edges.
  std::uint64_t ky_violations = 0;
  SearchStats stats;

  /// Whether F(n) is even; empty unless complete with count > 0.
  std::optional<bool> F_even() const;
};

/// Exhaustive search for 4-critical planar graphs on n vertices.
///
/// Graphs are generated one vertex at a time; a child is kept only when the
/// added vertex lies in the automorphism orbit of the child's canonical
/// deletion vertex, which yields each isomorphism class once. Intermediate
/// graphs are pruned by properties every induced subgraph of a 4-critical
/// planar graph has: planar, 3-colorable, K4-free (n >= 5) and minimum
/// degree at least 3 - (vertices still to add). Final graphs must be
/// connected with minimum degree 3, at most 3n-6 edges, not 3-colorable and
/// planar, and are then confirmed by verify_k_critical and is_planar.
///
/// Throws std::invalid_argument for n < 4 or n > kMaxSearchOrder.
ExtremalResult search_extremal(int n, const SearchBudget& budget = {}, const SearchOptions& options = {});

enum class GeneratorFilter { All, Planar };

/// The same orderly generator without the criticality prunes: one canonical
/// graph6 string per isomorphism class of graphs on n vertices (or of
/// planar graphs), sorted. For validating the generator; 1 <= n <= 10.
std::vector<std::string> enumerate_nonisomorphic(int n, GeneratorFilter filter);

struct Table1Entry {
  int n = 0;
  int f = 0;
  int F = 0;
};

/// Published values of f(n) and F(n) for n = 6..14.
const std::vector<Table1Entry>& table1();

enum class Table1Status { Pass, Fail, Inconclusive };
std::string to_string(Table1Status s);

struct Table1Row {
  int n = 0;
  Table1Entry expected;
  ExtremalResult result;
  Table1Status status = Table1Status::Inconclusive;
  std::vector<std::string> discrepancies;
};

struct Table1Report {
  std::vector<Table1Row> rows;

  bool all_pass() const;
  bool any_fail() const;
};

/// Runs search_extremal for n = 6..min(n_max, 14), each under `budget`,
/// and compares with table1(). A truncated run is inconclusive; a complete
/// run fails on any mismatch or bound violation.
Table1Report check_table1(int n_max, const SearchBudget& budget = {}, const SearchOptions& options = {});

}  // namespace critgraph
