#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/coloring.hpp"
#include "critgraph/constructions.hpp"
#include "critgraph/label_expr.hpp"

namespace critgraph {

class ScheduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TargetKind { Vertex, Edge };
enum class Parity { Any, Even, Odd };

/// Admissible values of the case index i for a given k.
struct IndexRange {
  Parity parity = Parity::Any;
  IndexExpr lo;
  IndexExpr hi;

  std::vector<int> values(int k) const;
  bool admits(int k, int i) const;
  std::string to_string() const;
};

/// One case of the coloring schedule: delete a vertex or an edge (possibly
/// parametrized by i), color C1 with 1, C2 with 2 and everything else 3.
struct ScheduleCase {
  std::string id;
  TargetKind kind = TargetKind::Edge;
  LabelPattern a;
  LabelPattern b;  // unused for vertex targets
  std::optional<IndexRange> range;
  LabelSetExpr c1 = LabelSetExpr::literal({});
  LabelSetExpr c2 = LabelSetExpr::literal({});

  bool parametric() const { return range.has_value(); }
  std::string target_text() const;
};

/// Parses the record format of data/schedule_table.txt. Throws
/// ScheduleError naming the offending line.
std::vector<ScheduleCase> parse_schedule_table(std::string_view text);

/// The built-in table (data/schedule_table.txt, compiled in).
const std::vector<ScheduleCase>& schedule_table();
std::string_view schedule_table_source();

class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expansion {
  TargetKind kind = TargetKind::Edge;
  /// Deleted edge or vertex, in G_k indices.
  Edge edge;
  Vertex vertex = -1;
  /// G_k with the target removed (vertex deletion reindexes per delete_vertex).
  Graph deleted;
  std::vector<int> index_map;
  /// C1 -> 1, C2 -> 2, rest -> 3, indexed like `deleted`.
  Coloring coloring;
  LabelSet c1;
  LabelSet c2;
  bool boundary_adjusted = false;
};

/// Instantiates a case on G_k. Throws ExpansionError when the index is
/// missing or outside the case's range, the target is not in G_k, a set
/// expression is malformed, or C1 and C2 overlap.
Expansion expand_schedule(const ScheduleCase& c, const LabeledGraph& gk, std::optional<int> index);

struct InstantiationResult {
  std::string case_id;
  std::optional<int> index;
  std::string target;
  bool expands_ok = false;
  std::string error;
  /// The printed coloring is proper on G_k minus the target.
  bool proper = false;
  bool boundary_adjusted = false;
  bool fallback_used = false;
  bool fallback_ok = false;
};

enum class CertificateSource { Printed, PrintedVertex, Fallback, FallbackVertex };
std::string to_string(CertificateSource s);

struct EdgeCertificate {
  Edge edge;
  std::string labels;
  std::string case_id;
  std::optional<int> index;
  CertificateSource source = CertificateSource::Printed;
  /// 3-coloring of all of G_k, proper on G_k - edge.
  Coloring coloring;
};

struct ScheduleReport {
  int k = 0;
  std::vector<InstantiationResult> instantiations;
  /// One certificate per certified edge, in edge order.
  std::vector<EdgeCertificate> certificates;
  std::vector<std::string> uncovered;
  /// Targets of all edge cases plus edges at the deleted vertices equal E(G_k).
  bool coverage_exact = false;
  std::size_t printed_failures = 0;
  std::map<std::string, std::vector<int>> ranges;

  bool success() const { return uncovered.empty(); }
};

/// Expands every case over its full index range, checks each printed
/// coloring against G_k minus the target, falls back to the solver on
/// failure, and audits that every edge of G_k has a certificate.
ScheduleReport verify_schedules(int k);

struct Lemma1Report {
  int k = 0;
  std::uint64_t total = 0;
  /// c(u_j) = c(v_j) for every column j.
  std::uint64_t class_i = 0;
  /// c(u_j) != c(v_j) for every column, and all w's share one color that
  /// no u or v uses.
  std::uint64_t class_ii = 0;
  std::uint64_t mixed = 0;
  bool exhausted = false;
  std::optional<Coloring> first_mixed;
};

/// Enumerates the proper 3-colorings of H_k (up to `cap`) and classifies them.
Lemma1Report lemma1_check(int k, std::uint64_t cap);

}  // namespace critgraph
