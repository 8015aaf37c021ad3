// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "critgraph/canon.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/constructions.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/formats.hpp"
#include "critgraph/planarity.hpp"
#include "critgraph/schedules.hpp"
#include "critgraph/search.hpp"
#include "oracles.hpp"

using namespace critgraph;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Searches are shared by criteria 6, 7 and 11.
std::vector<ExtremalResult>& searches() {
  static std::vector<ExtremalResult> results;
  return results;
}
std::vector<double>& search_times() {
  static std::vector<double> t;
  return t;
}

Outcome construction_counts() {
  const auto t = std::chrono::steady_clock::now();
  for (int k = 1; k <= 10; ++k) {
    const Graph g = build_G(k).graph();
    const DensityStats d = density_stats(g);
    if (g.order() != 6 * k + 7 || g.size() != static_cast<std::size_t>(14 * k + 12) || !d.meets_construction ||
        d.ratio != Rational(14 * k + 12, 6 * k + 7))
      return {false, "k=" + std::to_string(k) + ": n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size())};
  }
  const double s = seconds_since(t);
  return {s < 1.0, "k=1..10: n=6k+7, m=14k+12, 3m=7n-13 (" + fmt_seconds(s) + ")"};
}

Outcome criticality() {
  const auto t = std::chrono::steady_clock::now();
  std::size_t edges = 0;
  for (int k = 1; k <= 10; ++k) {
    const CriticalityReport r = verify_k_critical(build_G(k).graph(), 4);
    if (!r.critical()) return {false, "G_" + std::to_string(k) + " not 4-critical"};
    edges += r.edges.size();
  }
  const double s = seconds_since(t);
  return {s < 60.0, "k=1..10: chi=4 and all " + std::to_string(edges) + " edge deletions 3-colorable (" +
                        fmt_seconds(s) + ")"};
}

Outcome planarity() {
  for (int k = 1; k <= 10; ++k) {
    const Graph g = build_G(k).graph();
    const PlanarityVerdict v = is_planar(g);
    if (!v.planar || !v.rotation) return {false, "G_" + std::to_string(k) + " reported non-planar"};
    const EmbeddingCheck c = check_rotation_system(g, *v.rotation);
    if (!c.valid) return {false, "G_" + std::to_string(k) + " embedding invalid: " + c.problem};
  }
  const Graph k5 = complete_graph(5), k33 = complete_bipartite(3, 3);
  const PlanarityVerdict a = is_planar(k5), b = is_planar(k33);
  const bool k5_ok = !a.planar && a.kuratowski && classify_kuratowski(k5, *a.kuratowski) == KuratowskiKind::K5;
  const bool k33_ok = !b.planar && b.kuratowski && classify_kuratowski(k33, *b.kuratowski) == KuratowskiKind::K33;
  return {k5_ok && k33_ok, std::string("k=1..10 planar with Euler-checked embeddings; K5 witness ") +
                               (k5_ok ? "verified" : "MISSING") + ", K3,3 witness " + (k33_ok ? "verified" : "MISSING")};
}

Outcome lemma1() {
  const auto t = std::chrono::steady_clock::now();
  std::ostringstream d;
  for (int k = 1; k <= 6; ++k) {
    const auto tk = std::chrono::steady_clock::now();
    const Lemma1Report r = lemma1_check(k, 100'000'000);
    const double s = seconds_since(tk);
    if (!r.exhausted) return {false, "k=" + std::to_string(k) + ": enumeration cap exceeded"};
    if (r.mixed) return {false, "k=" + std::to_string(k) + ": " + std::to_string(r.mixed) + " mixed colorings"};
    if (r.class_i + r.class_ii != r.total) return {false, "k=" + std::to_string(k) + ": classification incomplete"};
    if (k == 6 && s >= 120.0) return {false, "k=6 took " + fmt_seconds(s)};
    d << (k > 1 ? ", " : "") << "k=" << k << ": " << r.class_i << "+" << r.class_ii;
  }
  return {true, "mixed=0 for k=1..6 (class i + class ii: " + d.str() + ") (" + fmt_seconds(seconds_since(t)) + ")"};
}

Outcome schedules() {
  std::ostringstream d;
  bool ok = true;
  for (int k = 1; k <= 4; ++k) {
    const ScheduleReport r = verify_schedules(k);
    std::size_t fallback = 0;
    for (const auto& c : r.certificates)
      fallback += c.source == CertificateSource::Fallback || c.source == CertificateSource::FallbackVertex;
    ok = ok && r.success() && r.coverage_exact;
    d << (k > 1 ? "; " : "") << "k=" << k << ": " << r.certificates.size() << " certified, " << r.uncovered.size()
      << " uncovered, " << r.printed_failures << " printed failures, " << fallback << " by fallback";
  }
  return {ok, d.str()};
}

void run_searches() {
  for (int n = 6; n <= 10; ++n) {
    const auto t = std::chrono::steady_clock::now();
    searches().push_back(search_extremal(n));
    search_times().push_back(seconds_since(t));
  }
}

Outcome table1_reproduction() {
  std::ostringstream d;
  bool ok = true;
  double up_to_9 = 0;
  for (std::size_t i = 0; i < searches().size(); ++i) {
    const ExtremalResult& r = searches()[i];
    const Table1Entry& e = table1()[i];
    const bool row = r.complete && r.f_n == e.f && r.F_n == e.F && r.stats.duplicates == 0;
    ok = ok && row;
    if (r.n <= 9) up_to_9 += search_times()[i];
    d << (i ? " " : "") << "n=" << r.n << ":(" << (r.f_n ? *r.f_n : -1) << "," << (r.F_n ? *r.F_n : -1) << ")"
      << (row ? "" : "!=(" + std::to_string(e.f) + "," + std::to_string(e.F) + ")");
  }
  const double n10 = search_times().back();
  ok = ok && up_to_9 < 600 && n10 < 7200;
  return {ok, d.str() + " complete; n<=9 " + fmt_seconds(up_to_9) + ", n=10 " + fmt_seconds(n10)};
}

Outcome ky_gate() {
  std::uint64_t graphs = 0, violations = 0, reported = 0;
  for (const ExtremalResult& r : searches()) {
    for (const std::string& g6 : r.survivors) {
      ++graphs;
      if (static_cast<long long>(decode_graph6(g6).size()) < ky_bound(r.n)) ++violations;
    }
    reported += r.ky_violations;
  }
  return {violations == 0 && reported == 0 && graphs > 0,
          std::to_string(graphs) + " 4-critical planar graphs (n=6..10), " + std::to_string(violations) +
              " below ceil((5n-2)/3)"};
}

Outcome density_trend() {
  const Rational limit(7, 3);
  Rational prev(0);
  for (int k = 1; k <= 1000; ++k) {
    const Rational r(14 * k + 12, 6 * k + 7);
    if (k > 1 && !(r > prev)) return {false, "not increasing at k=" + std::to_string(k)};
    if (!(r < limit)) return {false, "ratio reaches 7/3 at k=" + std::to_string(k)};
    prev = r;
  }
  const Rational gap = limit - prev;
  const bool close = prev > limit - Rational(1, 1000);
  return {close, "strictly increasing, below 7/3; 7/3 - ratio(G_1000) = " + std::to_string(gap.numerator()) + "/" +
                     std::to_string(gap.denominator())};
}

Outcome automorphisms() {
  // exact oracle suite: every graph on up to 7 vertices
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const std::string& g6 : enumerate_nonisomorphic(n, GeneratorFilter::All)) {
      const Graph g = decode_graph6(g6);
      if (automorphism_count(g) != oracle::automorphisms(g))
        return {false, "oracle disagreement on " + g6};
      ++checked;
    }
  std::ostringstream d;
  d << "oracle suite " << checked << "/" << checked << " exact; |Aut(G_k)| for k=1..3:";
  bool all_one = true;
  for (int k = 1; k <= 3; ++k) {
    const std::uint64_t a = automorphism_count(build_G(k).graph());
    all_one = all_one && a == 1;
    d << " " << a;
  }
  d << (all_one ? " (matches the claim of 1)" : " (finding: differs from the claimed 1)");
  return {true, d.str()};
}

Outcome solver_oracle() {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  int disagreements = 0, colorable = 0;
  for (int t = 0; t < 500; ++t) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    const ColoringOutcome out = find_coloring(g, 3);
    const bool expected = oracle::colorable(g, 3);
    if (out.colorable() != expected || (out.colorable() && !is_proper(g, *out.witness))) ++disagreements;
    colorable += expected;
  }
  return {disagreements == 0, "500 random graphs (n<=10, " + std::to_string(colorable) + " 3-colorable), " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome parity_probe() {
  std::ostringstream d;
  bool stated = true;
  for (const ExtremalResult& r : searches()) {
    const auto even = r.F_even();
    stated = stated && even.has_value();
    d << (r.n > 6 ? " " : "") << "F(" << r.n << ")=" << (r.F_n ? std::to_string(*r.F_n) : "-") << " "
      << (even ? (*even ? "even" : "odd") : "unknown");
  }
  return {stated, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "construction counts", construction_counts},
      {2, "4-criticality of G_k", criticality},
      {3, "planarity with certificates", planarity},
      {4, "H_k coloring dichotomy", lemma1},
      {5, "schedule verification", schedules},
      {6, "extremal table reproduction", [] {
         run_searches();
         return table1_reproduction();
       }},
      {7, "Kostochka-Yancey gate", ky_gate},
      {8, "density trend", density_trend},
      {9, "automorphism claim", automorphisms},
      {10, "solver oracle equivalence", solver_oracle},
      {11, "F(n) parity probe", parity_probe},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria pass"))
            << std::endl;
  return failed ? 1 : 0;
}
