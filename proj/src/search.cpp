#include "critgraph/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>

#include "critgraph/canon.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/formats.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/planarity.hpp"

namespace critgraph {

namespace {

using Rows = std::array<std::uint64_t, kMaxSearchOrder>;
using Clock = std::chrono::steady_clock;

enum class Mode { Critical, All, Planar };

struct Node {
  int order = 0;
  Rows rows{};
};

struct Shared {
  Mode mode = Mode::Critical;
  int n = 0;
  bool ky_prune = false;
  std::optional<std::uint64_t> node_limit;
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};
  std::mutex level_mutex;
  std::vector<std::uint64_t> level_nodes;
};

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

Graph to_graph(const Node& node) {
  EdgeList edges;
  for (int v = 0; v < node.order; ++v)
    for (std::uint64_t rest = node.rows[v] & ~((bit(v) << 1) - 1); rest; rest &= rest - 1)
      edges.emplace_back(v, std::countr_zero(rest));
  return new_graph(node.order, edges);
}

bool connected(const Node& node) {
  if (node.order == 0) return true;
  const std::uint64_t all = node.order == 64 ? ~std::uint64_t{0} : bit(node.order) - 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= node.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// DSATUR-style backtracking over bitmask color classes.
bool color3_rec(const Node& node, std::uint64_t uncolored, std::array<std::uint64_t, 3>& cls, int used) {
  if (!uncolored) return true;
  int best = -1, best_sat = -1, best_deg = -1;
  for (std::uint64_t u = uncolored; u; u &= u - 1) {
    const int v = std::countr_zero(u);
    int sat = 0;
    for (int c = 0; c < 3; ++c) sat += (cls[c] & node.rows[v]) != 0;
    if (sat == 3) return false;
    const int deg = std::popcount(node.rows[v] & uncolored);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      best = v;
      best_sat = sat;
      best_deg = deg;
    }
  }
  const int limit = std::min(used + 1, 3);
  for (int c = 0; c < limit; ++c) {
    if (cls[c] & node.rows[best]) continue;
    cls[c] |= bit(best);
    const bool ok = color3_rec(node, uncolored & ~bit(best), cls, std::max(used, c + 1));
    cls[c] &= ~bit(best);
    if (ok) return true;
  }
  return false;
}

bool three_colorable(const Node& node) {
  std::array<std::uint64_t, 3> cls{};
  return color3_rec(node, node.order == 64 ? ~std::uint64_t{0} : bit(node.order) - 1, cls, 0);
}

bool planar(const Node& node) {
  PlanarityOptions opt;
  opt.want_witness = false;
  return is_planar(to_graph(node), opt).planar;
}

/// True when the vertices of `mask` span a triangle.
bool has_triangle(const Node& parent, std::uint64_t mask) {
  for (std::uint64_t a = mask; a; a &= a - 1) {
    const int v = std::countr_zero(a);
    for (std::uint64_t b = parent.rows[v] & mask & ~((bit(v) << 1) - 1); b; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (parent.rows[u] & parent.rows[v] & mask) return true;
    }
  }
  return false;
}

class Generator {
 public:
  explicit Generator(Shared& shared) : shared_(shared) {}

  /// Calls sink(child) for every accepted descendant of `parent` at level
  /// `target`. Returns false when the budget ran out.
  template <typename Sink>
  bool expand(const Node& parent, int target, Sink& sink) {
    if (parent.order == target) {
      sink(parent);
      return true;
    }
    const int j = parent.order;
    const int c = j + 1;
    const bool final = c == shared_.n;
    const Mode mode = shared_.mode;

    std::array<int, kMaxSearchOrder> pdeg{};
    int pm = 0;
    for (int v = 0; v < j; ++v) {
      pdeg[v] = std::popcount(parent.rows[v]);
      pm += pdeg[v];
    }
    pm /= 2;

    // minimum degree any vertex of the child may have
    int lower = 0;
    if (mode == Mode::Critical) lower = final ? 3 : 3 - (shared_.n - c);
    std::uint64_t need = 0;
    for (int v = 0; v < j; ++v) {
      if (pdeg[v] + 1 < lower) return true;
      if (pdeg[v] < lower) need |= bit(v);
    }
    const bool k4_free = mode == Mode::Critical && shared_.n >= 5;

    std::set<std::vector<std::uint64_t>> seen;
    const std::uint64_t limit = bit(j);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if ((mask & 0x3ff) == 0 && out_of_budget()) return false;
      if ((mask & need) != need) continue;
      const int dx = std::popcount(mask);
      if (dx < lower) continue;
      const int m = pm + dx;
      if (mode != Mode::All && c >= 3 && m > 3 * c - 6) continue;
      if (final && shared_.ky_prune && m < ky_bound(c)) continue;

      Node child = parent;
      child.order = c;
      child.rows[j] = mask;
      for (std::uint64_t s = mask; s; s &= s - 1) child.rows[std::countr_zero(s)] |= bit(j);

      // the new vertex must minimize (degree, sum of neighbour degrees)
      std::array<int, kMaxSearchOrder> deg{};
      for (int v = 0; v < c; ++v) deg[v] = std::popcount(child.rows[v]);
      std::array<int, kMaxSearchOrder> nsum{};
      for (int v = 0; v < c; ++v)
        for (std::uint64_t s = child.rows[v]; s; s &= s - 1) nsum[v] += deg[std::countr_zero(s)];
      const auto key = [&](int v) { return std::pair{deg[v], nsum[v]}; };
      bool minimal = true;
      for (int v = 0; v < j && minimal; ++v) minimal = !(key(v) < key(j));
      if (!minimal) continue;

      if (k4_free && has_triangle(parent, mask)) continue;
      if (mode == Mode::Critical) {
        if (final) {
          if (!connected(child) || three_colorable(child)) continue;
        } else if (!three_colorable(child)) {
          continue;
        }
      }
      if (mode != Mode::All && !planar(child)) continue;

      const CanonicalLabeling canon =
          canonical_labeling_small(c, std::span<const std::uint64_t>(child.rows.data(), c));
      const auto min_key = key(j);
      int chosen = -1;
      for (int p = c - 1; p >= 0; --p)
        if (key(canon.labeling[p]) == min_key) {
          chosen = canon.labeling[p];
          break;
        }
      if (canon.orbits[chosen] != canon.orbits[j]) continue;

      std::vector<std::uint64_t> form(c, 0);
      std::vector<int> pos(c);
      for (int p = 0; p < c; ++p) pos[canon.labeling[p]] = p;
      for (int p = 0; p < c; ++p)
        for (std::uint64_t s = child.rows[canon.labeling[p]]; s; s &= s - 1)
          form[p] |= bit(pos[std::countr_zero(s)]);
      if (!seen.insert(std::move(form)).second) continue;

      count_node(c);
      if (out_of_budget()) return false;
      if (!expand(child, target, sink)) return false;
    }
    return true;
  }

 private:
  void count_node(int level) {
    shared_.nodes.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard lock(shared_.level_mutex);
    ++shared_.level_nodes[level];
  }

  bool out_of_budget() {
    if (shared_.stopped.load(std::memory_order_relaxed)) return true;
    bool over = shared_.node_limit && shared_.nodes.load(std::memory_order_relaxed) > *shared_.node_limit;
    if (!over && shared_.deadline) over = Clock::now() > *shared_.deadline;
    if (over) shared_.stopped.store(true);
    return over;
  }

  Shared& shared_;
};

std::string canonical_g6(const Node& node) { return canonical_graph6(to_graph(node)); }

}  // namespace

std::optional<bool> ExtremalResult::F_even() const {
  if (!complete || !F_n) return std::nullopt;
  return *F_n % 2 == 0;
}

ExtremalResult search_extremal(int n, const SearchBudget& budget, const SearchOptions& options) {
  if (n < 4) throw std::invalid_argument("search_extremal requires n >= 4");
  if (n > kMaxSearchOrder)
    throw std::invalid_argument("search_extremal supports n <= " + std::to_string(kMaxSearchOrder));

  Shared shared;
  shared.mode = Mode::Critical;
  shared.n = n;
  shared.ky_prune = options.ky_prune;
  shared.node_limit = budget.nodes;
  if (budget.seconds)
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(*budget.seconds));
  shared.level_nodes.assign(n + 1, 0);
  shared.level_nodes[1] = 1;

  // Frontier two levels above the leaves; each frontier node is a subtree.
  const int split = std::max(1, n - 2);
  std::vector<Node> frontier;
  Node root;
  root.order = 1;
  bool finished = true;
  {
    Generator gen(shared);
    auto collect = [&](const Node& node) { frontier.push_back(node); };
    finished = gen.expand(root, split, collect);
  }

  struct Found {
    std::string g6;
    int m = 0;
  };
  std::vector<std::vector<Found>> found(frontier.size());
  std::vector<std::uint64_t> candidates(frontier.size(), 0), rejects(frontier.size(), 0);
  std::atomic<std::size_t> done{0};
  std::atomic<bool> all_finished{finished};
  std::mutex progress_mutex;

  if (finished) {
    parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
      Generator gen(shared);
      auto sink = [&](const Node& node) {
        ++candidates[i];
        const Graph g = to_graph(node);
        CriticalityOptions copt;
        copt.keep_witnesses = false;
        const bool critical = verify_k_critical(g, 4, copt).critical();
        const PlanarityVerdict pv = is_planar(g);
        const bool embedded = pv.planar && pv.rotation && check_rotation_system(g, *pv.rotation).valid;
        if (!critical || !embedded) {
          ++rejects[i];
          return;
        }
        found[i].push_back({canonical_g6(node), static_cast<int>(g.size())});
      };
      if (!gen.expand(frontier[i], n, sink)) all_finished.store(false);
      const std::size_t d = ++done;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(d, frontier.size());
      }
    });
  }

  ExtremalResult result;
  result.n = n;
  result.complete = all_finished.load() && !shared.stopped.load();
  result.stats.subtrees = frontier.size();
  result.stats.level_nodes = shared.level_nodes;

  std::map<std::string, int> unique;
  for (std::size_t i = 0; i < found.size(); ++i) {
    result.stats.candidates += candidates[i];
    result.stats.verifier_rejects += rejects[i];
    for (const Found& f : found[i])
      if (!unique.emplace(f.g6, f.m).second) ++result.stats.duplicates;
  }
  const long long floor = ky_bound(n);
  for (const auto& [g6, m] : unique) {
    result.survivors.push_back(g6);
    ++result.edge_histogram[m];
    if (m < floor) ++result.ky_violations;
  }
  result.count = unique.size();
  if (!result.edge_histogram.empty()) {
    result.f_n = result.edge_histogram.begin()->first;
    result.F_n = result.edge_histogram.rbegin()->first;
    // survivors are sorted, so the first match is the smallest string
    for (const auto& [g6, m] : unique) {
      if (m == *result.f_n && !result.witness_min) result.witness_min = g6;
      if (m == *result.F_n && !result.witness_max) result.witness_max = g6;
    }
  }
  return result;
}

std::vector<std::string> enumerate_nonisomorphic(int n, GeneratorFilter filter) {
  if (n < 1 || n > 10) throw std::invalid_argument("enumerate_nonisomorphic supports 1 <= n <= 10");
  Shared shared;
  shared.mode = filter == GeneratorFilter::Planar ? Mode::Planar : Mode::All;
  shared.n = n;
  shared.level_nodes.assign(n + 1, 0);
  Generator gen(shared);
  std::vector<std::string> out;
  auto sink = [&](const Node& node) { out.push_back(canonical_g6(node)); };
  Node root;
  root.order = 1;
  gen.expand(root, n, sink);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Table1Entry>& table1() {
  static const std::vector<Table1Entry> values = {
      {6, 10, 10},  {7, 11, 12},  {8, 14, 14},  {9, 15, 16},  {10, 16, 18},
      {11, 19, 20}, {12, 20, 22}, {13, 21, 26}, {14, 24, 28},
  };
  return values;
}

std::string to_string(Table1Status s) {
  switch (s) {
    case Table1Status::Pass: return "pass";
    case Table1Status::Fail: return "FAIL";
    case Table1Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool Table1Report::all_pass() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.status == Table1Status::Pass; });
}

bool Table1Report::any_fail() const {
  return std::any_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.status == Table1Status::Fail; });
}

Table1Report check_table1(int n_max, const SearchBudget& budget, const SearchOptions& options) {
  Table1Report report;
  for (const Table1Entry& entry : table1()) {
    if (entry.n > n_max) break;
    Table1Row row;
    row.n = entry.n;
    row.expected = entry;
    row.result = search_extremal(entry.n, budget, options);
    const ExtremalResult& r = row.result;
    if (!r.complete) {
      row.status = Table1Status::Inconclusive;
      report.rows.push_back(std::move(row));
      continue;
    }
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
    if (r.f_n != entry.f) row.discrepancies.push_back("f: found " + show(r.f_n) + ", table " + std::to_string(entry.f));
    if (r.F_n != entry.F) row.discrepancies.push_back("F: found " + show(r.F_n) + ", table " + std::to_string(entry.F));
    if (r.ky_violations)
      row.discrepancies.push_back(std::to_string(r.ky_violations) + " graphs below the (5n-2)/3 edge floor");
    if (r.stats.duplicates)
      row.discrepancies.push_back(std::to_string(r.stats.duplicates) + " isomorphic duplicates emitted");
    row.status = row.discrepancies.empty() ? Table1Status::Pass : Table1Status::Fail;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace critgraph
