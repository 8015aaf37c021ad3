#include "critgraph/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace critgraph {

Coloring::Coloring(std::vector<int> colors, int k) : colors_(std::move(colors)), k_(k) {
  if (k < 1) throw std::invalid_argument("a coloring needs at least one color");
  for (std::size_t v = 0; v < colors_.size(); ++v)
    if (colors_[v] < 1 || colors_[v] > k)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(colors_[v]) + " outside 1.." + std::to_string(k));
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != g.order())
    throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                " vertices but the graph has " + std::to_string(g.order()));
  for (const Edge& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

namespace {

using Mask = std::uint64_t;

class Solver {
 public:
  Solver(const Graph& g, int k, const SolverOptions& options)
      : g_(g), k_(k), options_(options), n_(g.order()) {
    adj_.resize(n_);
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = g.neighbors(v);
      degree_[v] = static_cast<int>(adj_[v].size());
    }
    late_.assign(n_, 0);
    for (Vertex v : options.deprioritized)
      if (v >= 0 && v < n_) late_[v] = 1;
    const Mask full = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
    domain_.assign(n_, full);
    color_.assign(n_, 0);
    used_count_.assign(k + 1, 0);
  }

  ColoringOutcome solve() {
    ColoringOutcome out;
    bool ok = true;
    if (options_.clique_seed) ok = seed_clique();
    if (ok) ok = search();
    out.stats = stats_;
    if (ok) {
      Coloring c(color_, k_);
      if (!is_proper(g_, c)) throw std::logic_error("coloring solver produced an improper witness");
      out.witness = std::move(c);
    }
    return out;
  }

 private:
  bool seed_clique() {
    if (n_ == 0) return true;
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return degree_[a] > degree_[b]; });
    std::vector<Vertex> clique;
    for (Vertex v : order) {
      bool joins = true;
      for (Vertex c : clique) joins &= g_.has_edge(v, c);
      if (joins) clique.push_back(v);
    }
    if (static_cast<int>(clique.size()) > k_) return false;
    // Any bijection clique -> {1..|clique|} is as good as another, so the
    // whole clique is fixed before propagation runs.
    for (std::size_t i = 0; i < clique.size(); ++i)
      if (!assign(clique[i], static_cast<int>(i) + 1)) return false;
    return propagate();
  }

  bool assign(Vertex v, int c) {
    color_[v] = c;
    assigned_.push_back(v);
    ++used_count_[c];
    const Mask bit = Mask{1} << (c - 1);
    for (Vertex u : adj_[v]) {
      if (color_[u] != 0 || !(domain_[u] & bit)) continue;
      trail_.emplace_back(u, domain_[u]);
      domain_[u] &= ~bit;
      if (domain_[u] == 0) return false;
      if (std::has_single_bit(domain_[u])) queue_.push_back(u);
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Vertex u = queue_.back();
      queue_.pop_back();
      if (color_[u] != 0) continue;
      if (domain_[u] == 0) return false;
      ++stats_.forced;
      if (!assign(u, std::countr_zero(domain_[u]) + 1)) return false;
    }
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t assigned_mark) {
    while (trail_.size() > trail_mark) {
      domain_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
    while (assigned_.size() > assigned_mark) {
      Vertex v = assigned_.back();
      --used_count_[color_[v]];
      color_[v] = 0;
      assigned_.pop_back();
    }
    queue_.clear();
  }

  Vertex choose() const {
    Vertex best = -1;
    int best_size = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      const int size = std::popcount(domain_[v]);
      if (best < 0 || size < best_size ||
          (size == best_size && (degree_[v] > degree_[best] ||
                                 (degree_[v] == degree_[best] && late_[v] < late_[best])))) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  bool search() {
    ++stats_.nodes;
    const Vertex v = choose();
    if (v < 0) return true;
    Mask used = 0;
    for (int c = 1; c <= k_; ++c)
      if (used_count_[c] > 0) used |= Mask{1} << (c - 1);
    Mask allowed = domain_[v];
    const Mask full = k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1;
    const Mask unused = full & ~used;
    if (unused) allowed &= used | (unused & (~unused + 1));
    while (allowed) {
      const int c = std::countr_zero(allowed) + 1;
      allowed &= allowed - 1;
      const std::size_t tm = trail_.size(), am = assigned_.size();
      if (assign(v, c) && propagate() && search()) return true;
      undo(tm, am);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const SolverOptions& options_;
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> degree_;
  std::vector<char> late_;
  std::vector<Mask> domain_;
  std::vector<int> color_;
  std::vector<int> used_count_;
  std::vector<std::pair<Vertex, Mask>> trail_;
  std::vector<Vertex> assigned_;
  std::vector<Vertex> queue_;
  SolveStats stats_;
};

}  // namespace

ColoringOutcome find_coloring(const Graph& g, int k, const SolverOptions& options) {
  if (k < 1 || k > 64) throw std::invalid_argument("find_coloring supports 1 <= k <= 64");
  return Solver(g, k, options).solve();
}

std::optional<int> chromatic_number(const Graph& g, int max_k) {
  if (max_k < 1) throw std::invalid_argument("chromatic_number requires max_k >= 1");
  if (g.order() == 0) return 0;
  for (int k = 1; k <= std::min(max_k, 64); ++k)
    if (find_coloring(g, k).colorable()) return k;
  return std::nullopt;
}

EnumerationResult enumerate_colorings(const Graph& g, int k, std::uint64_t cap,
                                      const std::function<bool(const Coloring&)>& emit) {
  if (k < 1 || k > 64) throw std::invalid_argument("enumerate_colorings supports 1 <= k <= 64");
  if (cap < 1) throw std::invalid_argument("enumerate_colorings requires cap >= 1");
  const int n = g.order();
  std::vector<std::vector<Vertex>> later(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (u > v) later[v].push_back(u);

  const Mask full = k == 64 ? ~Mask{0} : (Mask{1} << k) - 1;
  // domains[d] holds the palettes before vertex d is colored
  std::vector<std::vector<Mask>> domains(n + 1, std::vector<Mask>(n, full));
  std::vector<int> color(n, 0);
  EnumerationResult result;
  bool stop = false;

  auto recurse = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      ++result.count;
      if (!emit(Coloring(color, k))) stop = true;
      if (result.count >= cap) stop = true;
      return;
    }
    Mask options = domains[v][v];
    while (options && !stop) {
      const int c = std::countr_zero(options) + 1;
      options &= options - 1;
      std::vector<Mask>& next = domains[v + 1];
      next = domains[v];
      bool dead = false;
      for (Vertex u : later[v]) {
        next[u] &= ~(Mask{1} << (c - 1));
        dead |= next[u] == 0;
      }
      if (dead) continue;
      color[v] = c;
      self(self, v + 1);
    }
  };
  recurse(recurse, 0);
  result.exhausted = !stop;
  return result;
}

Coloring canonical_coloring_H(int k) {
  if (k < 1) throw std::invalid_argument("canonical_coloring_H requires k >= 1");
  std::vector<int> colors;
  for (int i = 0; i <= k; ++i) colors.push_back(i % 2 == 0 ? 2 : 3);
  for (int i = 0; i <= k; ++i) colors.push_back(i % 2 == 0 ? 2 : 3);
  for (int i = 1; i <= k; ++i) colors.push_back(1);
  return Coloring(std::move(colors), 3);
}

}  // namespace critgraph
