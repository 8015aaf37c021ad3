#include "critgraph/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>

#include "critgraph/formats.hpp"

namespace critgraph {

namespace {

template <int W>
struct Row {
  std::array<std::uint64_t, W> w{};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  int and_count(const Row& o) const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  friend auto operator<=>(const Row&, const Row&) = default;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

template <int W>
class Engine {
 public:
  Engine(int n, std::vector<Row<W>> adj, const CanonOptions& options)
      : n_(n), adj_(std::move(adj)), options_(options) {
    levels_.resize(static_cast<std::size_t>(n) + 1);
    for (auto& level : levels_) {
      level.lab.resize(n);
      level.inv.resize(n);
      level.cell_end.resize(n);
    }
    in_queue_.assign(n, 0);
    count_.resize(n);
    cur_trace_.resize(static_cast<std::size_t>(n) + 1);
    best_status_.resize(static_cast<std::size_t>(n) + 1);
    leaf_matrix_.resize(n);
  }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) return out;
    Level& root = levels_[0];
    std::iota(root.lab.begin(), root.lab.end(), 0);
    std::iota(root.inv.begin(), root.inv.end(), 0);
    root.cell_end[0] = n_;
    push_queue(0);
    cur_trace_[0] = refine(root);
    best_status_[0] = 0;
    search(0, true, 0, true);

    out.labeling = best_lab_;
    out.nodes = nodes_;
    UnionFind& top = orbit_uf_.empty() ? fallback_uf() : orbit_uf_[0];
    out.orbits.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbits[v] = top.find(v);

    for (std::size_t d = 0; d < first_path_.size(); ++d) {
      UnionFind& uf = orbit_uf_[d];
      int root_of = uf.find(first_path_[d]);
      std::uint64_t orbit = 0;
      for (int v = 0; v < n_; ++v)
        if (uf.find(v) == root_of) ++orbit;
      if (out.group_order_exact) {
        unsigned __int128 product =
            static_cast<unsigned __int128>(out.group_order) * orbit;
        if (product > std::numeric_limits<std::uint64_t>::max())
          out.group_order_exact = false;
        else
          out.group_order = static_cast<std::uint64_t>(product);
      }
    }
    return out;
  }

 private:
  struct Level {
    std::vector<int> lab;
    std::vector<int> inv;
    std::vector<int> cell_end;  // valid at cell start positions
  };

  UnionFind& fallback_uf() {
    orbit_uf_.emplace_back(n_);
    return orbit_uf_.back();
  }

  void push_queue(int start) {
    if (!in_queue_[start]) {
      in_queue_[start] = 1;
      queue_.push_back(start);
    }
  }

  // Refines to the coarsest equitable partition reachable from the queued
  // splitter cells. The returned hash depends only on the ordered cell
  // structure, never on vertex names.
  std::uint64_t refine(Level& p) {
    std::uint64_t trace = 0x5eedull;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int s = queue_[head];
      in_queue_[s] = 0;
      const int se = p.cell_end[s];
      Row<W> mask{};
      for (int i = s; i < se; ++i) mask.set(p.lab[i]);
      trace = mix(trace, (static_cast<std::uint64_t>(s) << 16) | static_cast<std::uint64_t>(se - s));

      for (int c = 0; c < n_;) {
        const int ce = p.cell_end[c];
        if (ce - c > 1) {
          bool differ = false;
          const int c0 = adj_[p.lab[c]].and_count(mask);
          count_[c] = c0;
          for (int i = c + 1; i < ce; ++i) {
            count_[i] = adj_[p.lab[i]].and_count(mask);
            differ |= count_[i] != c0;
          }
          if (differ) split(p, c, ce, trace);
        }
        c = ce;
      }
    }
    queue_.clear();
    return trace;
  }

  void split(Level& p, int c, int ce, std::uint64_t& trace) {
    scratch_.clear();
    for (int i = c; i < ce; ++i) scratch_.emplace_back(count_[i], p.lab[i]);
    std::sort(scratch_.begin(), scratch_.end());
    for (int i = c; i < ce; ++i) {
      count_[i] = scratch_[i - c].first;
      p.lab[i] = scratch_[i - c].second;
      p.inv[p.lab[i]] = i;
    }
    int fs = c;
    for (int i = c + 1; i <= ce; ++i) {
      if (i == ce || count_[i] != count_[fs]) {
        p.cell_end[fs] = i;
        trace = mix(trace, (static_cast<std::uint64_t>(count_[fs]) << 32) |
                               static_cast<std::uint64_t>(i - fs));
        push_queue(fs);
        fs = i;
      }
    }
  }

  int target_cell(const Level& p) const {
    for (int c = 0; c < n_; c = p.cell_end[c])
      if (p.cell_end[c] - c > 1) return c;
    return -1;
  }

  std::uint64_t individualize(const Level& from, Level& to, int cell, int vertex) {
    to.lab = from.lab;
    to.inv = from.inv;
    to.cell_end = from.cell_end;
    const int pos = to.inv[vertex];
    std::swap(to.lab[pos], to.lab[cell]);
    to.inv[to.lab[pos]] = pos;
    to.inv[to.lab[cell]] = cell;
    to.cell_end[cell + 1] = to.cell_end[cell];
    to.cell_end[cell] = cell + 1;
    push_queue(cell);
    return mix(refine(to), static_cast<std::uint64_t>(cell));
  }

  // Returns the depth of the first-path node to resume at, or -1.
  int search(int depth, bool on_first, int first_anc, bool eq_first) {
    if (++nodes_ > options_.node_limit)
      throw AutomorphismBoundError("canonical labeling exceeded node budget of " +
                                   std::to_string(options_.node_limit));
    Level& here = levels_[depth];
    const int cell = target_cell(here);
    if (cell < 0) return leaf(depth, first_anc, eq_first);

    std::vector<int> candidates(here.lab.begin() + cell, here.lab.begin() + here.cell_end[cell]);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;

    for (int w : candidates) {
      const bool building = !have_first_;
      if (building) first_path_.push_back(w);
      if (on_first && !building && w != first_path_[depth]) {
        UnionFind& uf = orbit_uf_[depth];
        const int r = uf.find(w);
        bool seen = false;
        for (int x : explored) seen |= uf.find(x) == r;
        if (seen) continue;
      }

      const std::uint64_t t = individualize(here, levels_[depth + 1], cell, w);
      cur_trace_[depth + 1] = t;
      const bool child_on_first = on_first && (building || w == first_path_[depth]);
      const int child_first_anc = child_on_first ? depth + 1 : first_anc;
      bool child_eq_first = true;
      if (!building)
        child_eq_first = eq_first && static_cast<std::size_t>(depth + 1) < first_trace_.size() &&
                         first_trace_[depth + 1] == t;
      int rel = 0;
      if (!building) {
        rel = best_status_[depth];
        if (rel == 0) {
          if (static_cast<std::size_t>(depth + 1) >= best_trace_.size())
            rel = 1;
          else if (t != best_trace_[depth + 1])
            rel = t < best_trace_[depth + 1] ? -1 : 1;
        }
      }
      best_status_[depth + 1] = rel;
      if (rel < 0 && !child_eq_first) continue;
      if (on_first) explored.push_back(w);

      const int jump = search(depth + 1, child_on_first, child_first_anc, child_eq_first);
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(int depth, int first_anc, bool eq_first) {
    const Level& p = levels_[depth];
    for (int i = 0; i < n_; ++i) {
      Row<W> r{};
      const Row<W>& a = adj_[p.lab[i]];
      for (int wi = 0; wi < W; ++wi) {
        std::uint64_t bits = a.w[wi];
        while (bits) {
          r.set(p.inv[wi * 64 + std::countr_zero(bits)]);
          bits &= bits - 1;
        }
      }
      leaf_matrix_[i] = r;
    }
    const auto trace_len = static_cast<std::size_t>(depth) + 1;

    if (!have_first_) {
      have_first_ = true;
      first_trace_.assign(cur_trace_.begin(), cur_trace_.begin() + static_cast<long>(trace_len));
      first_lab_ = p.lab;
      first_matrix_ = leaf_matrix_;
      orbit_uf_.assign(first_path_.size(), UnionFind(n_));
      make_best(depth);
      return -1;
    }

    if (eq_first && trace_len == first_trace_.size() && leaf_matrix_ == first_matrix_) {
      record_generator(first_lab_, p.lab);
      return first_anc;
    }

    int rel = best_status_[depth];
    if (rel == 0 && trace_len < best_trace_.size()) rel = -1;
    if (rel == 0) {
      auto cmp = leaf_matrix_ <=> best_matrix_;
      if (cmp == 0) {
        record_generator(best_lab_, p.lab);
        return -1;
      }
      rel = cmp > 0 ? 1 : -1;
    }
    if (rel > 0) make_best(depth);
    return -1;
  }

  void make_best(int depth) {
    const Level& p = levels_[depth];
    best_trace_.assign(cur_trace_.begin(), cur_trace_.begin() + depth + 1);
    best_lab_ = p.lab;
    best_matrix_ = leaf_matrix_;
    std::fill(best_status_.begin(), best_status_.begin() + depth + 1, 0);
  }

  // gamma maps from[i] to to[i]; both are discrete labelings with equal
  // relabeled graphs, so gamma is an automorphism.
  void record_generator(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    for (int v = 0; v < n_; ++v) {
      Row<W> image{};
      const Row<W>& a = adj_[v];
      for (int wi = 0; wi < W; ++wi) {
        std::uint64_t bits = a.w[wi];
        while (bits) {
          image.set(gamma[wi * 64 + std::countr_zero(bits)]);
          bits &= bits - 1;
        }
      }
      if (image != adj_[gamma[v]])
        throw std::logic_error("canonical labeling produced a non-automorphism");
    }
    std::size_t fixed = 0;
    while (fixed < first_path_.size() && gamma[first_path_[fixed]] == first_path_[fixed]) ++fixed;
    const std::size_t top = std::min(fixed, first_path_.size() - 1);
    for (std::size_t level = 0; level <= top && level < orbit_uf_.size(); ++level)
      for (int v = 0; v < n_; ++v) orbit_uf_[level].unite(v, gamma[v]);
  }

  int n_;
  std::vector<Row<W>> adj_;
  CanonOptions options_;
  std::vector<Level> levels_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;
  std::vector<int> count_;
  std::vector<std::pair<int, int>> scratch_;

  bool have_first_ = false;
  std::vector<int> first_path_;
  std::vector<std::uint64_t> first_trace_;
  std::vector<int> first_lab_;
  std::vector<Row<W>> first_matrix_;

  std::vector<std::uint64_t> best_trace_;
  std::vector<int> best_lab_;
  std::vector<Row<W>> best_matrix_;

  std::vector<std::uint64_t> cur_trace_;
  std::vector<int> best_status_;
  std::vector<UnionFind> orbit_uf_;
  std::vector<Row<W>> leaf_matrix_;
  std::uint64_t nodes_ = 0;
};

template <int W>
CanonicalLabeling run_engine(const Graph& g, const CanonOptions& options) {
  std::vector<Row<W>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = g.row(v);
    for (int i = 0; i < g.words(); ++i) adj[v].w[i] = r[i];
  }
  return Engine<W>(g.order(), std::move(adj), options).run();
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const CanonOptions& options) {
  const int n = g.order();
  if (n > kMaxCanonVertices)
    throw AutomorphismBoundError("graph has " + std::to_string(n) +
                                 " vertices; exact canonical labeling supports at most " +
                                 std::to_string(kMaxCanonVertices));
  if (n <= 64) return run_engine<1>(g, options);
  if (n <= 128) return run_engine<2>(g, options);
  if (n <= 192) return run_engine<3>(g, options);
  return run_engine<4>(g, options);
}

CanonicalLabeling canonical_labeling_small(int n, std::span<const std::uint64_t> rows,
                                           const CanonOptions& options) {
  if (n > 64 || static_cast<int>(rows.size()) < n)
    throw AutomorphismBoundError("canonical_labeling_small requires n <= 64");
  std::vector<Row<1>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].w[0] = rows[v];
  return Engine<1>(n, std::move(adj), options).run();
}

Graph canonical_graph(const Graph& g) {
  CanonicalLabeling c = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int p = 0; p < g.order(); ++p) perm[c.labeling[p]] = p;
  return relabel(g, perm);
}

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_graph(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_graph(a) == canonical_graph(b);
}

std::uint64_t automorphism_count(const Graph& g, const CanonOptions& options) {
  CanonicalLabeling c = canonical_labeling(g, options);
  if (!c.group_order_exact)
    throw AutomorphismBoundError("automorphism group order exceeds 64 bits");
  return c.group_order;
}

}  // namespace critgraph
