#include "critgraph/schedules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace critgraph {

namespace detail {
extern const std::string_view schedule_table_text;
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

IndexRange parse_range(const std::string& text) {
  const auto parts = words(text);
  if (parts.size() != 3 || parts[0] != "i")
    throw ScheduleError("index range must look like 'i even 2..2k', got '" + text + "'");
  IndexRange r;
  if (parts[1] == "even") r.parity = Parity::Even;
  else if (parts[1] == "odd") r.parity = Parity::Odd;
  else if (parts[1] == "any") r.parity = Parity::Any;
  else throw ScheduleError("unknown parity '" + parts[1] + "'");
  const auto dots = parts[2].find("..");
  if (dots == std::string::npos) throw ScheduleError("index range needs 'lo..hi', got '" + parts[2] + "'");
  try {
    r.lo = IndexExpr::parse(parts[2].substr(0, dots));
    r.hi = IndexExpr::parse(parts[2].substr(dots + 2));
  } catch (const ExprError& e) {
    throw ScheduleError(std::string("bad range bound: ") + e.what());
  }
  if (r.lo.uses_index() || r.hi.uses_index()) throw ScheduleError("range bounds may not use i");
  return r;
}

ScheduleCase parse_record(const std::string& line) {
  const auto fields = split(line, ';');
  if (fields.size() != 5)
    throw ScheduleError("expected 5 ';'-separated fields, found " + std::to_string(fields.size()));
  ScheduleCase c;
  c.id = fields[0];
  if (c.id.empty()) throw ScheduleError("empty case id");

  const auto target = words(fields[1]);
  try {
    if (target.size() == 2 && target[0] == "vertex") {
      c.kind = TargetKind::Vertex;
      c.a = LabelPattern::parse(target[1]);
    } else if (target.size() == 3 && target[0] == "edge") {
      c.kind = TargetKind::Edge;
      c.a = LabelPattern::parse(target[1]);
      c.b = LabelPattern::parse(target[2]);
    } else {
      throw ScheduleError("target must be 'vertex L' or 'edge L L', got '" + fields[1] + "'");
    }
  } catch (const ExprError& e) {
    throw ScheduleError(std::string("bad target label: ") + e.what());
  }

  if (fields[2] != "-") c.range = parse_range(fields[2]);
  const bool uses_i = c.a.index.uses_index() || (c.kind == TargetKind::Edge && c.b.index.uses_index());
  if (uses_i && !c.range) throw ScheduleError("target uses i but no index range is given");

  try {
    c.c1 = LabelSetExpr::parse(fields[3]);
    c.c2 = LabelSetExpr::parse(fields[4]);
  } catch (const ExprError& e) {
    throw ScheduleError(std::string("bad color class: ") + e.what());
  }
  return c;
}

struct Target {
  TargetKind kind = TargetKind::Edge;
  Edge edge;
  Vertex vertex = -1;
  std::string text;
};

Target resolve_target(const ScheduleCase& c, const LabeledGraph& gk, std::optional<int> index) {
  if (c.parametric()) {
    if (!index) throw ExpansionError("case " + c.id + " needs an index");
    if (!c.range->admits(gk.k(), *index))
      throw ExpansionError("index " + std::to_string(*index) + " is outside the range of case " + c.id);
  } else if (index) {
    throw ExpansionError("case " + c.id + " takes no index");
  }
  Target t;
  t.kind = c.kind;
  try {
    const VertexLabel a = c.a.eval(gk.k(), index);
    const auto ia = gk.find(a);
    if (!ia) throw ExpansionError("case " + c.id + ": label " + a.to_string() + " is not in G_k");
    if (c.kind == TargetKind::Vertex) {
      t.vertex = *ia;
      t.text = a.to_string();
      return t;
    }
    const VertexLabel b = c.b.eval(gk.k(), index);
    const auto ib = gk.find(b);
    if (!ib) throw ExpansionError("case " + c.id + ": label " + b.to_string() + " is not in G_k");
    if (!gk.graph().has_edge(*ia, *ib))
      throw ExpansionError("case " + c.id + ": " + a.to_string() + b.to_string() + " is not an edge of G_k");
    t.edge = Edge(*ia, *ib);
    t.text = a.to_string() + "-" + b.to_string();
  } catch (const ExprError& e) {
    throw ExpansionError("case " + c.id + ": " + e.what());
  }
  return t;
}

std::string edge_text(const LabeledGraph& gk, const Edge& e) {
  return gk.label(e.u).to_string() + "-" + gk.label(e.v).to_string();
}

/// Extends a coloring of G - v to G - (v, t): v takes the least color not
/// used by its other neighbours.
std::optional<Coloring> extend_over_vertex(const Graph& g, Vertex v, Vertex t,
                                           const std::vector<int>& index_map, const Coloring& partial) {
  std::vector<int> full(g.order(), 0);
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v) full[x] = partial[index_map[x]];
  std::vector<char> used(partial.colors() + 1, 0);
  for (Vertex nb : g.neighbors(v))
    if (nb != t) used[full[nb]] = 1;
  for (int col = 1; col <= partial.colors(); ++col)
    if (!used[col]) {
      full[v] = col;
      return Coloring(std::move(full), partial.colors());
    }
  return std::nullopt;
}

}  // namespace

std::vector<int> IndexRange::values(int k) const {
  std::vector<int> out;
  const int lo_v = lo.eval(k, std::nullopt);
  const int hi_v = hi.eval(k, std::nullopt);
  for (int i = lo_v; i <= hi_v; ++i)
    if (admits(k, i)) out.push_back(i);
  return out;
}

bool IndexRange::admits(int k, int i) const {
  if (i < lo.eval(k, std::nullopt) || i > hi.eval(k, std::nullopt)) return false;
  if (parity == Parity::Even) return i % 2 == 0;
  if (parity == Parity::Odd) return i % 2 != 0;
  return true;
}

std::string IndexRange::to_string() const {
  const char* p = parity == Parity::Even ? "even" : parity == Parity::Odd ? "odd" : "any";
  return std::string("i ") + p + " " + lo.to_string() + ".." + hi.to_string();
}

std::string ScheduleCase::target_text() const {
  if (kind == TargetKind::Vertex) return "vertex " + a.to_string();
  return "edge " + a.to_string() + " " + b.to_string();
}

std::vector<ScheduleCase> parse_schedule_table(std::string_view text) {
  std::vector<ScheduleCase> cases;
  std::set<std::string> ids;
  bool have_version = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string line =
        trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line.rfind("version", 0) == 0) {
        if (have_version) throw ScheduleError("duplicate version line");
        if (trim(line.substr(7)) != "1") throw ScheduleError("unsupported table version '" + line + "'");
        have_version = true;
        continue;
      }
      if (!have_version) throw ScheduleError("records before the version line");
      ScheduleCase c = parse_record(line);
      if (!ids.insert(c.id).second) throw ScheduleError("duplicate case id '" + c.id + "'");
      cases.push_back(std::move(c));
    } catch (const ScheduleError& e) {
      throw ScheduleError("schedule table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_version) throw ScheduleError("schedule table has no version line");
  return cases;
}

std::string_view schedule_table_source() { return detail::schedule_table_text; }

const std::vector<ScheduleCase>& schedule_table() {
  static const std::vector<ScheduleCase> table = parse_schedule_table(detail::schedule_table_text);
  return table;
}

Expansion expand_schedule(const ScheduleCase& c, const LabeledGraph& gk, std::optional<int> index) {
  const Target t = resolve_target(c, gk, index);
  const Graph& g = gk.graph();
  Expansion out;
  out.kind = t.kind;
  out.edge = t.edge;
  out.vertex = t.vertex;

  EvalContext ctx{gk.k(), index, BoundaryPolicy::Lenient};
  try {
    EvalResult r1 = evaluate(c.c1, ctx);
    EvalResult r2 = evaluate(c.c2, ctx);
    out.c1 = std::move(r1.labels);
    out.c2 = std::move(r2.labels);
    out.boundary_adjusted = r1.boundary_adjusted || r2.boundary_adjusted;
  } catch (const ExprError& e) {
    throw ExpansionError("case " + c.id + ": " + e.what());
  }
  for (const VertexLabel& l : out.c1)
    if (out.c2.contains(l))
      throw ExpansionError("case " + c.id + ": " + l.to_string() + " is in both C1 and C2");

  std::vector<int> colors(g.order(), 3);
  for (const VertexLabel& l : out.c1) colors[gk.index_of(l)] = 1;
  for (const VertexLabel& l : out.c2) colors[gk.index_of(l)] = 2;

  if (t.kind == TargetKind::Edge) {
    out.deleted = delete_edge(g, t.edge.u, t.edge.v);
    out.index_map.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out.index_map[v] = v;
    out.coloring = Coloring(std::move(colors), 3);
  } else {
    VertexDeletion d = delete_vertex(g, t.vertex);
    std::vector<int> reduced(d.graph.order(), 3);
    for (Vertex v = 0; v < g.order(); ++v)
      if (d.index_map[v] >= 0) reduced[d.index_map[v]] = colors[v];
    out.deleted = std::move(d.graph);
    out.index_map = std::move(d.index_map);
    out.coloring = Coloring(std::move(reduced), 3);
  }
  return out;
}

std::string to_string(CertificateSource s) {
  switch (s) {
    case CertificateSource::Printed: return "printed";
    case CertificateSource::PrintedVertex: return "printed-vertex";
    case CertificateSource::Fallback: return "fallback";
    case CertificateSource::FallbackVertex: return "fallback-vertex";
  }
  return "unknown";
}

ScheduleReport verify_schedules(int k) {
  const LabeledGraph gk = build_G(k);
  const Graph& g = gk.graph();
  ScheduleReport report;
  report.k = k;

  std::map<Edge, EdgeCertificate> best;
  std::set<Edge> targeted;
  auto offer = [&](EdgeCertificate cert) {
    // independent re-check against G_k - e
    if (!is_proper(delete_edge(g, cert.edge.u, cert.edge.v), cert.coloring)) return;
    auto it = best.find(cert.edge);
    if (it == best.end()) best.emplace(cert.edge, std::move(cert));
    else if (cert.source < it->second.source) it->second = std::move(cert);
  };

  for (const ScheduleCase& c : schedule_table()) {
    std::vector<std::optional<int>> indices;
    if (c.parametric()) {
      auto values = c.range->values(k);
      report.ranges[c.id] = values;
      for (int i : values) indices.emplace_back(i);
    } else {
      indices.emplace_back(std::nullopt);
    }

    for (const auto& index : indices) {
      InstantiationResult res;
      res.case_id = c.id;
      res.index = index;
      Target t;
      try {
        t = resolve_target(c, gk, index);
      } catch (const ExpansionError& e) {
        res.error = e.what();
        ++report.printed_failures;
        report.instantiations.push_back(std::move(res));
        continue;
      }
      res.target = t.text;
      if (t.kind == TargetKind::Edge) {
        targeted.insert(t.edge);
      } else {
        for (Vertex nb : g.neighbors(t.vertex)) targeted.insert(Edge(t.vertex, nb));
      }

      Graph deleted;
      std::vector<int> index_map;
      std::optional<Coloring> coloring;
      try {
        Expansion ex = expand_schedule(c, gk, index);
        res.expands_ok = true;
        res.boundary_adjusted = ex.boundary_adjusted;
        res.proper = is_proper(ex.deleted, ex.coloring);
        deleted = std::move(ex.deleted);
        index_map = std::move(ex.index_map);
        if (res.proper) coloring = std::move(ex.coloring);
        else res.error = "printed coloring is not proper";
      } catch (const ExpansionError& e) {
        res.error = e.what();
        if (t.kind == TargetKind::Edge) {
          deleted = delete_edge(g, t.edge.u, t.edge.v);
          index_map.resize(g.order());
          for (Vertex v = 0; v < g.order(); ++v) index_map[v] = v;
        } else {
          VertexDeletion d = delete_vertex(g, t.vertex);
          deleted = std::move(d.graph);
          index_map = std::move(d.index_map);
        }
      }

      bool from_fallback = false;
      if (!res.proper) {
        ++report.printed_failures;
        res.fallback_used = true;
        ColoringOutcome out = find_coloring(deleted, 3);
        res.fallback_ok = out.colorable() && is_proper(deleted, *out.witness);
        if (res.fallback_ok) {
          coloring = std::move(out.witness);
          from_fallback = true;
        }
      }

      if (coloring) {
        if (t.kind == TargetKind::Edge) {
          offer({t.edge, edge_text(gk, t.edge), c.id, index,
                 from_fallback ? CertificateSource::Fallback : CertificateSource::Printed, *coloring});
        } else {
          for (Vertex nb : g.neighbors(t.vertex)) {
            auto full = extend_over_vertex(g, t.vertex, nb, index_map, *coloring);
            if (!full) continue;
            const Edge e(t.vertex, nb);
            offer({e, edge_text(gk, e), c.id, index,
                   from_fallback ? CertificateSource::FallbackVertex : CertificateSource::PrintedVertex,
                   std::move(*full)});
          }
        }
      }
      report.instantiations.push_back(std::move(res));
    }
  }

  const EdgeList edges = g.edges();
  std::size_t hit = 0;
  for (const Edge& e : edges) {
    if (targeted.contains(e)) ++hit;
    auto it = best.find(e);
    if (it == best.end()) report.uncovered.push_back(edge_text(gk, e));
    else report.certificates.push_back(std::move(it->second));
  }
  report.coverage_exact = hit == edges.size() && targeted.size() == edges.size();
  return report;
}

Lemma1Report lemma1_check(int k, std::uint64_t cap) {
  const LabeledGraph h = build_H(k);
  Lemma1Report report;
  report.k = k;
  std::vector<Vertex> us, vs, ws;
  for (int j = 0; j <= k; ++j) {
    us.push_back(h.index_of(VertexLabel::u(j)));
    vs.push_back(h.index_of(VertexLabel::v(j)));
  }
  for (int j = 1; j <= k; ++j) ws.push_back(h.index_of(VertexLabel::w(j)));

  const EnumerationResult res = enumerate_colorings(h.graph(), 3, cap, [&](const Coloring& c) {
    std::size_t equal = 0;
    for (int j = 0; j <= k; ++j) equal += c[us[j]] == c[vs[j]];
    bool ok_i = equal == us.size();
    bool ok_ii = false;
    if (equal == 0) {
      const int cw = c[ws[0]];
      ok_ii = std::all_of(ws.begin(), ws.end(), [&](Vertex w) { return c[w] == cw; });
      for (int j = 0; j <= k && ok_ii; ++j) ok_ii = c[us[j]] != cw && c[vs[j]] != cw;
    }
    if (ok_i) ++report.class_i;
    else if (ok_ii) ++report.class_ii;
    else {
      ++report.mixed;
      if (!report.first_mixed) report.first_mixed = c;
    }
    return true;
  });
  report.total = res.count;
  report.exhausted = res.exhausted;
  return report;
}

}  // namespace critgraph
