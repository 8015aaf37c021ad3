#include "critgraph/report.hpp"

namespace critgraph {

using nlohmann::json;

namespace {

std::string vertex_name(const LabeledGraph* labels, Vertex v) {
  return labels ? labels->label(v).to_string() : std::to_string(v);
}

json edge_json(const LabeledGraph* labels, const Edge& e) {
  return json::array({vertex_name(labels, e.u), vertex_name(labels, e.v)});
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Coloring& c) { return c.values(); }

json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}, {"text", std::to_string(r.numerator()) + "/" + std::to_string(r.denominator())}};
}

json to_json(const CriticalityReport& r, const LabeledGraph* labels) {
  json edges = json::array();
  std::size_t colorable = 0;
  for (const EdgeCheck& e : r.edges) {
    colorable += e.colorable;
    json item = {{"edge", edge_json(labels, e.edge)}, {"colorable", e.colorable}};
    if (e.witness) item["witness"] = to_json(*e.witness);
    edges.push_back(std::move(item));
  }
  json out = {
      {"k", r.k},
      {"critical", r.critical()},
      {"chromatic_ok", r.chromatic_ok},
      {"k_colorable", r.k_colorable},
      {"below_colorable", r.below_colorable},
      {"edges_checked", r.edges.size()},
      {"edges_colorable_after_deletion", colorable},
      {"counterexample", r.counterexample ? edge_json(labels, *r.counterexample) : json(nullptr)},
      {"edges", std::move(edges)},
  };
  if (r.k_witness) out["k_witness"] = to_json(*r.k_witness);
  if (!r.vertices.empty()) {
    json vs = json::array();
    for (const VertexCheck& v : r.vertices)
      vs.push_back({{"vertex", vertex_name(labels, v.vertex)}, {"colorable", v.colorable}});
    out["vertices"] = std::move(vs);
  }
  return out;
}

json to_json(const PlanarityVerdict& v, const Graph& g) {
  json out = {{"planar", v.planar}, {"edge_bound_reject", v.edge_bound_reject}};
  if (v.rotation) {
    const EmbeddingCheck check = check_rotation_system(g, *v.rotation);
    out["embedding"] = {{"valid", check.valid}, {"faces", check.faces}, {"problem", check.problem}};
  }
  if (v.kuratowski) {
    json edges = json::array();
    for (const Edge& e : *v.kuratowski) edges.push_back({e.u, e.v});
    out["kuratowski"] = {{"kind", to_string(classify_kuratowski(g, *v.kuratowski))}, {"edges", std::move(edges)}};
  }
  return out;
}

json to_json(const DensityStats& d) {
  return {{"n", d.n},
          {"m", d.m},
          {"ratio", to_json(d.ratio)},
          {"bound_7n13", to_json(d.bound_7n13)},
          {"ky_bound", d.ky_bound},
          {"meets_construction", d.meets_construction}};
}

json to_json(const ScheduleReport& r) {
  json inst = json::array();
  for (const InstantiationResult& i : r.instantiations)
    inst.push_back({{"case", i.case_id},
                    {"index", optional_json(i.index)},
                    {"target", i.target},
                    {"expands_ok", i.expands_ok},
                    {"proper", i.proper},
                    {"boundary_adjusted", i.boundary_adjusted},
                    {"fallback_used", i.fallback_used},
                    {"fallback_ok", i.fallback_ok},
                    {"error", i.error}});
  json certs = json::array();
  for (const EdgeCertificate& c : r.certificates)
    certs.push_back({{"edge", c.labels},
                     {"case", c.case_id},
                     {"index", optional_json(c.index)},
                     {"source", to_string(c.source)},
                     {"coloring", to_json(c.coloring)}});
  json ranges = json::object();
  for (const auto& [id, values] : r.ranges) ranges[id] = values;
  return {{"k", r.k},
          {"success", r.success()},
          {"coverage_exact", r.coverage_exact},
          {"printed_failures", r.printed_failures},
          {"uncovered", r.uncovered},
          {"ranges", std::move(ranges)},
          {"instantiations", std::move(inst)},
          {"certificates", std::move(certs)}};
}

json to_json(const Lemma1Report& r) {
  json out = {{"k", r.k},
              {"total", r.total},
              {"class_i", r.class_i},
              {"class_ii", r.class_ii},
              {"mixed", r.mixed},
              {"exhausted", r.exhausted}};
  out["first_mixed"] = r.first_mixed ? to_json(*r.first_mixed) : json(nullptr);
  return out;
}

json to_json(const ExtremalResult& r) {
  json hist = json::object();
  for (const auto& [m, count] : r.edge_histogram) hist[std::to_string(m)] = count;
  return {{"n", r.n},
          {"f_n", optional_json(r.f_n)},
          {"F_n", optional_json(r.F_n)},
          {"count", r.count},
          {"complete", r.complete},
          {"F_even", optional_json(r.F_even())},
          {"ky_bound", ky_bound(r.n)},
          {"ky_violations", r.ky_violations},
          {"witness_min", optional_json(r.witness_min)},
          {"witness_max", optional_json(r.witness_max)},
          {"edge_histogram", std::move(hist)},
          {"stats",
           {{"level_nodes", r.stats.level_nodes},
            {"candidates", r.stats.candidates},
            {"verifier_rejects", r.stats.verifier_rejects},
            {"duplicates", r.stats.duplicates},
            {"subtrees", r.stats.subtrees}}}};
}

json to_json(const Table1Report& r) {
  json rows = json::array();
  for (const Table1Row& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"expected", {{"f", row.expected.f}, {"F", row.expected.F}}},
                    {"status", to_string(row.status)},
                    {"discrepancies", row.discrepancies},
                    {"result", to_json(row.result)}});
  return {{"all_pass", r.all_pass()}, {"any_fail", r.any_fail()}, {"rows", std::move(rows)}};
}

}  // namespace critgraph
