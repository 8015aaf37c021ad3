#include "critgraph/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "critgraph/canon.hpp"
#include "critgraph/formats.hpp"
#include "critgraph/report.hpp"

namespace critgraph {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "A" or "A..B".
IntRange parse_int_range(const std::string& text, const std::string& what) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected an integer or A..B, got '" + text + "'");
    }
    if (used != s.size()) throw UsageError(what + ": expected an integer or A..B, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError(what + ": empty range '" + text + "'");
  return r;
}

int default_jobs() {
  if (const char* env = std::getenv("CRITGRAPH_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

/// Writes a JSON document to a file, or to `out` when the path is "-".
void emit_json(const std::string& path, const nlohmann::json& doc, std::ostream& out) {
  if (path.empty()) return;
  const std::string text = doc.dump(2) + "\n";
  if (path == "-") out << text;
  else write_file(path, text);
}

LabeledGraph build_family(const std::string& family, int k) {
  if (k < 1) throw UsageError("--k must be at least 1");
  return family == "H" ? build_H(k) : build_G(k);
}

std::string format_graph(const LabeledGraph& lg, const std::string& format) {
  const Graph& g = lg.graph();
  if (format == "graph6") return encode_graph6(g) + "\n";
  if (format == "dimacs") return encode_dimacs(g);
  if (format == "edgelist") return encode_edgelist(g);
  if (format == "dot") return encode_dot(g, [&](Vertex v) { return lg.label(v).to_string(); });
  nlohmann::json doc = {{"family", lg.family() == Family::H ? "H" : "G"},
                        {"k", lg.k()},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"graph6", encode_graph6(g)}};
  nlohmann::json labels = nlohmann::json::array();
  for (const VertexLabel& l : lg.labels()) labels.push_back(l.to_string());
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({lg.label(e.u).to_string(), lg.label(e.v).to_string()});
  doc["labels"] = std::move(labels);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

struct Common {
  int jobs = 1;
  bool verbose = false;
  std::string json_path;
};

int worst(int a, int b) {
  // failure outranks inconclusive, which outranks pass
  auto rank = [](int c) { return c == kExitCheckFailed ? 3 : c == kExitInconclusive ? 2 : c == kExitUsage ? 4 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"critgraph: constructions and certificates for 4-critical planar graphs"};
  app.require_subcommand(1);
  Common common;
  common.jobs = default_jobs();
  app.add_option("--jobs,-j", common.jobs, "Worker threads (default: $CRITGRAPH_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verbose,-v", common.verbose, "Progress on standard error");

  const std::vector<std::string> families{"H", "G"};

  // construct
  auto* construct = app.add_subcommand("construct", "Build H_k or G_k");
  std::string c_family = "G", c_k, c_format = "graph6", c_output;
  construct->add_option("--family", c_family, "H or G")->check(CLI::IsMember(families));
  construct->add_option("--k", c_k, "k or A..B")->required();
  construct->add_option("--format", c_format, "graph6|dimacs|dot|edgelist|json")
      ->check(CLI::IsMember({"graph6", "dimacs", "dot", "edgelist", "json"}));
  construct->add_option("--output,-o", c_output, "Write to a file instead of standard output");

  // verify
  auto* verify = app.add_subcommand("verify", "Check criticality and planarity");
  std::string v_input, v_family = "G", v_k;
  int v_critical = 0;
  bool v_planar = false, v_vertices = false;
  auto* v_input_opt = verify->add_option("--input", v_input, "graph6 or DIMACS file");
  auto* v_k_opt = verify->add_option("--k", v_k, "k or A..B (with --family)");
  verify->add_option("--family", v_family, "H or G")->check(CLI::IsMember(families));
  v_input_opt->excludes(v_k_opt);
  verify->add_option("--critical", v_critical, "Check k-criticality for this k")->check(CLI::Range(2, 64));
  verify->add_flag("--planar", v_planar, "Check planarity with a certified witness");
  verify->add_flag("--vertices", v_vertices, "Also check every vertex deletion");
  verify->add_option("--json", common.json_path, "JSON report path ('-' for standard output)");

  // lemma1
  auto* lemma1 = app.add_subcommand("lemma1", "Classify all proper 3-colorings of H_k");
  std::string l_k;
  std::uint64_t l_cap = 10'000'000;
  lemma1->add_option("--k", l_k, "k or A..B")->required();
  lemma1->add_option("--cap", l_cap, "Stop after this many colorings");
  lemma1->add_option("--json", common.json_path, "JSON report path");

  // schedules
  auto* schedules = app.add_subcommand("schedules", "Check the explicit coloring schedules on G_k");
  std::string s_k;
  schedules->add_option("--k", s_k, "k or A..B")->required();
  schedules->add_option("--json", common.json_path, "JSON report path");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive search for 4-critical planar graphs");
  std::string x_n, x_survivors;
  double x_budget = 0;
  std::uint64_t x_nodes = 0;
  bool x_ky = false;
  search->add_option("--n", x_n, "n or A..B")->required();
  search->add_option("--budget", x_budget, "Wall-clock limit in seconds per n")->check(CLI::NonNegativeNumber);
  search->add_option("--nodes", x_nodes, "Tree node limit per n");
  search->add_flag("--ky-prune", x_ky, "Prune by the (5n-2)/3 edge floor");
  search->add_option("--survivors", x_survivors, "Write the graphs found (graph6) to this file");
  search->add_option("--json", common.json_path, "JSON report path");

  // table1
  auto* table = app.add_subcommand("table1", "Compare searched f(n), F(n) with the published table");
  int t_nmax = 9;
  double t_budget = 0;
  table->add_option("--nmax", t_nmax, "Largest n")->required()->check(CLI::Range(6, 14));
  table->add_option("--budget", t_budget, "Wall-clock limit in seconds per n")->check(CLI::NonNegativeNumber);
  table->add_option("--json", common.json_path, "JSON report path");

  // density
  auto* density = app.add_subcommand("density", "Edge density of G_k against 7/3");
  std::string d_family = "G";
  int d_kmax = 100;
  density->add_option("--family", d_family, "G")->check(CLI::IsMember({"G"}));
  density->add_option("--kmax", d_kmax, "Largest k")->required()->check(CLI::Range(1, 1'000'000));
  density->add_option("--json", common.json_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const IntRange r = parse_int_range(c_k, "--k");
      std::string text;
      for (int k = r.lo; k <= r.hi; ++k) text += format_graph(build_family(c_family, k), c_format);
      if (c_output.empty()) out << text;
      else write_file(c_output, text);
      return kExitPass;
    }

    if (verify->parsed()) {
      std::vector<std::pair<std::string, LabeledGraph>> targets;
      std::vector<std::pair<std::string, Graph>> plain;
      if (!v_input.empty()) {
        try {
          plain.emplace_back(v_input, decode_any(read_file(v_input)));
        } catch (const FormatError& e) {
          err << "error: " << v_input << ": " << e.what() << "\n";
          return kExitUsage;
        } catch (const GraphError& e) {
          err << "error: " << v_input << ": " << e.what() << "\n";
          return kExitUsage;
        }
      } else {
        if (v_k.empty()) throw UsageError("verify needs --input FILE or --family F --k K");
        const IntRange r = parse_int_range(v_k, "--k");
        for (int k = r.lo; k <= r.hi; ++k)
          targets.emplace_back(v_family + "_" + std::to_string(k), build_family(v_family, k));
      }
      nlohmann::json doc = nlohmann::json::array();
      int code = kExitPass;
      auto run_one = [&](const std::string& name, const Graph& g, const LabeledGraph* labels) {
        nlohmann::json item = {{"name", name}, {"n", g.order()}, {"m", g.size()}};
        out << name << ": n=" << g.order() << " m=" << g.size();
        if (v_critical) {
          CriticalityOptions opt;
          opt.jobs = common.jobs;
          opt.check_vertices = v_vertices;
          const CriticalityReport rep = verify_k_critical(g, v_critical, opt);
          out << " " << v_critical << "-critical=" << (rep.critical() ? "yes" : "no");
          if (rep.counterexample) {
            const Edge e = *rep.counterexample;
            out << " (G-e not " << v_critical - 1 << "-colorable for e="
                << (labels ? labels->label(e.u).to_string() : std::to_string(e.u)) << "-"
                << (labels ? labels->label(e.v).to_string() : std::to_string(e.v)) << ")";
          } else if (!rep.chromatic_ok) {
            out << " (chromatic number is not " << v_critical << ")";
          }
          if (!rep.critical()) code = kExitCheckFailed;
          item["criticality"] = to_json(rep, labels);
        }
        if (v_planar) {
          const PlanarityVerdict pv = is_planar(g);
          bool ok = pv.planar && pv.rotation && check_rotation_system(g, *pv.rotation).valid;
          out << " planar=" << (ok ? "yes" : "no");
          if (!pv.planar && pv.kuratowski)
            out << " (witness " << to_string(classify_kuratowski(g, *pv.kuratowski)) << ")";
          if (!ok) code = kExitCheckFailed;
          item["planarity"] = to_json(pv, g);
        }
        if (!v_critical && !v_planar) {
          const auto chi = chromatic_number(g, 16);
          out << " chi=" << (chi ? std::to_string(*chi) : std::string(">16"));
          item["chromatic_number"] = chi ? nlohmann::json(*chi) : nlohmann::json(nullptr);
        }
        out << "\n";
        doc.push_back(std::move(item));
      };
      for (const auto& [name, g] : plain) run_one(name, g, nullptr);
      for (const auto& [name, lg] : targets) run_one(name, lg.graph(), &lg);
      emit_json(common.json_path, doc, out);
      return code;
    }

    if (lemma1->parsed()) {
      const IntRange r = parse_int_range(l_k, "--k");
      if (r.lo < 1) throw UsageError("--k must be at least 1");
      nlohmann::json doc = nlohmann::json::array();
      int code = kExitPass;
      for (int k = r.lo; k <= r.hi; ++k) {
        const Lemma1Report rep = lemma1_check(k, l_cap);
        out << "H_" << k << ": colorings=" << rep.total << " class_i=" << rep.class_i
            << " class_ii=" << rep.class_ii << " mixed=" << rep.mixed;
        if (!rep.exhausted) {
          out << " (cap reached, inconclusive)";
          code = worst(code, kExitInconclusive);
        } else if (rep.mixed) {
          code = worst(code, kExitCheckFailed);
        }
        out << "\n";
        doc.push_back(to_json(rep));
      }
      emit_json(common.json_path, doc, out);
      return code;
    }

    if (schedules->parsed()) {
      const IntRange r = parse_int_range(s_k, "--k");
      if (r.lo < 1) throw UsageError("--k must be at least 1");
      nlohmann::json doc = nlohmann::json::array();
      int code = kExitPass;
      for (int k = r.lo; k <= r.hi; ++k) {
        const ScheduleReport rep = verify_schedules(k);
        std::size_t fallbacks = 0;
        for (const auto& c : rep.certificates)
          fallbacks += c.source == CertificateSource::Fallback || c.source == CertificateSource::FallbackVertex;
        out << "G_" << k << ": edges=" << build_G(k).graph().size() << " certified=" << rep.certificates.size()
            << " uncovered=" << rep.uncovered.size() << " printed_failures=" << rep.printed_failures
            << " fallback_certificates=" << fallbacks
            << " coverage_exact=" << (rep.coverage_exact ? "yes" : "no") << "\n";
        for (const auto& inst : rep.instantiations)
          if (!inst.proper)
            out << "  printed case " << inst.case_id << (inst.index ? " i=" + std::to_string(*inst.index) : "")
                << " (" << inst.target << "): " << inst.error
                << (inst.fallback_ok ? "; solver fallback succeeded" : "; solver fallback failed") << "\n";
        for (const auto& e : rep.uncovered) out << "  uncovered edge " << e << "\n";
        if (!rep.success()) code = kExitCheckFailed;
        doc.push_back(to_json(rep));
      }
      emit_json(common.json_path, doc, out);
      return code;
    }

    if (search->parsed()) {
      const IntRange r = parse_int_range(x_n, "--n");
      if (r.lo < 4) throw UsageError("--n must be at least 4");
      if (r.hi > kMaxSearchOrder) throw UsageError("--n must be at most " + std::to_string(kMaxSearchOrder));
      SearchBudget budget;
      if (x_budget > 0) budget.seconds = x_budget;
      if (x_nodes > 0) budget.nodes = x_nodes;
      SearchOptions opt;
      opt.jobs = common.jobs;
      opt.ky_prune = x_ky;
      nlohmann::json doc = nlohmann::json::array();
      std::string survivors;
      int code = kExitPass;
      for (int n = r.lo; n <= r.hi; ++n) {
        if (common.verbose)
          opt.progress = [&err, n](std::size_t done, std::size_t total) {
            err << "search n=" << n << ": " << done << "/" << total << " subtrees\n";
          };
        const ExtremalResult res = search_extremal(n, budget, opt);
        auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
        out << "n=" << n << ": count=" << res.count << " f=" << show(res.f_n) << " F=" << show(res.F_n)
            << " complete=" << (res.complete ? "yes" : "no");
        if (const auto even = res.F_even()) out << " F_even=" << (*even ? "yes" : "no");
        out << " ky_violations=" << res.ky_violations << "\n";
        if (res.ky_violations || res.stats.duplicates) code = worst(code, kExitCheckFailed);
        else if (!res.complete) code = worst(code, kExitInconclusive);
        for (const auto& g6 : res.survivors) survivors += g6 + "\n";
        doc.push_back(to_json(res));
      }
      if (!x_survivors.empty()) write_file(x_survivors, survivors);
      emit_json(common.json_path, doc, out);
      return code;
    }

    if (table->parsed()) {
      SearchBudget budget;
      if (t_budget > 0) budget.seconds = t_budget;
      SearchOptions opt;
      opt.jobs = common.jobs;
      const Table1Report rep = check_table1(t_nmax, budget, opt);
      for (const Table1Row& row : rep.rows) {
        auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
        out << "n=" << row.n << ": " << to_string(row.status) << " (f,F) found=(" << show(row.result.f_n) << ","
            << show(row.result.F_n) << ") table=(" << row.expected.f << "," << row.expected.F << ")";
        if (const auto even = row.result.F_even()) out << " F_even=" << (*even ? "yes" : "no");
        out << "\n";
        for (const auto& d : row.discrepancies) out << "  discrepancy: " << d << "\n";
      }
      emit_json(common.json_path, to_json(rep), out);
      if (rep.any_fail()) return kExitCheckFailed;
      return rep.all_pass() ? kExitPass : kExitInconclusive;
    }

    if (density->parsed()) {
      const Rational limit(7, 3);
      Rational prev(0);
      bool increasing = true, below = true, exact = true;
      nlohmann::json rows = nlohmann::json::array();
      for (int k = 1; k <= d_kmax; ++k) {
        const long long n = 6LL * k + 7, m = 14LL * k + 12;
        const DensityStats s = density_stats(n, m);
        if (k > 1 && !(s.ratio > prev)) increasing = false;
        if (!(s.ratio < limit)) below = false;
        if (!s.meets_construction) exact = false;
        prev = s.ratio;
        if (k <= 10 || k == d_kmax) rows.push_back(nlohmann::json{{"k", k}, {"stats", to_json(s)}});
      }
      const Rational gap = limit - prev;
      out << "G_1..G_" << d_kmax << ": 3m=7n-13 " << (exact ? "yes" : "no") << ", ratio strictly increasing "
          << (increasing ? "yes" : "no") << ", ratio < 7/3 " << (below ? "yes" : "no") << ", 7/3 - ratio(G_" << d_kmax
          << ") = " << gap.numerator() << "/" << gap.denominator() << "\n";
      emit_json(common.json_path,
                {{"kmax", d_kmax},
                 {"exact_count_identity", exact},
                 {"strictly_increasing", increasing},
                 {"below_7_3", below},
                 {"gap_at_kmax", to_json(gap)},
                 {"samples", std::move(rows)}},
                out);
      return exact && increasing && below ? kExitPass : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace critgraph
