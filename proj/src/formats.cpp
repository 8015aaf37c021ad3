#include "critgraph/formats.hpp"

#include <charconv>
#include <sstream>

namespace critgraph {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;
  if (end > pos && text[end - 1] == '\r') --end;

  auto digit = [&](std::size_t at) -> int {
    if (at >= end) throw FormatError("graph6: unexpected end of input", at);
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw FormatError("graph6: byte outside 63..126", at);
    return c - 63;
  };

  std::uint64_t n = 0;
  if (pos >= end) throw FormatError("graph6: empty input", pos);
  if (text[pos] != '~') {
    n = static_cast<std::uint64_t>(digit(pos));
    pos += 1;
  } else if (pos + 1 < end && text[pos + 1] == '~') {
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(digit(pos + 2 + i));
    pos += 8;
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(digit(pos + 1 + i));
    pos += 4;
  }
  if (n > (1u << 20)) throw FormatError("graph6: vertex count too large", 0);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
  if (end - pos != body) {
    std::size_t at = end - pos < body ? end : pos + body;
    throw FormatError("graph6: expected " + std::to_string(body) + " data bytes for n=" +
                          std::to_string(n) + ", found " + std::to_string(end - pos),
                      at);
  }

  EdgeList edges;
  std::uint64_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int value = digit(pos + static_cast<std::size_t>(bit / 6));
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (body > 0) {
    std::size_t last = pos + body - 1;
    int pad = static_cast<int>(body * 6 - pairs);
    if (digit(last) & ((1 << pad) - 1))
      throw FormatError("graph6: nonzero padding bits", last);
  }
  return new_graph(static_cast<int>(n), edges);
}

std::string encode_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

Graph decode_dimacs(std::string_view text) {
  int n = -1;
  long declared_m = -1;
  EdgeList edges;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string line(text.substr(line_start, line_end - line_start));
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag.empty() || tag == "c") {
      // blank or comment
    } else if (tag == "p") {
      std::string kind;
      long nv = -1, ne = -1;
      is >> kind >> nv >> ne;
      if (!is || (kind != "edge" && kind != "col") || nv < 0 || ne < 0)
        throw FormatError("dimacs: malformed problem line", line_start);
      if (n >= 0) throw FormatError("dimacs: duplicate problem line", line_start);
      n = static_cast<int>(nv);
      declared_m = ne;
    } else if (tag == "e") {
      if (n < 0) throw FormatError("dimacs: edge before problem line", line_start);
      long a = 0, b = 0;
      is >> a >> b;
      if (!is || a < 1 || b < 1 || a > n || b > n)
        throw FormatError("dimacs: malformed or out-of-range edge", line_start);
      if (a == b) throw FormatError("dimacs: self-loop", line_start);
      edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    } else {
      throw FormatError("dimacs: unknown line type '" + tag + "'", line_start);
    }
    line_start = line_end + 1;
  }
  if (n < 0) throw FormatError("dimacs: missing problem line", 0);
  Graph g = new_graph(n, edges);
  if (static_cast<long>(g.size()) != declared_m)
    throw FormatError("dimacs: header declares " + std::to_string(declared_m) +
                          " edges but " + std::to_string(g.size()) + " distinct edges found",
                      0);
  return g;
}

std::string encode_dot(const Graph& g, const std::function<std::string(Vertex)>& name_of) {
  auto name = [&](Vertex v) { return name_of ? name_of(v) : "n" + std::to_string(v); };
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << name(v) << ";\n";
  for (const Edge& e : g.edges()) os << "  " << name(e.u) << " -- " << name(e.v) << ";\n";
  os << "}\n";
  return os.str();
}

std::string encode_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph decode_any(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' || text[i] == '\r'))
    ++i;
  if (i < text.size() && (text[i] == 'p' || text[i] == 'c')) return decode_dimacs(text);
  std::size_t nl = text.find('\n', i);
  std::string_view first = text.substr(i, nl == std::string_view::npos ? std::string_view::npos : nl - i);
  try {
    return decode_graph6(first);
  } catch (const FormatError& e) {
    throw FormatError(e.message(), i + e.offset());
  }
}

}  // namespace critgraph
