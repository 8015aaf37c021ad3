#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critgraph/graph.hpp"

namespace critgraph {

/// Parse failure; offset() is the 0-based byte position of the problem.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Standard graph6 encoding, without the optional ">>graph6<<" header
/// and without a trailing newline.
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and one trailing newline.
Graph decode_graph6(std::string_view text);

/// DIMACS "p edge n m" format with 1-based "e u v" lines.
std::string encode_dimacs(const Graph& g);
Graph decode_dimacs(std::string_view text);

/// Undirected DOT. `name_of` supplies node names (defaults to "n<i>").
std::string encode_dot(const Graph& g,
                       const std::function<std::string(Vertex)>& name_of = {});

/// "n m" header followed by one 0-based "u v" line per edge.
std::string encode_edgelist(const Graph& g);

/// Reads graph6 or DIMACS, chosen by the first significant character.
Graph decode_any(std::string_view text);

}  // namespace critgraph
