#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcs/graph.hpp"

namespace pcs {

/// Malformed input text. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph files:
//   c <comment>            any number, anywhere
//   p <n> <m>              exactly once, before the edges
//   e <u> <v>              exactly m lines, 0 <= u < v < n
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
/// Canonical form: header, then edges in lexicographic order, LF-terminated.
std::string serialize_graph(const Graph& g);

/// Terminal files: one line of whitespace-separated indices, possibly empty.
VertexSet parse_terminals(std::string_view text, std::size_t vertex_count);
std::string serialize_terminals(const VertexSet& w);

/// Comma-separated indices as used on the command line ("" is the empty set).
VertexSet parse_vertex_list(std::string_view text);

/// Construction name map, one "c <name> <index>" line per entry.
using NameMap = std::vector<std::pair<std::string, Vertex>>;
std::string serialize_names(const NameMap& names);
NameMap parse_names(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pcs
