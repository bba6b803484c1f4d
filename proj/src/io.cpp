#include "pcs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pcs {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

bool to_number(std::string_view word, long long& out) {
  if (word.empty()) return false;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc{} && ptr == word.data() + word.size();
}

long long number_or_throw(std::string_view word, std::size_t line, const char* what) {
  long long value = 0;
  if (!to_number(word, value) || value < 0) {
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(word) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(++line_no, text.substr(pos, end - pos));
    pos = end + 1;
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    last_line = line_no;
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (words.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      n = number_or_throw(words[1], line_no, "vertex count");
      m = number_or_throw(words[2], line_no, "edge count");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count above 10^6");
      have_header = true;
      return;
    }
    if (words[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (words.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      const long long u = number_or_throw(words[1], line_no, "endpoint");
      const long long v = number_or_throw(words[2], line_no, "endpoint");
      if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, "more edge lines than declared");
      edges.push_back(Edge::make(static_cast<Vertex>(u), static_cast<Vertex>(v)));
      edge_lines.push_back(line_no);
      return;
    }
    throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
  });
  if (!have_header) throw ParseError(last_line, "missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(edges[a], edge_lines[a]) < std::pair(edges[b], edge_lines[b]);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) throw ParseError(edge_lines[order[i]], "duplicate edge");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

VertexSet parse_terminals(std::string_view text, std::size_t vertex_count) {
  std::vector<Vertex> members;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    for (std::string_view word : split_words(line)) {
      const long long v = number_or_throw(word, line_no, "terminal");
      if (static_cast<std::size_t>(v) >= vertex_count) throw ParseError(line_no, "terminal index out of range");
      members.push_back(static_cast<Vertex>(v));
    }
  });
  try {
    return VertexSet(std::move(members));
  } catch (const GraphError&) {
    throw ParseError(0, "terminal set lists a vertex twice");
  }
}

std::string serialize_terminals(const VertexSet& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out + "\n";
}

VertexSet parse_vertex_list(std::string_view text) {
  std::vector<Vertex> members;
  if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t end = text.find(',', pos);
      std::string_view word = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      long long v = 0;
      if (!to_number(word, v) || v < 0) throw ParseError(0, "bad vertex list entry '" + std::string(word) + "'");
      members.push_back(static_cast<Vertex>(v));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
  }
  try {
    return VertexSet(std::move(members));
  } catch (const GraphError&) {
    throw ParseError(0, "vertex list names a vertex twice");
  }
}

std::string serialize_names(const NameMap& names) {
  std::string out;
  for (const auto& [name, v] : names) out += "c " + name + " " + std::to_string(v) + "\n";
  return out;
}

NameMap parse_names(std::string_view text) {
  NameMap names;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto words = split_words(line);
    if (words.empty()) return;
    if (words.size() != 3 || words[0] != "c") throw ParseError(line_no, "name lines are 'c <name> <index>'");
    names.emplace_back(std::string(words[1]), static_cast<Vertex>(number_or_throw(words[2], line_no, "index")));
  });
  return names;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace pcs
