#pragma once

// OGF text format:
//   line 1:   n m
//   m lines:  u v      (0 <= u < v < n, no duplicates)
// Lines whose first non-blank character is '#' are comments.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orl/errors.hpp"
#include "orl/graph.hpp"

namespace orl::ogf {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline OrderedGraph read(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0;
  OrderedGraph g;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected two fields");
    std::size_t a = detail::parse_count(toks[0], line_no);
    std::size_t b = detail::parse_count(toks[1], line_no);
    if (!have_header) {
      if (a > OrderedGraph::kMaxVertices) throw InputError("vertex count exceeds 65536");
      n = a;
      m = b;
      g = OrderedGraph(n);
      have_header = true;
      continue;
    }
    if (!(a < b && b < n))
      throw InputError("line " + std::to_string(line_no) + ": edge must satisfy 0 <= u < v < n");
    if (g.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge");
    if (++seen > m) throw InputError("more edge lines than declared");
    g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw InputError("missing 'n m' header");
  if (seen != m)
    throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

inline OrderedGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

inline OrderedGraph read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read(in);
}

/// Writes `g`; each entry of `comments` becomes a "# ..." line before the header.
inline void write(std::ostream& out, const OrderedGraph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "# " << c << '\n';
  auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string to_string(const OrderedGraph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write(out, g, comments);
  return out.str();
}

}  // namespace orl::ogf
