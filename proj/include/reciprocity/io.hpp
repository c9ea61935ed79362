#pragma once

// Text input formats. Every format is line based, `#` starts a comment and
// blank lines are ignored; the first content line is a header.
//   poset:        n,  then `j k` per relation a_j < a_k (1-based)
//   arrangement:  d (or d=2), then `c_1 ... c_d b` per hyperplane c.x = b
//   polytope:     n,  then one vertex per line, n rationals p/q
//   graph:        n,  then `i j` per edge

#include "reciprocity/arrangement.hpp"
#include "reciprocity/graph_coloring.hpp"
#include "reciprocity/number.hpp"
#include "reciprocity/polytope.hpp"
#include "reciprocity/poset.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{n, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::size_t parse_count(const Line& line, const std::string& what) {
  if (line.tokens.size() != 1) throw ParseError(line.number, "expected a single " + what);
  const std::string& s = line.tokens.front();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line.number, "expected a nonnegative integer " + what + ", got '" + s + "'");
  return std::stoul(s);
}

inline Rational parse_number(const Line& line, const std::string& token) {
  try {
    return parse_rational(token);
  } catch (const std::exception&) {
    throw ParseError(line.number, "'" + token + "' is not a rational number");
  }
}

inline std::vector<Line> require_header(const std::string& text, const std::string& kind) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, kind + " file is empty; expected a header line");
  return lines;
}

inline std::pair<std::size_t, std::size_t> parse_pair(const Line& line, std::size_t n, const std::string& what) {
  if (line.tokens.size() != 2) throw ParseError(line.number, "expected two node indices per " + what);
  std::size_t v[2];
  for (int i = 0; i < 2; ++i) {
    const auto& s = line.tokens[static_cast<std::size_t>(i)];
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(line.number, "'" + s + "' is not a node index");
    v[i] = std::stoul(s);
    if (v[i] < 1 || v[i] > n)
      throw ParseError(line.number, "index " + s + " outside 1.." + std::to_string(n));
  }
  return {v[0], v[1]};
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Errors from the poset axioms surface as PosetError (naming the axiom).
inline Poset parse_poset(const std::string& text) {
  const auto lines = detail::require_header(text, "poset");
  const std::size_t n = detail::parse_count(lines.front(), "element count");
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [j, k] = detail::parse_pair(lines[i], n, "relation");
    if (j == k) throw PosetError("irreflexivity", "line " + std::to_string(lines[i].number) + ": element " +
                                                     std::to_string(j) + " is declared below itself");
    rel.emplace_back(j - 1, k - 1);
  }
  return Poset::from_relations(n, rel);
}

inline Arrangement parse_arrangement(const std::string& text) {
  const auto lines = detail::require_header(text, "arrangement");
  detail::Line header = lines.front();
  if (header.tokens.size() == 1 && header.tokens.front().rfind("d=", 0) == 0)
    header.tokens.front().erase(0, 2);
  const std::size_t d = detail::parse_count(header, "dimension");
  if (d == 0) throw ParseError(header.number, "dimension must be positive");
  Arrangement a(d);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != d + 1)
      throw ParseError(line.number, "expected " + std::to_string(d + 1) + " numbers (c_1..c_d b), got " +
                                        std::to_string(line.tokens.size()));
    Vector c;
    for (std::size_t k = 0; k < d; ++k) c.push_back(detail::parse_number(line, line.tokens[k]));
    const Rational b = detail::parse_number(line, line.tokens[d]);
    if (is_zero(c)) throw ParseError(line.number, "hyperplane normal is zero");
    a.add(Hyperplane(std::move(c), b));
  }
  return a;
}

inline Polytope parse_polytope(const std::string& text) {
  const auto lines = detail::require_header(text, "polytope");
  const std::size_t n = detail::parse_count(lines.front(), "ambient dimension");
  if (n == 0) throw ParseError(lines.front().number, "ambient dimension must be positive");
  if (lines.size() == 1) throw ParseError(lines.front().number, "polytope has no vertices");
  std::vector<Point> pts;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != n)
      throw ParseError(line.number, "expected " + std::to_string(n) + " coordinates, got " +
                                        std::to_string(line.tokens.size()));
    Point p;
    for (const auto& tok : line.tokens) p.push_back(detail::parse_number(line, tok));
    pts.push_back(std::move(p));
  }
  return hull(std::move(pts));
}

inline Graph parse_graph(const std::string& text) {
  const auto lines = detail::require_header(text, "graph");
  const std::size_t n = detail::parse_count(lines.front(), "node count");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [a, b] = detail::parse_pair(lines[i], n, "edge");
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace reciprocity
