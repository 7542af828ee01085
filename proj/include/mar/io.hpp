#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mar/coloring.hpp"
#include "mar/errors.hpp"
#include "mar/families.hpp"
#include "mar/matroid.hpp"

namespace mar::io {

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

/// Splits a stream into whitespace-separated tokens per line, dropping
/// blank lines and '#' comments.
inline std::vector<Line> tokenize(std::istream& in, int* line_count = nullptr) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (words >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  if (line_count) *line_count = number;
  return out;
}

inline long long parse_int(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline int parse_small_int(const std::string& tok, int line) {
  long long v = parse_int(tok, line);
  if (v < -1000000 || v > 1000000)
    throw ParseError(line, "integer '" + tok + "' out of range");
  return static_cast<int>(v);
}

inline Rational parse_rational(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

inline void expect_tokens(const Line& line, std::size_t count,
                          const std::string& usage) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "expected '" + usage + "'");
}

}  // namespace detail

/// Parses a matroid spec document. The format is line oriented:
///
///   format 1
///   matroid graphic            # or bicircular, cographic, signed,
///                              # transversal, uniform, linear, cube, explicit
///   ... family directives ...
///
/// Graph families take 'vertices n' and 'edge u v' lines (signed edges carry
/// a trailing +1/-1). Transversal takes 'elements n' and 'set ...' lines,
/// uniform takes 'uniform n k', linear takes 'field', 'dimension' and
/// 'vector' lines, cube takes 'field', 'dimension' and 'tset' lines, and
/// explicit takes 'elements n' and 'basis ...' lines. Elements are numbered
/// by order of appearance. Family preconditions surface as parse errors at
/// the 'matroid' line.
inline Matroid parse_spec(std::istream& in) {
  auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty spec document");
  std::size_t idx = 0;

  detail::expect_tokens(lines[idx], 2, "format 1");
  if (lines[idx].tokens[0] != "format")
    throw ParseError(lines[idx].number, "spec must start with 'format 1'");
  if (lines[idx].tokens[1] != "1")
    throw ParseError(lines[idx].number,
                     "unsupported format version '" + lines[idx].tokens[1] +
                         "', expected 1");
  ++idx;

  if (idx >= lines.size() || lines[idx].tokens[0] != "matroid" ||
      lines[idx].tokens.size() != 2)
    throw ParseError(idx < lines.size() ? lines[idx].number : lines.back().number,
                     "expected 'matroid <family>'");
  const std::string family = lines[idx].tokens[1];
  const int family_line = lines[idx].number;
  ++idx;

  auto remaining = std::vector<detail::Line>(lines.begin() + idx, lines.end());
  auto fail_missing = [&](const std::string& what) -> ParseError {
    return ParseError(family_line,
                      "family '" + family + "' requires a '" + what +
                          "' directive");
  };

  try {
    if (family == "graphic" || family == "bicircular" ||
        family == "cographic" || family == "signed") {
      bool is_signed = family == "signed";
      int vertices = -1;
      Multigraph g;
      std::vector<int> signs;
      for (const auto& line : remaining) {
        const auto& tk = line.tokens;
        if (tk[0] == "vertices") {
          detail::expect_tokens(line, 2, "vertices <n>");
          if (vertices >= 0)
            throw ParseError(line.number, "duplicate 'vertices' directive");
          vertices = detail::parse_small_int(tk[1], line.number);
        } else if (tk[0] == "edge") {
          detail::expect_tokens(line, is_signed ? 4u : 3u,
                                is_signed ? "edge <u> <v> <+1|-1>"
                                          : "edge <u> <v>");
          int u = detail::parse_small_int(tk[1], line.number);
          int v = detail::parse_small_int(tk[2], line.number);
          g.edges.emplace_back(u, v);
          if (is_signed) {
            const std::string& s = tk[3];
            if (s == "+1" || s == "+")
              signs.push_back(+1);
            else if (s == "-1" || s == "-")
              signs.push_back(-1);
            else
              throw ParseError(line.number,
                               "edge sign must be +1 or -1, got '" + s + "'");
          }
        } else {
          throw ParseError(line.number,
                           "unknown directive '" + tk[0] + "' for family '" +
                               family + "'");
        }
      }
      if (vertices < 0) throw fail_missing("vertices");
      g.num_vertices = vertices;
      if (family == "graphic") return graphic_matroid(g);
      if (family == "bicircular") return bicircular_matroid(g);
      if (family == "cographic") return cographic_matroid(g);
      return signed_matroid(SignedMultigraph{g, signs});
    }

    if (family == "transversal" || family == "explicit") {
      int elements = -1;
      std::vector<std::vector<int>> groups;
      const char* keyword = family == "transversal" ? "set" : "basis";
      for (const auto& line : remaining) {
        const auto& tk = line.tokens;
        if (tk[0] == "elements") {
          detail::expect_tokens(line, 2, "elements <n>");
          if (elements >= 0)
            throw ParseError(line.number, "duplicate 'elements' directive");
          elements = detail::parse_small_int(tk[1], line.number);
        } else if (tk[0] == keyword) {
          std::vector<int> ids;
          for (std::size_t i = 1; i < tk.size(); ++i)
            ids.push_back(detail::parse_small_int(tk[i], line.number));
          groups.push_back(std::move(ids));
        } else {
          throw ParseError(line.number,
                           "unknown directive '" + tk[0] + "' for family '" +
                               family + "'");
        }
      }
      if (elements < 0) throw fail_missing("elements");
      if (family == "transversal") {
        SetFamily fam;
        fam.universe_size = elements;
        for (const auto& ids : groups)
          fam.sets.push_back(Subset::of(elements, ids));
        return transversal_matroid(fam);
      }
      ExplicitBases eb;
      eb.ground_size = elements;
      for (const auto& ids : groups)
        eb.bases.push_back(Subset::of(elements, ids));
      return explicit_matroid(eb);
    }

    if (family == "uniform") {
      for (const auto& line : remaining) {
        const auto& tk = line.tokens;
        if (tk[0] != "uniform")
          throw ParseError(line.number,
                           "unknown directive '" + tk[0] +
                               "' for family 'uniform'");
        detail::expect_tokens(line, 3, "uniform <n> <k>");
        int n = detail::parse_small_int(tk[1], line.number);
        int k = detail::parse_small_int(tk[2], line.number);
        return uniform_matroid(k, n);
      }
      throw fail_missing("uniform");
    }

    if (family == "linear" || family == "cube") {
      bool have_field = false;
      Field field = Field::rationals();
      int dimension = -1;
      std::vector<std::vector<Rational>> vectors;
      std::vector<Rational> tset;
      for (const auto& line : remaining) {
        const auto& tk = line.tokens;
        if (tk[0] == "field") {
          if (have_field)
            throw ParseError(line.number, "duplicate 'field' directive");
          if (tk.size() == 2 && tk[1] == "rational") {
            field = Field::rationals();
          } else if (tk.size() == 3 && tk[1] == "gf") {
            field = Field::gf(detail::parse_int(tk[2], line.number));
          } else {
            throw ParseError(line.number,
                             "expected 'field rational' or 'field gf <p>'");
          }
          have_field = true;
        } else if (tk[0] == "dimension") {
          detail::expect_tokens(line, 2, "dimension <d>");
          if (dimension >= 0)
            throw ParseError(line.number, "duplicate 'dimension' directive");
          dimension = detail::parse_small_int(tk[1], line.number);
        } else if (tk[0] == "vector" && family == "linear") {
          std::vector<Rational> vec;
          for (std::size_t i = 1; i < tk.size(); ++i)
            vec.push_back(detail::parse_rational(tk[i], line.number));
          vectors.push_back(std::move(vec));
        } else if (tk[0] == "tset" && family == "cube") {
          if (!tset.empty())
            throw ParseError(line.number, "duplicate 'tset' directive");
          for (std::size_t i = 1; i < tk.size(); ++i)
            tset.push_back(detail::parse_rational(tk[i], line.number));
        } else {
          throw ParseError(line.number,
                           "unknown directive '" + tk[0] + "' for family '" +
                               family + "'");
        }
      }
      if (!have_field) throw fail_missing("field");
      if (dimension < 0) throw fail_missing("dimension");
      if (family == "linear") {
        VectorList v;
        v.field = field;
        v.dimension = dimension;
        v.vectors = std::move(vectors);
        return linear_matroid(v);
      }
      if (tset.empty()) throw fail_missing("tset");
      return cube_matroid(tset, dimension, field);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(family_line, e.what());
  }

  throw ParseError(family_line, "unknown matroid family '" + family + "'");
}

inline Matroid parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  return parse_spec(in);
}

/// Reads a coloring document: one 'element color' pair per line, every
/// element of the ground set exactly once, '#' comments allowed. Color ids
/// are canonicalized on load.
inline Coloring read_coloring(std::istream& in, int ground_size) {
  int line_count = 0;
  auto lines = detail::tokenize(in, &line_count);
  std::vector<int> raw(ground_size, 0);
  std::vector<bool> present(ground_size, false);
  for (const auto& line : lines) {
    detail::expect_tokens(line, 2, "<element> <color>");
    int e = detail::parse_small_int(line.tokens[0], line.number);
    int c = detail::parse_small_int(line.tokens[1], line.number);
    if (e < 0 || e >= ground_size)
      throw ParseError(line.number,
                       "element " + std::to_string(e) +
                           " outside the ground set 0.." +
                           std::to_string(ground_size - 1));
    if (c < 0)
      throw ParseError(line.number, "color ids must be nonnegative");
    if (present[e])
      throw ParseError(line.number,
                       "element " + std::to_string(e) + " colored twice");
    present[e] = true;
    raw[e] = c;
  }
  for (int e = 0; e < ground_size; ++e)
    if (!present[e])
      throw ParseError(line_count + 1,
                       "element " + std::to_string(e) + " has no color");
  return Coloring(ground_size, raw);
}

inline Coloring read_coloring_file(const std::string& path, int ground_size) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open coloring file '" + path + "'");
  return read_coloring(in, ground_size);
}

/// Writes a coloring document, optionally preceded by comment lines.
inline void write_coloring(std::ostream& out, const Coloring& c,
                           const std::vector<std::string>& comments = {}) {
  for (const std::string& line : comments) out << "# " << line << "\n";
  for (int e = 0; e < c.ground_size(); ++e)
    out << e << " " << c.color_of(e) << "\n";
}

}  // namespace mar::io
