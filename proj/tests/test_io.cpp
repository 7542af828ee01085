#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "mar/antiramsey.hpp"
#include "mar/io.hpp"

using mar::Coloring;
using mar::Matroid;
using mar::Subset;

namespace {

Matroid parse(const std::string& text) {
  std::istringstream in(text);
  return mar::io::parse_spec(in);
}

}  // namespace

TEST_CASE("parsing a graphic spec") {
  Matroid m = parse(
      "format 1\n"
      "matroid graphic\n"
      "vertices 4\n"
      "edge 0 1\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\nedge 2 3\n");
  CHECK(m.family_tag() == "graphic(V=4,E=6)");
  CHECK(m.ground_size() == 6);
  CHECK(m.rank() == 3);
  CHECK(mar::ar_number(m, 1).value == 2);
}

TEST_CASE("comments and blank lines are ignored") {
  Matroid m = parse(
      "# a complete graph\n"
      "format 1\n"
      "\n"
      "matroid graphic   # family\n"
      "vertices 3\n"
      "edge 0 1\nedge 0 2   # third vertex\nedge 1 2\n");
  CHECK(m.ground_size() == 3);
}

TEST_CASE("parsing a signed spec with both sign notations") {
  Matroid m = parse(
      "format 1\n"
      "matroid signed\n"
      "vertices 3\n"
      "edge 0 1 +1\nedge 0 1 -\nedge 0 2 +\nedge 0 2 -1\n"
      "edge 1 2 +1\nedge 1 2 -1\n");
  CHECK(m.family_tag() == "signed(V=3,E=6)");
  CHECK(m.rank() == 3);
}

TEST_CASE("parsing a uniform spec") {
  Matroid m = parse("format 1\nmatroid uniform\nuniform 5 2\n");
  CHECK(m.family_tag() == "uniform(k=2,n=5)");
  CHECK(m.rank() == 2);
}

TEST_CASE("parsing a transversal spec") {
  Matroid m = parse(
      "format 1\n"
      "matroid transversal\n"
      "elements 4\n"
      "set 0 1\nset 0 1\nset 1 2 3\n");
  CHECK(m.rank() == 3);
  CHECK(!m.is_independent(Subset::of(4, {2, 3})));
}

TEST_CASE("parsing an explicit bases spec") {
  Matroid m = parse(
      "format 1\n"
      "matroid explicit\n"
      "elements 4\n"
      "basis 0 1\nbasis 0 2\nbasis 1 2\n");
  CHECK(m.rank() == 2);
  CHECK(m.loops() == Subset::of(4, {3}));
}

TEST_CASE("parsing a linear spec with rational entries") {
  Matroid m = parse(
      "format 1\n"
      "matroid linear\n"
      "field rational\n"
      "dimension 2\n"
      "vector 1/3 0\nvector 2/3 0\nvector 1/7 1/9\n");
  CHECK(m.rank() == 2);
  CHECK(!m.is_independent(Subset::of(3, {0, 1})));
}

TEST_CASE("parsing a cube spec, two dimensions allowed") {
  Matroid m = parse(
      "format 1\n"
      "matroid cube\n"
      "field gf 2\n"
      "dimension 2\n"
      "tset 0 1\n");
  CHECK(m.ground_size() == 4);  // tuples 00 01 10 11
  CHECK(m.rank() == 2);
  CHECK(m.loops() == Subset::of(4, {0}));
}

TEST_CASE("parse errors carry the offending line") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      mar::io::parse_spec(in);
    } catch (const mar::ParseError& e) {
      return e.line();
    }
    return -1;
  };

  CHECK(line_of("") == 1);
  CHECK(line_of("format 2\n") == 1);
  CHECK(line_of("format 1\nnot-a-matroid\n") == 2);
  CHECK(line_of("format 1\nmatroid nosuch\n") == 2);
  // a malformed token is reported where it sits
  CHECK(line_of("format 1\nmatroid graphic\nvertices 3\nedge 0 x\n") == 4);
  CHECK(line_of("format 1\nmatroid graphic\nvertex 3\n") == 3);
  CHECK(line_of("format 1\nmatroid graphic\nvertices 3\nvertices 3\n") == 4);
  // family construction failures point back at the family line
  CHECK(line_of("format 1\nmatroid bicircular\nvertices 3\n"
                "edge 0 1\nedge 1 2\n") == 2);
  CHECK(line_of("format 1\nmatroid graphic\nedge 0 1\n") == 2);
  // message carries the line prefix
  std::istringstream in("format 1\nmatroid graphic\nvertices 3\nedge 0 x\n");
  try {
    mar::io::parse_spec(in);
    FAIL("expected a parse error");
  } catch (const mar::ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("missing spec files fail cleanly") {
  CHECK_THROWS_AS(mar::io::parse_spec_file("/nonexistent/spec.txt"),
                  mar::Error);
}

TEST_CASE("reading a coloring") {
  std::istringstream in(
      "# hand written\n"
      "0 5\n"
      "1 5\n"
      "2 9\n"
      "3 5\n");
  Coloring c = mar::io::read_coloring(in, 4);
  CHECK(c == Coloring(4, {0, 0, 1, 0}));  // canonical relabeling
  CHECK(c.num_colors() == 2);
}

TEST_CASE("coloring read errors") {
  auto line_of = [](const std::string& text, int n) {
    std::istringstream in(text);
    try {
      mar::io::read_coloring(in, n);
    } catch (const mar::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("0 0\n1 0\n4 0\n", 4) == 3);   // element out of range
  CHECK(line_of("0 0\n0 1\n1 0\n2 0\n", 3) == 2);  // duplicate element
  CHECK(line_of("0 0\n1 0\n", 3) == 3);        // element 2 missing
  CHECK(line_of("0 0 9\n", 1) == 1);           // extra token
}

TEST_CASE("writing and re-reading a coloring") {
  Coloring c(5, {0, 1, 0, 2, 1});
  std::ostringstream out;
  mar::io::write_coloring(out, c, {"five elements", "three colors"});
  std::string text = out.str();
  CHECK(text.find("# five elements\n") != std::string::npos);
  std::istringstream in(text);
  Coloring back = mar::io::read_coloring(in, 5);
  CHECK(back == c);
}
