#include "doctest.h"
#include "tartool/drawing_io.hpp"

using namespace tar;

TEST_CASE("drawing file parse and round trip") {
  std::string text =
      "# unit square\n"
      "n 4\n"
      "edge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\n"
      "pos 0 0 0\npos 1 1 0\npos 2 1 1\npos 3 0 1\n";
  auto f = parse_drawing_text(text);
  REQUIRE(f.has_positions());
  Drawing d = f.drawing();
  CHECK(d.n() == 4);
  CHECK(d.m() == 4);
  CHECK(validate(d).ok());

  auto again = parse_drawing_text(format_drawing(d)).drawing();
  CHECK(again.graph.edges == d.graph.edges);
  for (int v = 0; v < 4; ++v) CHECK(again.pos(v) == d.pos(v));
}

TEST_CASE("coordinate forms parse exactly") {
  std::string text =
      "n 3\nedge 0 1\nedge 1 2\n"
      "pos 0 1/2 -3/4\n"
      "pos 1 0.25 2e1\n"
      "pos 2 1/2+3/4r3 -2r3\n";
  auto d = parse_drawing_text(text).drawing();
  CHECK(d.pos(0).x == Quad(Rat(1, 2)));
  CHECK(d.pos(0).y == Quad(Rat(-3, 4)));
  CHECK(d.pos(1).x == Quad(Rat(1, 4)));
  CHECK(d.pos(1).y == Quad(Rat(20)));
  CHECK(d.pos(2).x == Quad(Rat(1, 2), Rat(3, 4)));
  CHECK(d.pos(2).y == Quad(Rat(0), Rat(-2)));

  // Bit-exact round trip for rational coordinates.
  auto out = format_drawing(d);
  CHECK(out.find("pos 0 1/2 -3/4") != std::string::npos);
  CHECK(out.find("pos 1 1/4 20") != std::string::npos);
  CHECK(out.find("pos 2 1/2+3/4r3 -2r3") != std::string::npos);
}

TEST_CASE("graph-only files") {
  auto f = parse_drawing_text("n 3\nedge 0 1\nedge 1 2\n");
  CHECK(!f.has_positions());
  CHECK(f.graph.n == 3);
  CHECK_THROWS(f.drawing());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_drawing_text("n 2\nedge 0 2\n"), doctest::Contains("line 2"),
                       DrawingParseError);
  CHECK_THROWS_AS(parse_drawing_text("edge 0 1\n"), DrawingParseError);
  CHECK_THROWS_AS(parse_drawing_text("n 2\nedge 0 0\n"), DrawingParseError);
  CHECK_THROWS_AS(parse_drawing_text("n 2\nedge 0 1\nedge 1 0\n"), DrawingParseError);
  CHECK_THROWS_AS(parse_drawing_text("n 2\npos 0 1 2\n"), DrawingParseError);
  CHECK_THROWS_AS(parse_drawing_text("n 1\npos 0 zz 2\n"), DrawingParseError);
}
