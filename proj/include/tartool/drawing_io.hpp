#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tartool/drawing.hpp"

namespace tar {

/// Drawing file format: line-oriented text.
///   # comment
///   n <count>
///   edge <u> <v>
///   pos <v> <x> <y>
/// Coordinates are exact: integers, "p/q", decimals (converted exactly as
/// written), with an optional sqrt(3) term like "1/2+3/4r3". Rational
/// coordinates round-trip bit-exactly. Positions may be omitted entirely
/// (graph-only files, used by `optimize`).
struct DrawingParseError : std::runtime_error {
  int line;
  DrawingParseError(int ln, const std::string& what)
      : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

struct DrawingFile {
  Graph graph;
  std::vector<Point> positions;  // empty when the file has no pos lines
  bool has_positions() const { return !positions.empty(); }
  Drawing drawing() const;  // throws if positions missing/incomplete
};

DrawingFile parse_drawing_text(const std::string& text);
DrawingFile load_drawing_file(const std::string& path);

std::string format_drawing(const Drawing& d);
std::string format_graph(const Graph& g);
void save_drawing_file(const Drawing& d, const std::string& path);

}  // namespace tar
