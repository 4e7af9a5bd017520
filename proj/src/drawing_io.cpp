#include "tartool/drawing_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tar {

Drawing DrawingFile::drawing() const {
  if (static_cast<int>(positions.size()) != graph.n)
    throw std::runtime_error("drawing file has no complete position set");
  return Drawing{graph, positions};
}

DrawingFile parse_drawing_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Point> positions;
  std::vector<bool> has_pos;

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "n") {
      if (n >= 0) throw DrawingParseError(lineno, "duplicate n line");
      if (!(ls >> n) || n < 0) throw DrawingParseError(lineno, "bad vertex count");
      positions.assign(n, Point{});
      has_pos.assign(n, false);
    } else if (kw == "edge") {
      if (n < 0) throw DrawingParseError(lineno, "edge before n");
      int u, v;
      if (!(ls >> u >> v)) throw DrawingParseError(lineno, "bad edge line");
      if (u < 0 || v < 0 || u >= n || v >= n) throw DrawingParseError(lineno, "edge endpoint out of range");
      if (u == v) throw DrawingParseError(lineno, "self-loop");
      edges.push_back({u, v});
    } else if (kw == "pos") {
      if (n < 0) throw DrawingParseError(lineno, "pos before n");
      int v;
      std::string xs, ys;
      if (!(ls >> v >> xs >> ys)) throw DrawingParseError(lineno, "bad pos line");
      if (v < 0 || v >= n) throw DrawingParseError(lineno, "pos vertex out of range");
      auto x = parse_quad(xs), y = parse_quad(ys);
      if (!x || !y) throw DrawingParseError(lineno, "bad coordinate");
      positions[v] = Point{*x, *y};
      has_pos[v] = true;
    } else {
      throw DrawingParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (n < 0) throw DrawingParseError(lineno, "missing n line");

  DrawingFile out;
  try {
    out.graph = Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw DrawingParseError(lineno, e.what());
  }
  int with = 0;
  for (bool b : has_pos) with += b;
  if (with == n) {
    out.positions = std::move(positions);
  } else if (with != 0) {
    throw DrawingParseError(lineno, "positions given for some but not all vertices");
  }
  return out;
}

DrawingFile load_drawing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_drawing_text(ss.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto& [u, v] : g.edges) out << "edge " << u << " " << v << "\n";
  return out.str();
}

std::string format_drawing(const Drawing& d) {
  std::ostringstream out;
  out << format_graph(d.graph);
  for (int v = 0; v < d.n(); ++v)
    out << "pos " << v << " " << to_string(d.pos(v).x) << " " << to_string(d.pos(v).y) << "\n";
  return out.str();
}

void save_drawing_file(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << format_drawing(d);
}

}  // namespace tar
