#include "tartool/planar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tar {

PlanarizedDrawing planarize(const Drawing& d) {
  require_valid(d);
  PlanarizedDrawing out;
  out.crossing_list = crossings(d);

  // Distinct crossing points become vertices, ids after the originals in
  // lexicographic point order for determinism.
  std::map<Point, int, PointLexLess> point_vertex;
  for (const auto& cr : out.crossing_list) point_vertex.insert({cr.point, -1});
  int next_id = d.n();
  for (auto& [pt, id] : point_vertex) id = next_id++;

  out.vertex_origin.resize(next_id);
  for (int v = 0; v < d.n(); ++v) out.vertex_origin[v] = {false, v, {}};
  for (size_t i = 0; i < out.crossing_list.size(); ++i) {
    int id = point_vertex.at(out.crossing_list[i].point);
    out.vertex_origin[id].is_crossing = true;
    out.vertex_origin[id].crossing_ids.push_back(static_cast<int>(i));
  }
  out.merged = point_vertex.size() < out.crossing_list.size();

  std::vector<Point> positions = d.positions;
  positions.resize(next_id);
  for (auto& [pt, id] : point_vertex) positions[id] = pt;

  // Split every edge at its crossing points, ordered along the edge.
  std::vector<std::vector<Point>> on_edge(d.m());
  for (const auto& cr : out.crossing_list) {
    on_edge[cr.edge_a].push_back(cr.point);
    on_edge[cr.edge_b].push_back(cr.point);
  }
  std::vector<std::pair<int, int>> new_edges;
  std::vector<EdgeOrigin> new_origin;
  for (int e = 0; e < d.m(); ++e) {
    auto [a, b] = d.graph.edges[e];
    Direction dir = direction(d.pos(a), d.pos(b));
    auto& pts = on_edge[e];
    std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
      return dot(direction(d.pos(a), p), dir) < dot(direction(d.pos(a), q), dir);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& p, const Point& q) { return p == q; }),
              pts.end());
    int prev = a, seg = 0;
    for (const auto& pt : pts) {
      int cv = point_vertex.at(pt);
      new_edges.push_back({prev, cv});
      new_origin.push_back({e, seg++});
      prev = cv;
    }
    new_edges.push_back({prev, b});
    new_origin.push_back({e, seg});
  }

  // Graph() sorts edges; keep origin aligned by sorting the same way.
  std::vector<size_t> order(new_edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](size_t i) {
    auto [u, v] = new_edges[i];
    if (u > v) std::swap(u, v);
    return std::make_pair(u, v);
  };
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return key(i) < key(j); });
  std::vector<std::pair<int, int>> sorted_edges;
  out.edge_origin.clear();
  for (size_t i : order) {
    sorted_edges.push_back(new_edges[i]);
    out.edge_origin.push_back(new_origin[i]);
  }

  out.drawing = Drawing{Graph(next_id, std::move(sorted_edges)), std::move(positions)};
  return out;
}

namespace {

// Counterclockwise order from the +x axis: upper half [0,180) first.
bool ccw_less(const Direction& u, const Direction& v) {
  auto lower = [](const Direction& w) {
    int sy = sign(w.dy);
    return sy < 0 || (sy == 0 && sign(w.dx) < 0);
  };
  bool lu = lower(u), lv = lower(v);
  if (lu != lv) return !lu;
  return sign(cross(u, v)) > 0;
}

}  // namespace

std::vector<std::vector<int>> rotation_system(const Drawing& plane) {
  std::vector<std::vector<int>> rot(plane.n());
  for (int e = 0; e < plane.m(); ++e) {
    rot[plane.graph.edges[e].first].push_back(2 * e);
    rot[plane.graph.edges[e].second].push_back(2 * e + 1);
  }
  auto dart_dir = [&](int dart) {
    auto [a, b] = plane.graph.edges[dart_edge(dart)];
    if (dart & 1) std::swap(a, b);
    return direction(plane.pos(a), plane.pos(b));
  };
  for (auto& list : rot)
    std::sort(list.begin(), list.end(),
              [&](int d1, int d2) { return ccw_less(dart_dir(d1), dart_dir(d2)); });
  return rot;
}

CellStructure cell_structure(const Drawing& plane) {
  if (!plane.graph.connected()) throw std::invalid_argument("cell_structure: disconnected drawing");
  if (!crossings(plane).empty()) throw std::invalid_argument("cell_structure: drawing not plane");

  CellStructure cs;
  if (plane.m() == 0) {
    cs.cells.push_back({});
    cs.unbounded = 0;
    return cs;
  }

  auto rot = rotation_system(plane);
  // Position of each outgoing dart within its vertex rotation.
  std::vector<int> pos_in_rot(2 * plane.m(), -1);
  std::vector<int> dart_tail(2 * plane.m());
  for (int v = 0; v < plane.n(); ++v)
    for (size_t i = 0; i < rot[v].size(); ++i) {
      pos_in_rot[rot[v][i]] = static_cast<int>(i);
      dart_tail[rot[v][i]] = v;
    }

  auto next_dart = [&](int dart) {
    // Reverse, then rotate clockwise: traces every face with the cell on the
    // left of its darts, so the unbounded cell is the unique clockwise walk.
    int r = dart_reverse(dart);
    int v = dart_tail[r];
    const auto& list = rot[v];
    return list[(pos_in_rot[r] + list.size() - 1) % list.size()];
  };

  cs.cell_of_dart.assign(2 * plane.m(), -1);
  for (int start = 0; start < 2 * plane.m(); ++start) {
    if (cs.cell_of_dart[start] != -1) continue;
    int id = static_cast<int>(cs.cells.size());
    std::vector<int> walk;
    int dart = start;
    do {
      cs.cell_of_dart[dart] = id;
      walk.push_back(dart);
      dart = next_dart(dart);
    } while (dart != start);
    cs.cells.push_back(std::move(walk));
  }

  if (cs.cells.size() == 1) {
    cs.unbounded = 0;
    return cs;
  }
  // Face-on-left tracing: the unbounded face is the unique clockwise walk,
  // i.e. negative shoelace sum.
  int negatives = 0;
  for (size_t i = 0; i < cs.cells.size(); ++i) {
    Quad sum{Rat(0)};
    for (int dart : cs.cells[i]) {
      auto [a, b] = plane.graph.edges[dart_edge(dart)];
      if (dart & 1) std::swap(a, b);
      sum += plane.pos(a).x * plane.pos(b).y - plane.pos(b).x * plane.pos(a).y;
    }
    if (sign(sum) < 0) {
      cs.unbounded = static_cast<int>(i);
      ++negatives;
    }
  }
  if (negatives != 1) throw std::logic_error("cell_structure: outer face not unique");
  return cs;
}

CellStructure cell_structure(const PlanarizedDrawing& p) { return cell_structure(p.drawing); }

std::vector<int> face_vertices(const Drawing& plane, const std::vector<int>& walk) {
  std::vector<int> out;
  for (int dart : walk) {
    auto [a, b] = plane.graph.edges[dart_edge(dart)];
    out.push_back((dart & 1) ? b : a);
  }
  return out;
}

namespace {

// Deterministic breadth-first code of a rooted oriented embedding.
// rot: per-vertex outgoing darts in rotation order; colors: per-vertex tag.
std::vector<int> bfs_code(const std::vector<std::vector<int>>& rot,
                          const std::vector<int>& head_of, const std::vector<int>& tail_of,
                          const std::vector<int>& colors, int start_dart) {
  int n = static_cast<int>(rot.size());
  std::vector<int> label(n, -1), order;
  std::vector<int> entry(n, -1);  // out-dart at which neighbor enumeration starts
  label[tail_of[start_dart]] = 0;
  order.push_back(tail_of[start_dart]);
  entry[tail_of[start_dart]] = start_dart;
  std::vector<int> code;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    const auto& list = rot[v];
    int s = 0;
    while (list[s] != entry[v]) ++s;
    code.push_back(colors[v]);
    code.push_back(static_cast<int>(list.size()));
    for (size_t k = 0; k < list.size(); ++k) {
      int dart = list[(s + k) % list.size()];
      int w = head_of[dart];
      if (label[w] == -1) {
        label[w] = static_cast<int>(order.size());
        order.push_back(w);
        entry[w] = dart_reverse(dart);
      }
      code.push_back(label[w]);
    }
  }
  return code;
}

}  // namespace

std::string comb_signature(const Drawing& d) {
  require_valid(d);
  if (!d.graph.connected()) throw std::invalid_argument("comb_signature: disconnected drawing");
  PlanarizedDrawing p = planarize(d);
  const Drawing& pd = p.drawing;

  std::vector<int> colors(pd.n());
  for (int v = 0; v < pd.n(); ++v) colors[v] = p.vertex_origin[v].is_crossing ? 1 : 0;

  if (pd.m() == 0) return "K1";

  CellStructure cs = cell_structure(pd);
  auto rot = rotation_system(pd);
  std::vector<int> head_of(2 * pd.m()), tail_of(2 * pd.m());
  for (int e = 0; e < pd.m(); ++e) {
    auto [a, b] = pd.graph.edges[e];
    tail_of[2 * e] = a;
    head_of[2 * e] = b;
    tail_of[2 * e + 1] = b;
    head_of[2 * e + 1] = a;
  }

  std::vector<int> best;
  for (int orientation = 0; orientation < 2; ++orientation) {
    std::vector<std::vector<int>> r = rot;
    std::vector<int> outer = cs.cells[cs.unbounded];
    if (orientation == 1) {
      for (auto& list : r) std::reverse(list.begin(), list.end());
      for (auto& dart : outer) dart = dart_reverse(dart);
    }
    for (int start : outer) {
      auto code = bfs_code(r, head_of, tail_of, colors, start);
      if (best.empty() || code < best) best = std::move(code);
    }
  }

  std::string s = std::to_string(pd.n()) + ";" + std::to_string(pd.m()) + ";";
  for (size_t i = 0; i < best.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(best[i]);
  }
  return s;
}

}  // namespace tar
