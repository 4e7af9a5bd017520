#include "tartool/drawing.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace tar {

ValidationReport validate(const Drawing& d) {
  ValidationReport rep;
  if (static_cast<int>(d.positions.size()) != d.graph.n) {
    rep.violations.push_back({"position count differs from vertex count"});
    return rep;
  }
  // Coincident vertices.
  std::map<Point, int, PointLexLess> seen;
  for (int v = 0; v < d.n(); ++v) {
    auto [it, fresh] = seen.insert({d.pos(v), v});
    if (!fresh)
      rep.violations.push_back({"coincident vertices " + std::to_string(it->second) + " and " +
                                std::to_string(v)});
  }
  // Vertex in the relative interior of an edge.
  for (int e = 0; e < d.m(); ++e) {
    auto [a, b] = d.graph.edges[e];
    for (int v = 0; v < d.n(); ++v) {
      if (v == a || v == b) continue;
      if (d.pos(a) == d.pos(b)) continue;  // already reported as coincident
      if (strictly_inside_segment(d.pos(a), d.pos(b), d.pos(v)))
        rep.violations.push_back({"vertex " + std::to_string(v) + " on edge interior (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")"});
    }
  }
  // Degenerate edge pair relations (collinear overlap etc.).
  for (int e = 0; e < d.m(); ++e) {
    auto [a, b] = d.graph.edges[e];
    if (d.pos(a) == d.pos(b)) continue;
    for (int f = e + 1; f < d.m(); ++f) {
      auto [c, g] = d.graph.edges[f];
      if (d.pos(c) == d.pos(g)) continue;
      auto r = segment_intersection(d.pos(a), d.pos(b), d.pos(c), d.pos(g));
      if (r.kind == SegmentIntersection::Kind::Degenerate)
        rep.violations.push_back({"degenerate relation between edges (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") and (" + std::to_string(c) + "," +
                                  std::to_string(g) + ")"});
    }
  }
  return rep;
}

void require_valid(const Drawing& d) {
  auto rep = validate(d);
  if (!rep.ok()) throw std::invalid_argument("invalid drawing: " + rep.violations.front().message);
}

std::vector<Crossing> crossings(const Drawing& d) {
  std::vector<Crossing> out;
  for (int e = 0; e < d.m(); ++e) {
    auto [a, b] = d.graph.edges[e];
    for (int f = e + 1; f < d.m(); ++f) {
      auto [c, g] = d.graph.edges[f];
      auto r = segment_intersection(d.pos(a), d.pos(b), d.pos(c), d.pos(g));
      if (r.kind == SegmentIntersection::Kind::ProperCrossing) out.push_back({e, f, *r.point});
    }
  }
  return out;
}

double TarValue::degrees() const {
  if (unconstrained) return std::numeric_limits<double>::infinity();
  return min_angle.degrees();
}

AngleClass TarValue::vs(Threshold t) const {
  switch (t) {
    case Threshold::Deg60: return vs60;
    case Threshold::Deg90: return vs90;
    case Threshold::Deg120: return vs120;
  }
  throw std::logic_error("bad threshold");
}

TarValue compute_tar(const Drawing& d) {
  require_valid(d);
  TarValue out;
  auto consider = [&](const AnglePair& ap) {
    if (out.unconstrained || compare_angles(ap, out.min_angle) < 0) {
      out.unconstrained = false;
      out.min_angle = ap;
    }
  };
  auto adj = d.graph.adjacency();
  for (int v = 0; v < d.n(); ++v) {
    auto& nb = adj[v];
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        consider(AnglePair::of(direction(d.pos(v), d.pos(nb[i])),
                               direction(d.pos(v), d.pos(nb[j]))));
  }
  for (const auto& cr : crossings(d)) {
    auto [a, b] = d.graph.edges[cr.edge_a];
    auto [c, g] = d.graph.edges[cr.edge_b];
    AnglePair ap = AnglePair::of(direction(d.pos(a), d.pos(b)), direction(d.pos(c), d.pos(g)));
    consider(ap.folded_acute());
  }
  if (!out.unconstrained) {
    out.vs60 = out.min_angle.vs(Threshold::Deg60);
    out.vs90 = out.min_angle.vs(Threshold::Deg90);
    out.vs120 = out.min_angle.vs(Threshold::Deg120);
  }
  return out;
}

Drawing translated(const Drawing& d, const Quad& dx, const Quad& dy) {
  Drawing out = d;
  for (auto& p : out.positions) p = {p.x + dx, p.y + dy};
  return out;
}

Drawing scaled(const Drawing& d, const Rat& factor) {
  Drawing out = d;
  Quad f{factor};
  for (auto& p : out.positions) p = {p.x * f, p.y * f};
  return out;
}

Drawing mirrored_x(const Drawing& d) {
  Drawing out = d;
  for (auto& p : out.positions) p = {-p.x, p.y};
  return out;
}

}  // namespace tar
