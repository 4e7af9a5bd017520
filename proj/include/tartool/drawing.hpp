#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tartool/geometry.hpp"
#include "tartool/graph.hpp"

namespace tar {

/// Straight-line drawing: a graph plus exact coordinates per vertex.
struct Drawing {
  Graph graph;
  std::vector<Point> positions;

  int n() const { return graph.n; }
  int m() const { return graph.m(); }
  const Point& pos(int v) const { return positions[v]; }
  Point edge_endpoint(int e, int side) const {
    return positions[side == 0 ? graph.edges[e].first : graph.edges[e].second];
  }
};

struct Violation {
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the drawing invariants: distinct vertex positions, no vertex in the
/// relative interior of an edge, no collinear edge overlaps (degenerate
/// segment pairs are violations; proper crossings are fine).
ValidationReport validate(const Drawing& d);

void require_valid(const Drawing& d);  // throws std::invalid_argument on violations

struct Crossing {
  int edge_a, edge_b;
  Point point;
};

/// All proper crossings, pairwise; concurrent edges yield several crossings
/// with equal points.
std::vector<Crossing> crossings(const Drawing& d);

/// TAR(D): minimum angle over incident edge pairs and crossing pairs,
/// represented exactly. Unconstrained when no angle exists.
struct TarValue {
  bool unconstrained = true;
  AnglePair min_angle;  // meaningful iff !unconstrained
  AngleClass vs60 = AngleClass::Above;
  AngleClass vs90 = AngleClass::Above;
  AngleClass vs120 = AngleClass::Above;

  double degrees() const;  // +inf when unconstrained
  AngleClass vs(Threshold t) const;
};

TarValue compute_tar(const Drawing& d);

// Scales/translates by rational factors; exact.
Drawing translated(const Drawing& d, const Quad& dx, const Quad& dy);
Drawing scaled(const Drawing& d, const Rat& factor);
Drawing mirrored_x(const Drawing& d);

}  // namespace tar
