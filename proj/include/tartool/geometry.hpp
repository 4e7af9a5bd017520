#pragma once

#include <optional>
#include <variant>

#include "tartool/numbers.hpp"

namespace tar {

struct Point {
  Quad x, y;
  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

struct PointLexLess {
  bool operator()(const Point& p, const Point& q) const {
    QuadLexLess lt;
    if (p.x != q.x) return lt(p.x, q.x);
    return lt(p.y, q.y);
  }
};

/// Nonzero vector; angle predicates treat it as a ray direction.
struct Direction {
  Quad dx, dy;
  bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
};

inline Direction direction(const Point& from, const Point& to) {
  return {to.x - from.x, to.y - from.y};
}

inline Quad dot(const Direction& u, const Direction& v) { return u.dx * v.dx + u.dy * v.dy; }
inline Quad cross(const Direction& u, const Direction& v) { return u.dx * v.dy - u.dy * v.dx; }

// Sign of the turn p->q->r (positive = counterclockwise).
int orient(const Point& p, const Point& q, const Point& r);

enum class AngleClass { Below, Equal, Above };
enum class Threshold { Deg60, Deg90, Deg120 };

const char* to_string(AngleClass c);

/// Exact classification of the undirected ray angle in [0, 180] against the
/// threshold, by squared comparisons of cross and dot products.
AngleClass angle_vs_threshold(const Direction& u, const Direction& v, Threshold t);

/// Floating view of the same angle, for reporting only.
double angle_degrees(const Direction& u, const Direction& v);

/// An angle in [0, 180] represented exactly by (dot, |cross|) of some ray
/// pair. Comparable across pairs without computing the angle itself.
struct AnglePair {
  Quad d;  // dot
  Quad c;  // |cross|, >= 0

  static AnglePair of(const Direction& u, const Direction& v) {
    return {dot(u, v), abs(cross(u, v))};
  }
  // Folds to min(theta, 180-theta); the angle at a proper crossing.
  AnglePair folded_acute() const { return {abs(d), c}; }
  AngleClass vs(Threshold t) const;
  double degrees() const;
};

// -1 if the first angle is smaller, 0 equal, +1 larger.
int compare_angles(const AnglePair& p, const AnglePair& q);

struct SegmentIntersection {
  enum class Kind { None, ProperCrossing, SharedEndpoint, Degenerate };
  Kind kind = Kind::None;
  std::optional<Point> point;  // set for ProperCrossing and SharedEndpoint
};

/// Exact segment relation. Degenerate covers collinear overlap and an
/// endpoint of one segment in the interior of the other.
SegmentIntersection segment_intersection(const Point& p1, const Point& p2, const Point& q1,
                                         const Point& q2);

// True iff r lies strictly inside segment (p, q); collinearity is required.
bool strictly_inside_segment(const Point& p, const Point& q, const Point& r);

}  // namespace tar
