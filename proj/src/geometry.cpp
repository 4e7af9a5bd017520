#include "tartool/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tar {

int orient(const Point& p, const Point& q, const Point& r) {
  return sign(cross(direction(p, q), direction(p, r)));
}

const char* to_string(AngleClass c) {
  switch (c) {
    case AngleClass::Below: return "BELOW";
    case AngleClass::Equal: return "EQUAL";
    case AngleClass::Above: return "ABOVE";
  }
  return "?";
}

AngleClass AnglePair::vs(Threshold t) const {
  int sd = sign(d);
  switch (t) {
    case Threshold::Deg90:
      // cos(theta) sign decides directly.
      if (sd > 0) return AngleClass::Below;
      if (sd == 0) return AngleClass::Equal;
      return AngleClass::Above;
    case Threshold::Deg60: {
      // theta < 60 iff d > 0 and c^2 < 3 d^2 (tan comparison).
      if (sd <= 0) return AngleClass::Above;
      int s = sign(c * c - Quad(3) * d * d);
      if (s < 0) return AngleClass::Below;
      if (s == 0) return AngleClass::Equal;
      return AngleClass::Above;
    }
    case Threshold::Deg120: {
      // theta > 120 iff d < 0 and 3 d^2 > c^2.
      if (sd >= 0) return AngleClass::Below;
      int s = sign(Quad(3) * d * d - c * c);
      if (s > 0) return AngleClass::Above;
      if (s == 0) return AngleClass::Equal;
      return AngleClass::Below;
    }
  }
  throw std::logic_error("bad threshold");
}

double AnglePair::degrees() const {
  return std::atan2(to_double(c), to_double(d)) * 180.0 / std::numbers::pi;
}

int compare_angles(const AnglePair& p, const AnglePair& q) {
  int sp = sign(p.d), sq = sign(q.d);
  if (sp != sq) return sp > sq ? -1 : 1;  // larger cos sign = smaller angle
  // Within one sign regime theta1 < theta2 iff c1*d2 < c2*d1.
  int s = sign(p.c * q.d - q.c * p.d);
  return s < 0 ? -1 : (s == 0 ? 0 : 1);
}

AngleClass angle_vs_threshold(const Direction& u, const Direction& v, Threshold t) {
  if (u.is_zero() || v.is_zero()) throw std::domain_error("zero direction");
  return AnglePair::of(u, v).vs(t);
}

double angle_degrees(const Direction& u, const Direction& v) {
  if (u.is_zero() || v.is_zero()) throw std::domain_error("zero direction");
  return AnglePair::of(u, v).degrees();
}

bool strictly_inside_segment(const Point& p, const Point& q, const Point& r) {
  if (orient(p, q, r) != 0) return false;
  Direction pq = direction(p, q);
  Quad t = dot(direction(p, r), pq);
  return sign(t) > 0 && t < dot(pq, pq);
}

namespace {

// Collinear points assumed; true iff r is inside the closed segment.
bool on_segment_closed(const Point& p, const Point& q, const Point& r) {
  Direction pq = direction(p, q);
  Quad t = dot(direction(p, r), pq);
  return sign(t) >= 0 && t <= dot(pq, pq);
}

}  // namespace

SegmentIntersection segment_intersection(const Point& p1, const Point& p2, const Point& q1,
                                         const Point& q2) {
  if (p1 == p2 || q1 == q2) throw std::domain_error("zero-length segment");

  int shared = 0;
  Point shared_pt;
  for (const Point* a : {&p1, &p2})
    for (const Point* b : {&q1, &q2})
      if (*a == *b) {
        ++shared;
        shared_pt = *a;
      }

  int o1 = orient(p1, p2, q1);
  int o2 = orient(p1, p2, q2);
  int o3 = orient(q1, q2, p1);
  int o4 = orient(q1, q2, p2);

  if (shared >= 2) return {SegmentIntersection::Kind::Degenerate, std::nullopt};
  if (shared == 1) {
    // Meeting only at the endpoint is SharedEndpoint; anything more is
    // collinear overlap or an interior incidence.
    if (o1 == 0 && o2 == 0) {
      // All four points collinear; overlap iff some endpoint is interior.
      for (const Point* r : {&q1, &q2})
        if (strictly_inside_segment(p1, p2, *r))
          return {SegmentIntersection::Kind::Degenerate, std::nullopt};
      for (const Point* r : {&p1, &p2})
        if (strictly_inside_segment(q1, q2, *r))
          return {SegmentIntersection::Kind::Degenerate, std::nullopt};
      return {SegmentIntersection::Kind::SharedEndpoint, shared_pt};
    }
    return {SegmentIntersection::Kind::SharedEndpoint, shared_pt};
  }

  if (o1 == 0 && o2 == 0) {
    // Collinear, no shared endpoints: overlap or disjoint.
    if (on_segment_closed(p1, p2, q1) || on_segment_closed(p1, p2, q2) ||
        on_segment_closed(q1, q2, p1))
      return {SegmentIntersection::Kind::Degenerate, std::nullopt};
    return {SegmentIntersection::Kind::None, std::nullopt};
  }

  // Endpoint of one strictly inside the other.
  if ((o1 == 0 && strictly_inside_segment(p1, p2, q1)) ||
      (o2 == 0 && strictly_inside_segment(p1, p2, q2)) ||
      (o3 == 0 && strictly_inside_segment(q1, q2, p1)) ||
      (o4 == 0 && strictly_inside_segment(q1, q2, p2)))
    return {SegmentIntersection::Kind::Degenerate, std::nullopt};

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    // Proper crossing; solve p1 + t (p2-p1) with t = cross(q1-p1, q2-q1)/D.
    Direction r = direction(p1, p2), s = direction(q1, q2);
    Quad denom = cross(r, s);
    Quad t = cross(direction(p1, q1), s) / denom;
    Point x{p1.x + t * r.dx, p1.y + t * r.dy};
    return {SegmentIntersection::Kind::ProperCrossing, x};
  }
  return {SegmentIntersection::Kind::None, std::nullopt};
}

}  // namespace tar
