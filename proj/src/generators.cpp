#include "tartool/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tar {

namespace {

// Rational point exactly on the unit circle near angle phi, via the tangent
// half-angle parameterization.
Point circle_point(double phi) {
  phi = std::remainder(phi, 2 * std::numbers::pi);
  bool flip = std::cos(phi) < 0;
  if (flip) phi = std::remainder(phi - std::numbers::pi, 2 * std::numbers::pi);
  double td = std::tan(phi / 2);  // |t| <= ~1
  const long den = 1 << 20;
  Rat t(static_cast<long>(std::llround(td * den)), den);
  Rat one_minus = 1 - t * t, one_plus = 1 + t * t;
  Rat x = one_minus / one_plus, y = 2 * t / one_plus;
  if (flip) {
    x = -x;
    y = -y;
  }
  return {Quad(x), Quad(y)};
}

const Quad kHalf{Rat(1, 2)};
const Quad kHalfRoot3{Rat(0), Rat(1, 2)};

std::vector<Point> exact_polygon(int sides) {
  // Unit-circle vertices with coordinates in Q(sqrt(3)) where possible.
  std::vector<Point> pts;
  auto add = [&](Quad x, Quad y) { pts.push_back({x, y}); };
  switch (sides) {
    case 3:
      add(Quad(1), Quad(0));
      add(-kHalf, kHalfRoot3);
      add(-kHalf, -kHalfRoot3);
      break;
    case 4:
      add(Quad(1), Quad(0));
      add(Quad(0), Quad(1));
      add(Quad(-1), Quad(0));
      add(Quad(0), Quad(-1));
      break;
    case 6:
      add(Quad(1), Quad(0));
      add(kHalf, kHalfRoot3);
      add(-kHalf, kHalfRoot3);
      add(Quad(-1), Quad(0));
      add(-kHalf, -kHalfRoot3);
      add(kHalf, -kHalfRoot3);
      break;
    case 12:
      add(Quad(1), Quad(0));
      add(kHalfRoot3, kHalf);
      add(kHalf, kHalfRoot3);
      add(Quad(0), Quad(1));
      add(-kHalf, kHalfRoot3);
      add(-kHalfRoot3, kHalf);
      add(Quad(-1), Quad(0));
      add(-kHalfRoot3, -kHalf);
      add(-kHalf, -kHalfRoot3);
      add(Quad(0), Quad(-1));
      add(kHalf, -kHalfRoot3);
      add(kHalfRoot3, -kHalf);
      break;
    default:
      for (int j = 0; j < sides; ++j)
        pts.push_back(circle_point(2 * std::numbers::pi * j / sides));
  }
  return pts;
}

}  // namespace

Drawing regular_polygon(int sides) {
  if (sides < 3) throw std::invalid_argument("regular_polygon: need at least 3 sides");
  Drawing d{Graph::cycle(sides), exact_polygon(sides)};
  require_valid(d);
  // Classification contract: interior angle (k-2)*180/k against each
  // threshold, equality only where the construction is exact.
  double interior = (sides - 2) * 180.0 / sides;
  auto t = compute_tar(d);
  for (auto [thr, val] : {std::pair{Threshold::Deg60, 60.0},
                          {Threshold::Deg90, 90.0},
                          {Threshold::Deg120, 120.0}}) {
    AngleClass expect = interior < val   ? AngleClass::Below
                        : interior > val ? AngleClass::Above
                                         : AngleClass::Equal;
    if (t.vs(thr) != expect)
      throw std::logic_error("regular_polygon: classification mismatch at " +
                             std::to_string(static_cast<int>(val)));
  }
  return d;
}

namespace {

// Inner block of the layered 8-gon: an octagon admitting two vertical chords
// with every angle above 60 degrees, in counterclockwise angular order.
const int kStadium[8][2] = {{5, 1}, {1, 3}, {-1, 3}, {-5, 1},
                            {-5, -1}, {-1, -3}, {1, -3}, {5, -1}};

}  // namespace

Drawing layered_8gon(int k) {
  if (k < 1) throw std::invalid_argument("layered_8gon: k must be positive");
  int n = 8 * k;
  std::vector<Point> pos(n);
  std::vector<std::pair<int, int>> edges;

  // Layer 0 holds the stadium octagon and the two chords; layers 1..k-1 are
  // regular octagons of growing radius with radial connectors.
  auto vid = [&](int layer, int i) { return 8 * layer + i; };
  for (int i = 0; i < 8; ++i) pos[vid(0, i)] = {Quad(kStadium[i][0]), Quad(kStadium[i][1])};
  for (int layer = 1; layer < k; ++layer) {
    long radius = 15L << layer;  // 30, 60, 120, ...
    for (int i = 0; i < 8; ++i) {
      Point u = circle_point((22.5 + 45.0 * i) * std::numbers::pi / 180.0);
      pos[vid(layer, i)] = {u.x * Quad(Rat(radius)), u.y * Quad(Rat(radius))};
    }
  }
  for (int layer = 0; layer < k; ++layer)
    for (int i = 0; i < 8; ++i) edges.push_back({vid(layer, i), vid(layer, (i + 1) % 8)});
  for (int layer = 0; layer + 1 < k; ++layer)
    for (int i = 0; i < 8; ++i) edges.push_back({vid(layer, i), vid(layer + 1, i)});
  // The two middle edges: vertical chords of the stadium.
  edges.push_back({vid(0, 1), vid(0, 6)});  // (1,3)-(1,-3)
  edges.push_back({vid(0, 2), vid(0, 5)});  // (-1,3)-(-1,-3)

  Drawing d{Graph(n, std::move(edges)), std::move(pos)};
  require_valid(d);
  if (d.m() != 16 * k - 6) throw std::logic_error("layered_8gon: edge count off");
  if (!crossings(d).empty()) throw std::logic_error("layered_8gon: unexpected crossing");
  if (compute_tar(d).vs60 != AngleClass::Above)
    throw std::logic_error("layered_8gon: tar not above 60");
  return d;
}

Drawing random_drawing(int n, int m, std::uint64_t seed, int coordinate_range) {
  if (n < 1) throw std::invalid_argument("random_drawing: n must be positive");
  long maxm = static_cast<long>(n) * (n - 1) / 2;
  if (m < 0 || m > maxm) throw std::invalid_argument("random_drawing: infeasible edge count");
  if (coordinate_range < 1) throw std::invalid_argument("random_drawing: bad range");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  Graph g(n, std::move(all));

  std::uniform_int_distribution<int> coord(-coordinate_range, coordinate_range);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pos;
    pos.reserve(n);
    for (int i = 0; i < n; ++i) pos.push_back({Quad(coord(rng)), Quad(coord(rng))});
    Drawing d{g, std::move(pos)};
    if (validate(d).ok()) return d;
  }
  throw std::runtime_error("random_drawing: resampling budget exhausted");
}

}  // namespace tar
