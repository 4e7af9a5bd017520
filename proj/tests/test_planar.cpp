#include <random>

#include "doctest.h"
#include "tartool/planar.hpp"

using namespace tar;

namespace {

Point pt(int x, int y) { return {Quad(x), Quad(y)}; }

Drawing square() {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  return {g, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
}

Drawing cross_x() {
  Graph g(4, {{0, 2}, {1, 3}});
  return {g, {pt(0, 0), pt(0, 2), pt(2, 2), pt(2, 0)}};
}

}  // namespace

TEST_CASE("planarize the X") {
  auto p = planarize(cross_x());
  CHECK(p.cr() == 1);
  CHECK(p.drawing.n() == 5);
  CHECK(p.drawing.m() == 4);
  CHECK(!p.merged);
  CHECK(p.vertex_origin[4].is_crossing);
  CHECK(p.drawing.pos(4) == pt(1, 1));
  CHECK(crossings(p.drawing).empty());
}

TEST_CASE("planarize identity on plane drawings") {
  auto p = planarize(square());
  CHECK(p.cr() == 0);
  CHECK(p.drawing.n() == 4);
  CHECK(p.drawing.m() == 4);
  for (int v = 0; v < 4; ++v) {
    CHECK(!p.vertex_origin[v].is_crossing);
    CHECK(p.vertex_origin[v].original_vertex == v);
  }
}

TEST_CASE("planarize merges concurrent crossings") {
  // Three pairwise non-parallel segments through the origin.
  Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
  Drawing d{g, {pt(-2, 0), pt(2, 0), pt(-2, -2), pt(2, 2), pt(-2, 2), pt(2, -2)}};
  auto cr = crossings(d);
  CHECK(cr.size() == 3);
  for (auto& c : cr) CHECK(c.point == pt(0, 0));
  auto p = planarize(d);
  CHECK(p.merged);
  CHECK(p.drawing.n() == 7);
  CHECK(p.drawing.m() == 6);
  CHECK(p.drawing.graph.degrees()[6] == 6);
}

TEST_CASE("cell structure of the square") {
  auto cs = cell_structure(square());
  CHECK(cs.cell_count() == 2);
  CHECK(cs.size(0) == 4);
  CHECK(cs.size(1) == 4);
  CHECK(cs.unbounded_size() == 4);
}

TEST_CASE("cell structure of a single edge") {
  Graph g(2, {{0, 1}});
  Drawing d{g, {pt(0, 0), pt(3, 1)}};
  auto cs = cell_structure(d);
  CHECK(cs.cell_count() == 1);
  CHECK(cs.unbounded_size() == 2);
}

TEST_CASE("cell structure of a path on 3 vertices") {
  Drawing d{Graph::path(3), {pt(0, 0), pt(1, 0), pt(2, 1)}};
  auto cs = cell_structure(d);
  CHECK(cs.cell_count() == 1);
  CHECK(cs.unbounded_size() == 4);
}

TEST_CASE("cell sizes sum to twice the edges") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coord(-9, 9);
  int done = 0;
  while (done < 150) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Point> ps;
    for (int i = 0; i < n; ++i) ps.push_back(pt(coord(rng), coord(rng)));
    int mm = 1 + static_cast<int>(rng() % (n * (n - 1) / 2));
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(mm);
    Drawing d{Graph(n, std::move(all)), ps};
    if (!validate(d).ok() || !d.graph.connected()) continue;
    auto p = planarize(d);
    auto cs = cell_structure(p);
    int total = 0;
    for (int c = 0; c < cs.cell_count(); ++c) total += cs.size(c);
    CHECK(total == 2 * p.drawing.m());
    // Euler count via Eq-style identity when crossings are pairwise.
    if (!p.merged) CHECK(cs.cell_count() == -d.n() + d.m() + p.cr() + 2);
    ++done;
  }
}

TEST_CASE("comb signature invariance") {
  auto s1 = comb_signature(square());
  Drawing big = scaled(square(), Rat(7));
  Drawing moved = translated(big, Quad(5), Quad(-3));
  CHECK(comb_signature(moved) == s1);
  CHECK(comb_signature(mirrored_x(square())) == s1);

  Drawing path3{Graph::path(3), {pt(0, 0), pt(1, 0), pt(2, 1)}};
  CHECK(comb_signature(path3) != s1);

  // Relabeled square: same signature.
  Graph g2(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  Drawing relabeled{g2, {pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)}};
  CHECK(comb_signature(relabeled) == s1);

  // Square with a diagonal differs from the empty square.
  Graph g3(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  Drawing diag{g3, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
  CHECK(comb_signature(diag) != s1);
}

TEST_CASE("signature distinguishes outer face choice") {
  // Triangle with a pendant inside vs outside: same abstract graph,
  // different embeddings.
  Graph g(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  Drawing inside{g, {pt(0, 0), pt(8, 0), pt(4, 8), pt(4, 2)}};
  Drawing outside{g, {pt(0, 0), pt(8, 0), pt(4, 8), pt(-4, -2)}};
  CHECK(comb_signature(inside) != comb_signature(outside));
}
