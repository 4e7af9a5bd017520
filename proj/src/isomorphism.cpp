#include "tartool/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace tar {

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<std::vector<bool>> adj_a, adj_b;
  std::vector<int> deg_a, deg_b;
  std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
  std::vector<bool> used_b;

  IsoSearch(const Graph& ga, const Graph& gb) : a(ga), b(gb) {
    adj_a.assign(a.n, std::vector<bool>(a.n, false));
    adj_b.assign(b.n, std::vector<bool>(b.n, false));
    for (auto& [u, v] : a.edges) adj_a[u][v] = adj_a[v][u] = true;
    for (auto& [u, v] : b.edges) adj_b[u][v] = adj_b[v][u] = true;
    deg_a = a.degrees();
    deg_b = b.degrees();
    map_ab.assign(a.n, -1);
    used_b.assign(b.n, false);
  }

  bool extend(int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
      if (used_b[w] || deg_a[v] != deg_b[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (adj_a[u][v] != adj_b[map_ab[u]][w]) ok = false;
      if (!ok) continue;
      map_ab[v] = w;
      used_b[w] = true;
      if (extend(v + 1)) return true;
      used_b[w] = false;
      map_ab[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  IsoSearch s(a, b);
  return s.extend(0);
}

}  // namespace tar
