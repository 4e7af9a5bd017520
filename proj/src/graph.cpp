#include "tartool/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tar {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : n(vertices), edges(std::move(edge_list)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
  }
  std::sort(edges.begin(), edges.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto& [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n, -1);
  auto adj = adjacency();
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

int Graph::component_count() const {
  auto c = components();
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

bool Graph::connected() const { return n <= 1 || component_count() == 1; }

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> map(n, -1);
  for (size_t i = 0; i < vertices.size(); ++i) map[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (auto& [u, v] : edges)
    if (map[u] >= 0 && map[v] >= 0) es.push_back({map[u], map[v]});
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

bool Graph::is_path_on(int k) const {
  if (n != k || m() != k - 1 || !connected()) return false;
  auto d = degrees();
  int ones = 0;
  for (int x : d) {
    if (x > 2) return false;
    if (x == 1) ++ones;
  }
  return k == 1 ? true : ones == 2;
}

bool Graph::is_cycle_on(int k) const {
  if (n != k || m() != k || !connected()) return false;
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

Graph Graph::path(int k) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
  return Graph(k, std::move(es));
}

Graph Graph::cycle(int k) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < k; ++i) es.push_back({i, (i + 1) % k});
  return Graph(k, std::move(es));
}

Graph Graph::star(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, std::move(es));
}

Graph Graph::complete(int k) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.push_back({i, j});
  return Graph(k, std::move(es));
}

}  // namespace tar
