#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tar {

/// Simple undirected graph; edges stored as (min, max) pairs.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  // Connected component id per vertex, ids in discovery order from vertex 0.
  std::vector<int> components() const;
  int component_count() const;
  bool connected() const;

  Graph induced(const std::vector<int>& vertices) const;

  bool is_path_on(int k) const;   // simple path with k vertices
  bool is_cycle_on(int k) const;  // simple cycle with k vertices

  static Graph path(int k);
  static Graph cycle(int k);
  static Graph star(int leaves);
  static Graph complete(int k);
};

}  // namespace tar
