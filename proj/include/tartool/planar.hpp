#pragma once

#include <string>
#include <vector>

#include "tartool/drawing.hpp"

namespace tar {

struct VertexOrigin {
  bool is_crossing = false;
  int original_vertex = -1;          // valid when !is_crossing
  std::vector<int> crossing_ids;     // indices into crossing_list; >1 when merged
};

struct EdgeOrigin {
  int original_edge = -1;
  int segment_index = 0;  // position along the original edge
};

/// P(D): the drawing with every crossing replaced by a vertex. Coincident
/// crossing points merge into one vertex.
struct PlanarizedDrawing {
  Drawing drawing;
  std::vector<VertexOrigin> vertex_origin;
  std::vector<EdgeOrigin> edge_origin;
  std::vector<Crossing> crossing_list;
  bool merged = false;

  int cr() const { return static_cast<int>(crossing_list.size()); }
};

PlanarizedDrawing planarize(const Drawing& d);

// Darts are directed edge sides: dart 2e goes first->second of edge e,
// dart 2e+1 the reverse.
inline int dart_edge(int dart) { return dart / 2; }
inline int dart_reverse(int dart) { return dart ^ 1; }

/// Faces of a connected plane drawing via rotation-system traversal. Cell
/// size counts sides, so a bridge contributes twice to its cell.
struct CellStructure {
  std::vector<std::vector<int>> cells;  // face walks as dart lists
  std::vector<int> cell_of_dart;        // dart id -> cell index
  int unbounded = -1;

  int size(int cell) const { return static_cast<int>(cells[cell].size()); }
  int cell_count() const { return static_cast<int>(cells.size()); }
  int unbounded_size() const { return size(unbounded); }
};

// Pre: plane (no crossings) and connected.
CellStructure cell_structure(const Drawing& plane);
CellStructure cell_structure(const PlanarizedDrawing& p);

// Vertices along a face walk, one per dart (the dart tails); for the
// unbounded cell of a drawing whose boundary is a simple polygon this is the
// polygon in order.
std::vector<int> face_vertices(const Drawing& plane, const std::vector<int>& walk);

// Rotation system: per vertex, outgoing darts sorted counterclockwise.
std::vector<std::vector<int>> rotation_system(const Drawing& plane);

/// Canonical signature of the planarized embedding with marked unbounded
/// face and crossing-colored vertices. Two connected drawings are
/// combinatorially equivalent (up to relabeling and reflection) iff their
/// signatures are equal.
std::string comb_signature(const Drawing& d);

}  // namespace tar
