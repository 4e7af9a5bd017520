#pragma once

#include <cstdint>

#include "tartool/drawing.hpp"

namespace tar {

/// The tight family: k nested 8-gon layers, radial connectors, two chords in
/// the innermost layer. n = 8k, m = 16k - 6, exact tar above 60 degrees, and
/// plane as generated.
Drawing layered_8gon(int k);

/// Regular polygon witness on exact unit-circle points. Exact for 3, 4, 6
/// and 12 sides (the sqrt(3) lattice covers them); rational circle points
/// within ~1e-6 of the ideal angles otherwise. Threshold classifications are
/// checked against the ideal interior angle at generation time.
Drawing regular_polygon(int sides);

/// Deterministic random drawing: integer coordinates in
/// [-coordinate_range, coordinate_range], edges sampled without replacement,
/// positions resampled until valid.
Drawing random_drawing(int n, int m, std::uint64_t seed, int coordinate_range);

}  // namespace tar
