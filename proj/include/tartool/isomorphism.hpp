#pragma once

#include "tartool/graph.hpp"

namespace tar {

/// Backtracking isomorphism test with degree pruning; meant for the
/// catalog-sized graphs (n <= 12 or so).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace tar
