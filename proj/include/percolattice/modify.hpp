#pragma once

#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

// Replaces each target hexagon of a (6.6.6) patch with six triangles around a
// new interior vertex of type 3.3.3.3.3.3. Targets must be pairwise
// non-adjacent hexagons. Face ids of non-target faces are preserved; the six
// triangles of the i-th target are appended in order.
TilingPatch substitute_hexagons(const TilingPatch& patch, const std::vector<int>& targets);

}  // namespace percolattice
