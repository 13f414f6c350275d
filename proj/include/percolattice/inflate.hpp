#pragma once

#include <utility>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

struct InflationResult {
    TilingPatch hex_patch;                  // (6.6.6)-structured image
    std::vector<int> twelve_gon_of;         // hex face -> source 12-gon id
    std::vector<int> image_of;              // source face -> hex face (-1 for triangles)
};

// Inflates the 12-gons of a (3.12.12) patch to hexagons: output faces biject
// with the 12-gons, adjacent exactly when the 12-gons are adjacent.
InflationResult inflate_3_12_12(const TilingPatch& patch);

}  // namespace percolattice
