#include "percolattice/inflate.hpp"

#include <stdexcept>

namespace percolattice {

InflationResult inflate_3_12_12(const TilingPatch& patch) {
    if (patch.spec_name != "3.12.12")
        throw std::invalid_argument("inflation requires a (3.12.12) patch");

    InflationResult r;
    r.image_of.assign(patch.faces.size(), -1);
    for (int i = 0; i < patch.face_count(); ++i) {
        if (patch.faces[i].sides != 12) continue;
        r.image_of[i] = r.hex_patch.face_count();
        r.twelve_gon_of.push_back(i);
        Face f;
        f.sides = 6;
        f.cx = patch.faces[i].cx;
        f.cy = patch.faces[i].cy;
        f.orient = 0;
        r.hex_patch.faces.push_back(f);
    }
    r.hex_patch.spec_name = "6.6.6/inflated";
    r.hex_patch.topology = patch.topology;
    r.hex_patch.extent = patch.extent;

    for (int i = 0; i < patch.face_count(); ++i) {
        if (r.image_of[i] < 0) continue;
        for (int g : patch.faces[i].neighbors)
            if (r.image_of[g] > r.image_of[i])
                r.hex_patch.add_edge(r.image_of[i], r.image_of[g]);
    }
    r.hex_patch.sort_neighbors();
    for (Face& f : r.hex_patch.faces)
        f.exterior_edges = 6 - static_cast<int>(f.neighbors.size());
    if (r.hex_patch.topology == Topology::kTorus)
        for (Face& f : r.hex_patch.faces)
            if (f.exterior_edges != 0)
                throw std::runtime_error("torus inflation image is not 6-regular");
    return r;
}

}  // namespace percolattice
