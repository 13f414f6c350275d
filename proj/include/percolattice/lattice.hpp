#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

enum class Family {
    kTri333333,
    kSnubHex33336,
    kElongated33344,
    kSnubSquare33434,
    kRhombi3464,
    kTrihex3636,
    kSquare4444,
    kTruncHex31212,
    kTruncTrihex4612,
    kTruncSquare488,
    kHex666,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
const std::vector<Family>& all_families();

// Percolation threshold of each lattice: 1 for the five low lattices,
// 2 for (3.6.3.6) and (4.4.4.4), 3 for (3.12.12), (4.6.12), (4.8.8) and
// (6.6.6).
int lattice_threshold(Family f);

// Reference to a face slot in a (possibly neighboring) unit cell.
struct SlotRef {
    int slot;
    int dx, dy;
};

struct FaceSlot {
    std::string label;
    int sides;
    double cx, cy;    // offset within the cell, rendering only
    double orient;    // degrees, rendering only
};

struct EdgeRule {
    int slot_a;       // face in cell (x, y)
    SlotRef b;        // face in cell (x+dx, y+dy)
};

struct VertexTemplate {
    std::vector<SlotRef> ring;  // counterclockwise
};

struct LatticeTemplate {
    Family family;
    double ux, uy, vx, vy;  // cell translation vectors
    std::vector<FaceSlot> slots;
    std::vector<EdgeRule> edges;
    std::vector<VertexTemplate> vertices;

    int slot_index(const std::string& label) const;
};

const LatticeTemplate& lattice_template(Family f);

struct FaceKey {
    int slot, x, y;
    bool operator<(const FaceKey& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return slot < o.slot;
    }
    bool operator==(const FaceKey& o) const {
        return slot == o.slot && x == o.x && y == o.y;
    }
};

// Torus or open rectangle of cells_x x cells_y unit cells.
TilingPatch build_archimedean(Family f, int cells_x, int cells_y, Topology topology);

// Open patch over cells in [x0,x1] x [y0,y1] keeping only faces accepted by
// `keep`. Records the face id of every kept key in `ids` when non-null.
TilingPatch build_selection(Family f, int x0, int x1, int y0, int y1,
                            const std::function<bool(const FaceKey&)>& keep,
                            std::map<FaceKey, int>* ids);

// Smallest torus extent with simple adjacency for every template.
constexpr int kMinTorusCells = 3;

}  // namespace percolattice
