#include "percolattice/modify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace percolattice {

TilingPatch substitute_hexagons(const TilingPatch& patch, const std::vector<int>& targets) {
    if (patch.spec_name.rfind("6.6.6", 0) != 0)
        throw std::invalid_argument("substitution requires a (6.6.6) patch");
    std::set<int> target_set(targets.begin(), targets.end());
    for (int t : targets) {
        if (t < 0 || t >= patch.face_count())
            throw std::invalid_argument("target out of range");
        if (patch.faces[t].sides != 6)
            throw std::invalid_argument("target is not a hexagon");
        for (int g : patch.faces[t].neighbors)
            if (target_set.count(g))
                throw std::invalid_argument("adjacent targets are not supported");
        if (patch.clipped(t))
            throw std::invalid_argument("target has a clipped neighborhood");
    }

    TilingPatch out = patch;
    if (!targets.empty()) out.spec_name = "6.6.6/substituted";
    std::map<int, std::array<int, 6>> new_tris;          // target -> 6 triangle ids
    std::map<int, std::vector<int>> ring_order;          // target -> cyclic neighbors

    for (int t : targets) {
        std::vector<int> ring = cyclic_neighbor_order(patch, t);
        ring_order[t] = ring;
        std::array<int, 6> tris{};
        for (int i = 0; i < 6; ++i) {
            Face f;
            f.sides = 3;
            int nb = ring[i];
            // triangle sits on the edge shared with ring[i]
            f.cx = 0.5 * (patch.faces[t].cx + 0.5 * (patch.faces[t].cx + patch.faces[nb].cx));
            f.cy = 0.5 * (patch.faces[t].cy + 0.5 * (patch.faces[t].cy + patch.faces[nb].cy));
            double ang = std::atan2(patch.faces[nb].cy - patch.faces[t].cy,
                                    patch.faces[nb].cx - patch.faces[t].cx);
            f.orient = ang * 180.0 / 3.14159265358979323846 + 180.0;
            tris[i] = out.face_count();
            out.faces.push_back(f);
        }
        new_tris[t] = tris;
    }

    // Rewrite adjacency: each triangle touches its two siblings and the former
    // hexagon neighbor across its base edge.
    for (int t : targets) {
        const auto& ring = ring_order[t];
        const auto& tris = new_tris[t];
        for (int i = 0; i < 6; ++i) {
            int nb = ring[i];
            auto& nb_list = out.faces[nb].neighbors;
            std::replace(nb_list.begin(), nb_list.end(), t, tris[i]);
            out.faces[tris[i]].neighbors.push_back(nb);
            out.faces[tris[i]].neighbors.push_back(tris[(i + 1) % 6]);
            out.faces[tris[i]].neighbors.push_back(tris[(i + 5) % 6]);
        }
        out.faces[t].neighbors.clear();
    }

    // Vertex data: the new center vertex per target, and the targets' old
    // vertices gain the two flanking triangles in place of the hexagon.
    for (int t : targets) {
        const auto& tris = new_tris[t];
        PatchVertex center;
        for (int i = 0; i < 6; ++i) center.faces.push_back(tris[i]);
        out.vertices.push_back(center);
    }
    for (auto& v : out.vertices) {
        std::vector<int32_t> updated;
        const int m = static_cast<int>(v.faces.size());
        for (int k = 0; k < m; ++k) {
            int f = v.faces[k];
            if (!target_set.count(f)) {
                updated.push_back(f);
                continue;
            }
            // previous and next faces around this vertex are two consecutive
            // ring neighbors of the substituted hexagon
            int prev = v.faces[(k + m - 1) % m];
            int next = v.faces[(k + 1) % m];
            const auto& ring = ring_order[f];
            const auto& tris = new_tris[f];
            int pi = -1, ni = -1;
            for (int i = 0; i < 6; ++i) {
                if (ring[i] == prev) pi = i;
                if (ring[i] == next) ni = i;
            }
            if (pi < 0 || ni < 0)
                throw std::logic_error("vertex ring mismatch during substitution");
            // The triangle on edge (f, prev) and the one on edge (f, next),
            // ordered so the list stays counterclockwise.
            updated.push_back(tris[pi]);
            updated.push_back(tris[ni]);
        }
        v.faces = std::move(updated);
    }

    // Compact away the removed hexagons.
    std::vector<int> remap(out.face_count(), -1);
    int next_id = 0;
    for (int i = 0; i < out.face_count(); ++i)
        if (!target_set.count(i)) remap[i] = next_id++;
    TilingPatch compact;
    compact.spec_name = out.spec_name;
    compact.topology = out.topology;
    compact.extent = out.extent;
    compact.edge_to_edge = out.edge_to_edge;
    compact.faces.reserve(next_id);
    for (int i = 0; i < out.face_count(); ++i) {
        if (remap[i] < 0) continue;
        Face f = out.faces[i];
        for (auto& g : f.neighbors) g = remap[g];
        std::sort(f.neighbors.begin(), f.neighbors.end());
        compact.faces.push_back(std::move(f));
    }
    for (auto& v : out.vertices) {
        PatchVertex nv;
        for (int f : v.faces) nv.faces.push_back(remap[f]);
        compact.vertices.push_back(std::move(nv));
    }
    return compact;
}

}  // namespace percolattice
