#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace percolattice {

enum class Topology { kTorus, kOpen };

std::string topology_name(Topology t);
Topology parse_topology(const std::string& s);

struct Face {
    int sides = 0;                    // polygon side count
    std::vector<int32_t> neighbors;   // sorted, unique
    int exterior_edges = 0;           // boundary segments with no in-patch face
    double cx = 0.0, cy = 0.0;        // rendering only
    double orient = 0.0;              // degrees, rendering only
};

// Cyclic (counterclockwise) list of the faces meeting at one interior vertex.
struct PatchVertex {
    std::vector<int32_t> faces;
};

struct TilingPatch {
    std::string spec_name;
    Topology topology = Topology::kOpen;
    std::string extent;
    std::vector<Face> faces;
    std::vector<PatchVertex> vertices;  // interior vertices only; may be empty
    // true when a face's stored `sides` equals its boundary-segment count;
    // offset strip tilings break this (T-junctions split edges).
    bool edge_to_edge = true;

    int face_count() const { return static_cast<int>(faces.size()); }
    bool adjacent(int a, int b) const;
    bool clipped(int f) const { return faces[f].exterior_edges > 0; }

    void add_edge(int a, int b);
    void sort_neighbors();
};

// Structural checks: symmetric simple adjacency, the degree equation, and
// vertex-list consistency (consecutive faces share an edge, incidence counts,
// angle sums). Throws std::runtime_error with a description on failure.
void validate_patch(const TilingPatch& patch);

// (sides, sorted neighbor sides) fingerprint of one face.
std::vector<int> local_signature(const TilingPatch& patch, int face);

// Multiset of local signatures over all faces (for extent-independence and
// adjacency-isomorphism checks).
std::map<std::vector<int>, int> signature_census(const TilingPatch& patch);

// Neighbors of `face` in cyclic order, reconstructed from vertex data.
// Requires full vertex coverage around the face (torus patches).
std::vector<int> cyclic_neighbor_order(const TilingPatch& patch, int face);

// Count of interior vertices by canonical vertex-type name ("3.4.6.4", ...).
std::map<std::string, int> vertex_census(const TilingPatch& patch);

}  // namespace percolattice
