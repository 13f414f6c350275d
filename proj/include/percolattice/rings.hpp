#pragma once

#include <optional>
#include <string>
#include <vector>

#include "percolattice/lattice.hpp"
#include "percolattice/patch.hpp"
#include "percolattice/strips.hpp"

namespace percolattice {

struct SideSpec {
    std::string label;
    std::vector<int> faces;
    std::vector<int> seedable;
};

struct RingSpec {
    std::string family;
    int t = 0;
    std::vector<int> core;                 // D_t (or A_t) face ids
    std::vector<SideSpec> sides;           // ring sides
    std::vector<std::vector<int>> corners; // ring corner sets
    // sides + corners partition core(t+1) \ core(t)
};

// Open window patch holding exactly core(t+1), with the ring partition of
// core(t+1) \ core(t).
struct RingWindow {
    TilingPatch patch;
    RingSpec ring;
};

// Supported families: (4.8.8), (6.6.6), (3.6.3.6), (4.6.12).
RingWindow ring_decomposition(Family f, int t);

RingWindow strip_ring_decomposition(const StripSequence& seq, int t);

// Window patch of core(radius) alone (no ring partition), for replay and
// counting tests.
TilingPatch build_window(Family f, int radius);

}  // namespace percolattice
