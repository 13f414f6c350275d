#pragma once

#include <map>
#include <string>
#include <vector>

#include "percolattice/lattice.hpp"
#include "percolattice/patch.hpp"

namespace percolattice {

// A small connected face pattern: face sizes plus internal adjacency.
struct Configuration {
    std::string name;
    std::vector<int> sides;
    std::vector<std::vector<int>> adjacency;  // per-face neighbor lists
    int blocking_k = 0;                       // every face has <= k outside
    std::string home;                         // lattice the tests embed it in

    int size() const { return static_cast<int>(sides.size()); }
    bool adjacent(int a, int b) const;
    bool connected() const;
};

struct BlockingReport {
    bool ok = false;
    int max_external = 0;
};

// Every face of `face_set` has at most k neighbors outside the set. Faces
// with clipped neighborhoods (exterior edges on an open window) are rejected.
BlockingReport verify_blocking(const TilingPatch& patch, const std::vector<int>& face_set,
                               int k);

// Backtracking search for appearances of `config` in `patch`: maps preserving
// face length and pairwise adjacency/non-adjacency, deduplicated by image
// set. Matched faces must have full neighborhoods.
std::vector<std::vector<int>> find_copies(const TilingPatch& patch,
                                          const Configuration& config, int limit);

// One concrete embedding of a catalog configuration: the home patch plus the
// face ids forming the configuration.
struct ConfigInstance {
    Configuration config;
    TilingPatch patch;
    std::vector<int> face_ids;
};

// The named catalog: the eight upper-bound configurations per lattice, the
// three mixed-strip witnesses, the 31-face configuration, and the strip
// witnesses (a)-(e).
std::map<std::string, Configuration> catalog_configurations();

// Catalog entries embedded in their home patches (torus where the home is a
// lattice; a bespoke open window for the 31-face configuration).
std::vector<ConfigInstance> catalog_instances();

// Induced sub-configuration on `face_ids` of a patch.
Configuration config_from_patch(const TilingPatch& patch, const std::vector<int>& face_ids,
                                const std::string& name, int blocking_k,
                                const std::string& home);

}  // namespace percolattice
