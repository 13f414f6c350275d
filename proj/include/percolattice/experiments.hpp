#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

struct InflationReport {
    int trials = 0;
    int hex_percolated = 0;
    int consistent = 0;  // hex image percolates => source percolates
    bool all_consistent = false;
};

// Coupled trials on a (3.12.12) patch at k = 3: seeds the source patch,
// restricts the seed to 12-gons, maps it through inflation, and checks that
// hex-image percolation implies source percolation under the superset seed.
InflationReport inflation_consistency_check(const TilingPatch& patch, double p,
                                            int trials, uint64_t master_seed);

struct ModifiedHexRow {
    double p;
    std::string extent;
    int faces;
    double modified_frequency;
    double control_frequency;
};

// Percolation frequency versus p at k = 2 on a (6.6.6) torus with the given
// number of substituted hexagons, against the unmodified control.
std::vector<ModifiedHexRow> modified_hex_experiment(const std::vector<int>& extents,
                                                    int substitutions,
                                                    const std::vector<double>& p_grid,
                                                    int trials, uint64_t master_seed,
                                                    int jobs = 1);

}  // namespace percolattice
