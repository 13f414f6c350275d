#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

constexpr int32_t kNeverInfected = std::numeric_limits<int32_t>::max();

struct InfectionState {
    std::vector<uint8_t> infected;
    std::vector<int32_t> infected_neighbor_count;
    std::vector<int32_t> round;  // 0 = seeded, kNeverInfected = healthy
    bool at_fixpoint = false;
    uint64_t rng_seed = 0;

    int infected_count() const;
};

struct TrialOutcome {
    bool percolated = false;
    int final_infected_count = 0;
    int rounds_elapsed = 0;
    uint64_t seed = 0;
};

// Per-face uniform draw in [0,1), keyed by (seed, face). Identical inputs
// reproduce identical values, and thresholding the same draw couples seed
// sets monotonically across p.
double face_uniform(uint64_t seed, int32_t face);

InfectionState seed_random(const TilingPatch& patch, double p, uint64_t rng_seed);
InfectionState seed_explicit(const TilingPatch& patch, const std::vector<int>& faces);

// Runs the k-bootstrap dynamics to the least fixpoint with synchronous
// rounds. Linear in faces plus adjacency.
TrialOutcome run_bootstrap(const TilingPatch& patch, InfectionState& state, int k);

bool percolates(const TilingPatch& patch, const InfectionState& state);

// Flattened adjacency for hot loops; reused across Monte Carlo trials.
struct AdjacencyCsr {
    std::vector<int32_t> offsets;
    std::vector<int32_t> targets;
    explicit AdjacencyCsr(const TilingPatch& patch);
};

TrialOutcome run_bootstrap_csr(const AdjacencyCsr& adj, InfectionState& state, int k);

}  // namespace percolattice
