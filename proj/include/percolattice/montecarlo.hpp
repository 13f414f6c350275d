#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

struct Estimate {
    double p = 0;
    int k = 0;
    std::string extent;
    int trials = 0;
    int percolating = 0;
    double frequency = 0;
    double ci_low = 0, ci_high = 0;  // Wilson, 95%
    uint64_t master_seed = 0;
};

// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(int successes, int trials);

uint64_t trial_seed(uint64_t master_seed, int trial);

// `jobs` <= 0 selects hardware concurrency. Deterministic for fixed inputs
// regardless of jobs.
Estimate monte_carlo_estimate(const TilingPatch& patch, double p, int k, int trials,
                              uint64_t master_seed, int jobs = 1);

struct ThresholdRow {
    int k;
    std::string extent;
    int faces;
    Estimate estimate;
};

struct ThresholdResult {
    int k_hat = 0;
    bool inconclusive = false;
    std::vector<ThresholdRow> evidence;
};

// Estimates percolation frequency for k = 1, 2, ... on each patch (ordered by
// increasing size); k_hat is the largest k whose frequency at the largest
// extent is >= 1/2.
ThresholdResult estimate_threshold(const std::vector<const TilingPatch*>& patches,
                                   double p, int trials, uint64_t master_seed,
                                   int jobs = 1, int max_k = 16);

}  // namespace percolattice
