#pragma once

#include <optional>
#include <string>
#include <vector>

#include "percolattice/rings.hpp"

namespace percolattice {

struct GrowthWitness {
    std::string side;
    int seed_face = -1;
    std::vector<int> unfilled;  // sample of faces that stayed healthy
    std::string stage;          // "side-fill", "ring-completion", "corner-closure"
};

struct GrowthCertificate {
    std::string family;
    int k = 0;
    int t = 0;
    int checked_seed_positions = 0;
    bool corner_closure_verified = false;
    bool pass = false;
    std::optional<GrowthWitness> witness;
};

// Decomposed check mirroring the growth proofs:
//  (i)   every seedable face of every side fills its side from core(t),
//  (ii)  one seedable face per side completes core(t+1), corners included,
//  (ii') corners close from core(t) plus all side faces.
GrowthCertificate certify_growth_window(const RingWindow& window, int k);

GrowthCertificate certify_growth(Family f, int k, int t);
GrowthCertificate certify_growth_strips(const StripSequence& seq, int k, int t);

}  // namespace percolattice
