#pragma once

#include "percolattice/rational.hpp"
#include "percolattice/strips.hpp"

namespace percolattice {

enum class BoundFamily { kTruncSquare488, kStrips };

// Probability that some ring at index >= t misses the infected face its side
// needs: 4(1-p)^{2t+1} / (1-(1-p)^2) for (4.8.8), 6(1-p)^t / p for strips.
Rational tail_bound(BoundFamily family, const Rational& p, int t);

struct SuccessBound {
    Rational value;   // clamped below at zero
    int minimal_t;    // least t making the bound positive
    int exponent;     // octagon count of D_t, or |A_t|
};

// p^(octagons of D_t) * (1 - tail) for (4.8.8); p^|A_t| * (1 - tail) for a
// strip sequence, with |A_t| taken from the generated ring decomposition.
SuccessBound success_lower_bound_488(const Rational& p, int t);
SuccessBound success_lower_bound_strips(const StripSequence& seq, const Rational& p, int t);

}  // namespace percolattice
