#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "percolattice/engine.hpp"
#include "percolattice/lattice.hpp"
#include "percolattice/montecarlo.hpp"

using namespace percolattice;

TEST_CASE("wilson interval basics") {
    auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo == doctest::Approx(0.404).epsilon(0.01));
    CHECK(hi == doctest::Approx(0.596).epsilon(0.01));
    auto [l0, h0] = wilson_interval(0, 100);
    CHECK(l0 == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(h0 < 0.05);
    auto [l1, h1] = wilson_interval(100, 100);
    CHECK(h1 == 1.0);
    CHECK(l1 > 0.95);
}

TEST_CASE("k=1 on a connected torus percolates whenever the seed is nonempty") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 10, 10, Topology::kTorus);
    Estimate e = monte_carlo_estimate(p, 0.5, 1, 200, 1234);
    // 1 - (1-p)^100 is indistinguishable from 1 at this scale
    CHECK(e.frequency == 1.0);
    CHECK(e.trials == 200);
    CHECK(e.percolating == 200);
}

TEST_CASE("k above max degree never percolates at moderate p") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 10, 10, Topology::kTorus);
    Estimate e = monte_carlo_estimate(p, 0.5, 5, 200, 99);
    CHECK(e.frequency == 0.0);
}

TEST_CASE("estimates are deterministic and job-count independent") {
    TilingPatch p = build_archimedean(Family::kHex666, 12, 12, Topology::kTorus);
    Estimate a = monte_carlo_estimate(p, 0.4, 2, 120, 2024, 1);
    Estimate b = monte_carlo_estimate(p, 0.4, 2, 120, 2024, 4);
    CHECK(a.percolating == b.percolating);
    CHECK(a.frequency == b.frequency);
    CHECK(a.ci_low == b.ci_low);
    // the Wilson interval contains the observed frequency
    CHECK(a.ci_low <= a.frequency);
    CHECK(a.frequency <= a.ci_high);
}

TEST_CASE("frequency is monotone in k and in p under the coupled seeds") {
    TilingPatch p = build_archimedean(Family::kTrihex3636, 8, 8, Topology::kTorus);
    const uint64_t seed = 7;
    double prev = 1.0;
    for (int k = 1; k <= 4; ++k) {
        Estimate e = monte_carlo_estimate(p, 0.45, k, 80, seed);
        CHECK(e.frequency <= prev);
        prev = e.frequency;
    }
    double prev_p = 0.0;
    for (double pr : {0.15, 0.35, 0.55, 0.75}) {
        Estimate e = monte_carlo_estimate(p, pr, 2, 80, seed);
        CHECK(e.frequency >= prev_p);
        prev_p = e.frequency;
    }
}

TEST_CASE("threshold estimation recovers k=2 for the square lattice") {
    TilingPatch small = build_archimedean(Family::kSquare4444, 14, 14, Topology::kTorus);
    TilingPatch large = build_archimedean(Family::kSquare4444, 24, 24, Topology::kTorus);
    ThresholdResult r =
        estimate_threshold({&small, &large}, 0.5, 60, 0x5EED, 1);
    CHECK(r.k_hat == 2);
    CHECK_FALSE(r.inconclusive);
    CHECK(r.evidence.size() >= 4);
    // the evidence table carries both extents for every k tried
    for (const auto& row : r.evidence) CHECK(row.estimate.trials == 60);
}

TEST_CASE("threshold estimation recovers k=3 for the truncated square lattice") {
    TilingPatch small = build_archimedean(Family::kTruncSquare488, 14, 14, Topology::kTorus);
    TilingPatch large = build_archimedean(Family::kTruncSquare488, 26, 26, Topology::kTorus);
    ThresholdResult r = estimate_threshold({&small, &large}, 0.5, 60, 0x5EED, 1);
    CHECK(r.k_hat == 3);
}

TEST_CASE("threshold estimation recovers k=1 for 3.4.6.4 at small p") {
    // At p = 0.1 the 13-face flower blocks k=2 on desk-sized patches, making
    // the infinite-plane answer visible at this extent.
    TilingPatch small = build_archimedean(Family::kRhombi3464, 18, 18, Topology::kTorus);
    TilingPatch large = build_archimedean(Family::kRhombi3464, 30, 30, Topology::kTorus);
    ThresholdResult r = estimate_threshold({&small, &large}, 0.1, 60, 0x5EED, 1);
    CHECK(r.k_hat == 1);
}
