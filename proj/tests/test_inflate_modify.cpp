#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "percolattice/engine.hpp"
#include "percolattice/experiments.hpp"
#include "percolattice/inflate.hpp"
#include "percolattice/lattice.hpp"
#include "percolattice/modify.hpp"

using namespace percolattice;

TEST_CASE("inflation turns a 3.12.12 torus into a 6-regular image") {
    TilingPatch p = build_archimedean(Family::kTruncHex31212, 4, 4, Topology::kTorus);
    int twelve_gons = 0;
    for (const Face& f : p.faces) twelve_gons += f.sides == 12;
    CHECK(twelve_gons == 16);  // one per cell, 2n triangles alongside
    CHECK(p.face_count() == 48);

    InflationResult r = inflate_3_12_12(p);
    CHECK(r.hex_patch.face_count() == 16);
    for (const Face& f : r.hex_patch.faces) {
        CHECK(f.sides == 6);
        CHECK(f.neighbors.size() == 6);
    }

    // adjacency preservation, audited exhaustively over all 12-gon pairs
    for (int a = 0; a < p.face_count(); ++a) {
        if (r.image_of[a] < 0) continue;
        for (int b = 0; b < p.face_count(); ++b) {
            if (b == a || r.image_of[b] < 0) continue;
            CHECK(p.adjacent(a, b) ==
                  r.hex_patch.adjacent(r.image_of[a], r.image_of[b]));
        }
    }

    // every triangle touches three pairwise-adjacent 12-gons
    for (int i = 0; i < p.face_count(); ++i) {
        if (p.faces[i].sides != 3) continue;
        const auto& nb = p.faces[i].neighbors;
        REQUIRE(nb.size() == 3);
        for (int g : nb) CHECK(p.faces[g].sides == 12);
        CHECK(p.adjacent(nb[0], nb[1]));
        CHECK(p.adjacent(nb[1], nb[2]));
        CHECK(p.adjacent(nb[0], nb[2]));
    }

    CHECK_THROWS(inflate_3_12_12(build_archimedean(Family::kHex666, 4, 4, Topology::kTorus)));
}

TEST_CASE("coupled inflation trials: hex-image percolation implies source percolation") {
    TilingPatch p = build_archimedean(Family::kTruncHex31212, 5, 5, Topology::kTorus);
    InflationReport rep = inflation_consistency_check(p, 0.5, 100, 77);
    CHECK(rep.trials == 100);
    CHECK(rep.hex_percolated > 0);
    CHECK(rep.all_consistent);
    CHECK(rep.consistent == rep.hex_percolated);
}

TEST_CASE("substitution replaces a hexagon with a six-triangle flower") {
    TilingPatch p = build_archimedean(Family::kHex666, 5, 5, Topology::kTorus);
    const int n = p.face_count();
    TilingPatch q = substitute_hexagons(p, {7});
    CHECK(q.face_count() == n - 1 + 6);
    CHECK(q.spec_name == "6.6.6/substituted");

    int tris = 0;
    for (const Face& f : q.faces)
        if (f.sides == 3) {
            ++tris;
            CHECK(f.neighbors.size() == 3);
            int sibling = 0, hexes = 0;
            for (int g : f.neighbors) (q.faces[g].sides == 3 ? sibling : hexes)++;
            CHECK(sibling == 2);
            CHECK(hexes == 1);
        }
    CHECK(tris == 6);

    // census gains exactly one 3.3.3.3.3.3 vertex; hexagon corners around the
    // target become 3.3.6.6
    auto census = vertex_census(q);
    CHECK(census.at("3.3.3.3.3.3") == 1);
    CHECK(census.at("3.3.6.6") == 6);
    CHECK(census.at("6.6.6") == 25 * 2 - 6);
    CHECK_NOTHROW(validate_patch(q));
}

TEST_CASE("substitution edge cases") {
    TilingPatch p = build_archimedean(Family::kHex666, 5, 5, Topology::kTorus);
    CHECK(substitute_hexagons(p, {}).face_count() == p.face_count());
    // adjacent targets rejected
    int nb = p.faces[7].neighbors[0];
    CHECK_THROWS(substitute_hexagons(p, {7, nb}));
    CHECK_THROWS(substitute_hexagons(p, {p.face_count() + 1}));
    TilingPatch sq = build_archimedean(Family::kSquare4444, 5, 5, Topology::kTorus);
    CHECK_THROWS(substitute_hexagons(sq, {0}));
}

TEST_CASE("substitution preserves connectivity: k=1 still floods everything") {
    TilingPatch p = build_archimedean(Family::kHex666, 5, 5, Topology::kTorus);
    TilingPatch q = substitute_hexagons(p, {12});
    InfectionState st = seed_explicit(q, {0});
    TrialOutcome out = run_bootstrap(q, st, 1);
    CHECK(out.percolated);
}

TEST_CASE("modified-hex frequencies track the local counting oracle") {
    // With one substitution at k=2, failure is the event that none of the
    // six new triangles is seeded, so frequency ~ 1 - (1-p)^6. At p=0.3 that
    // sits strictly inside (0.05,0.95) across extents while the control
    // stays at 1.
    auto rows = modified_hex_experiment({24, 40}, 1, {0.3}, 300, 4242, 0);
    REQUIRE(rows.size() == 2);
    const double oracle = 1.0 - std::pow(0.7, 6);
    for (const auto& r : rows) {
        CHECK(r.modified_frequency > 0.05);
        CHECK(r.modified_frequency < 0.95);
        CHECK(r.modified_frequency == doctest::Approx(oracle).epsilon(0.08));
        CHECK(r.control_frequency >= 0.95);
    }
}

TEST_CASE("blocked triangle ring: no seed among the six means no percolation at k=2") {
    TilingPatch p = build_archimedean(Family::kHex666, 6, 6, Topology::kTorus);
    TilingPatch q = substitute_hexagons(p, {14});
    // find the six triangles
    std::vector<int> ring;
    for (int i = 0; i < q.face_count(); ++i)
        if (q.faces[i].sides == 3) ring.push_back(i);
    REQUIRE(ring.size() == 6);
    std::set<int> ring_set(ring.begin(), ring.end());
    std::vector<int> everything_else;
    for (int i = 0; i < q.face_count(); ++i)
        if (!ring_set.count(i)) everything_else.push_back(i);
    InfectionState st = seed_explicit(q, everything_else);
    TrialOutcome out = run_bootstrap(q, st, 2);
    CHECK_FALSE(out.percolated);  // the ring is a blocking configuration
    for (int f : ring) CHECK_FALSE(st.infected[f]);

    // one seeded triangle unblocks it
    everything_else.push_back(ring[0]);
    InfectionState st2 = seed_explicit(q, everything_else);
    CHECK(run_bootstrap(q, st2, 2).percolated);
}
