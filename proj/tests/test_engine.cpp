#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "percolattice/engine.hpp"
#include "percolattice/lattice.hpp"

using namespace percolattice;

namespace {

// Arbitrary connected graphs exercise the engine; sides only need to satisfy
// the patch minimum.
TilingPatch random_patch(std::mt19937_64& rng, int max_faces) {
    std::uniform_int_distribution<int> nd(2, max_faces);
    int n = nd(rng);
    TilingPatch p;
    p.spec_name = "random";
    p.topology = Topology::kOpen;
    p.edge_to_edge = false;
    p.faces.resize(n);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        p.add_edge(i, pick(rng));
    }
    std::uniform_int_distribution<int> extra(0, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int extras = extra(rng);
    for (int e = 0; e < extras; ++e) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        p.sort_neighbors();
        if (!p.adjacent(a, b)) p.add_edge(a, b);
    }
    p.sort_neighbors();
    for (auto& f : p.faces) f.sides = std::max<int>(3, static_cast<int>(f.neighbors.size()));
    return p;
}

// Reference closure: recompute neighbor counts from scratch every sweep.
std::vector<uint8_t> naive_closure(const TilingPatch& p, std::vector<uint8_t> infected,
                                   int k) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < p.face_count(); ++i) {
            if (infected[i]) continue;
            int c = 0;
            for (int g : p.faces[i].neighbors) c += infected[g];
            if (c >= k) {
                infected[i] = 1;
                changed = true;
            }
        }
    }
    return infected;
}

// Asynchronous schedule: process faces one at a time in random order.
std::vector<uint8_t> async_closure(const TilingPatch& p, std::vector<uint8_t> infected,
                                   int k, std::mt19937_64& rng) {
    std::vector<int> order(p.face_count());
    for (int i = 0; i < p.face_count(); ++i) order[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            if (infected[i]) continue;
            int c = 0;
            for (int g : p.faces[i].neighbors) c += infected[g];
            if (c >= k) {
                infected[i] = 1;
                changed = true;
            }
        }
    }
    return infected;
}

}  // namespace

TEST_CASE("a bare infected row is already a fixpoint at k=2") {
    // Every face above a full row has exactly one infected neighbor, so the
    // dynamics stop immediately; growth needs a seed in the cross direction.
    TilingPatch p = build_archimedean(Family::kSquare4444, 5, 5, Topology::kTorus);
    std::vector<int> row;
    for (int x = 0; x < 5; ++x) row.push_back(x);
    InfectionState st = seed_explicit(p, row);
    TrialOutcome out = run_bootstrap(p, st, 2);
    CHECK_FALSE(out.percolated);
    CHECK(out.final_infected_count == 5);
    CHECK(out.rounds_elapsed == 0);
}

TEST_CASE("row plus column on the 5x5 square torus percolates at k=2") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 5, 5, Topology::kTorus);
    std::vector<int> seeds;
    for (int x = 0; x < 5; ++x) seeds.push_back(x);          // row y = 0
    for (int y = 1; y < 5; ++y) seeds.push_back(y * 5 + 0);  // column x = 0
    InfectionState st = seed_explicit(p, seeds);
    TrialOutcome out = run_bootstrap(p, st, 2);
    CHECK(out.percolated);
    CHECK(percolates(p, st));
    // hand simulation: round(x,y) = d(x) + d(y) - 1 with torus distance d
    for (int y = 1; y < 5; ++y)
        for (int x = 1; x < 5; ++x)
            CHECK(st.round[y * 5 + x] == std::min(x, 5 - x) + std::min(y, 5 - y) - 1);
    CHECK(out.rounds_elapsed == 3);
}

TEST_CASE("k above max degree freezes the seed") {
    TilingPatch p = build_archimedean(Family::kHex666, 4, 4, Topology::kTorus);
    InfectionState st = seed_explicit(p, {0, 5, 7});
    TrialOutcome out = run_bootstrap(p, st, 7);
    CHECK(out.final_infected_count == 3);
    CHECK_FALSE(out.percolated);
    CHECK(out.rounds_elapsed == 0);
}

TEST_CASE("k=1 closure equals connectivity") {
    TilingPatch p = build_archimedean(Family::kTrihex3636, 4, 4, Topology::kTorus);
    InfectionState st = seed_explicit(p, {3});
    TrialOutcome out = run_bootstrap(p, st, 1);
    CHECK(out.percolated);  // connected patch

    InfectionState empty = seed_explicit(p, {});
    TrialOutcome none = run_bootstrap(p, empty, 1);
    CHECK_FALSE(none.percolated);
    CHECK(none.final_infected_count == 0);
}

TEST_CASE("explicit all-face seed percolates in zero rounds") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 4, 4, Topology::kTorus);
    std::vector<int> all(p.face_count());
    for (int i = 0; i < p.face_count(); ++i) all[i] = i;
    InfectionState st = seed_explicit(p, all);
    TrialOutcome out = run_bootstrap(p, st, 2);
    CHECK(out.percolated);
    CHECK(out.rounds_elapsed == 0);
    for (int r : st.round) CHECK(r == 0);
}

TEST_CASE("percolates() rejects non-fixpoint states") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 4, 4, Topology::kTorus);
    InfectionState st = seed_explicit(p, {0});
    CHECK_THROWS(percolates(p, st));
}

TEST_CASE("seeding determinism and p-coupling") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 10, 10, Topology::kTorus);
    InfectionState a = seed_random(p, 0.3, 42);
    InfectionState b = seed_random(p, 0.3, 42);
    CHECK(a.infected == b.infected);

    InfectionState lo = seed_random(p, 0.3, 42);
    InfectionState hi = seed_random(p, 0.7, 42);
    for (int i = 0; i < p.face_count(); ++i)
        if (lo.infected[i]) CHECK(hi.infected[i]);

    CHECK_THROWS(seed_random(p, 0.0, 1));
    CHECK_THROWS(seed_random(p, 1.0, 1));
}

TEST_CASE("binomial concentration of seed counts") {
    TilingPatch p = build_archimedean(Family::kSquare4444, 100, 100, Topology::kTorus);
    const double pr = 0.5;
    const int n = p.face_count();
    const double sigma = std::sqrt(n * pr * (1 - pr));
    int within = 0;
    for (uint64_t s = 0; s < 100; ++s) {
        InfectionState st = seed_random(p, pr, s * 977 + 5);
        if (std::abs(st.infected_count() - n * pr) <= 3 * sigma) ++within;
    }
    CHECK(within >= 99);
}

TEST_CASE("engine properties on random patches") {
    std::mt19937_64 rng(20260808);
    for (int rep = 0; rep < 200; ++rep) {
        TilingPatch p = random_patch(rng, 30);
        std::uniform_int_distribution<int> kd(1, 4);
        int k = kd(rng);
        std::vector<uint8_t> seed(p.faces.size(), 0);
        std::uniform_real_distribution<double> u(0, 1);
        std::vector<int> seed_list;
        for (int i = 0; i < p.face_count(); ++i)
            if (u(rng) < 0.3) {
                seed[i] = 1;
                seed_list.push_back(i);
            }

        InfectionState st = seed_explicit(p, seed_list);
        run_bootstrap(p, st, k);

        // oracle equivalence
        auto expect = naive_closure(p, seed, k);
        CHECK(st.infected == expect);

        // schedule independence
        auto async = async_closure(p, seed, k, rng);
        CHECK(st.infected == async);

        // fixpoint soundness and counter consistency
        for (int i = 0; i < p.face_count(); ++i) {
            int c = 0;
            for (int g : p.faces[i].neighbors) c += st.infected[g];
            CHECK(c == st.infected_neighbor_count[i]);
            if (!st.infected[i]) CHECK(c < k);
        }

        // round validity: a face infected in round r >= 1 has k neighbors
        // infected strictly earlier
        for (int i = 0; i < p.face_count(); ++i) {
            if (!st.infected[i] || st.round[i] == 0 || st.round[i] == kNeverInfected)
                continue;
            int earlier = 0;
            for (int g : p.faces[i].neighbors)
                if (st.infected[g] && st.round[g] < st.round[i]) ++earlier;
            CHECK(earlier >= k);
        }

        // monotonicity in the seed set
        std::vector<int> sub_list;
        for (int f : seed_list)
            if (f % 2 == 0) sub_list.push_back(f);
        InfectionState sub = seed_explicit(p, sub_list);
        run_bootstrap(p, sub, k);
        for (int i = 0; i < p.face_count(); ++i)
            if (sub.infected[i]) CHECK(st.infected[i]);

        // monotonicity in k
        InfectionState harder = seed_explicit(p, seed_list);
        run_bootstrap(p, harder, k + 1);
        for (int i = 0; i < p.face_count(); ++i)
            if (harder.infected[i]) CHECK(st.infected[i]);
    }
}
