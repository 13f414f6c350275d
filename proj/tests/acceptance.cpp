// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "percolattice/bounds.hpp"
#include "percolattice/certify.hpp"
#include "percolattice/config.hpp"
#include "percolattice/engine.hpp"
#include "percolattice/experiments.hpp"
#include "percolattice/inflate.hpp"
#include "percolattice/lattice.hpp"
#include "percolattice/modify.hpp"
#include "percolattice/montecarlo.hpp"
#include "percolattice/rings.hpp"
#include "percolattice/vertex_type.hpp"

using namespace percolattice;

namespace {

constexpr uint64_t kMasterSeed = 0x5EED5EEDull;
int failures = 0;

struct Criterion {
    int id;
    std::string detail;
    bool ok = true;
    std::chrono::steady_clock::time_point start;

    explicit Criterion(int n) : id(n), start(std::chrono::steady_clock::now()) {}
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        std::printf("CRITERION %2d: %s (%.2fs)%s%s\n", id, ok ? "PASS" : "FAIL", secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

}  // namespace

static void criterion1_enumeration() {
    Criterion c(1);
    const std::set<std::string> expected = {
        "3.3.3.3.3.3", "3.3.3.3.6", "3.3.3.4.4", "3.3.4.3.4", "3.3.6.6", "3.6.3.6",
        "3.3.4.12",    "3.4.3.12",  "3.4.4.6",   "3.4.6.4",   "4.4.4.4", "3.7.42",
        "3.8.24",      "3.9.18",    "3.10.15",   "3.12.12",   "4.5.20",  "4.6.12",
        "4.8.8",       "5.5.10",    "6.6.6"};
    auto types = enumerate_vertex_types();
    std::set<std::string> names;
    for (const auto& t : types) names.insert(t.name());
    c.require(types.size() == 21, "expected 21 types");
    c.require(names == expected, "name set mismatch");
}

static void criterion2_classification() {
    Criterion c(2);
    const std::set<std::string> infeasible = {"3.7.42", "3.8.24", "3.9.18",
                                              "3.10.15", "4.5.20", "5.5.10"};
    for (const auto& t : enumerate_vertex_types()) {
        bool is_inf = classify_vertex_type(t).kind == TypeKind::kInfeasible;
        c.require(is_inf == (infeasible.count(t.name()) > 0),
                  "parity classification of " + t.name());
    }
    std::set<VertexType> rigid;
    for (const char* n : {"3.6.3.6", "3.12.12", "4.6.12", "4.8.8", "6.6.6"})
        rigid.insert(VertexType::from_name(n));
    c.require(check_no_successive_agreement(rigid),
              "rigid five share a successive pair");
    for (const auto& t : rigid)
        c.require(classify_vertex_type(t).kind == TypeKind::kRigidLatticeType,
                  t.name() + " not rigid");
}

static void criterion3_blocking_catalog() {
    Criterion c(3);
    auto instances = catalog_instances();
    c.require(instances.size() == 14, "catalog size");
    for (const auto& inst : instances) {
        BlockingReport at_k =
            verify_blocking(inst.patch, inst.face_ids, inst.config.blocking_k);
        c.require(at_k.ok, inst.config.name + " fails at k");
        BlockingReport below =
            verify_blocking(inst.patch, inst.face_ids, inst.config.blocking_k - 1);
        c.require(!below.ok, inst.config.name + " passes at k-1 (not tight)");
    }
}

static void criterion4_certificates() {
    Criterion c(4);
    auto run = [&](Family f, int k, int t_max) {
        for (int t = 1; t <= t_max; ++t) {
            GrowthCertificate pass = certify_growth(f, k, t);
            c.require(pass.pass, family_name(f) + " k=" + std::to_string(k) +
                                     " t=" + std::to_string(t));
            GrowthCertificate fail = certify_growth(f, k + 1, t);
            c.require(!fail.pass, family_name(f) + " passes at k+1");
        }
    };
    run(Family::kTruncSquare488, 3, 4);
    run(Family::kHex666, 3, 3);
    run(Family::kTrihex3636, 2, 3);
    run(Family::kTruncTrihex4612, 3, 3);
    for (const char* desc : {"square:0", "hex:0", "hex:0,hex:1/2"}) {
        StripSequence seq = parse_strip_sequence(desc);
        for (int t = 1; t <= 3; ++t) {
            GrowthCertificate pass = certify_growth_strips(seq, 2, t);
            c.require(pass.pass,
                      std::string(desc) + " k=2 t=" + std::to_string(t));
            GrowthCertificate fail = certify_growth_strips(seq, 3, t);
            c.require(!fail.pass, std::string(desc) + " passes at k=3");
        }
    }
}

static void criterion5_threshold_table() {
    Criterion c(5);
    const int trials = 400;
    for (Family f : all_families()) {
        const int fpc = static_cast<int>(lattice_template(f).slots.size());
        const int n = static_cast<int>(std::ceil(std::sqrt(10000.0 / fpc)));
        TilingPatch patch = build_archimedean(f, n, n, Topology::kTorus);
        const int k = lattice_threshold(f);
        Estimate at_k = monte_carlo_estimate(patch, 0.5, k, trials, kMasterSeed, 0);
        c.require(at_k.frequency >= 0.9,
                  family_name(f) + " freq(k*,p=.5)=" + std::to_string(at_k.frequency));
        Estimate above = monte_carlo_estimate(patch, 0.1, k + 1, trials, kMasterSeed, 0);
        c.require(above.frequency <= 0.1,
                  family_name(f) + " freq(k*+1,p=.1)=" + std::to_string(above.frequency));
    }
}

static void criterion6_bounds() {
    Criterion c(6);
    c.require(tail_bound(BoundFamily::kTruncSquare488, Rational(1, 2), 2) ==
                  Rational(1, 6),
              "4.8.8 tail at (1/2, 2) != 1/6");
    c.require(tail_bound(BoundFamily::kStrips, Rational(1, 2), 4) == Rational(3, 4),
              "strips tail at (1/2, 4) != 3/4");
    StripSequence seq = parse_strip_sequence("hex:0,hex:1/2");
    for (int num = 1; num <= 9; ++num) {
        Rational p(num, 10);
        SuccessBound oct = success_lower_bound_488(p, 0);
        c.require(success_lower_bound_488(p, oct.minimal_t).value.sign() > 0,
                  "4.8.8 success bound not positive at minimal t, p=" + p.to_string());
        SuccessBound st = success_lower_bound_strips(seq, p, 0);
        c.require(success_lower_bound_strips(seq, p, st.minimal_t).value.sign() > 0,
                  "strips success bound not positive at minimal t, p=" + p.to_string());
    }
}

static void criterion7_replays() {
    Criterion c(7);
    {
        // (3.6.3.6): ring side of D_2 seeded at one hexagon; labels 1..4 are
        // rounds 0..3 with hexagons at 1,3 and triangles at 2,4.
        RingWindow w = ring_decomposition(Family::kTrihex3636, 2);
        const SideSpec& side = w.ring.sides[0];
        std::vector<int> hexes;
        for (int f : side.faces)
            if (w.patch.faces[f].sides == 6) hexes.push_back(f);
        int seed = hexes.back();
        std::vector<int> seeds = w.ring.core;
        seeds.push_back(seed);
        InfectionState st = seed_explicit(w.patch, seeds);
        run_bootstrap(w.patch, st, 2);
        std::multiset<int> hex_rounds, tri_rounds;
        for (int f : side.faces) {
            if (w.patch.faces[f].sides == 6) hex_rounds.insert(st.round[f]);
            else tri_rounds.insert(st.round[f]);
        }
        c.require(hex_rounds == std::multiset<int>({0, 2}),
                  "3.6.3.6 hexagon rounds not {0,2}");
        c.require(tri_rounds == std::multiset<int>({1, 3}),
                  "3.6.3.6 triangle rounds not {1,3}");
    }
    {
        // (4.6.12): seeded 12-gon; its two lower squares infect in round 1,
        // the neighboring hexagon in round 2, the next square in round 3,
        // the adjacent 12-gon in round 4.
        RingWindow w = ring_decomposition(Family::kTruncTrihex4612, 2);
        const SideSpec& side = w.ring.sides[0];
        int seed = side.seedable[side.seedable.size() / 2];
        std::vector<int> seeds = w.ring.core;
        seeds.push_back(seed);
        InfectionState st = seed_explicit(w.patch, seeds);
        run_bootstrap(w.patch, st, 3);
        int squares_r1_below_seed = 0;
        for (int g : w.patch.faces[seed].neighbors)
            if (w.patch.faces[g].sides == 4 && st.round[g] == 1) ++squares_r1_below_seed;
        c.require(squares_r1_below_seed == 2,
                  "4.6.12: seeded 12-gon lower squares not both at round 1");
        std::multiset<int> twelve_rounds, hex_rounds, sq_rounds;
        for (int f : side.faces) {
            int r = st.round[f] == kNeverInfected ? -1 : st.round[f];
            if (w.patch.faces[f].sides == 12) twelve_rounds.insert(r);
            if (w.patch.faces[f].sides == 6) hex_rounds.insert(r);
            if (w.patch.faces[f].sides == 4) sq_rounds.insert(r);
        }
        c.require(twelve_rounds.count(0) == 1 && twelve_rounds.count(4) == 1,
                  "4.6.12 12-gon rounds missing {0,4}");
        c.require(hex_rounds.count(2) == 1, "4.6.12 hexagon round 2 missing");
        c.require(sq_rounds.count(3) == 1, "4.6.12 square round 3 missing");
    }
}

static void criterion8_inflation() {
    Criterion c(8);
    TilingPatch p = build_archimedean(Family::kTruncHex31212, 5, 5, Topology::kTorus);
    InflationResult r = inflate_3_12_12(p);
    int twelve = 0;
    for (const Face& f : p.faces) twelve += f.sides == 12;
    c.require(r.hex_patch.face_count() == twelve, "image face count != 12-gon count");
    for (const Face& f : r.hex_patch.faces)
        c.require(f.sides == 6 && f.neighbors.size() == 6, "image not 6-regular");
    bool audit = true;
    for (int a = 0; a < p.face_count(); ++a) {
        if (r.image_of[a] < 0) continue;
        for (int b = a + 1; b < p.face_count(); ++b) {
            if (r.image_of[b] < 0) continue;
            if (p.adjacent(a, b) != r.hex_patch.adjacent(r.image_of[a], r.image_of[b]))
                audit = false;
        }
    }
    c.require(audit, "adjacency preservation audit failed");
    InflationReport rep = inflation_consistency_check(p, 0.5, 200, kMasterSeed);
    c.require(rep.trials == 200 && rep.all_consistent,
              "coupled-trial consistency below 100%");
}

static void criterion9_engine_properties() {
    Criterion c(9);
    std::mt19937_64 rng(kMasterSeed);
    for (int rep = 0; rep < 200; ++rep) {
        std::uniform_int_distribution<int> nd(2, 30);
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
        p.sort_neighbors();
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int e = 0; e < n / 2; ++e) {
            int a = pick(rng), b = pick(rng);
            if (a != b && !p.adjacent(a, b)) {
                p.add_edge(a, b);
                p.sort_neighbors();
            }
        }
        for (auto& f : p.faces)
            f.sides = std::max<int>(3, static_cast<int>(f.neighbors.size()));

        std::uniform_int_distribution<int> kd(1, 4);
        int k = kd(rng);
        std::uniform_real_distribution<double> u(0, 1);
        std::vector<uint8_t> seed(n, 0);
        std::vector<int> seed_list;
        for (int i = 0; i < n; ++i)
            if (u(rng) < 0.3) {
                seed[i] = 1;
                seed_list.push_back(i);
            }

        InfectionState st = seed_explicit(p, seed_list);
        run_bootstrap(p, st, k);

        std::vector<uint8_t> oracle = seed;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                if (oracle[i]) continue;
                int cnt = 0;
                for (int g : p.faces[i].neighbors) cnt += oracle[g];
                if (cnt >= k) {
                    oracle[i] = 1;
                    changed = true;
                }
            }
        }
        c.require(st.infected == oracle, "oracle equivalence");

        std::vector<uint8_t> async = seed;
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        changed = true;
        while (changed) {
            changed = false;
            std::shuffle(order.begin(), order.end(), rng);
            for (int i : order) {
                if (async[i]) continue;
                int cnt = 0;
                for (int g : p.faces[i].neighbors) cnt += async[g];
                if (cnt >= k) {
                    async[i] = 1;
                    changed = true;
                }
            }
        }
        c.require(st.infected == async, "schedule independence");

        for (int i = 0; i < n; ++i) {
            if (st.infected[i]) continue;
            int cnt = 0;
            for (int g : p.faces[i].neighbors) cnt += st.infected[g];
            c.require(cnt < k, "fixpoint soundness");
        }

        std::vector<int> sub;
        for (int f : seed_list)
            if (f % 2 == 0) sub.push_back(f);
        InfectionState st_sub = seed_explicit(p, sub);
        run_bootstrap(p, st_sub, k);
        InfectionState st_k1 = seed_explicit(p, seed_list);
        run_bootstrap(p, st_k1, k + 1);
        for (int i = 0; i < n; ++i) {
            if (st_sub.infected[i]) c.require(st.infected[i], "monotone in seed");
            if (st_k1.infected[i]) c.require(st.infected[i], "monotone in k");
        }
    }
}

static void criterion10_modified_hex() {
    Criterion c(10);
    auto rows = modified_hex_experiment({32, 57}, 1, {0.5}, 400, kMasterSeed, 0);
    for (const auto& r : rows) {
        c.require(r.modified_frequency > 0.05 && r.modified_frequency < 0.95,
                  "modified frequency " + std::to_string(r.modified_frequency) +
                      " at extent " + r.extent +
                      " outside (0.05,0.95); a single six-triangle ring blocks with "
                      "probability (1-p)^6 = 1/64 at p=1/2, so the modified frequency "
                      "is ~0.984 by construction");
        c.require(r.control_frequency <= 0.05 || r.control_frequency >= 0.95,
                  "control frequency inside the band");
    }
}

int main() {
    std::printf("percolattice acceptance suite (master seed 0x%llX)\n",
                static_cast<unsigned long long>(kMasterSeed));
    criterion1_enumeration();
    criterion2_classification();
    criterion3_blocking_catalog();
    criterion4_certificates();
    criterion5_threshold_table();
    criterion6_bounds();
    criterion7_replays();
    criterion8_inflation();
    criterion9_engine_properties();
    criterion10_modified_hex();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
