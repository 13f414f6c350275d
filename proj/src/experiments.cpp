#include "percolattice/experiments.hpp"

#include <stdexcept>

#include "percolattice/engine.hpp"
#include "percolattice/inflate.hpp"
#include "percolattice/lattice.hpp"
#include "percolattice/modify.hpp"
#include "percolattice/montecarlo.hpp"

namespace percolattice {

InflationReport inflation_consistency_check(const TilingPatch& patch, double p,
                                            int trials, uint64_t master_seed) {
    InflationResult inf = inflate_3_12_12(patch);
    AdjacencyCsr src_adj(patch);
    AdjacencyCsr hex_adj(inf.hex_patch);

    InflationReport rep;
    rep.trials = trials;
    for (int i = 0; i < trials; ++i) {
        uint64_t seed = trial_seed(master_seed, i);
        InfectionState src = seed_random(patch, p, seed);

        std::vector<int> hex_seed;
        for (int f = 0; f < patch.face_count(); ++f)
            if (src.infected[f] && inf.image_of[f] >= 0)
                hex_seed.push_back(inf.image_of[f]);
        InfectionState hex = seed_explicit(inf.hex_patch, hex_seed);

        TrialOutcome hex_out = run_bootstrap_csr(hex_adj, hex, 3);
        TrialOutcome src_out = run_bootstrap_csr(src_adj, src, 3);
        if (hex_out.percolated) {
            ++rep.hex_percolated;
            if (src_out.percolated) ++rep.consistent;
        }
    }
    rep.all_consistent = rep.consistent == rep.hex_percolated;
    return rep;
}

std::vector<ModifiedHexRow> modified_hex_experiment(const std::vector<int>& extents,
                                                    int substitutions,
                                                    const std::vector<double>& p_grid,
                                                    int trials, uint64_t master_seed,
                                                    int jobs) {
    if (substitutions < 0) throw std::invalid_argument("substitutions must be >= 0");
    std::vector<ModifiedHexRow> rows;
    for (int n : extents) {
        TilingPatch control = build_archimedean(Family::kHex666, n, n, Topology::kTorus);
        // Targets two cells apart so they stay pairwise non-adjacent;
        // substitute_hexagons rejects any slip.
        std::vector<int> targets;
        for (int i = 0; i < substitutions; ++i) {
            int x = (2 * i) % n;
            int y = (2 * ((2 * i) / n)) % n;
            targets.push_back(y * n + x);
        }
        TilingPatch modified = substitute_hexagons(control, targets);
        for (double p : p_grid) {
            Estimate em = monte_carlo_estimate(modified, p, 2, trials, master_seed, jobs);
            Estimate ec = monte_carlo_estimate(control, p, 2, trials, master_seed, jobs);
            rows.push_back({p, control.extent, control.face_count(), em.frequency,
                            ec.frequency});
        }
    }
    return rows;
}

}  // namespace percolattice
