#include "percolattice/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "percolattice/engine.hpp"

namespace percolattice {

std::pair<double, double> wilson_interval(int successes, int trials) {
    if (trials <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = trials;
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (phat + z2 / (2 * n)) / denom;
    const double margin =
        z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - margin), std::min(1.0, center + margin)};
}

uint64_t trial_seed(uint64_t master_seed, int trial) {
    uint64_t x = master_seed ^ (0x9e3779b97f4a7c15ull * (static_cast<uint64_t>(trial) + 1));
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return x;
}

Estimate monte_carlo_estimate(const TilingPatch& patch, double p, int k, int trials,
                              uint64_t master_seed, int jobs) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    AdjacencyCsr adj(patch);
    std::vector<uint8_t> percolated(trials, 0);

    auto run_range = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            InfectionState st = seed_random(patch, p, trial_seed(master_seed, i));
            TrialOutcome out = run_bootstrap_csr(adj, st, k);
            percolated[i] = out.percolated ? 1 : 0;
        }
    };

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, trials);
    if (workers == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        int chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    Estimate e;
    e.p = p;
    e.k = k;
    e.extent = patch.extent;
    e.trials = trials;
    for (uint8_t b : percolated) e.percolating += b;
    e.frequency = static_cast<double>(e.percolating) / trials;
    std::tie(e.ci_low, e.ci_high) = wilson_interval(e.percolating, trials);
    e.master_seed = master_seed;
    return e;
}

ThresholdResult estimate_threshold(const std::vector<const TilingPatch*>& patches,
                                   double p, int trials, uint64_t master_seed,
                                   int jobs, int max_k) {
    if (patches.empty()) throw std::invalid_argument("no patches");
    ThresholdResult result;
    const TilingPatch* largest = patches.back();
    for (int k = 1; k <= max_k; ++k) {
        double largest_freq = 0;
        for (const TilingPatch* patch : patches) {
            Estimate e = monte_carlo_estimate(*patch, p, k, trials, master_seed, jobs);
            result.evidence.push_back({k, patch->extent, patch->face_count(), e});
            if (patch == largest) largest_freq = e.frequency;
        }
        if (largest_freq >= 0.5) {
            result.k_hat = k;
            if (largest_freq < 0.6) result.inconclusive = true;
        } else {
            if (largest_freq > 0.4) result.inconclusive = true;
            break;
        }
    }
    return result;
}

}  // namespace percolattice
