#include "percolattice/engine.hpp"

#include <stdexcept>

namespace percolattice {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

int InfectionState::infected_count() const {
    int n = 0;
    for (uint8_t b : infected) n += b;
    return n;
}

double face_uniform(uint64_t seed, int32_t face) {
    uint64_t h = splitmix64(seed ^ splitmix64(static_cast<uint64_t>(face) + 1));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

namespace {

InfectionState blank_state(size_t n) {
    InfectionState s;
    s.infected.assign(n, 0);
    s.infected_neighbor_count.assign(n, 0);
    s.round.assign(n, kNeverInfected);
    s.at_fixpoint = false;
    return s;
}

void apply_counts(const TilingPatch& patch, InfectionState& s) {
    for (int i = 0; i < patch.face_count(); ++i)
        if (s.infected[i])
            for (int g : patch.faces[i].neighbors) s.infected_neighbor_count[g]++;
}

}  // namespace

InfectionState seed_random(const TilingPatch& patch, double p, uint64_t rng_seed) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must be in (0,1)");
    InfectionState s = blank_state(patch.faces.size());
    s.rng_seed = rng_seed;
    for (int i = 0; i < patch.face_count(); ++i) {
        if (face_uniform(rng_seed, i) < p) {
            s.infected[i] = 1;
            s.round[i] = 0;
        }
    }
    apply_counts(patch, s);
    return s;
}

InfectionState seed_explicit(const TilingPatch& patch, const std::vector<int>& faces) {
    InfectionState s = blank_state(patch.faces.size());
    for (int f : faces) {
        if (f < 0 || f >= patch.face_count())
            throw std::invalid_argument("seed face out of range");
        s.infected[f] = 1;
        s.round[f] = 0;
    }
    apply_counts(patch, s);
    return s;
}

AdjacencyCsr::AdjacencyCsr(const TilingPatch& patch) {
    offsets.reserve(patch.faces.size() + 1);
    offsets.push_back(0);
    for (const Face& f : patch.faces) {
        targets.insert(targets.end(), f.neighbors.begin(), f.neighbors.end());
        offsets.push_back(static_cast<int32_t>(targets.size()));
    }
}

TrialOutcome run_bootstrap_csr(const AdjacencyCsr& adj, InfectionState& state, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const int n = static_cast<int>(adj.offsets.size()) - 1;

    // Incoming counters are consistent with the seed set; each newly infected
    // face then bumps its neighbors, so they stay consistent throughout.
    std::vector<int32_t> ready;
    int infected_total = 0;
    for (int i = 0; i < n; ++i) {
        infected_total += state.infected[i];
        if (!state.infected[i] && state.infected_neighbor_count[i] >= k)
            ready.push_back(i);
    }

    int round = 0;
    std::vector<int32_t> frontier;
    while (!ready.empty()) {
        ++round;
        frontier.clear();
        for (int g : ready) {
            state.infected[g] = 1;
            state.round[g] = round;
            frontier.push_back(g);
            ++infected_total;
        }
        ready.clear();
        for (int f : frontier) {
            for (int32_t e = adj.offsets[f]; e < adj.offsets[f + 1]; ++e) {
                int g = adj.targets[e];
                if (++state.infected_neighbor_count[g] == k && !state.infected[g])
                    ready.push_back(g);
            }
        }
    }

    state.at_fixpoint = true;
    TrialOutcome out;
    out.final_infected_count = infected_total;
    out.percolated = infected_total == n;
    out.rounds_elapsed = round;
    out.seed = state.rng_seed;
    return out;
}

TrialOutcome run_bootstrap(const TilingPatch& patch, InfectionState& state, int k) {
    AdjacencyCsr adj(patch);
    return run_bootstrap_csr(adj, state, k);
}

bool percolates(const TilingPatch& patch, const InfectionState& state) {
    if (!state.at_fixpoint)
        throw std::runtime_error("percolates() called on a non-fixpoint state");
    return state.infected_count() == patch.face_count();
}

}  // namespace percolattice
