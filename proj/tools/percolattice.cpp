// percolattice: plane tilings by regular polygons and k-bootstrap face
// percolation. Subcommands: generate, simulate, estimate, threshold, certify,
// bounds, types, census, inflate, blocking.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "percolattice/bounds.hpp"
#include "percolattice/certify.hpp"
#include "percolattice/config.hpp"
#include "percolattice/engine.hpp"
#include "percolattice/experiments.hpp"
#include "percolattice/inflate.hpp"
#include "percolattice/io.hpp"
#include "percolattice/lattice.hpp"
#include "percolattice/modify.hpp"
#include "percolattice/montecarlo.hpp"
#include "percolattice/rings.hpp"
#include "percolattice/svg.hpp"
#include "percolattice/vertex_type.hpp"

using namespace percolattice;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Common {
    uint64_t seed = 0;
    bool seed_given = false;
    int jobs = 1;
};

uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--seed", common.seed, "master RNG seed (recorded in the manifest)")
        ->each([&common](const std::string&) { common.seed_given = true; });
    if (const char* e = std::getenv("PERCOLATTICE_JOBS")) common.jobs = std::atoi(e);
    cmd->add_option("--jobs", common.jobs, "trial-level parallelism");
}

uint64_t resolve_seed(Common& common) {
    if (!common.seed_given) common.seed = entropy_seed();
    return common.seed;
}

ordered_json manifest(const std::string& command, const ordered_json& args) {
    ordered_json m;
    m["tool"] = "percolattice";
    m["version"] = kVersion;
    m["command"] = command;
    m["args"] = args;
    return m;
}

struct PatchArgs {
    std::string family;
    std::string strips;
    std::string cells;
    int window_t = -1;
    int rows = 0;
    int width = 0;
    std::string topology = "torus";
};

void add_patch_args(CLI::App* cmd, PatchArgs& a) {
    cmd->add_option("--family", a.family, "Archimedean lattice, e.g. 4.8.8");
    cmd->add_option("--strips", a.strips, "strip sequence, e.g. hex:0,hex:1/2,square:0");
    cmd->add_option("--cells", a.cells, "unit-cell grid, e.g. 24x24");
    cmd->add_option("--t", a.window_t, "D_t window radius (open topology)");
    cmd->add_option("--rows", a.rows, "strip rows");
    cmd->add_option("--width", a.width, "strip width in side lengths");
    cmd->add_option("--topology", a.topology, "torus or open")
        ->check(CLI::IsMember({"torus", "open"}));
}

std::pair<int, int> parse_cells(const std::string& cells) {
    auto x = cells.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("--cells", "expected WxH, e.g. 24x24");
    return {std::stoi(cells.substr(0, x)), std::stoi(cells.substr(x + 1))};
}

TilingPatch build_from_args(const PatchArgs& a) {
    if (!a.strips.empty()) {
        if (a.rows <= 0 || a.width <= 0)
            throw CLI::ValidationError("--strips", "needs --rows and --width");
        return build_strip_tiling(parse_strip_sequence(a.strips), a.rows, a.width);
    }
    if (a.family.empty())
        throw CLI::ValidationError("generate", "one of --family/--strips required");
    Family f = parse_family(a.family);
    if (a.window_t >= 0) return build_window(f, a.window_t);
    auto [cx, cy] = parse_cells(a.cells.empty() ? "8x8" : a.cells);
    return build_archimedean(f, cx, cy, parse_topology(a.topology));
}

ordered_json patch_args_json(const PatchArgs& a) {
    ordered_json j;
    if (!a.family.empty()) j["family"] = a.family;
    if (!a.strips.empty()) j["strips"] = a.strips;
    if (!a.cells.empty()) j["cells"] = a.cells;
    if (a.window_t >= 0) j["t"] = a.window_t;
    if (a.rows) j["rows"] = a.rows;
    if (a.width) j["width"] = a.width;
    j["topology"] = a.topology;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane tilings by regular polygons and k-bootstrap percolation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int exit_code = 0;

    // generate
    auto* gen = app.add_subcommand("generate", "build a tiling patch file");
    PatchArgs gen_args;
    std::string gen_out = "patch.json", gen_svg;
    add_patch_args(gen, gen_args);
    gen->add_option("--out", gen_out, "patch JSON path");
    gen->add_option("--svg", gen_svg, "optional SVG rendering");
    gen->callback([&] {
        TilingPatch p = build_from_args(gen_args);
        validate_patch(p);
        ordered_json j = ordered_json::parse(patch_to_json(p));
        j["manifest"] = manifest("generate", patch_args_json(gen_args));
        write_file(gen_out, j.dump(1) + "\n");
        if (!gen_svg.empty()) write_file(gen_svg, render_svg(p));
        std::cout << gen_out << ": " << p.face_count() << " faces ("
                  << p.spec_name << ", " << topology_name(p.topology) << ")\n";
    });

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one bootstrap trial");
    std::string sim_patch, sim_out = "rounds.json", sim_svg, sim_faces, sim_replay;
    double sim_p = 0.0;
    int sim_k = 2, sim_replay_t = 2;
    Common sim_common;
    sim->add_option("--patch", sim_patch, "patch JSON file");
    sim->add_option("--p", sim_p, "seed each face independently with probability p");
    sim->add_option("--faces", sim_faces, "explicit comma-separated seed faces");
    sim->add_option("--k", sim_k, "bootstrap threshold");
    sim->add_option("--replay", sim_replay,
                    "row-growth replay for a family: seeds the D_t core plus one "
                    "side face and reports the infection order");
    sim->add_option("--t", sim_replay_t, "ring index for --replay");
    sim->add_option("--out", sim_out, "rounds JSON path");
    sim->add_option("--svg", sim_svg, "round-colored SVG overlay");
    add_common(sim, sim_common);
    sim->callback([&] {
        TilingPatch p;
        InfectionState st;
        uint64_t seed = 0;
        int k = sim_k;
        if (!sim_replay.empty()) {
            Family f = parse_family(sim_replay);
            RingWindow w = ring_decomposition(f, sim_replay_t);
            p = std::move(w.patch);
            std::vector<int> seeds = w.ring.core;
            const SideSpec& side = w.ring.sides[0];
            if (side.seedable.empty())
                throw CLI::ValidationError("--replay", "side has no seedable face");
            seeds.push_back(side.seedable[side.seedable.size() / 2]);
            st = seed_explicit(p, seeds);
            k = lattice_threshold(f);
        } else {
            if (sim_patch.empty())
                throw CLI::ValidationError("simulate", "need --patch or --replay");
            p = patch_from_json(read_file(sim_patch));
            seed = resolve_seed(sim_common);
            if (!sim_faces.empty()) {
                std::vector<int> faces;
                std::stringstream ss(sim_faces);
                std::string item;
                while (std::getline(ss, item, ',')) faces.push_back(std::stoi(item));
                st = seed_explicit(p, faces);
            } else if (sim_p > 0) {
                st = seed_random(p, sim_p, seed);
            } else {
                throw CLI::ValidationError("simulate", "need --p or --faces");
            }
        }
        TrialOutcome out = run_bootstrap(p, st, k);
        ordered_json j;
        j["manifest"] = manifest("simulate", {{"patch", sim_patch},
                                              {"p", sim_p},
                                              {"faces", sim_faces},
                                              {"replay", sim_replay},
                                              {"t", sim_replay_t},
                                              {"k", k},
                                              {"seed", seed}});
        j["percolated"] = out.percolated;
        j["final_infected_count"] = out.final_infected_count;
        j["rounds_elapsed"] = out.rounds_elapsed;
        j["rounds"] = ordered_json::parse(rounds_to_json(st));
        write_file(sim_out, j.dump(1) + "\n");
        if (!sim_svg.empty()) write_file(sim_svg, render_svg_rounds(p, st));
        std::cout << (out.percolated ? "percolated" : "stuck") << " after "
                  << out.rounds_elapsed << " rounds, " << out.final_infected_count
                  << "/" << p.face_count() << " infected\n";
    });

    // estimate
    auto* est = app.add_subcommand("estimate", "Monte Carlo percolation frequency");
    PatchArgs est_args;
    double est_p = 0.5;
    int est_k = 2, est_trials = 400;
    std::string est_out;
    Common est_common;
    add_patch_args(est, est_args);
    est->add_option("--p", est_p, "seeding probability")->required();
    est->add_option("--k", est_k, "bootstrap threshold")->required();
    est->add_option("--trials", est_trials, "trial count");
    est->add_option("--out", est_out, "CSV output path");
    add_common(est, est_common);
    est->callback([&] {
        TilingPatch p = build_from_args(est_args);
        uint64_t seed = resolve_seed(est_common);
        Estimate e = monte_carlo_estimate(p, est_p, est_k, est_trials, seed,
                                          est_common.jobs);
        std::string csv = csv_header() +
                          csv_row(p.spec_name, e.p, e.k, e.extent, p.face_count(),
                                  e.trials, e.percolating, e.frequency, e.ci_low,
                                  e.ci_high, seed);
        if (!est_out.empty()) {
            write_file(est_out, csv);
            ordered_json m = manifest("estimate", patch_args_json(est_args));
            m["args"]["p"] = est_p;
            m["args"]["k"] = est_k;
            m["args"]["trials"] = est_trials;
            m["args"]["seed"] = seed;
            m["args"]["jobs"] = est_common.jobs;
            write_file(est_out + ".manifest.json", m.dump(1) + "\n");
        }
        std::cout << csv;
    });

    // threshold
    auto* thr = app.add_subcommand("threshold", "estimate the percolation threshold");
    std::string thr_family, thr_extents = "12,18,24", thr_out;
    double thr_p = 0.5;
    int thr_trials = 400;
    Common thr_common;
    thr->add_option("--family", thr_family, "Archimedean lattice")->required();
    thr->add_option("--p", thr_p, "seeding probability");
    thr->add_option("--extents", thr_extents, "comma-separated torus cell counts");
    thr->add_option("--trials", thr_trials, "trials per (k, extent)");
    thr->add_option("--out", thr_out, "CSV output path");
    add_common(thr, thr_common);
    thr->callback([&] {
        Family f = parse_family(thr_family);
        uint64_t seed = resolve_seed(thr_common);
        std::vector<TilingPatch> patches;
        std::stringstream ss(thr_extents);
        std::string item;
        while (std::getline(ss, item, ','))
            patches.push_back(
                build_archimedean(f, std::stoi(item), std::stoi(item), Topology::kTorus));
        std::vector<const TilingPatch*> ptrs;
        for (auto& p : patches) ptrs.push_back(&p);
        ThresholdResult r =
            estimate_threshold(ptrs, thr_p, thr_trials, seed, thr_common.jobs);
        std::string csv = csv_header();
        for (const auto& row : r.evidence)
            csv += csv_row(thr_family, thr_p, row.k, row.extent, row.faces,
                           row.estimate.trials, row.estimate.percolating,
                           row.estimate.frequency, row.estimate.ci_low,
                           row.estimate.ci_high, seed);
        if (!thr_out.empty()) {
            write_file(thr_out, csv);
            ordered_json m = manifest("threshold", {{"family", thr_family},
                                                    {"p", thr_p},
                                                    {"extents", thr_extents},
                                                    {"trials", thr_trials},
                                                    {"seed", seed},
                                                    {"jobs", thr_common.jobs}});
            m["k_hat"] = r.k_hat;
            m["inconclusive"] = r.inconclusive;
            write_file(thr_out + ".manifest.json", m.dump(1) + "\n");
        }
        std::cout << csv;
        std::cout << "k_hat = " << r.k_hat
                  << (r.inconclusive ? " (inconclusive)" : "") << "\n";
        if (r.inconclusive) exit_code = 2;
    });

    // certify
    auto* cert = app.add_subcommand("certify", "deterministic growth certificate");
    std::string cert_family, cert_strips, cert_out;
    int cert_k = 3, cert_t = 2;
    cert->add_option("--family", cert_family, "4.8.8, 6.6.6, 3.6.3.6 or 4.6.12");
    cert->add_option("--strips", cert_strips, "strip sequence");
    cert->add_option("--k", cert_k, "bootstrap threshold")->required();
    cert->add_option("--t", cert_t, "ring index")->required();
    cert->add_option("--out", cert_out, "certificate JSON path");
    cert->callback([&] {
        GrowthCertificate c =
            cert_strips.empty()
                ? certify_growth(parse_family(cert_family), cert_k, cert_t)
                : certify_growth_strips(parse_strip_sequence(cert_strips), cert_k,
                                        cert_t);
        ordered_json j;
        j["manifest"] = manifest("certify", {{"family", cert_family},
                                             {"strips", cert_strips},
                                             {"k", cert_k},
                                             {"t", cert_t}});
        j["family"] = c.family;
        j["k"] = c.k;
        j["t"] = c.t;
        j["checked_seed_positions"] = c.checked_seed_positions;
        j["corner_closure_verified"] = c.corner_closure_verified;
        j["verdict"] = c.pass ? "pass" : "fail";
        if (c.witness) {
            j["witness"] = {{"stage", c.witness->stage},
                            {"side", c.witness->side},
                            {"seed_face", c.witness->seed_face},
                            {"unfilled", c.witness->unfilled}};
        }
        if (!cert_out.empty()) write_file(cert_out, j.dump(1) + "\n");
        std::cout << j.dump(1) << "\n";
        if (!c.pass) exit_code = 1;
    });

    // bounds
    auto* bnd = app.add_subcommand("bounds", "closed-form tail and success bounds");
    std::string bnd_family = "4.8.8", bnd_strips = "hex:0,hex:1/2", bnd_p = "1/2";
    int bnd_t = 2;
    bnd->add_option("--family", bnd_family, "4.8.8 or strips");
    bnd->add_option("--strips", bnd_strips, "strip sequence for |A_t|");
    bnd->add_option("--p", bnd_p, "rational probability, e.g. 1/2 or 0.35");
    bnd->add_option("--t", bnd_t, "ring index")->required();
    bnd->callback([&] {
        Rational p = Rational::parse(bnd_p);
        ordered_json j;
        j["manifest"] = manifest("bounds", {{"family", bnd_family},
                                            {"strips", bnd_strips},
                                            {"p", bnd_p},
                                            {"t", bnd_t}});
        if (bnd_family == "strips") {
            StripSequence seq = parse_strip_sequence(bnd_strips);
            Rational tail = tail_bound(BoundFamily::kStrips, p, bnd_t);
            SuccessBound s = success_lower_bound_strips(seq, p, bnd_t);
            j["tail"] = tail.to_string();
            j["tail_decimal"] = tail.to_double();
            j["success"] = s.value.to_string();
            j["A_t_size"] = s.exponent;
            j["minimal_t"] = s.minimal_t;
        } else {
            Rational tail = tail_bound(BoundFamily::kTruncSquare488, p, bnd_t);
            SuccessBound s = success_lower_bound_488(p, bnd_t);
            j["tail"] = tail.to_string();
            j["tail_decimal"] = tail.to_double();
            j["success"] = s.value.to_string();
            j["octagons"] = s.exponent;
            j["minimal_t"] = s.minimal_t;
        }
        std::cout << j.dump(1) << "\n";
    });

    // types
    auto* typ = app.add_subcommand("types", "vertex-type combinatorics");
    bool typ_enumerate = false, typ_classify = false;
    typ->add_flag("--enumerate", typ_enumerate, "list the 21 vertex types");
    typ->add_flag("--classify", typ_classify, "classification per type");
    typ->callback([&] {
        auto types = enumerate_vertex_types();
        for (const auto& t : types) {
            std::cout << t.name();
            if (typ_classify) {
                auto c = classify_vertex_type(t);
                switch (c.kind) {
                    case TypeKind::kInfeasible: std::cout << ",infeasible"; break;
                    case TypeKind::kRigidLatticeType: std::cout << ",rigid-lattice"; break;
                    case TypeKind::kForcesThresholdLe2:
                        std::cout << ",threshold<=2," << c.witness;
                        break;
                }
            }
            std::cout << "\n";
        }
    });

    // census
    auto* cen = app.add_subcommand("census", "interior vertex-type census");
    PatchArgs cen_args;
    add_patch_args(cen, cen_args);
    cen->callback([&] {
        TilingPatch p = build_from_args(cen_args);
        for (const auto& [name, count] : vertex_census(p))
            std::cout << name << "," << count << "\n";
    });

    // inflate
    auto* inf = app.add_subcommand("inflate", "inflate 3.12.12 12-gons to hexagons");
    std::string inf_patch, inf_out = "inflated.json";
    int inf_check_trials = 0;
    double inf_p = 0.5;
    Common inf_common;
    inf->add_option("--patch", inf_patch, "3.12.12 patch JSON")->required();
    inf->add_option("--out", inf_out, "inflated patch JSON path");
    inf->add_option("--check-trials", inf_check_trials,
                    "coupled consistency trials (0 = skip)");
    inf->add_option("--p", inf_p, "seeding probability for the check");
    add_common(inf, inf_common);
    inf->callback([&] {
        TilingPatch p = patch_from_json(read_file(inf_patch));
        InflationResult r = inflate_3_12_12(p);
        ordered_json j = ordered_json::parse(patch_to_json(r.hex_patch));
        j["manifest"] = manifest("inflate", {{"patch", inf_patch}});
        j["twelve_gon_of"] = r.twelve_gon_of;
        write_file(inf_out, j.dump(1) + "\n");
        std::cout << inf_out << ": " << r.hex_patch.face_count() << " hexagons\n";
        if (inf_check_trials > 0) {
            uint64_t seed = resolve_seed(inf_common);
            InflationReport rep =
                inflation_consistency_check(p, inf_p, inf_check_trials, seed);
            std::cout << "consistency: " << rep.consistent << "/" << rep.hex_percolated
                      << " hex-percolating trials also percolate the source\n";
            if (!rep.all_consistent) exit_code = 1;
        }
    });

    // blocking
    auto* blk = app.add_subcommand("blocking", "verify catalog blocking configurations");
    std::string blk_name;
    bool blk_list = false;
    blk->add_flag("--list", blk_list, "list catalog names");
    blk->add_option("--config", blk_name, "verify one entry (default: all)");
    blk->callback([&] {
        auto instances = catalog_instances();
        for (const auto& inst : instances) {
            if (blk_list) {
                std::cout << inst.config.name << " k=" << inst.config.blocking_k
                          << " home=" << inst.config.home << " faces="
                          << inst.config.size() << "\n";
                continue;
            }
            if (!blk_name.empty() && inst.config.name != blk_name) continue;
            BlockingReport at_k =
                verify_blocking(inst.patch, inst.face_ids, inst.config.blocking_k);
            BlockingReport below =
                verify_blocking(inst.patch, inst.face_ids, inst.config.blocking_k - 1);
            bool ok = at_k.ok && !below.ok;
            std::cout << inst.config.name << ": max_external=" << at_k.max_external
                      << " k=" << inst.config.blocking_k << " "
                      << (ok ? "ok (tight)" : "FAILED") << "\n";
            if (!ok) exit_code = 1;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
