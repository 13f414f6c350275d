#pragma once

#include <string>
#include <vector>

#include "percolattice/engine.hpp"
#include "percolattice/patch.hpp"

namespace percolattice {

// percolattice-patch-v1 JSON.
std::string patch_to_json(const TilingPatch& patch);
TilingPatch patch_from_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// JSON array of {face, round} for infected faces.
std::string rounds_to_json(const InfectionState& state);

std::string csv_header();
std::string csv_row(const std::string& family, double p, int k, const std::string& extent,
                    int faces, int trials, int percolating, double frequency,
                    double ci_low, double ci_high, uint64_t seed);

}  // namespace percolattice
