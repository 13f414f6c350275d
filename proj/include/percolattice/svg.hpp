#pragma once

#include <functional>
#include <string>

#include "percolattice/engine.hpp"
#include "percolattice/patch.hpp"

namespace percolattice {

// Renders every face as a regular polygon at its stored center/orientation.
// `fill_class` may return an empty string for the default fill.
std::string render_svg(const TilingPatch& patch,
                       const std::function<std::string(int)>& fill_class = {});

// Faces colored by infection round (seeds dark, later rounds lighter).
std::string render_svg_rounds(const TilingPatch& patch, const InfectionState& state);

}  // namespace percolattice
