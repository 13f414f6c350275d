#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "percolattice/patch.hpp"

namespace percolattice {

enum class StripKind { kHex, kSquare };

// One strip row: kind plus an exact rational horizontal offset in units of
// the polygon side length.
struct StripDescriptor {
    StripKind kind;
    int64_t off_num = 0;
    int64_t off_den = 1;
};

using StripSequence = std::vector<StripDescriptor>;

// "hex:0,hex:1/2,square:0"
StripSequence parse_strip_sequence(const std::string& text);
std::string strip_sequence_name(const StripSequence& seq);

// Face identity within a strip patch: absolute row plus index along the row.
// Hex rows repeat [hexagon, up-triangle, down-triangle]; index 3m is the
// hexagon m, 3m+1 its up-triangle, 3m+2 its down-triangle. Square rows index
// squares directly.
struct StripFaceKey {
    int row;
    int64_t index;
    bool operator<(const StripFaceKey& o) const {
        if (row != o.row) return row < o.row;
        return index < o.index;
    }
};

bool strip_face_is_triangle(const StripSequence& seq, const StripFaceKey& key);

// Builds rows row_lo..row_hi; row r keeps face indices in range(r) (inclusive
// pair). Exterior boundary segments are counted exactly; cross-strip
// adjacency is positive-length overlap of boundary segments, computed in
// scaled integers.
TilingPatch build_strip_rows(const StripSequence& seq, int row_lo, int row_hi,
                             const std::function<std::pair<int64_t, int64_t>(int)>& range,
                             std::map<StripFaceKey, int>* ids);

// rows stacked upward from row 0, keeping faces overlapping (0, width) where
// width is measured in side lengths.
TilingPatch build_strip_tiling(const StripSequence& seq, int rows, int width);

}  // namespace percolattice
