#include "percolattice/strips.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace percolattice {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int mod_row(int r, int n) { return static_cast<int>(((r % n) + n) % n); }

struct Segment {
    int64_t lo, hi;
    int64_t index;  // owning face index within its row
};

struct RowGeometry {
    StripKind kind;
    int64_t phi;    // scaled offset
    int64_t scale;  // L: one side length in scaled units

    // Full horizontal extent of face `index`.
    std::pair<int64_t, int64_t> span(int64_t index) const {
        if (kind == StripKind::kSquare)
            return {index * scale + phi, (index + 1) * scale + phi};
        int64_t m = floor_div(index, 3);
        int r = static_cast<int>(index - 3 * m);
        if (r == 0) return {2 * m * scale - scale + phi, 2 * m * scale + scale + phi};
        return {2 * m * scale + scale / 2 + phi, 2 * m * scale + 3 * scale / 2 + phi};
    }

    bool is_triangle(int64_t index) const {
        if (kind == StripKind::kSquare) return false;
        int64_t m = floor_div(index, 3);
        return index - 3 * m != 0;
    }

    // Faces with a segment on the top (is_top) or bottom boundary, restricted
    // to indices in [lo, hi], reported left to right.
    std::vector<Segment> boundary(int64_t lo, int64_t hi, bool is_top) const {
        std::vector<Segment> out;
        for (int64_t i = lo; i <= hi; ++i) {
            if (kind == StripKind::kSquare) {
                out.push_back({i * scale + phi, (i + 1) * scale + phi, i});
                continue;
            }
            int64_t m = floor_div(i, 3);
            int r = static_cast<int>(i - 3 * m);
            if (r == 0) {
                out.push_back({2 * m * scale - scale / 2 + phi,
                               2 * m * scale + scale / 2 + phi, i});
            } else if ((r == 2) == is_top) {
                // down-triangles face up, up-triangles face down
                out.push_back({2 * m * scale + scale / 2 + phi,
                               2 * m * scale + 3 * scale / 2 + phi, i});
            }
        }
        return out;
    }

    // Smallest face index whose span has positive overlap with (x_lo, x_hi),
    // and the largest, or an empty range.
    std::pair<int64_t, int64_t> range_overlapping(int64_t x_lo, int64_t x_hi) const {
        if (kind == StripKind::kSquare) {
            int64_t lo = floor_div(x_lo - phi, scale);
            if (lo * scale + phi + scale <= x_lo) ++lo;
            int64_t hi = floor_div(x_hi - phi - 1, scale);
            return {lo, hi};
        }
        // Scan outward from a hexagon guess; spans overlap so walk both ends.
        int64_t m_lo = floor_div(x_lo - phi, 2 * scale) - 1;
        int64_t lo = 3 * m_lo;
        while (span(lo).second <= x_lo) ++lo;
        int64_t m_hi = floor_div(x_hi - phi, 2 * scale) + 1;
        int64_t hi = 3 * m_hi + 2;
        while (span(hi).first >= x_hi) --hi;
        return {lo, hi};
    }
};

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

}  // namespace

StripSequence parse_strip_sequence(const std::string& text) {
    StripSequence seq;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        if (!item.empty()) {
            size_t colon = item.find(':');
            std::string kind = colon == std::string::npos ? item : item.substr(0, colon);
            std::string off = colon == std::string::npos ? "0" : item.substr(colon + 1);
            StripDescriptor d;
            if (kind == "hex")
                d.kind = StripKind::kHex;
            else if (kind == "square")
                d.kind = StripKind::kSquare;
            else
                throw std::invalid_argument("unknown strip kind: " + kind);
            size_t slash = off.find('/');
            if (slash == std::string::npos) {
                d.off_num = std::stoll(off);
                d.off_den = 1;
            } else {
                d.off_num = std::stoll(off.substr(0, slash));
                d.off_den = std::stoll(off.substr(slash + 1));
                if (d.off_den <= 0) throw std::invalid_argument("bad strip offset");
            }
            int64_t g = gcd64(std::abs(d.off_num), d.off_den);
            if (g > 1) {
                d.off_num /= g;
                d.off_den /= g;
            }
            seq.push_back(d);
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (seq.empty()) throw std::invalid_argument("empty strip sequence");
    return seq;
}

std::string strip_sequence_name(const StripSequence& seq) {
    std::string out = "strips[";
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += seq[i].kind == StripKind::kHex ? "hex:" : "square:";
        out += std::to_string(seq[i].off_num);
        if (seq[i].off_den != 1) out += "/" + std::to_string(seq[i].off_den);
    }
    return out + "]";
}

bool strip_face_is_triangle(const StripSequence& seq, const StripFaceKey& key) {
    const StripDescriptor& d = seq[mod_row(key.row, static_cast<int>(seq.size()))];
    if (d.kind == StripKind::kSquare) return false;
    int64_t m = floor_div(key.index, 3);
    return key.index - 3 * m != 0;
}

TilingPatch build_strip_rows(const StripSequence& seq, int row_lo, int row_hi,
                             const std::function<std::pair<int64_t, int64_t>(int)>& range,
                             std::map<StripFaceKey, int>* ids) {
    if (seq.empty()) throw std::invalid_argument("empty strip sequence");
    if (row_hi < row_lo) throw std::invalid_argument("empty row range");
    const int n = static_cast<int>(seq.size());

    int64_t scale = 2;
    for (const auto& d : seq) scale = scale / gcd64(scale, d.off_den) * d.off_den;
    scale *= 2;  // half-side endpoints stay integral

    auto geometry = [&](int r) {
        const StripDescriptor& d = seq[mod_row(r, n)];
        return RowGeometry{d.kind, d.off_num * (scale / d.off_den), scale};
    };

    TilingPatch p;
    p.spec_name = strip_sequence_name(seq);
    p.topology = Topology::kOpen;

    std::map<StripFaceKey, int> local;
    std::vector<std::pair<int64_t, int64_t>> ranges(row_hi - row_lo + 1);

    double y_base = 0;
    std::vector<double> row_y(row_hi - row_lo + 2, 0.0);
    for (int r = row_lo; r <= row_hi; ++r) {
        row_y[r - row_lo] = y_base;
        y_base += geometry(r).kind == StripKind::kHex ? kSqrt3 : 1.0;
    }
    row_y[row_hi - row_lo + 1] = y_base;

    for (int r = row_lo; r <= row_hi; ++r) {
        RowGeometry geo = geometry(r);
        auto [lo, hi] = range(r);
        ranges[r - row_lo] = {lo, hi};
        if (lo > hi) continue;
        const double yb = row_y[r - row_lo];
        const double h = geo.kind == StripKind::kHex ? kSqrt3 : 1.0;
        for (int64_t i = lo; i <= hi; ++i) {
            StripFaceKey key{r, i};
            local[key] = p.face_count();
            Face f;
            auto [sx, sy] = geo.span(i);
            const double x_mid = 0.5 * (sx + sy) / scale;
            if (geo.kind == StripKind::kSquare) {
                f.sides = 4;
                f.cx = x_mid;
                f.cy = yb + 0.5;
                f.orient = 45;
            } else if (!geo.is_triangle(i)) {
                f.sides = 6;
                f.cx = x_mid;
                f.cy = yb + h / 2;
                f.orient = 0;
            } else {
                f.sides = 3;
                int64_t m = floor_div(i, 3);
                bool up = (i - 3 * m) == 1;
                f.cx = x_mid;
                f.cy = up ? yb + h / 6 : yb + h - h / 6;
                f.orient = up ? 90 : 30;
            }
            p.faces.push_back(f);
        }
    }

    auto lookup = [&](int r, int64_t i) -> int {
        auto it = local.find(StripFaceKey{r, i});
        return it == local.end() ? -1 : it->second;
    };

    // Segment counts feed the degree bookkeeping below.
    std::vector<int> segments(p.faces.size(), 0);
    for (int r = row_lo; r <= row_hi; ++r) {
        RowGeometry geo = geometry(r);
        auto [lo, hi] = ranges[r - row_lo];
        if (lo > hi) continue;
        for (int64_t i = lo; i <= hi; ++i) {
            int fid = local[StripFaceKey{r, i}];
            if (geo.kind == StripKind::kSquare) {
                segments[fid] = 2;  // left/right; top and bottom added below
                int left = lookup(r, i - 1);
                if (left >= 0) p.add_edge(fid, left);
            } else {
                int64_t m = floor_div(i, 3);
                int rem = static_cast<int>(i - 3 * m);
                segments[fid] = rem == 0 ? 4 : 2;
                if (rem == 0) {
                    // Each hexagon-triangle edge belongs to exactly one
                    // hexagon's candidate list, so no dedup is needed.
                    for (int64_t j : {3 * m - 2, 3 * m - 1, 3 * m + 1, 3 * m + 2}) {
                        int g = lookup(r, j);
                        if (g >= 0) p.add_edge(fid, g);
                    }
                }
            }
        }
    }

    // Cross-strip adjacency: positive-length overlap of top segments of row r
    // with bottom segments of row r+1.
    auto count_boundary = [&](int fid, int matched) {
        segments[fid] += std::max(1, matched);
    };
    for (int r = row_lo; r <= row_hi; ++r) {
        RowGeometry geo = geometry(r);
        auto [lo, hi] = ranges[r - row_lo];
        if (lo > hi) continue;
        std::vector<Segment> top = geo.boundary(lo, hi, true);
        std::vector<Segment> bottom_above;
        if (r < row_hi) {
            auto [alo, ahi] = ranges[r + 1 - row_lo];
            if (alo <= ahi) bottom_above = geometry(r + 1).boundary(alo, ahi, false);
        }
        std::vector<int> matched_top(top.size(), 0);
        std::vector<int64_t> matched_above;  // parallel to bottom_above
        matched_above.assign(bottom_above.size(), 0);
        size_t a = 0, b = 0;
        while (a < top.size() && b < bottom_above.size()) {
            const Segment& s = top[a];
            const Segment& t = bottom_above[b];
            if (std::max(s.lo, t.lo) < std::min(s.hi, t.hi)) {
                p.add_edge(lookup(r, s.index), lookup(r + 1, t.index));
                matched_top[a]++;
                matched_above[b]++;
            }
            if (s.hi < t.hi) ++a;
            else ++b;
        }
        for (size_t i = 0; i < top.size(); ++i)
            count_boundary(lookup(r, top[i].index), matched_top[i]);
        // Bottom boundary of row r+1 is accounted from this pass.
        if (r < row_hi)
            for (size_t i = 0; i < bottom_above.size(); ++i)
                count_boundary(lookup(r + 1, bottom_above[i].index),
                               static_cast<int>(matched_above[i]));
        if (r == row_lo) {
            // bottom boundary of the lowest row: all exterior
            std::vector<Segment> bottom = geo.boundary(lo, hi, false);
            for (const Segment& s : bottom) count_boundary(lookup(r, s.index), 0);
        }
        if (r == row_hi) {
            // top boundary handled above with no row r+1: matched stays 0
        }
    }

    p.sort_neighbors();
    p.edge_to_edge = true;
    for (int i = 0; i < p.face_count(); ++i) {
        p.faces[i].exterior_edges = segments[i] - static_cast<int>(p.faces[i].neighbors.size());
        if (segments[i] != p.faces[i].sides) p.edge_to_edge = false;
    }

    // Proper vertices: points where four faces all have corners.
    for (int r = row_lo; r <= row_hi; ++r) {
        RowGeometry geo = geometry(r);
        auto [lo, hi] = ranges[r - row_lo];
        if (lo > hi) continue;
        // in-strip waist vertices of hex rows
        if (geo.kind == StripKind::kHex) {
            for (int64_t i = lo; i <= hi; ++i) {
                int64_t m = floor_div(i, 3);
                if (i - 3 * m != 0) continue;
                int east = lookup(r, i);            // hexagon m
                int west = lookup(r, i - 3);        // hexagon m-1
                int north = lookup(r, i - 1);       // down m-1
                int south = lookup(r, i - 2);       // up m-1
                if (east >= 0 && west >= 0 && north >= 0 && south >= 0)
                    p.vertices.push_back({{east, north, west, south}});
            }
        }
        if (r == row_hi) continue;
        RowGeometry above = geometry(r + 1);
        auto [alo, ahi] = ranges[r + 1 - row_lo];
        if (alo > ahi) continue;
        std::vector<Segment> top = geo.boundary(lo, hi, true);
        std::vector<Segment> bot = above.boundary(alo, ahi, false);
        size_t bi = 0;
        for (size_t ti = 0; ti + 1 < top.size(); ++ti) {
            if (top[ti].hi != top[ti + 1].lo) continue;
            int64_t x = top[ti].hi;
            while (bi + 1 < bot.size() && bot[bi].hi < x) ++bi;
            if (bi + 1 >= bot.size()) break;
            if (bot[bi].hi == x && bot[bi + 1].lo == x) {
                int br = lookup(r, top[ti + 1].index);
                int bl = lookup(r, top[ti].index);
                int al = lookup(r + 1, bot[bi].index);
                int ar = lookup(r + 1, bot[bi + 1].index);
                if (br >= 0 && bl >= 0 && al >= 0 && ar >= 0)
                    p.vertices.push_back({{ar, al, bl, br}});
            }
        }
    }

    if (ids) *ids = std::move(local);
    return p;
}

TilingPatch build_strip_tiling(const StripSequence& seq, int rows, int width) {
    if (rows <= 0 || width <= 0) throw std::invalid_argument("extent must be positive");
    int64_t scale = 2;
    for (const auto& d : seq) scale = scale / gcd64(scale, d.off_den) * d.off_den;
    scale *= 2;
    const int n = static_cast<int>(seq.size());
    auto range = [&](int r) {
        const StripDescriptor& d = seq[mod_row(r, n)];
        RowGeometry geo{d.kind, d.off_num * (scale / d.off_den), scale};
        return geo.range_overlapping(0, width * scale);
    };
    TilingPatch p = build_strip_rows(seq, 0, rows - 1, range, nullptr);
    p.extent = std::to_string(rows) + "rows x" + std::to_string(width);
    return p;
}

}  // namespace percolattice
