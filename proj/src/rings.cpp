#include "percolattice/rings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "percolattice/engine.hpp"

namespace percolattice {

namespace {

int hexdist(int x, int y) { return (std::abs(x) + std::abs(y) + std::abs(x + y)) / 2; }

// Axial positions of the primary faces referenced by a secondary slot.
std::vector<std::pair<int, int>> slot_members(Family f, const FaceKey& k) {
    const std::string& label = lattice_template(f).slots[k.slot].label;
    if (f == Family::kTrihex3636) {
        if (label == "D") return {{k.x, k.y}, {k.x + 1, k.y}, {k.x, k.y + 1}};
        if (label == "U") return {{k.x + 1, k.y}, {k.x, k.y + 1}, {k.x + 1, k.y + 1}};
    } else if (f == Family::kTruncTrihex4612) {
        if (label == "Sa") return {{k.x, k.y}, {k.x + 1, k.y}};
        if (label == "Sb") return {{k.x, k.y}, {k.x, k.y + 1}};
        if (label == "Sc") return {{k.x, k.y}, {k.x - 1, k.y + 1}};
        if (label == "U") return {{k.x, k.y}, {k.x + 1, k.y}, {k.x, k.y + 1}};
        if (label == "D") return {{k.x + 1, k.y}, {k.x, k.y + 1}, {k.x + 1, k.y + 1}};
    }
    return {};
}

// Membership of a face in D_t per family. The primary face lives at its own
// axial position; squares need both endpoints inside, gap polygons need two
// of three.
bool in_core(Family f, const FaceKey& k, int t) {
    if (f == Family::kTruncSquare488) {
        const std::string& label = lattice_template(f).slots[k.slot].label;
        if (label == "O") return std::abs(k.x) <= t && std::abs(k.y) <= t;
        return -t <= k.x && k.x <= t - 1 && -t <= k.y && k.y <= t - 1;
    }
    const auto members = slot_members(f, k);
    if (members.empty()) return hexdist(k.x, k.y) <= t;
    int inside = 0;
    for (auto [x, y] : members)
        if (hexdist(x, y) <= t) ++inside;
    if (f == Family::kTruncTrihex4612 && members.size() == 2) return inside == 2;
    return inside >= 2;
}

struct HexRingWalk {
    // position -> (side index 0..5, is_corner)
    std::map<std::pair<int, int>, std::pair<int, bool>> at;
    std::vector<std::vector<std::pair<int, int>>> side_positions{6};
    std::vector<std::pair<int, int>> corner_positions;
};

HexRingWalk walk_hex_ring(int radius) {
    static const int dirs[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    HexRingWalk w;
    for (int i = 0; i < 6; ++i) {
        int cx = radius * dirs[i][0], cy = radius * dirs[i][1];
        w.at[{cx, cy}] = {i, true};
        w.corner_positions.push_back({cx, cy});
        const int sx = dirs[(i + 2) % 6][0], sy = dirs[(i + 2) % 6][1];
        for (int j = 1; j < radius; ++j) {
            std::pair<int, int> pos{cx + j * sx, cy + j * sy};
            w.at[pos] = {i, false};
            w.side_positions[i].push_back(pos);
        }
    }
    return w;
}

RingWindow hexlike_ring(Family f, int t) {
    const int pad = t + 2;
    std::map<FaceKey, int> ids;
    TilingPatch patch = build_selection(
        f, -pad, pad, -pad, pad,
        [&](const FaceKey& k) { return in_core(f, k, t + 1); }, &ids);
    patch.extent = "D" + std::to_string(t + 1);

    RingSpec ring;
    ring.family = family_name(f);
    ring.t = t;

    HexRingWalk walk = walk_hex_ring(t + 1);
    std::vector<SideSpec> sides(6);
    std::vector<std::vector<int>> corners(6);
    static const char* kSideNames[6] = {"E", "NE", "NW", "W", "SW", "SE"};
    for (int i = 0; i < 6; ++i) sides[i].label = kSideNames[i];

    const bool twelve_gon_seeds = f == Family::kTruncTrihex4612;
    for (const auto& [key, id] : ids) {
        if (in_core(f, key, t)) {
            ring.core.push_back(id);
            continue;
        }
        const auto members = slot_members(f, key);
        if (members.empty()) {
            auto it = walk.at.find({key.x, key.y});
            if (it == walk.at.end()) throw std::logic_error("ring hexagon off the walk");
            auto [side, corner] = it->second;
            if (corner)
                corners[side].push_back(id);
            else {
                sides[side].faces.push_back(id);
                sides[side].seedable.push_back(id);
            }
        } else {
            // Secondary ring face: corner set when it touches a corner
            // primary, else the side of its first ring primary.
            int side = -1;
            bool corner = false;
            for (auto [x, y] : members) {
                auto it = walk.at.find({x, y});
                if (it == walk.at.end()) continue;
                if (it->second.second) {
                    side = it->second.first;
                    corner = true;
                    break;
                }
                if (side < 0) side = it->second.first;
            }
            if (side < 0) throw std::logic_error("ring face with no ring primary");
            if (corner)
                corners[side].push_back(id);
            else {
                sides[side].faces.push_back(id);
                if (!twelve_gon_seeds) sides[side].seedable.push_back(id);
            }
        }
    }

    if (t == 0) {
        // Smallest case: the six petals are six one-face sides.
        std::vector<SideSpec> petal_sides;
        for (int i = 0; i < 6; ++i) {
            SideSpec s;
            s.label = kSideNames[i];
            s.faces = corners[i];
            for (int id : sides[i].faces) s.faces.push_back(id);
            for (int id : corners[i])
                if (patch.faces[id].sides != 3 || f == Family::kTrihex3636)
                    s.seedable.push_back(id);
            if (twelve_gon_seeds) {
                s.seedable.clear();
                for (int id : s.faces)
                    if (patch.faces[id].sides == 12) s.seedable.push_back(id);
            }
            petal_sides.push_back(std::move(s));
        }
        ring.sides = std::move(petal_sides);
    } else {
        ring.sides = std::move(sides);
        ring.corners = std::move(corners);
    }
    return {std::move(patch), std::move(ring)};
}

RingWindow trunc_square_ring(int t) {
    const Family f = Family::kTruncSquare488;
    std::map<FaceKey, int> ids;
    TilingPatch patch = build_selection(
        f, -(t + 2), t + 2, -(t + 2), t + 2,
        [&](const FaceKey& k) { return in_core(f, k, t + 1); }, &ids);
    patch.extent = "D" + std::to_string(t + 1);

    const LatticeTemplate& tpl = lattice_template(f);
    const int oct = tpl.slot_index("O");
    const int sq = tpl.slot_index("S");
    auto id_of = [&](int slot, int x, int y) { return ids.at(FaceKey{slot, x, y}); };

    RingSpec ring;
    ring.family = family_name(f);
    ring.t = t;
    for (const auto& [key, id] : ids)
        if (in_core(f, key, t)) ring.core.push_back(id);

    auto make_side = [&](const std::string& label, bool horizontal, int level,
                         int square_level) {
        SideSpec s;
        s.label = label;
        for (int c = -t; c <= t; ++c) {
            int id = horizontal ? id_of(oct, c, level) : id_of(oct, level, c);
            s.faces.push_back(id);
            s.seedable.push_back(id);
        }
        for (int c = -t; c <= t - 1; ++c)
            s.faces.push_back(horizontal ? id_of(sq, c, square_level)
                                         : id_of(sq, square_level, c));
        return s;
    };
    ring.sides.push_back(make_side("top", true, t + 1, t));
    ring.sides.push_back(make_side("bottom", true, -t - 1, -t - 1));
    ring.sides.push_back(make_side("left", false, -t - 1, -t - 1));
    ring.sides.push_back(make_side("right", false, t + 1, t));
    ring.corners.push_back({id_of(oct, t + 1, t + 1), id_of(sq, t, t)});
    ring.corners.push_back({id_of(oct, -t - 1, t + 1), id_of(sq, -t - 1, t)});
    ring.corners.push_back({id_of(oct, -t - 1, -t - 1), id_of(sq, -t - 1, -t - 1)});
    ring.corners.push_back({id_of(oct, t + 1, -t - 1), id_of(sq, t, -t - 1)});
    return {std::move(patch), std::move(ring)};
}

}  // namespace

RingWindow ring_decomposition(Family f, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    switch (f) {
        case Family::kTruncSquare488: return trunc_square_ring(t);
        case Family::kHex666:
        case Family::kTrihex3636:
        case Family::kTruncTrihex4612: return hexlike_ring(f, t);
        default:
            throw std::invalid_argument("ring decomposition unsupported for " +
                                        family_name(f));
    }
}

TilingPatch build_window(Family f, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (f != Family::kTruncSquare488 && f != Family::kHex666 &&
        f != Family::kTrihex3636 && f != Family::kTruncTrihex4612)
        throw std::invalid_argument("window unsupported for " + family_name(f));
    TilingPatch patch = build_selection(
        f, -(radius + 1), radius + 1, -(radius + 1), radius + 1,
        [&](const FaceKey& k) { return in_core(f, k, radius); }, nullptr);
    patch.extent = "D" + std::to_string(radius);
    return patch;
}

namespace {

int64_t floor_div64(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

struct StripWindowGeometry {
    const StripSequence* seq;
    int64_t scale;

    const StripDescriptor& row_desc(int row) const {
        const int n = static_cast<int>(seq->size());
        return (*seq)[((row % n) + n) % n];
    }

    std::pair<int64_t, int64_t> face_span(int row, int64_t index) const {
        const StripDescriptor& d = row_desc(row);
        int64_t phi = d.off_num * (scale / d.off_den);
        if (d.kind == StripKind::kSquare)
            return {index * scale + phi, (index + 1) * scale + phi};
        int64_t m = floor_div64(index, 3);
        int r = static_cast<int>(index - 3 * m);
        if (r == 0) return {2 * m * scale - scale + phi, 2 * m * scale + scale + phi};
        return {2 * m * scale + scale / 2 + phi, 2 * m * scale + 3 * scale / 2 + phi};
    }

    // Faces of `row` resting on [lo, hi]: non-triangular faces whose lower
    // boundary segment lies inside the interval, plus everything between the
    // first and last of them. Offset rows thus lean slightly toward the
    // center, as the construction requires.
    std::pair<int64_t, int64_t> supported_range(int row, int64_t lo, int64_t hi) const {
        const StripDescriptor& d = row_desc(row);
        int64_t phi = d.off_num * (scale / d.off_den);
        if (d.kind == StripKind::kSquare) {
            int64_t first = floor_div64(lo - phi + scale - 1, scale);
            int64_t last = floor_div64(hi - phi, scale) - 1;
            return {first, last};
        }
        // hexagon m bottom segment: [2m*scale - scale/2 + phi, ... + scale]
        int64_t m_first = floor_div64(lo - phi + scale / 2 + 2 * scale - 1, 2 * scale);
        int64_t m_last = floor_div64(hi - phi - scale / 2, 2 * scale);
        return {3 * m_first, 3 * m_last};
    }
};

}  // namespace

RingWindow strip_ring_decomposition(const StripSequence& seq, int t) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    int64_t scale = 2;
    for (const auto& d : seq) {
        int64_t g = std::gcd(scale, d.off_den);
        scale = scale / g * d.off_den;
    }
    scale *= 2;
    StripWindowGeometry geo{&seq, scale};

    // A_s intervals per row for s = t and s = t+1, rows -(s)..(s) around the
    // center row 0, which holds the non-triangular center face at index 0.
    // Rows are trimmed to start and end at non-triangular faces: every
    // in-row triangle then keeps both flanking hexagons inside the window,
    // and containment in the row below keeps every face supported.
    auto is_tri = [&](int r, int64_t i) {
        if (geo.row_desc(r).kind == StripKind::kSquare) return false;
        int64_t m = floor_div64(i, 3);
        return i - 3 * m != 0;
    };
    auto trim = [&](int r, std::pair<int64_t, int64_t> iv) {
        while (iv.first <= iv.second && is_tri(r, iv.first)) ++iv.first;
        while (iv.first <= iv.second && is_tri(r, iv.second)) --iv.second;
        return iv;
    };
    auto intervals_for = [&](int s) {
        std::map<int, std::pair<int64_t, int64_t>> iv;
        // Center row: at least 2s faces either side of the center face, ending
        // on non-triangular faces (s hexagon periods for hex rows).
        iv[0] = geo.row_desc(0).kind == StripKind::kHex
                    ? std::make_pair<int64_t, int64_t>(-3 * s, 3 * s)
                    : std::make_pair<int64_t, int64_t>(-2 * s, 2 * s);
        for (int r = 1; r <= s; ++r) {
            auto [plo, phi_] = iv[r - 1];
            auto lo_span = geo.face_span(r - 1, plo);
            auto hi_span = geo.face_span(r - 1, phi_);
            iv[r] = trim(r, geo.supported_range(r, lo_span.first, hi_span.second));
        }
        for (int r = -1; r >= -s; --r) {
            auto [plo, phi_] = iv[r + 1];
            auto lo_span = geo.face_span(r + 1, plo);
            auto hi_span = geo.face_span(r + 1, phi_);
            iv[r] = trim(r, geo.supported_range(r, lo_span.first, hi_span.second));
        }
        return iv;
    };
    auto inner = intervals_for(t);
    auto outer = intervals_for(t + 1);

    std::map<StripFaceKey, int> ids;
    auto range = [&](int r) {
        auto it = outer.find(r);
        if (it == outer.end()) return std::make_pair(int64_t{0}, int64_t{-1});
        return it->second;
    };
    TilingPatch patch = build_strip_rows(seq, -(t + 1), t + 1, range, &ids);
    patch.extent = "A" + std::to_string(t + 1);

    RingSpec ring;
    ring.family = strip_sequence_name(seq);
    ring.t = t;

    auto in_inner = [&](const StripFaceKey& k) {
        auto it = inner.find(k.row);
        return it != inner.end() && k.index >= it->second.first && k.index <= it->second.second;
    };
    for (const auto& [key, id] : ids)
        if (in_inner(key)) ring.core.push_back(id);

    SideSpec top, bottom, tl, tr, bl, br;
    top.label = "top";
    bottom.label = "bottom";
    tl.label = "top-left";
    tr.label = "top-right";
    bl.label = "bottom-left";
    br.label = "bottom-right";
    std::vector<int> left_mid, right_mid, tl_ovh, tr_ovh, bl_ovh, br_ovh;

    // The top/bottom sides are the faces directly above/below the inner top
    // and bottom rows (trimmed to non-triangular ends); outer-row faces
    // beyond them join the overhang corner sets.
    auto side_interval = [&](int r, int inner_row) {
        auto [lo, hi] = inner.at(inner_row);
        int64_t x_lo = geo.face_span(inner_row, lo).first;
        int64_t x_hi = geo.face_span(inner_row, hi).second;
        return trim(r, geo.supported_range(r, x_lo, x_hi));
    };
    auto [top_lo, top_hi] = side_interval(t + 1, t);
    auto [bot_lo, bot_hi] = side_interval(-(t + 1), -t);

    for (const auto& [key, id] : ids) {
        if (in_inner(key)) continue;
        const int r = key.row;
        if (r == t + 1) {
            if (key.index >= top_lo && key.index <= top_hi)
                top.faces.push_back(id);
            else if (key.index < top_lo)
                tl_ovh.push_back(id);
            else
                tr_ovh.push_back(id);
        } else if (r == -(t + 1)) {
            if (key.index >= bot_lo && key.index <= bot_hi)
                bottom.faces.push_back(id);
            else if (key.index < bot_lo)
                bl_ovh.push_back(id);
            else
                br_ovh.push_back(id);
        } else {
            auto [ilo, ihi] = inner.at(r);
            bool left = key.index < ilo;
            if (r > 0)
                (left ? tl : tr).faces.push_back(id);
            else if (r < 0)
                (left ? bl : br).faces.push_back(id);
            else
                (left ? left_mid : right_mid).push_back(id);
        }
    }

    // A seedable face is a non-triangular side face whose single infection,
    // on top of the infected core, fills its whole side at k = 2.
    AdjacencyCsr adj(patch);
    auto fill_seedable = [&](SideSpec& s) {
        for (int f : s.faces) {
            if (patch.faces[f].sides == 3) continue;
            std::vector<int> seed = ring.core;
            seed.push_back(f);
            InfectionState st = seed_explicit(patch, seed);
            run_bootstrap_csr(adj, st, 2);
            bool all = true;
            for (int g : s.faces)
                if (!st.infected[g]) all = false;
            if (all) s.seedable.push_back(f);
        }
    };
    for (SideSpec* s : {&top, &bottom, &tl, &tr, &bl, &br}) fill_seedable(*s);

    ring.sides = {std::move(top), std::move(bottom), std::move(tl),
                  std::move(tr), std::move(bl), std::move(br)};
    ring.corners = {std::move(left_mid), std::move(right_mid), std::move(tl_ovh),
                    std::move(tr_ovh), std::move(bl_ovh), std::move(br_ovh)};
    return {std::move(patch), std::move(ring)};
}

}  // namespace percolattice
