#include "percolattice/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace percolattice {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt2 = 1.4142135623730951;

struct Builder {
    LatticeTemplate t;
    std::map<std::string, int> index;

    int slot(const std::string& label, int sides, double cx, double cy, double orient) {
        index[label] = static_cast<int>(t.slots.size());
        t.slots.push_back({label, sides, cx, cy, orient});
        return index[label];
    }
    void edge(const std::string& a, const std::string& b, int dx, int dy) {
        t.edges.push_back({index.at(a), {index.at(b), dx, dy}});
    }
    // Vertex given as label,dx,dy triples in counterclockwise order.
    void vertex(std::initializer_list<std::tuple<const char*, int, int>> ring) {
        VertexTemplate v;
        for (const auto& [label, dx, dy] : ring) v.ring.push_back({index.at(label), dx, dy});
        t.vertices.push_back(std::move(v));
    }
};

LatticeTemplate make_square() {
    Builder b;
    b.t.family = Family::kSquare4444;
    b.t.ux = 1; b.t.uy = 0; b.t.vx = 0; b.t.vy = 1;
    b.slot("S", 4, 0, 0, 45);
    b.edge("S", "S", 1, 0);
    b.edge("S", "S", 0, 1);
    b.vertex({{"S", 1, 0}, {"S", 1, 1}, {"S", 0, 1}, {"S", 0, 0}});
    return b.t;
}

LatticeTemplate make_hex() {
    Builder b;
    b.t.family = Family::kHex666;
    b.t.ux = 1.5; b.t.uy = kSqrt3 / 2; b.t.vx = 0; b.t.vy = kSqrt3;
    b.slot("H", 6, 0, 0, 0);
    b.edge("H", "H", 1, 0);
    b.edge("H", "H", 0, 1);
    b.edge("H", "H", -1, 1);
    b.vertex({{"H", 1, -1}, {"H", 1, 0}, {"H", 0, 0}});
    b.vertex({{"H", 1, 0}, {"H", 0, 1}, {"H", 0, 0}});
    return b.t;
}

LatticeTemplate make_triangular() {
    Builder b;
    b.t.family = Family::kTri333333;
    b.t.ux = 1; b.t.uy = 0; b.t.vx = 0.5; b.t.vy = kSqrt3 / 2;
    b.slot("U", 3, 0.5, kSqrt3 / 6, 90);
    b.slot("D", 3, 1.0, kSqrt3 / 3, 30);
    b.edge("U", "D", 0, 0);
    b.edge("U", "D", -1, 0);
    b.edge("U", "D", 0, -1);
    b.vertex({{"U", 0, 0}, {"D", -1, 0}, {"U", -1, 0}, {"D", -1, -1}, {"U", 0, -1}, {"D", 0, -1}});
    return b.t;
}

LatticeTemplate make_trihex() {
    Builder b;
    b.t.family = Family::kTrihex3636;
    b.t.ux = 2; b.t.uy = 0; b.t.vx = 1; b.t.vy = kSqrt3;
    b.slot("H", 6, 0, 0, 0);
    b.slot("D", 3, 1.0, 1.0 / kSqrt3, 30);
    b.slot("U", 3, 2.0, 2.0 / kSqrt3, 90);
    b.edge("D", "H", 0, 0);
    b.edge("D", "H", 1, 0);
    b.edge("D", "H", 0, 1);
    b.edge("U", "H", 1, 0);
    b.edge("U", "H", 0, 1);
    b.edge("U", "H", 1, 1);
    b.vertex({{"H", 1, 0}, {"D", 0, 0}, {"H", 0, 0}, {"U", 0, -1}});
    b.vertex({{"D", 0, 0}, {"H", 0, 1}, {"U", -1, 0}, {"H", 0, 0}});
    b.vertex({{"U", -1, 0}, {"H", -1, 1}, {"D", -1, 0}, {"H", 0, 0}});
    return b.t;
}

LatticeTemplate make_trunc_hex() {
    Builder b;
    b.t.family = Family::kTruncHex31212;
    const double a = 2 + kSqrt3;
    b.t.ux = a; b.t.uy = 0; b.t.vx = a / 2; b.t.vy = a * kSqrt3 / 2;
    b.slot("G", 12, 0, 0, 15);
    b.slot("U", 3, a / 2, a * kSqrt3 / 6, 30);
    b.slot("D", 3, a, a * kSqrt3 / 3, 90);
    b.edge("G", "G", 1, 0);
    b.edge("G", "G", 0, 1);
    b.edge("G", "G", -1, 1);
    b.edge("U", "G", 0, 0);
    b.edge("U", "G", 1, 0);
    b.edge("U", "G", 0, 1);
    b.edge("D", "G", 1, 0);
    b.edge("D", "G", 0, 1);
    b.edge("D", "G", 1, 1);
    b.vertex({{"G", 1, 0}, {"U", 0, 0}, {"G", 0, 0}});
    b.vertex({{"U", 0, 0}, {"G", 0, 1}, {"G", 0, 0}});
    b.vertex({{"G", 0, 1}, {"D", -1, 0}, {"G", 0, 0}});
    b.vertex({{"D", -1, 0}, {"G", -1, 1}, {"G", 0, 0}});
    b.vertex({{"G", -1, 1}, {"U", -1, 0}, {"G", 0, 0}});
    b.vertex({{"G", 1, 1}, {"G", 0, 1}, {"D", 0, 0}});
    return b.t;
}

LatticeTemplate make_trunc_square() {
    Builder b;
    b.t.family = Family::kTruncSquare488;
    const double a = 1 + kSqrt2;
    b.t.ux = a; b.t.uy = 0; b.t.vx = 0; b.t.vy = a;
    b.slot("O", 8, 0, 0, 22.5);
    b.slot("S", 4, a / 2, a / 2, 0);
    b.edge("O", "O", 1, 0);
    b.edge("O", "O", 0, 1);
    b.edge("S", "O", 0, 0);
    b.edge("S", "O", 1, 0);
    b.edge("S", "O", 0, 1);
    b.edge("S", "O", 1, 1);
    b.vertex({{"O", 1, 0}, {"S", 0, 0}, {"O", 0, 0}});
    b.vertex({{"S", 0, 0}, {"O", 0, 1}, {"O", 0, 0}});
    b.vertex({{"O", 1, 1}, {"S", 0, 0}, {"O", 1, 0}});
    b.vertex({{"O", 1, 1}, {"O", 0, 1}, {"S", 0, 0}});
    return b.t;
}

LatticeTemplate make_rhombitrihex() {
    Builder b;
    b.t.family = Family::kRhombi3464;
    const double h = kSqrt3 + 1;  // |u|: two hexagon apothems plus a square
    b.t.ux = h * kSqrt3 / 2; b.t.uy = h / 2;
    b.t.vx = 0; b.t.vy = kSqrt3 + 1;
    const double sq = (kSqrt3 + 1) / 4;
    b.slot("H", 6, 0, 0, 0);
    b.slot("Sa", 4, (3 + kSqrt3) / 4, sq, 75);
    b.slot("Sb", 4, 0, (kSqrt3 + 1) / 2, 45);
    b.slot("Sc", 4, -(3 + kSqrt3) / 4, sq, 15);
    b.slot("U", 3, (3 + kSqrt3) / 6, (kSqrt3 + 1) / 2, 0);
    b.slot("D", 3, (3 + kSqrt3) / 3, kSqrt3 + 1, 60);
    b.edge("H", "Sa", 0, 0);
    b.edge("H", "Sb", 0, 0);
    b.edge("H", "Sc", 0, 0);
    b.edge("H", "Sa", -1, 0);
    b.edge("H", "Sb", 0, -1);
    b.edge("H", "Sc", 1, -1);
    b.edge("U", "Sa", 0, 0);
    b.edge("U", "Sb", 0, 0);
    b.edge("U", "Sc", 1, 0);
    b.edge("D", "Sb", 1, 0);
    b.edge("D", "Sa", 0, 1);
    b.edge("D", "Sc", 1, 0);
    b.vertex({{"Sc", 1, -1}, {"D", 0, -1}, {"Sa", 0, 0}, {"H", 0, 0}});
    b.vertex({{"Sa", 0, 0}, {"U", 0, 0}, {"Sb", 0, 0}, {"H", 0, 0}});
    b.vertex({{"Sb", 0, 0}, {"D", -1, 0}, {"Sc", 0, 0}, {"H", 0, 0}});
    b.vertex({{"H", 0, 0}, {"Sc", 0, 0}, {"U", -1, 0}, {"Sa", -1, 0}});
    b.vertex({{"Sb", 0, -1}, {"H", 0, 0}, {"Sa", -1, 0}, {"D", -1, -1}});
    b.vertex({{"U", 0, -1}, {"Sc", 1, -1}, {"H", 0, 0}, {"Sb", 0, -1}});
    return b.t;
}

LatticeTemplate make_trunc_trihex() {
    Builder b;
    b.t.family = Family::kTruncTrihex4612;
    const double span = 3 + kSqrt3;
    b.t.ux = span * kSqrt3 / 2; b.t.uy = span / 2;
    b.t.vx = 0; b.t.vy = span;
    b.slot("G", 12, 0, 0, 15);
    b.slot("Sa", 4, span * kSqrt3 / 4, span / 4, 75);
    b.slot("Sb", 4, 0, span / 2, 45);
    b.slot("Sc", 4, -span * kSqrt3 / 4, span / 4, 15);
    b.slot("U", 6, span * kSqrt3 / 6, span / 2, 30);
    b.slot("D", 6, span * kSqrt3 / 3, span, 30);
    b.edge("G", "Sa", 0, 0);
    b.edge("G", "Sb", 0, 0);
    b.edge("G", "Sc", 0, 0);
    b.edge("G", "Sa", -1, 0);
    b.edge("G", "Sb", 0, -1);
    b.edge("G", "Sc", 1, -1);
    b.edge("G", "U", 0, 0);
    b.edge("G", "U", -1, 0);
    b.edge("G", "U", 0, -1);
    b.edge("G", "D", -1, 0);
    b.edge("G", "D", -1, -1);
    b.edge("G", "D", 0, -1);
    b.edge("U", "Sa", 0, 0);
    b.edge("U", "Sb", 0, 0);
    b.edge("U", "Sc", 1, 0);
    b.edge("D", "Sb", 1, 0);
    b.edge("D", "Sa", 0, 1);
    b.edge("D", "Sc", 1, 0);
    b.vertex({{"D", 0, -1}, {"Sa", 0, 0}, {"G", 0, 0}});
    b.vertex({{"Sa", 0, 0}, {"U", 0, 0}, {"G", 0, 0}});
    b.vertex({{"U", 0, 0}, {"Sb", 0, 0}, {"G", 0, 0}});
    b.vertex({{"Sb", 0, 0}, {"D", -1, 0}, {"G", 0, 0}});
    b.vertex({{"D", -1, 0}, {"Sc", 0, 0}, {"G", 0, 0}});
    b.vertex({{"Sc", 0, 0}, {"U", -1, 0}, {"G", 0, 0}});
    b.vertex({{"G", 0, 0}, {"U", -1, 0}, {"Sa", -1, 0}});
    b.vertex({{"G", 0, 0}, {"Sa", -1, 0}, {"D", -1, -1}});
    b.vertex({{"G", 0, 0}, {"D", -1, -1}, {"Sb", 0, -1}});
    b.vertex({{"G", 0, 0}, {"Sb", 0, -1}, {"U", 0, -1}});
    b.vertex({{"Sc", 1, -1}, {"G", 0, 0}, {"U", 0, -1}});
    b.vertex({{"D", 0, -1}, {"Sc", 1, -1}, {"G", 0, 0}});
    return b.t;
}

LatticeTemplate make_elongated() {
    Builder b;
    b.t.family = Family::kElongated33344;
    b.t.ux = 1; b.t.uy = 0; b.t.vx = 0.5; b.t.vy = 1 + kSqrt3 / 2;
    b.slot("S", 4, 0, 0, 45);
    b.slot("U", 3, 0, 0.5 + kSqrt3 / 6, 90);
    b.slot("D", 3, 0.5, 0.5 + kSqrt3 / 3, 30);
    b.edge("S", "S", 1, 0);
    b.edge("S", "U", 0, 0);
    b.edge("U", "D", 0, 0);
    b.edge("D", "U", 1, 0);
    b.edge("D", "S", 0, 1);
    b.vertex({{"S", 0, 0}, {"U", 0, 0}, {"D", -1, 0}, {"U", -1, 0}, {"S", -1, 0}});
    b.vertex({{"D", 0, 0}, {"S", 0, 1}, {"S", -1, 1}, {"D", -1, 0}, {"U", 0, 0}});
    return b.t;
}

LatticeTemplate make_snub_square() {
    Builder b;
    b.t.family = Family::kSnubSquare33434;
    const double a = 1.9318516525781366;  // 2*cos(15 deg)
    b.t.ux = a; b.t.uy = 0; b.t.vx = 0; b.t.vy = a;
    const double r = 0.7886751345948129;  // square apothem + triangle apothem
    const double rc = r * 0.9659258262890683, rs = r * 0.25881904510252074;
    b.slot("F", 4, 0, 0, 30);
    b.slot("W", 4, a / 2, a / 2, 60);
    b.slot("P", 3, rc, -rs, 345);
    b.slot("Q", 3, a - rc, rs, 45);
    b.slot("R", 3, rs, rc, 75);
    b.slot("T", 3, -rs, a - rc, 15);
    b.edge("P", "F", 0, 0);
    b.edge("P", "Q", 0, 0);
    b.edge("P", "W", 0, -1);
    b.edge("Q", "F", 1, 0);
    b.edge("Q", "W", 0, 0);
    b.edge("R", "F", 0, 0);
    b.edge("R", "T", 0, 0);
    b.edge("R", "W", 0, 0);
    b.edge("T", "F", 0, 1);
    b.edge("T", "W", -1, 0);
    b.vertex({{"P", 0, 0}, {"Q", 0, 0}, {"W", 0, 0}, {"R", 0, 0}, {"F", 0, 0}});
    b.vertex({{"R", 0, 0}, {"T", 0, 0}, {"W", -1, 0}, {"Q", -1, 0}, {"F", 0, 0}});
    b.vertex({{"F", 0, 0}, {"Q", -1, 0}, {"P", -1, 0}, {"W", -1, -1}, {"T", 0, -1}});
    b.vertex({{"P", 0, 0}, {"F", 0, 0}, {"T", 0, -1}, {"R", 0, -1}, {"W", 0, -1}});
    return b.t;
}

LatticeTemplate make_snub_hex() {
    Builder b;
    b.t.family = Family::kSnubHex33336;
    b.t.ux = 2; b.t.uy = kSqrt3;
    b.t.vx = -0.5; b.t.vy = 3 * kSqrt3 / 2;
    const double r = 2 / kSqrt3;  // hex apothem + triangle apothem
    b.slot("H", 6, 0, 0, 0);
    b.slot("Aa", 3, r * kSqrt3 / 2, r / 2, 30);
    b.slot("Ba", 3, 2 - r * kSqrt3 / 2, kSqrt3 - r / 2, 90);
    b.slot("Ab", 3, 0, r, 90);
    b.slot("Bb", 3, -0.5, 3 * kSqrt3 / 2 - r, 30);
    b.slot("Ac", 3, -r * kSqrt3 / 2, r / 2, 30);
    b.slot("Bc", 3, -2.5 + r * kSqrt3 / 2, kSqrt3 / 2 - r / 2, 90);
    b.slot("U", 3, 0.5, (kSqrt3 + 3 * kSqrt3 / 2) / 3, 30);
    b.slot("D", 3, 1.0, (kSqrt3 + 3 * kSqrt3 / 2 + 5 * kSqrt3 / 2) / 3, 90);
    b.edge("H", "Aa", 0, 0);
    b.edge("H", "Ab", 0, 0);
    b.edge("H", "Ac", 0, 0);
    b.edge("H", "Ba", -1, 0);
    b.edge("H", "Bb", 0, -1);
    b.edge("H", "Bc", 1, -1);
    b.edge("Aa", "Ba", 0, 0);
    b.edge("Ab", "Bb", 0, 0);
    b.edge("Ac", "Bc", 0, 0);
    b.edge("U", "Ba", 0, 0);
    b.edge("U", "Ab", 0, 0);
    b.edge("U", "Bc", 1, 0);
    b.edge("D", "Aa", 0, 1);
    b.edge("D", "Bb", 1, 0);
    b.edge("D", "Ac", 1, 0);
    b.vertex({{"Ac", 1, -1}, {"D", 0, -1}, {"Aa", 0, 0}, {"H", 0, 0}, {"Bc", 1, -1}});
    b.vertex({{"Aa", 0, 0}, {"Ba", 0, 0}, {"U", 0, 0}, {"Ab", 0, 0}, {"H", 0, 0}});
    b.vertex({{"Ab", 0, 0}, {"Bb", 0, 0}, {"D", -1, 0}, {"Ac", 0, 0}, {"H", 0, 0}});
    b.vertex({{"H", 0, 0}, {"Ac", 0, 0}, {"Bc", 0, 0}, {"U", -1, 0}, {"Ba", -1, 0}});
    b.vertex({{"H", 0, 0}, {"Ba", -1, 0}, {"Aa", -1, 0}, {"D", -1, -1}, {"Bb", 0, -1}});
    b.vertex({{"Bc", 1, -1}, {"H", 0, 0}, {"Bb", 0, -1}, {"Ab", 0, -1}, {"U", 0, -1}});
    return b.t;
}

const std::map<Family, LatticeTemplate>& templates() {
    static const std::map<Family, LatticeTemplate> all = [] {
        std::map<Family, LatticeTemplate> m;
        for (auto t : {make_triangular(), make_snub_hex(), make_elongated(),
                       make_snub_square(), make_rhombitrihex(), make_trihex(),
                       make_square(), make_trunc_hex(), make_trunc_trihex(),
                       make_trunc_square(), make_hex()})
            m.emplace(t.family, std::move(t));
        return m;
    }();
    return all;
}

}  // namespace

int LatticeTemplate::slot_index(const std::string& label) const {
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("no slot " + label);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::kTri333333: return "3.3.3.3.3.3";
        case Family::kSnubHex33336: return "3.3.3.3.6";
        case Family::kElongated33344: return "3.3.3.4.4";
        case Family::kSnubSquare33434: return "3.3.4.3.4";
        case Family::kRhombi3464: return "3.4.6.4";
        case Family::kTrihex3636: return "3.6.3.6";
        case Family::kSquare4444: return "4.4.4.4";
        case Family::kTruncHex31212: return "3.12.12";
        case Family::kTruncTrihex4612: return "4.6.12";
        case Family::kTruncSquare488: return "4.8.8";
        case Family::kHex666: return "6.6.6";
    }
    throw std::logic_error("bad family");
}

Family parse_family(const std::string& name) {
    for (Family f : all_families())
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown lattice family: " + name);
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> v = {
        Family::kTri333333,    Family::kSnubHex33336,  Family::kElongated33344,
        Family::kSnubSquare33434, Family::kRhombi3464, Family::kTrihex3636,
        Family::kSquare4444,   Family::kTruncHex31212, Family::kTruncTrihex4612,
        Family::kTruncSquare488, Family::kHex666,
    };
    return v;
}

int lattice_threshold(Family f) {
    switch (f) {
        case Family::kTri333333:
        case Family::kSnubHex33336:
        case Family::kElongated33344:
        case Family::kSnubSquare33434:
        case Family::kRhombi3464: return 1;
        case Family::kTrihex3636:
        case Family::kSquare4444: return 2;
        case Family::kTruncHex31212:
        case Family::kTruncTrihex4612:
        case Family::kTruncSquare488:
        case Family::kHex666: return 3;
    }
    throw std::logic_error("bad family");
}

const LatticeTemplate& lattice_template(Family f) { return templates().at(f); }

TilingPatch build_archimedean(Family f, int cells_x, int cells_y, Topology topology) {
    const LatticeTemplate& t = lattice_template(f);
    if (cells_x <= 0 || cells_y <= 0)
        throw std::invalid_argument("extent must be positive");
    if (topology == Topology::kTorus &&
        (cells_x < kMinTorusCells || cells_y < kMinTorusCells))
        throw std::invalid_argument(
            "torus extent below adjacency-simplicity minimum " +
            std::to_string(kMinTorusCells) + "x" + std::to_string(kMinTorusCells) +
            " for " + family_name(f));

    if (topology == Topology::kOpen) {
        TilingPatch p = build_selection(f, 0, cells_x - 1, 0, cells_y - 1,
                                        [](const FaceKey&) { return true; }, nullptr);
        p.extent = std::to_string(cells_x) + "x" + std::to_string(cells_y);
        return p;
    }

    TilingPatch p;
    p.spec_name = family_name(f);
    p.topology = Topology::kTorus;
    p.extent = std::to_string(cells_x) + "x" + std::to_string(cells_y);
    const int ns = static_cast<int>(t.slots.size());
    p.faces.resize(static_cast<size_t>(cells_x) * cells_y * ns);
    auto id = [&](int slot, int x, int y) {
        x = ((x % cells_x) + cells_x) % cells_x;
        y = ((y % cells_y) + cells_y) % cells_y;
        return (y * cells_x + x) * ns + slot;
    };
    for (int y = 0; y < cells_y; ++y)
        for (int x = 0; x < cells_x; ++x)
            for (int s = 0; s < ns; ++s) {
                Face& face = p.faces[id(s, x, y)];
                face.sides = t.slots[s].sides;
                face.cx = t.slots[s].cx + x * t.ux + y * t.vx;
                face.cy = t.slots[s].cy + x * t.uy + y * t.vy;
                face.orient = t.slots[s].orient;
            }
    for (int y = 0; y < cells_y; ++y)
        for (int x = 0; x < cells_x; ++x)
            for (const EdgeRule& e : t.edges)
                p.add_edge(id(e.slot_a, x, y), id(e.b.slot, x + e.b.dx, y + e.b.dy));
    p.sort_neighbors();
    for (int y = 0; y < cells_y; ++y)
        for (int x = 0; x < cells_x; ++x)
            for (const VertexTemplate& vt : t.vertices) {
                PatchVertex v;
                for (const SlotRef& r : vt.ring)
                    v.faces.push_back(id(r.slot, x + r.dx, y + r.dy));
                p.vertices.push_back(std::move(v));
            }
    return p;
}

TilingPatch build_selection(Family f, int x0, int x1, int y0, int y1,
                            const std::function<bool(const FaceKey&)>& keep,
                            std::map<FaceKey, int>* ids) {
    const LatticeTemplate& t = lattice_template(f);
    TilingPatch p;
    p.spec_name = family_name(f);
    p.topology = Topology::kOpen;
    const int ns = static_cast<int>(t.slots.size());

    std::map<FaceKey, int> local;
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            for (int s = 0; s < ns; ++s) {
                FaceKey key{s, x, y};
                if (!keep(key)) continue;
                int fid = p.face_count();
                local[key] = fid;
                Face face;
                face.sides = t.slots[s].sides;
                face.cx = t.slots[s].cx + x * t.ux + y * t.vx;
                face.cy = t.slots[s].cy + x * t.uy + y * t.vy;
                face.orient = t.slots[s].orient;
                p.faces.push_back(face);
            }

    auto lookup = [&](int slot, int x, int y) -> int {
        auto it = local.find(FaceKey{slot, x, y});
        return it == local.end() ? -1 : it->second;
    };

    for (int y = y0 - 1; y <= y1 + 1; ++y)
        for (int x = x0 - 1; x <= x1 + 1; ++x)
            for (const EdgeRule& e : t.edges) {
                int a = lookup(e.slot_a, x, y);
                int b = lookup(e.b.slot, x + e.b.dx, y + e.b.dy);
                if (a >= 0 && b >= 0) {
                    p.add_edge(a, b);
                } else if (a >= 0) {
                    p.faces[a].exterior_edges++;
                } else if (b >= 0) {
                    p.faces[b].exterior_edges++;
                }
            }
    p.sort_neighbors();

    for (int y = y0 - 1; y <= y1 + 1; ++y)
        for (int x = x0 - 1; x <= x1 + 1; ++x)
            for (const VertexTemplate& vt : t.vertices) {
                PatchVertex v;
                bool complete = true;
                for (const SlotRef& r : vt.ring) {
                    int fid = lookup(r.slot, x + r.dx, y + r.dy);
                    if (fid < 0) {
                        complete = false;
                        break;
                    }
                    v.faces.push_back(fid);
                }
                if (complete) p.vertices.push_back(std::move(v));
            }
    if (ids) *ids = std::move(local);
    return p;
}

}  // namespace percolattice
