#include "percolattice/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace percolattice {

namespace {

constexpr double kPi = 3.14159265358979323846;

double circumradius(int sides) { return 0.5 / std::sin(kPi / sides); }

}  // namespace

std::string render_svg(const TilingPatch& patch,
                       const std::function<std::string(int)>& fill_class) {
    double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
    for (const Face& f : patch.faces) {
        double r = circumradius(f.sides);
        min_x = std::min(min_x, f.cx - r);
        max_x = std::max(max_x, f.cx + r);
        min_y = std::min(min_y, f.cy - r);
        max_y = std::max(max_y, f.cy + r);
    }
    if (patch.faces.empty()) min_x = min_y = 0, max_x = max_y = 1;

    const double scale = 24.0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
        << (max_x - min_x) * scale << ' ' << (max_y - min_y) * scale << "\">\n";
    out << "<style>polygon{fill:#f4f1e8;stroke:#444;stroke-width:0.8}"
           ".infected{fill:#c0392b}.seed{fill:#7b1f14}"
           ".r1{fill:#d35400}.r2{fill:#e67e22}.r3{fill:#f39c12}"
           ".r4{fill:#f1c40f}.late{fill:#f7dc6f}.mark{fill:#2e86c1}</style>\n";
    for (int i = 0; i < patch.face_count(); ++i) {
        const Face& f = patch.faces[i];
        const double r = circumradius(f.sides);
        out << "<polygon points=\"";
        for (int v = 0; v < f.sides; ++v) {
            double a = (f.orient + 360.0 * v / f.sides) * kPi / 180.0;
            double x = (f.cx + r * std::cos(a) - min_x) * scale;
            double y = (max_y - (f.cy + r * std::sin(a))) * scale;
            out << x << ',' << y << ' ';
        }
        out << '"';
        if (fill_class) {
            std::string cls = fill_class(i);
            if (!cls.empty()) out << " class=\"" << cls << '"';
        }
        out << "/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_svg_rounds(const TilingPatch& patch, const InfectionState& state) {
    return render_svg(patch, [&](int i) -> std::string {
        if (!state.infected[i]) return "";
        int r = state.round[i];
        if (r == 0) return "seed";
        if (r <= 4) return "r" + std::to_string(r);
        return "late";
    });
}

}  // namespace percolattice
