#include "percolattice/config.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace percolattice {

bool Configuration::adjacent(int a, int b) const {
    const auto& nb = adjacency[a];
    return std::find(nb.begin(), nb.end(), b) != nb.end();
}

bool Configuration::connected() const {
    if (sides.empty()) return false;
    std::vector<bool> seen(sides.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        ++count;
        for (int g : adjacency[f])
            if (!seen[g]) {
                seen[g] = true;
                stack.push_back(g);
            }
    }
    return count == size();
}

BlockingReport verify_blocking(const TilingPatch& patch, const std::vector<int>& face_set,
                               int k) {
    if (face_set.empty()) throw std::invalid_argument("empty face set");
    std::set<int> inside(face_set.begin(), face_set.end());
    BlockingReport rep;
    rep.max_external = 0;
    for (int f : face_set) {
        if (f < 0 || f >= patch.face_count())
            throw std::invalid_argument("face out of range");
        if (patch.clipped(f))
            throw std::runtime_error("face " + std::to_string(f) +
                                     " has a clipped neighborhood");
        int external = 0;
        for (int g : patch.faces[f].neighbors)
            if (!inside.count(g)) ++external;
        rep.max_external = std::max(rep.max_external, external);
    }
    rep.ok = rep.max_external <= k;
    return rep;
}

std::vector<std::vector<int>> find_copies(const TilingPatch& patch,
                                          const Configuration& config, int limit) {
    if (!config.connected()) throw std::invalid_argument("configuration not connected");
    const int n = config.size();

    // Assignment order: BFS from face 0 so each new face attaches to a
    // previously mapped neighbor.
    std::vector<int> order, parent(n, -1);
    {
        std::vector<bool> seen(n, false);
        std::vector<int> queue = {0};
        seen[0] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            order.push_back(f);
            for (int g : config.adjacency[f])
                if (!seen[g]) {
                    seen[g] = true;
                    parent[g] = f;
                    queue.push_back(g);
                }
        }
    }

    std::set<std::vector<int>> images;
    std::vector<std::vector<int>> results;
    std::vector<int> map_to(n, -1);
    std::vector<char> used(patch.face_count(), 0);

    std::function<bool(size_t)> extend = [&](size_t depth) -> bool {
        if (static_cast<int>(results.size()) >= limit && limit > 0) return true;
        if (depth == order.size()) {
            std::vector<int> image;
            for (int v : map_to) image.push_back(v);
            std::vector<int> key = image;
            std::sort(key.begin(), key.end());
            if (images.insert(key).second) results.push_back(image);
            return false;
        }
        int cf = order[depth];
        std::vector<int> candidates;
        if (parent[cf] < 0) {
            for (int i = 0; i < patch.face_count(); ++i) candidates.push_back(i);
        } else {
            candidates = patch.faces[map_to[parent[cf]]].neighbors;
        }
        for (int cand : candidates) {
            if (used[cand]) continue;
            if (patch.faces[cand].sides != config.sides[cf]) continue;
            if (patch.clipped(cand)) continue;
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) {
                if (map_to[g] < 0 || g == cf) continue;
                if (config.adjacent(cf, g) != patch.adjacent(cand, map_to[g])) ok = false;
            }
            if (!ok) continue;
            map_to[cf] = cand;
            used[cand] = 1;
            bool stop = extend(depth + 1);
            used[cand] = 0;
            map_to[cf] = -1;
            if (stop) return true;
        }
        return false;
    };
    extend(0);
    return results;
}

Configuration config_from_patch(const TilingPatch& patch, const std::vector<int>& face_ids,
                                const std::string& name, int blocking_k,
                                const std::string& home) {
    Configuration c;
    c.name = name;
    c.blocking_k = blocking_k;
    c.home = home;
    std::map<int, int> index;
    for (size_t i = 0; i < face_ids.size(); ++i) index[face_ids[i]] = static_cast<int>(i);
    c.sides.resize(face_ids.size());
    c.adjacency.resize(face_ids.size());
    for (size_t i = 0; i < face_ids.size(); ++i) {
        c.sides[i] = patch.faces[face_ids[i]].sides;
        for (int g : patch.faces[face_ids[i]].neighbors) {
            auto it = index.find(g);
            if (it != index.end()) c.adjacency[i].push_back(it->second);
        }
    }
    if (!c.connected())
        throw std::invalid_argument("configuration " + name + " is not connected");
    return c;
}

namespace {

// Bespoke open window holding the 31-face configuration: a 12-gon ringed by
// six squares and six hexagons alternating, six corner triangles, and twelve
// outer squares, padded with one layer of exterior faces so every
// configuration face keeps a full neighborhood.
ConfigInstance make_ring31_instance() {
    TilingPatch p;
    p.spec_name = "ring31-window";
    p.topology = Topology::kOpen;
    p.extent = "ring31";
    p.edge_to_edge = true;

    auto add_face = [&](int sides, double cx, double cy, double orient) {
        Face f;
        f.sides = sides;
        f.cx = cx;
        f.cy = cy;
        f.orient = orient;
        p.faces.push_back(f);
        return p.face_count() - 1;
    };
    constexpr double kPi = 3.14159265358979323846;
    auto polar = [&](double r, double deg) {
        return std::pair<double, double>{r * std::cos(deg * kPi / 180.0),
                                         r * std::sin(deg * kPi / 180.0)};
    };

    int center = add_face(12, 0, 0, 15);
    std::vector<int> A(6), X(6), R(6), Blo(6), Bhi(6);
    for (int i = 0; i < 6; ++i) {
        auto [ax, ay] = polar(1.285, 60.0 * i);
        A[i] = add_face(4, ax, ay, 60.0 * i + 15);
        auto [hx, hy] = polar(1.485, 60.0 * i + 30);
        X[i] = add_face(6, hx, hy, 60.0 * i);
        auto [rx, ry] = polar(1.96, 60.0 * i);
        R[i] = add_face(3, rx, ry, 60.0 * i + 60);
        auto [lx, ly] = polar(1.96, 60.0 * i + 19);
        Blo[i] = add_face(4, lx, ly, 60.0 * i + 30);
        auto [ux, uy] = polar(1.96, 60.0 * i + 41);
        Bhi[i] = add_face(4, ux, uy, 60.0 * i + 30);
    }
    auto next = [](int i) { return (i + 1) % 6; };
    auto prev = [](int i) { return (i + 5) % 6; };
    for (int i = 0; i < 6; ++i) {
        p.add_edge(center, A[i]);
        p.add_edge(center, X[i]);
        p.add_edge(A[i], X[i]);
        p.add_edge(A[i], X[prev(i)]);
        p.add_edge(A[i], R[i]);
        p.add_edge(X[i], Blo[i]);
        p.add_edge(X[i], Bhi[i]);
        p.add_edge(R[i], Blo[i]);
        p.add_edge(R[i], Bhi[prev(i)]);
    }
    // Exterior padding: one free edge per hexagon, two per outer square.
    for (int i = 0; i < 6; ++i) {
        auto [ex, ey] = polar(2.6, 60.0 * i + 30);
        int e = add_face(12, ex, ey, 0);
        p.add_edge(X[i], e);
        for (int b : {Blo[i], Bhi[i]}) {
            for (int j = 0; j < 2; ++j) {
                int e2 = add_face(6, p.faces[b].cx * 1.6, p.faces[b].cy * 1.6, 0);
                p.add_edge(b, e2);
            }
        }
    }
    p.sort_neighbors();
    for (Face& f : p.faces)
        f.exterior_edges = f.sides - static_cast<int>(f.neighbors.size());

    // Interior vertices: 12-gon corners (two per sector) and the two corners
    // of each inner square shared with the triangle.
    for (int i = 0; i < 6; ++i) {
        p.vertices.push_back({{A[i], X[i], center}});
        p.vertices.push_back({{X[i], A[next(i)], center}});
        p.vertices.push_back({{R[i], Blo[i], X[i], A[i]}});
        p.vertices.push_back({{A[i], X[prev(i)], Bhi[prev(i)], R[i]}});
    }

    std::vector<int> ids = {center};
    for (int i = 0; i < 6; ++i) {
        ids.push_back(A[i]);
        ids.push_back(X[i]);
        ids.push_back(R[i]);
        ids.push_back(Blo[i]);
        ids.push_back(Bhi[i]);
    }
    ConfigInstance inst;
    inst.config = config_from_patch(p, ids, "ring-of-31", 2, "ring31-window");
    inst.patch = std::move(p);
    inst.face_ids = std::move(ids);
    return inst;
}

// Face ids for template keys on a torus patch built with build_archimedean.
struct TorusIndex {
    const LatticeTemplate* tpl;
    int cells;
    int id(const std::string& slot, int x, int y) const {
        int s = tpl->slot_index(slot);
        x = ((x % cells) + cells) % cells;
        y = ((y % cells) + cells) % cells;
        return (y * cells + x) * static_cast<int>(tpl->slots.size()) + s;
    }
};

ConfigInstance embedded(Family family, int cells, const std::string& name, int k,
                        std::vector<std::tuple<std::string, int, int>> keys) {
    TilingPatch patch = build_archimedean(family, cells, cells, Topology::kTorus);
    TorusIndex idx{&lattice_template(family), cells};
    const int c = cells / 2;  // keep the pattern away from the wrap seam
    std::vector<int> ids;
    for (const auto& [slot, x, y] : keys) ids.push_back(idx.id(slot, x + c, y + c));
    ConfigInstance inst;
    inst.config = config_from_patch(patch, ids, name, k, family_name(family));
    inst.patch = std::move(patch);
    inst.face_ids = std::move(ids);
    return inst;
}

std::vector<ConfigInstance> build_instances() {
    std::vector<ConfigInstance> out;

    // Upper-bound configurations, one per non-regular lattice.
    out.push_back(embedded(Family::kTruncHex31212, 6, "3.12.12-cap", 3,
                           {{"U", 0, 0}}));
    out.push_back(embedded(Family::kTruncTrihex4612, 6, "4.6.12-cap", 3,
                           {{"U", 0, 0}, {"Sa", 0, 0}, {"Sb", 0, 0}, {"Sc", 1, 0}}));
    out.push_back(embedded(
        Family::kTruncSquare488, 8, "4.8.8-cap", 3,
        {{"O", 0, 0}, {"O", 1, 0}, {"O", 2, 0}, {"O", 0, 1}, {"O", 1, 1}, {"O", 2, 1},
         {"S", -1, 1}, {"S", 0, 1}, {"S", 1, 1}, {"S", 2, 1},
         {"S", -1, 0}, {"S", 0, 0}, {"S", 1, 0}, {"S", 2, 0},
         {"S", -1, -1}, {"S", 0, -1}, {"S", 1, -1}, {"S", 2, -1}}));
    out.push_back(embedded(Family::kTrihex3636, 8, "3.6.3.6-cap", 2,
                           {{"H", 0, 0}, {"H", 0, 1}, {"H", -1, 1}, {"H", -1, 2},
                            {"D", -1, 1}, {"U", -1, 0},
                            {"D", 0, -1}, {"U", -2, 2},
                            {"D", -1, 0}, {"U", -1, 1}, {"D", 0, 0}, {"U", -2, 1}}));
    out.push_back(embedded(Family::kRhombi3464, 6, "3.4.6.4-cap", 1,
                           {{"H", 0, 0}, {"Sa", 0, 0}, {"Sb", 0, 0}, {"Sc", 0, 0},
                            {"Sa", -1, 0}, {"Sb", 0, -1}, {"Sc", 1, -1},
                            {"D", 0, -1}, {"U", 0, 0}, {"D", -1, 0},
                            {"U", -1, 0}, {"D", -1, -1}, {"U", 0, -1}}));
    out.push_back(embedded(Family::kSnubHex33336, 6, "3.3.3.3.6-cap", 1,
                           {{"H", 0, 0},
                            {"Aa", 0, 0}, {"Ab", 0, 0}, {"Ac", 0, 0},
                            {"Ba", -1, 0}, {"Bb", 0, -1}, {"Bc", 1, -1},
                            {"Ba", 0, 0}, {"D", 0, -1},
                            {"Bb", 0, 0}, {"U", 0, 0},
                            {"Bc", 0, 0}, {"D", -1, 0},
                            {"Aa", -1, 0}, {"U", -1, 0},
                            {"Ab", 0, -1}, {"D", -1, -1},
                            {"Ac", 1, -1}, {"U", 0, -1}}));
    out.push_back(embedded(Family::kSnubSquare33434, 6, "3.3.4.3.4-cap", 1,
                           {{"P", 0, 0}, {"Q", 0, 0},
                            {"F", 0, 0}, {"F", 1, 0}, {"W", 0, 0}, {"W", 0, -1},
                            {"R", 0, 0}, {"T", 1, -1},
                            {"T", 0, -1}, {"R", 0, -1},
                            {"T", 1, 0}, {"R", 1, 0}}));
    out.push_back(embedded(Family::kElongated33344, 6, "3.3.3.4.4-cap", 1,
                           {{"S", 0, 0}, {"S", 1, 0}, {"S", 2, 0},
                            {"D", 0, -1}, {"D", 1, -1}, {"D", 2, -1},
                            {"U", 1, -1}, {"U", 2, -1},
                            {"U", 0, 0}, {"U", 1, 0}, {"U", 2, 0},
                            {"D", 0, 0}, {"D", 1, 0}}));

    // Strip-tiling witnesses; the last three double as the mixed
    // triangle/square possibilities around a 3.4.4.6 vertex.
    out.push_back(embedded(Family::kTri333333, 6, "two-triangles", 2,
                           {{"U", 0, 0}, {"D", 0, 0}}));
    out.push_back(embedded(Family::kTrihex3636, 6, "hex-flower", 2,
                           {{"H", 0, 0}, {"D", 0, 0}, {"D", -1, 0}, {"D", 0, -1},
                            {"U", -1, 0}, {"U", 0, -1}, {"U", -1, -1}}));
    out.push_back(embedded(Family::kSquare4444, 6, "four-squares", 2,
                           {{"S", 0, 0}, {"S", 1, 0}, {"S", 0, 1}, {"S", 1, 1}}));
    out.push_back(embedded(Family::kElongated33344, 6, "tri-square-tri", 2,
                           {{"U", 0, 0}, {"S", 0, 0}, {"D", 0, -1}}));
    out.push_back(embedded(Family::kElongated33344, 6, "tri-square-square-tri", 2,
                           {{"D", 0, -1}, {"S", 0, 0}, {"S", 1, 0}, {"U", 1, 0}}));

    out.push_back(make_ring31_instance());
    return out;
}

}  // namespace

std::vector<ConfigInstance> catalog_instances() { return build_instances(); }

std::map<std::string, Configuration> catalog_configurations() {
    std::map<std::string, Configuration> out;
    for (auto& inst : build_instances()) out.emplace(inst.config.name, inst.config);
    return out;
}

}  // namespace percolattice
