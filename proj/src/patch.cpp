#include "percolattice/patch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "percolattice/vertex_type.hpp"

namespace percolattice {

std::string topology_name(Topology t) {
    return t == Topology::kTorus ? "torus" : "open";
}

Topology parse_topology(const std::string& s) {
    if (s == "torus") return Topology::kTorus;
    if (s == "open") return Topology::kOpen;
    throw std::invalid_argument("unknown topology: " + s);
}

bool TilingPatch::adjacent(int a, int b) const {
    const auto& nb = faces[a].neighbors;
    return std::binary_search(nb.begin(), nb.end(), b);
}

void TilingPatch::add_edge(int a, int b) {
    faces[a].neighbors.push_back(b);
    faces[b].neighbors.push_back(a);
}

void TilingPatch::sort_neighbors() {
    for (auto& f : faces) std::sort(f.neighbors.begin(), f.neighbors.end());
}

namespace {

void fail(const std::string& what) { throw std::runtime_error("invalid patch: " + what); }

}  // namespace

void validate_patch(const TilingPatch& patch) {
    const int n = patch.face_count();
    for (int i = 0; i < n; ++i) {
        const Face& f = patch.faces[i];
        if (f.sides < 3) fail("face with fewer than 3 sides");
        for (size_t k = 0; k < f.neighbors.size(); ++k) {
            int g = f.neighbors[k];
            if (g < 0 || g >= n) fail("neighbor index out of range");
            if (g == i) fail("self-adjacency at face " + std::to_string(i));
            if (k > 0 && f.neighbors[k] == f.neighbors[k - 1])
                fail("repeated neighbor at face " + std::to_string(i));
            if (!patch.adjacent(g, i)) fail("asymmetric adjacency");
        }
        if (patch.topology == Topology::kTorus) {
            if (f.exterior_edges != 0) fail("exterior edge on torus");
            if (patch.edge_to_edge && static_cast<int>(f.neighbors.size()) != f.sides)
                fail("torus face degree != sides at face " + std::to_string(i));
        } else if (patch.edge_to_edge) {
            if (static_cast<int>(f.neighbors.size()) + f.exterior_edges != f.sides)
                fail("open face degree + exterior != sides at face " + std::to_string(i));
        }
    }

    if (patch.vertices.empty()) return;

    std::vector<int> incidence(n, 0);
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& v : patch.vertices) {
        const int m = static_cast<int>(v.faces.size());
        if (m < 3) fail("vertex with fewer than 3 faces");
        std::vector<int> sizes;
        for (int k = 0; k < m; ++k) {
            int a = v.faces[k], b = v.faces[(k + 1) % m];
            if (a < 0 || a >= n) fail("vertex face index out of range");
            if (!patch.adjacent(a, b))
                fail("vertex lists non-adjacent consecutive faces " + std::to_string(a) +
                     "," + std::to_string(b));
            ++incidence[a];
            pair_count[{std::min(a, b), std::max(a, b)}]++;
            sizes.push_back(patch.faces[a].sides);
        }
        VertexType vt(sizes);
        if (!vt.satisfies_angle_equation())
            fail("vertex type fails angle equation: " + vt.name());
    }
    if (patch.topology == Topology::kTorus && patch.edge_to_edge) {
        for (int i = 0; i < n; ++i)
            if (incidence[i] != patch.faces[i].sides)
                fail("face " + std::to_string(i) + " not in sides-many vertices");
        for (const auto& [pr, c] : pair_count)
            if (c != 2) fail("adjacent pair not shared by exactly 2 vertices");
    }
}

std::vector<int> local_signature(const TilingPatch& patch, int face) {
    std::vector<int> sig;
    sig.push_back(patch.faces[face].sides);
    sig.push_back(patch.faces[face].exterior_edges);
    std::vector<int> nb;
    for (int g : patch.faces[face].neighbors) nb.push_back(patch.faces[g].sides);
    std::sort(nb.begin(), nb.end());
    sig.insert(sig.end(), nb.begin(), nb.end());
    return sig;
}

std::map<std::vector<int>, int> signature_census(const TilingPatch& patch) {
    std::map<std::vector<int>, int> out;
    for (int i = 0; i < patch.face_count(); ++i) out[local_signature(patch, i)]++;
    return out;
}

std::vector<int> cyclic_neighbor_order(const TilingPatch& patch, int face) {
    // Consecutive neighbors around `face` share a vertex whose list contains
    // them adjacent to `face`. Build the ring by chaining those pairs.
    std::map<int, std::set<int>> link;  // neighbor -> neighbors consecutive to it
    for (const auto& v : patch.vertices) {
        const int m = static_cast<int>(v.faces.size());
        for (int k = 0; k < m; ++k) {
            if (v.faces[k] != face) continue;
            int prev = v.faces[(k + m - 1) % m];
            int next = v.faces[(k + 1) % m];
            link[prev].insert(next);
            link[next].insert(prev);
        }
    }
    const auto& nbrs = patch.faces[face].neighbors;
    if (link.size() != nbrs.size())
        throw std::runtime_error("incomplete vertex data around face");
    std::vector<int> order;
    int cur = nbrs[0], prev = -1;
    for (size_t i = 0; i < nbrs.size(); ++i) {
        order.push_back(cur);
        int next = -1;
        for (int cand : link[cur])
            if (cand != prev) next = cand;
        if (link[cur].size() == 1) next = *link[cur].begin() == prev ? -1 : *link[cur].begin();
        prev = cur;
        cur = next;
        if (cur == -1 && i + 1 < nbrs.size())
            throw std::runtime_error("broken neighbor ring around face");
    }
    return order;
}

std::map<std::string, int> vertex_census(const TilingPatch& patch) {
    std::map<std::string, int> out;
    for (const auto& v : patch.vertices) {
        std::vector<int> sizes;
        for (int f : v.faces) sizes.push_back(patch.faces[f].sides);
        out[VertexType(sizes).name()]++;
    }
    return out;
}

}  // namespace percolattice
