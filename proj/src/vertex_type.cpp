#include "percolattice/vertex_type.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace percolattice {

namespace {

std::vector<int> dihedral_min(std::vector<int> s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> best = s;
    std::vector<int> cur = s;
    for (int pass = 0; pass < 2; ++pass) {
        for (int r = 0; r < n; ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

// 2 * sum_i prod_{j!=i} s_j == (n-2) * prod_j s_j, entries <= 42 and n <= 6,
// so plain 64-bit arithmetic is exact.
bool angle_ok(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n < 3) return false;
    int64_t prod = 1;
    for (int v : s) prod *= v;
    int64_t sum = 0;
    for (int v : s) sum += prod / v;
    return 2 * sum == static_cast<int64_t>(n - 2) * prod;
}

}  // namespace

VertexType::VertexType(std::vector<int> sizes) {
    if (sizes.size() < 3 || sizes.size() > 6)
        throw std::invalid_argument("vertex type needs 3..6 faces");
    for (int v : sizes)
        if (v < 3) throw std::invalid_argument("face size below 3");
    sizes_ = dihedral_min(std::move(sizes));
}

std::string VertexType::name() const {
    std::string out;
    for (size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

bool VertexType::satisfies_angle_equation() const { return angle_ok(sizes_); }

VertexType VertexType::from_name(const std::string& name) {
    std::vector<int> sizes;
    size_t pos = 0;
    while (pos < name.size()) {
        size_t dot = name.find('.', pos);
        if (dot == std::string::npos) dot = name.size();
        sizes.push_back(std::stoi(name.substr(pos, dot - pos)));
        pos = dot + 1;
    }
    return VertexType(sizes);
}

VertexType canonicalize_vertex_type(const std::vector<int>& raw, bool validate) {
    VertexType t(raw);
    if (validate && !t.satisfies_angle_equation())
        throw std::invalid_argument("sequence fails the angle equation: " + t.name());
    return t;
}

std::set<VertexType> enumerate_vertex_types() {
    // Entries are bounded by 42: with three faces the extreme solution is
    // (3,7,42); longer types only shrink the maximum.
    constexpr int kMaxSize = 42;
    std::set<VertexType> out;
    std::vector<int> stack;

    auto expand_multiset = [&out](const std::vector<int>& multiset) {
        std::vector<int> perm = multiset;
        std::sort(perm.begin(), perm.end());
        do {
            out.insert(VertexType(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    for (int n = 3; n <= 6; ++n) {
        stack.assign(n, 0);
        // Depth-first over nondecreasing tuples.
        std::vector<int> tuple;
        std::function<void(int, int)> rec = [&](int depth, int lo) {
            if (depth == n) {
                if (angle_ok(tuple)) expand_multiset(tuple);
                return;
            }
            for (int v = lo; v <= kMaxSize; ++v) {
                tuple.push_back(v);
                rec(depth + 1, v);
                tuple.pop_back();
            }
        };
        rec(0, 3);
    }
    return out;
}

namespace {

// Cyclically adjacent unordered pairs of a type, over its dihedral orbit.
std::set<std::pair<int, int>> adjacent_pairs(const VertexType& t) {
    std::set<std::pair<int, int>> pairs;
    const auto& s = t.sizes();
    const int n = t.length();
    for (int i = 0; i < n; ++i) {
        int a = s[i], b = s[(i + 1) % n];
        pairs.insert({std::min(a, b), std::max(a, b)});
    }
    return pairs;
}

bool infeasible_by_parity(const VertexType& t, const std::set<VertexType>& catalog) {
    if (t.length() != 3) return false;
    const auto& s = t.sizes();
    for (int i = 0; i < 3; ++i) {
        int x = s[i];
        int y = s[(i + 1) % 3], z = s[(i + 2) % 3];
        if (x % 2 == 0) continue;
        if (y == z) continue;  // alternation is consistent around an odd face
        // Around the x-gon the adjacent faces must alternate y,z provided no
        // other catalog type puts y (or z) next to an x.
        bool pinned = true;
        for (const auto& other : catalog) {
            if (other == t) continue;
            auto pairs = adjacent_pairs(other);
            if (pairs.count({std::min(x, y), std::max(x, y)}) ||
                pairs.count({std::min(x, z), std::max(x, z)})) {
                pinned = false;
                break;
            }
        }
        if (pinned) return true;
    }
    return false;
}

bool has_adjacent_pair(const VertexType& t, int a, int b) {
    return adjacent_pairs(t).count({std::min(a, b), std::max(a, b)}) > 0;
}

}  // namespace

TypeClassification classify_vertex_type(const VertexType& t) {
    static const std::set<VertexType> catalog = enumerate_vertex_types();
    if (!catalog.count(t))
        throw std::invalid_argument("not a catalog vertex type: " + t.name());

    if (infeasible_by_parity(t, catalog)) return {TypeKind::kInfeasible, "", {}};

    static const std::set<std::string> rigid = {"3.6.3.6", "3.12.12", "4.6.12",
                                                "4.8.8", "6.6.6"};
    if (rigid.count(t.name())) return {TypeKind::kRigidLatticeType, "", {}};

    // Two adjacent triangles handle every remaining type containing 3.3.
    if (has_adjacent_pair(t, 3, 3))
        return {TypeKind::kForcesThresholdLe2, "two-triangles", {}};

    const std::string n = t.name();
    if (n == "4.4.4.4") return {TypeKind::kForcesThresholdLe2, "four-squares", {}};
    if (n == "3.4.3.12")
        return {TypeKind::kForcesThresholdLe2, "tri-square-tri", {}};
    if (n == "3.4.4.6")
        return {TypeKind::kForcesThresholdLe2,
                "tri-square-tri",
                {"four-squares", "tri-square-square-tri"}};
    if (n == "3.4.6.4")
        return {TypeKind::kForcesThresholdLe2,
                "ring-of-31",
                {"tri-square-tri", "tri-square-square-tri"}};
    throw std::logic_error("unclassified catalog type: " + n);
}

bool check_no_successive_agreement(const std::set<VertexType>& types) {
    static const std::set<VertexType> catalog = enumerate_vertex_types();
    for (const auto& t : types)
        if (!catalog.count(t))
            throw std::invalid_argument("not a catalog type: " + t.name());
    std::vector<const VertexType*> list;
    for (const auto& t : types) list.push_back(&t);
    for (size_t i = 0; i < list.size(); ++i) {
        auto pi = adjacent_pairs(*list[i]);
        for (size_t j = i + 1; j < list.size(); ++j) {
            for (const auto& p : adjacent_pairs(*list[j]))
                if (pi.count(p)) return false;
        }
    }
    return true;
}

}  // namespace percolattice
