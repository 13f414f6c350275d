#pragma once

#include <set>
#include <string>
#include <vector>

namespace percolattice {

// Cyclic sequence of face side counts around a vertex, stored canonically:
// lexicographic minimum over all rotations and the reflection.
class VertexType {
  public:
    VertexType() = default;
    explicit VertexType(std::vector<int> sizes);  // canonicalizes

    const std::vector<int>& sizes() const { return sizes_; }
    int length() const { return static_cast<int>(sizes_.size()); }
    std::string name() const;  // "3.4.6.4"

    // Interior angles sum to 360 degrees, checked exactly:
    // 2 * sum(prod_{j!=i} s_j) == (n-2) * prod(s_j).
    bool satisfies_angle_equation() const;

    bool operator<(const VertexType& o) const { return sizes_ < o.sizes_; }
    bool operator==(const VertexType& o) const { return sizes_ == o.sizes_; }
    bool operator!=(const VertexType& o) const { return sizes_ != o.sizes_; }

    static VertexType from_name(const std::string& name);

  private:
    std::vector<int> sizes_;
};

// Canonical form of an arbitrary size sequence. With validate=true the angle
// equation and entry bounds are enforced.
VertexType canonicalize_vertex_type(const std::vector<int>& raw, bool validate = false);

// All solutions of the angle equation with 3..6 faces per vertex, up to
// rotation and reflection. Exactly 21.
std::set<VertexType> enumerate_vertex_types();

enum class TypeKind {
    kInfeasible,          // cannot occur in any plane tiling (parity argument)
    kForcesThresholdLe2,  // forces a ≤2-external-neighbor configuration
    kRigidLatticeType,    // one of the five lattice-locked types
};

struct TypeClassification {
    TypeKind kind;
    std::string witness;                   // catalog configuration name, if any
    std::vector<std::string> alternates;   // other possible witnesses
};

TypeClassification classify_vertex_type(const VertexType& t);

// True iff no two distinct members share two cyclically consecutive entries,
// considering rotations and reflections of both.
bool check_no_successive_agreement(const std::set<VertexType>& types);

}  // namespace percolattice
