#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "percolattice/vertex_type.hpp"

using namespace percolattice;

namespace {

// The published list of the 21 solutions.
const std::set<std::string> kExpected = {
    "3.3.3.3.3.3", "3.3.3.3.6", "3.3.3.4.4", "3.3.4.3.4", "3.3.6.6", "3.6.3.6",
    "3.3.4.12",    "3.4.3.12",  "3.4.4.6",   "3.4.6.4",   "4.4.4.4", "3.7.42",
    "3.8.24",      "3.9.18",    "3.10.15",   "3.12.12",   "4.5.20",  "4.6.12",
    "4.8.8",       "5.5.10",    "6.6.6"};

}  // namespace

TEST_CASE("enumeration returns exactly the 21 types") {
    auto types = enumerate_vertex_types();
    CHECK(types.size() == 21);
    std::set<std::string> names;
    for (const auto& t : types) names.insert(t.name());
    CHECK(names == kExpected);
}

TEST_CASE("angle equation membership") {
    CHECK(VertexType({6, 6, 6}).satisfies_angle_equation());
    CHECK_FALSE(VertexType({4, 4, 4}).satisfies_angle_equation());
    CHECK(VertexType({3, 7, 42}).satisfies_angle_equation());
    CHECK_FALSE(VertexType({3, 7, 41}).satisfies_angle_equation());
}

TEST_CASE("canonicalization") {
    CHECK(canonicalize_vertex_type({12, 3, 12}).name() == "3.12.12");
    CHECK(canonicalize_vertex_type({4, 3, 4, 6}).name() == "3.4.6.4");
    CHECK(canonicalize_vertex_type({8, 8, 4}).name() == "4.8.8");
    CHECK_THROWS(canonicalize_vertex_type({4, 4, 4}, true));
    CHECK_NOTHROW(canonicalize_vertex_type({4, 4, 4}, false));
}

TEST_CASE("canonical form is idempotent and orbit invariant") {
    for (const auto& t : enumerate_vertex_types()) {
        std::vector<int> s = t.sizes();
        const int n = static_cast<int>(s.size());
        for (int pass = 0; pass < 2; ++pass) {
            for (int r = 0; r < n; ++r) {
                std::rotate(s.begin(), s.begin() + 1, s.end());
                CHECK(canonicalize_vertex_type(s) == t);
            }
            std::reverse(s.begin(), s.end());
        }
    }
}

TEST_CASE("classification of all 21 types") {
    const std::set<std::string> infeasible = {"3.7.42", "3.8.24", "3.9.18",
                                              "3.10.15", "4.5.20", "5.5.10"};
    const std::set<std::string> rigid = {"3.6.3.6", "3.12.12", "4.6.12", "4.8.8",
                                         "6.6.6"};
    int n_inf = 0, n_rigid = 0, n_forces = 0;
    for (const auto& t : enumerate_vertex_types()) {
        auto c = classify_vertex_type(t);
        if (infeasible.count(t.name())) {
            CHECK(c.kind == TypeKind::kInfeasible);
            ++n_inf;
        } else if (rigid.count(t.name())) {
            CHECK(c.kind == TypeKind::kRigidLatticeType);
            ++n_rigid;
        } else {
            CHECK(c.kind == TypeKind::kForcesThresholdLe2);
            CHECK_FALSE(c.witness.empty());
            ++n_forces;
        }
    }
    CHECK(n_inf == 6);
    CHECK(n_rigid == 5);
    CHECK(n_forces == 10);
}

TEST_CASE("classification witnesses named in the analysis") {
    CHECK(classify_vertex_type(VertexType({5, 5, 10})).kind == TypeKind::kInfeasible);
    auto sq = classify_vertex_type(VertexType({4, 4, 4, 4}));
    CHECK(sq.witness == "four-squares");
    auto rh = classify_vertex_type(VertexType({3, 4, 6, 4}));
    CHECK(rh.witness == "ring-of-31");
    CHECK(classify_vertex_type(VertexType({4, 8, 8})).kind ==
          TypeKind::kRigidLatticeType);
    CHECK(classify_vertex_type(VertexType({3, 4, 3, 12})).witness == "tri-square-tri");
    CHECK_THROWS(classify_vertex_type(VertexType({3, 3, 4, 3, 4, 3})));
}

TEST_CASE("no successive agreement among the rigid five") {
    std::set<VertexType> rigid = {VertexType({3, 6, 3, 6}), VertexType({3, 12, 12}),
                                  VertexType({4, 6, 12}), VertexType({4, 8, 8}),
                                  VertexType({6, 6, 6})};
    CHECK(check_no_successive_agreement(rigid));

    std::set<VertexType> pair = {VertexType({3, 3, 3, 4, 4}), VertexType({3, 3, 4, 3, 4})};
    CHECK_FALSE(check_no_successive_agreement(pair));

    std::set<VertexType> single = {VertexType({4, 8, 8})};
    CHECK(check_no_successive_agreement(single));

    // Adding a type with a 6.6 pair clashes with 6.6.6.
    auto extended = rigid;
    extended.insert(VertexType({3, 3, 6, 6}));
    CHECK_FALSE(check_no_successive_agreement(extended));
}

TEST_CASE("agreement check matches a brute-force pair oracle over the catalog") {
    // Independent oracle: collect unordered cyclically-adjacent pairs by
    // walking the sequence directly.
    auto pairs_of = [](const VertexType& t) {
        std::set<std::pair<int, int>> out;
        const auto& s = t.sizes();
        const int n = t.length();
        for (int i = 0; i < n; ++i) {
            int a = s[i], b = s[(i + 1) % n];
            out.insert({std::min(a, b), std::max(a, b)});
        }
        return out;
    };
    std::set<VertexType> rigid = {VertexType({3, 6, 3, 6}), VertexType({3, 12, 12}),
                                  VertexType({4, 6, 12}), VertexType({4, 8, 8}),
                                  VertexType({6, 6, 6})};
    std::set<std::pair<int, int>> rigid_pairs;
    for (const auto& t : rigid)
        for (auto pr : pairs_of(t)) rigid_pairs.insert(pr);

    for (const auto& t : enumerate_vertex_types()) {
        if (rigid.count(t)) continue;
        bool expected = true;
        for (auto pr : pairs_of(t))
            if (rigid_pairs.count(pr)) expected = false;
        auto extended = rigid;
        extended.insert(t);
        CHECK(check_no_successive_agreement(extended) == expected);
    }
}
