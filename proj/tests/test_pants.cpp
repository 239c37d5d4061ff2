#include "doctest.h"

#include <set>

#include "pantslab/pants.hpp"

using namespace pantslab;

namespace {

struct Lab {
    Triangulation T;
    CurveUniverse U;
    Lab(SurfaceSpec spec, int depth)
        : T(Triangulation::reference(spec)),
          U(CurveUniverse::generate(T, standard_seeds(T), standard_generators(T), depth))
    {
    }
};

} // namespace

TEST_CASE("moves on S_{1,1} are farey neighbors")
{
    Lab lab({1, 1}, 4);
    auto P = PantsDecomposition::base(lab.T);
    MoveOracle oracle(lab.U);
    auto& mv = oracle.moves(P);
    CHECK(mv.list.size() >= 3);
    // every move differs in the single curve and meets it once
    for (const auto& Q : mv.list) {
        CHECK(Q.size() == 1);
        CHECK(geometric_intersection(Q.curve(0), P.curve(0)) == 1);
    }
    // symmetry of the relation
    for (const auto& Q : mv.list) {
        auto& back = oracle.moves(Q);
        bool found = false;
        for (const auto& R : back.list)
            if (R == P) found = true;
        CHECK(found);
    }
}

TEST_CASE("moves on S_{0,5} share all but one curve")
{
    Lab lab({0, 5}, 3);
    auto P = PantsDecomposition::base(lab.T);
    MoveOracle oracle(lab.U);
    auto& mv = oracle.moves(P);
    CHECK(!mv.list.empty());
    for (const auto& Q : mv.list) {
        int shared = 0;
        for (int i = 0; i < P.size(); ++i)
            if (Q.contains(P.curve(i))) shared++;
        CHECK(shared == P.size() - 1);
        // replacement meets the replaced curve twice (sphere windows)
        for (int i = 0; i < P.size(); ++i)
            if (!Q.contains(P.curve(i)))
                for (int j = 0; j < Q.size(); ++j)
                    if (!P.contains(Q.curve(j)))
                        CHECK(geometric_intersection(P.curve(i), Q.curve(j)) == 2);
    }
}

TEST_CASE("bfs distances on S_{0,5}")
{
    Lab lab({0, 5}, 3);
    MoveOracle oracle(lab.U);
    auto P = PantsDecomposition::base(lab.T);
    CHECK(bfs_distance(P, P, oracle, 5).value == 0);
    auto& mv = oracle.moves(P);
    REQUIRE(!mv.list.empty());
    auto Q = mv.list[0];
    auto d1 = bfs_distance(P, Q, oracle, 5);
    CHECK(d1.value == 1);
    // symmetry on a few pairs
    for (size_t k = 0; k < 3 && k < mv.list.size(); ++k) {
        auto R = mv.list[k];
        auto ab = bfs_distance(P, R, oracle, 4);
        auto ba = bfs_distance(R, P, oracle, 4);
        CHECK(ab.value == ba.value);
    }
    // a twisted decomposition sits farther away
    auto gens = standard_generators(lab.T);
    bool exercised = false;
    for (int ci = 0; ci < P.size() && !exercised; ++ci)
        for (const auto& g : gens) {
            if (geometric_intersection(P.curve(ci), g) == 0) continue;
            Multicurve twisted = dehn_twist(P.curve(ci), g, 2);
            if (!lab.U.contains(twisted)) continue;
            bool disjoint = true;
            for (int j = 0; j < P.size(); ++j)
                if (j != ci && geometric_intersection(P.curve(j), twisted) != 0) disjoint = false;
            if (!disjoint) continue;
            auto P2 = P.replace(ci, twisted);
            auto d = bfs_distance(P, P2, oracle, 6);
            CHECK(d.known());
            CHECK(d.value >= 2);
            exercised = true;
            break;
        }
    CHECK(exercised);
}

TEST_CASE("geodesics enumeration")
{
    Lab lab({0, 5}, 3);
    MoveOracle oracle(lab.U);
    auto P = PantsDecomposition::base(lab.T);
    auto Q = oracle.moves(P).list[0];
    auto paths = all_geodesics(P, Q, oracle, 3, 10);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].size() == 2);
    CHECK(paths[0][0] == P);
    CHECK(paths[0][1] == Q);
    // all vertices of longer geodesics are valid decompositions
    auto far = bfs_distance(P, Q, oracle, 3);
    CHECK(far.value == 1);
}

TEST_CASE("product region on S_{0,6}")
{
    Lab lab({0, 6}, 2);
    auto gamma = enclosing_curve(lab.T, {0, 1, 2});
    REQUIRE(is_domain_separating(gamma));
    auto R = make_product_region(gamma);
    auto P00 = region_point(R, Slope::make(0, 1), Slope::make(0, 1));
    CHECK(P00.contains(gamma));
    auto [s0, s1] = region_coordinates(R, P00);
    CHECK(s0 == Slope::make(0, 1));
    CHECK(s1 == Slope::make(0, 1));
    auto P12 = region_point(R, Slope::infinity(), Slope::make(1, 2));
    CHECK(product_region_distance(R, P00, P12) == farey_distance(Slope::make(0, 1), Slope::infinity()) + farey_distance(Slope::make(0, 1), Slope::make(1, 2)));
    // region points are genuine pants decompositions
    CHECK_NOTHROW(PantsDecomposition::make(P12.curves()));
}
