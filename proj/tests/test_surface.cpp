#include "doctest.h"

#include "pantslab/surface.hpp"

using namespace pantslab;

TEST_CASE("reference triangulation cell counts")
{
    // S_{0,4}: 4 vertices, 6 edges, 4 triangles
    auto T04 = Triangulation::reference({0, 4});
    CHECK(T04.num_vertices() == 4);
    CHECK(T04.num_edges() == 6);
    CHECK(T04.num_triangles() == 4);

    // S_{1,1}: 1 vertex, 3 edges, 2 triangles
    auto T11 = Triangulation::reference({1, 1});
    CHECK(T11.num_vertices() == 1);
    CHECK(T11.num_edges() == 3);
    CHECK(T11.num_triangles() == 2);

    // S_{0,6}: 6 vertices, 12 edges, 8 triangles
    auto T06 = Triangulation::reference({0, 6});
    CHECK(T06.num_vertices() == 6);
    CHECK(T06.num_edges() == 12);
    CHECK(T06.num_triangles() == 8);
}

TEST_CASE("triangulations audit across the supported range")
{
    for (int n = 4; n <= 8; ++n) CHECK_NOTHROW(Triangulation::reference({0, n}));
    for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(Triangulation::reference({1, n}));
    CHECK_NOTHROW(Triangulation::reference({2, 1}));
}

TEST_CASE("closed and degenerate surfaces rejected")
{
    CHECK_THROWS_AS(Triangulation::reference({2, 0}), UnsupportedSurfaceError);
    CHECK_THROWS_AS(Triangulation::reference({0, 3}), UnsupportedSurfaceError);
    CHECK_THROWS_AS(Triangulation::reference({0, 2}), UnsupportedSurfaceError);
}

TEST_CASE("determinism and json round trip")
{
    auto A = Triangulation::reference({0, 5});
    auto B = Triangulation::reference({0, 5});
    CHECK(A == B);
    CHECK(A.to_json() == B.to_json());
    auto C = Triangulation::from_json(A.to_json());
    CHECK(A == C);
}
