#include "doctest.h"

#include "pantslab/universe.hpp"

using namespace pantslab;

TEST_CASE("enclosing curves and standard families")
{
    auto T = Triangulation::reference({0, 5});
    auto c12 = enclosing_curve(T, {0, 1});
    auto c123 = enclosing_curve(T, {0, 1, 2});
    CHECK(c12.connected());
    CHECK(c123.connected());
    CHECK(geometric_intersection(c12, c123) == 0);
    auto base = base_decomposition_curves(T);
    CHECK(static_cast<int>(base.size()) == T.spec().complexity());
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j)
            CHECK(geometric_intersection(base[i], base[j]) == 0);
}

TEST_CASE("lift and fill are mutually inverse on surviving curves")
{
    auto T5 = Triangulation::reference({0, 5});
    auto T6 = Triangulation::reference({0, 6});
    auto c = enclosing_curve(T5, {0, 1, 2});
    auto up = lift_curve(T5, T6, c);
    CHECK(up.connected());
    auto back = fill_last_puncture(T6, T5, up);
    CHECK(back == c);
    // a curve using the new puncture dies or changes under fill
    auto pairy = enclosing_curve(T6, {4, 5});
    auto filled = fill_last_puncture(T6, T5, pairy);
    CHECK(filled.is_empty()); // becomes peripheral around puncture 4
}

TEST_CASE("handle curves on S_{1,2}")
{
    auto T = Triangulation::reference({1, 2});
    auto hs = handle_curves(T);
    REQUIRE(hs.size() == 3);
    for (auto& h : hs) {
        CHECK(h.connected());
        auto pieces = complement_pieces(h);
        CHECK(pieces.size() == 1); // non-separating
    }
    CHECK(geometric_intersection(hs[0], hs[1]) == 1);
}

TEST_CASE("universe generation on S_{1,1}")
{
    auto T = Triangulation::reference({1, 1});
    auto seeds = standard_seeds(T);
    auto gens = standard_generators(T);
    auto U = CurveUniverse::generate(T, seeds, gens, 3);
    CHECK(U.size() > 8);
    CHECK_FALSE(U.filling_warning());
    // monotone in depth
    auto U2 = CurveUniverse::generate(T, seeds, gens, 2);
    CHECK(U2.size() <= U.size());
    for (int i = 0; i < U2.size(); ++i) CHECK(U.contains(U2.curve(i)));
    // depth 0 = seeds only
    auto U0 = CurveUniverse::generate(T, seeds, gens, 0);
    CHECK(U0.size() == static_cast<int>(seeds.size()));
    // persistence round trip, bit identical
    auto text = U.to_json();
    auto V = CurveUniverse::from_json(T, text);
    CHECK(V.to_json() == text);
    CHECK(V.size() == U.size());
}
