#include "doctest.h"

#include <algorithm>
#include <vector>

#include "pantslab/curves.hpp"

using namespace pantslab;

namespace {

// All connected essential curves whose weights have entries <= maxw.
std::vector<Multicurve> enumerate_curves(const Triangulation& T, int maxw)
{
    std::vector<Multicurve> out;
    std::vector<int> w(T.num_edges(), 0);
    while (true) {
        try {
            Multicurve m = Multicurve::from_weights(T, w);
            if (!m.is_empty() && m.connected() && m.weights() == w) out.push_back(m);
        } catch (const EmbeddingViolationError&) {
        }
        int i = 0;
        while (i < T.num_edges() && w[i] == maxw) w[i++] = 0;
        if (i == T.num_edges()) break;
        w[i]++;
    }
    return out;
}

} // namespace

TEST_CASE("S_{1,1}: minimal slope curves intersect pairwise once")
{
    auto T = Triangulation::reference({1, 1});
    auto curves = enumerate_curves(T, 1);
    // weight vectors with entries <= 1: exactly the three one-corner curves
    REQUIRE(curves.size() == 3);
    for (const auto& a : curves) {
        CHECK(geometric_intersection(a, a) == 0);
        for (const auto& b : curves)
            if (!(a == b)) CHECK(geometric_intersection(a, b) == 1);
    }
}

TEST_CASE("S_{0,4}: minimal curves intersect pairwise twice")
{
    auto T = Triangulation::reference({0, 4});
    auto curves = enumerate_curves(T, 2);
    REQUIRE(curves.size() >= 3);
    int pairs = 0;
    for (const auto& a : curves)
        for (const auto& b : curves)
            if (!(a == b)) {
                int i = geometric_intersection(a, b);
                CHECK(i >= 2);
                CHECK(i % 2 == 0);
                if (i == 2) pairs++;
            }
    CHECK(pairs > 0);
}

TEST_CASE("normalization is idempotent on canonical curves")
{
    auto T = Triangulation::reference({0, 4});
    for (const auto& c : enumerate_curves(T, 2)) {
        Multicurve again = Multicurve::from_weights(T, c.weights());
        CHECK(again == c);
    }
}

TEST_CASE("dehn twist basics on S_{1,1}")
{
    auto T = Triangulation::reference({1, 1});
    auto curves = enumerate_curves(T, 1);
    REQUIRE(curves.size() == 3);
    const Multicurve& a = curves[0];
    const Multicurve& b = curves[1];

    CHECK(dehn_twist(b, a, 0) == b);
    CHECK(dehn_twist(a, a, 3) == a); // i = 0: twisting fixes

    Multicurve tb = dehn_twist(b, a, 1);
    CHECK(geometric_intersection(tb, a) == 1);
    CHECK(geometric_intersection(tb, b) == 1);

    // inverse undoes
    CHECK(dehn_twist(tb, a, -1) == b);

    // twist identity: i(T_a^n b, b) = |n| i(a,b)^2
    for (int n = -3; n <= 3; ++n) {
        Multicurve img = dehn_twist(b, a, n);
        CHECK(geometric_intersection(img, b) == std::abs(n) * 1);
        CHECK(geometric_intersection(img, a) == 1);
    }
}

TEST_CASE("dehn twist identity on S_{0,4}")
{
    auto T = Triangulation::reference({0, 4});
    auto curves = enumerate_curves(T, 2);
    // pick a pair with i = 2
    const Multicurve* a = nullptr;
    const Multicurve* b = nullptr;
    for (const auto& x : curves) {
        for (const auto& y : curves)
            if (geometric_intersection(x, y) == 2) {
                a = &x;
                b = &y;
                break;
            }
        if (a) break;
    }
    REQUIRE(a);
    for (int n = -2; n <= 2; ++n) {
        Multicurve img = dehn_twist(*b, *a, n);
        CHECK(geometric_intersection(img, *b) == std::abs(n) * 4);
        CHECK(geometric_intersection(img, *a) == 2);
        CHECK(dehn_twist(img, *a, -n) == *b);
    }
}

TEST_CASE("twists preserve intersection numbers")
{
    auto T = Triangulation::reference({1, 1});
    auto curves = enumerate_curves(T, 1);
    const Multicurve& a = curves[0];
    const Multicurve& b = curves[1];
    const Multicurve& c = curves[2];
    for (int n : {1, 2, -1}) {
        Multicurve tb = dehn_twist(b, c, n);
        Multicurve ta = dehn_twist(a, c, n);
        CHECK(geometric_intersection(ta, tb) == geometric_intersection(a, b));
    }
}

TEST_CASE("complement pieces")
{
    auto T11 = Triangulation::reference({1, 1});
    auto c = enumerate_curves(T11, 1)[0];
    auto pieces = complement_pieces(c);
    REQUIRE(pieces.size() == 1); // non-separating
    CHECK(pieces[0].genus == 0);
    CHECK(pieces[0].boundary_circles == 2);
    CHECK(pieces[0].punctures.size() == 1);
    CHECK(pieces[0].is_pants());

    auto T04 = Triangulation::reference({0, 4});
    auto d = enumerate_curves(T04, 2)[0];
    auto p2 = complement_pieces(d);
    REQUIRE(p2.size() == 2);
    for (const auto& p : p2) {
        CHECK(p.genus == 0);
        CHECK(p.boundary_circles == 1);
        CHECK(p.punctures.size() == 2);
        CHECK(p.is_pants());
    }

    // empty multicurve: one piece, the surface itself
    auto whole = complement_pieces(Multicurve::empty(T04));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].genus == 0);
    CHECK(whole[0].boundary_circles == 0);
    CHECK(whole[0].punctures.size() == 4);
    CHECK(whole[0].complexity() == 1);
}

TEST_CASE("sides on S_{0,5}")
{
    auto T = Triangulation::reference({0, 5});
    auto curves = enumerate_curves(T, 2);
    REQUIRE(!curves.empty());
    // no domain-separating curves on S_{0,5}
    for (const auto& c : curves) CHECK_FALSE(is_domain_separating(c));
    // find a disjoint pair; the second curve must land in the complexity-1 side
    bool found = false;
    for (const auto& a : curves) {
        auto pieces = complement_pieces(a);
        REQUIRE(pieces.size() == 2);
        for (const auto& b : curves) {
            if (a == b) continue;
            if (geometric_intersection(a, b) != 0) continue;
            int side = side_of_curve(a, b);
            REQUIRE(side >= 0);
            CHECK(pieces[side].complexity() == 1);
            found = true;
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("twists on bigger surfaces keep invariants")
{
    auto T = Triangulation::reference({0, 5});
    auto curves = enumerate_curves(T, 2);
    REQUIRE(curves.size() >= 2);
    int checked = 0;
    for (size_t i = 0; i < curves.size() && checked < 6; ++i)
        for (size_t j = 0; j < curves.size() && checked < 6; ++j) {
            if (i == j) continue;
            int base = geometric_intersection(curves[i], curves[j]);
            if (base == 0) continue;
            Multicurve img = dehn_twist(curves[i], curves[j], 2);
            CHECK(geometric_intersection(img, curves[j]) == base);
            CHECK(dehn_twist(img, curves[j], -2) == curves[i]);
            checked++;
        }
    CHECK(checked > 0);
}
