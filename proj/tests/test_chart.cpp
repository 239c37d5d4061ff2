#include "doctest.h"

#include <algorithm>
#include <vector>

#include "pantslab/chart.hpp"

using namespace pantslab;

namespace {

std::vector<Multicurve> small_curves(const Triangulation& T, int maxw)
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

TEST_CASE("S_{1,1} chart: round trips and determinant formula")
{
    auto T = Triangulation::reference({1, 1});
    auto curves = small_curves(T, 2);
    REQUIRE(!curves.empty());
    Subsurface whole{Multicurve::empty(T), 0};
    auto m = make_marking(whole, curves[0]);
    CHECK(m.unit == 1);
    CHECK(slope_of_curve(m.ref_inf, m) == Slope::infinity());
    CHECK(slope_of_curve(m.ref_zero, m) == Slope::make(0, 1));
    CHECK(slope_of_curve(m.ref_one, m) == Slope::make(1, 1));

    std::vector<Slope> slopes;
    for (long long q = 0; q <= 5; ++q)
        for (long long p = -5; p <= 5; ++p) {
            if (p == 0 && q == 0) continue;
            Slope s = Slope::make(p, q);
            if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
        }
    for (Slope s : slopes) {
        Multicurve c = curve_of_slope(s, m);
        CHECK(slope_of_curve(c, m) == s);
    }
    for (size_t i = 0; i < slopes.size(); i += 3)
        for (size_t j = 0; j < slopes.size(); j += 4) {
            Multicurve a = curve_of_slope(slopes[i], m);
            Multicurve b = curve_of_slope(slopes[j], m);
            CHECK(geometric_intersection(a, b) == farey_det(slopes[i], slopes[j]));
        }
}

TEST_CASE("S_{0,4} chart: unit two and determinant formula")
{
    auto T = Triangulation::reference({0, 4});
    auto curves = small_curves(T, 2);
    REQUIRE(!curves.empty());
    Subsurface whole{Multicurve::empty(T), 0};
    auto m = make_marking(whole, curves[0]);
    CHECK(m.unit == 2);
    CHECK(slope_of_curve(m.ref_one, m) == Slope::make(1, 1));

    std::vector<Slope> slopes;
    for (long long q = 0; q <= 4; ++q)
        for (long long p = -4; p <= 4; ++p) {
            if (p == 0 && q == 0) continue;
            Slope s = Slope::make(p, q);
            if (std::find(slopes.begin(), slopes.end(), s) == slopes.end()) slopes.push_back(s);
        }
    for (Slope s : slopes) {
        Multicurve c = curve_of_slope(s, m);
        CHECK(slope_of_curve(c, m) == s);
    }
    for (size_t i = 0; i < slopes.size(); i += 3)
        for (size_t j = 0; j < slopes.size(); j += 4) {
            Multicurve a = curve_of_slope(slopes[i], m);
            Multicurve b = curve_of_slope(slopes[j], m);
            CHECK(geometric_intersection(a, b) == 2 * farey_det(slopes[i], slopes[j]));
        }
}

TEST_CASE("decomposition window chart on S_{0,5}")
{
    auto T = Triangulation::reference({0, 5});
    auto curves = small_curves(T, 2);
    const Multicurve* a = nullptr;
    const Multicurve* b = nullptr;
    for (const auto& x : curves) {
        for (const auto& y : curves) {
            if (x == y || geometric_intersection(x, y) != 0) continue;
            a = &x;
            b = &y;
            break;
        }
        if (a) break;
    }
    REQUIRE(a);
    int side = side_of_curve(*a, *b);
    REQUIRE(side >= 0);
    Subsurface window{*a, side};
    auto cls = classify_subsurface(window);
    CHECK(cls.complexity == 1);
    auto m = make_marking(window, *b);
    CHECK(m.unit == 2);
    CHECK(slope_of_curve(*b, m) == Slope::infinity());
    for (long long n = -3; n <= 3; ++n) {
        Multicurve c = curve_of_slope(Slope::make(n, 1), m);
        CHECK(geometric_intersection(c, *b) == 2);
        CHECK(geometric_intersection(c, *a) == 0);
        CHECK(curve_in_subsurface(c, window));
        CHECK(slope_of_curve(c, m) == Slope::make(n, 1));
    }
}
