#include "doctest.h"

#include "pantslab/projections.hpp"

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

TEST_CASE("cutoff definition")
{
    CHECK(cutoff(3, 5) == 0);
    CHECK(cutoff(5, 5) == 5);
    CHECK(cutoff(7, 0) == 7);
}

TEST_CASE("projection basics on S_{0,5}")
{
    Lab lab({0, 5}, 2);
    auto P = PantsDecomposition::base(lab.T);
    // window of each curve
    for (int i = 0; i < P.size(); ++i) {
        Subsurface Y = window_of(P, i);
        // the curve itself passes through
        auto pr = project(Y, P.curve(i));
        REQUIRE(pr.size() == 1);
        CHECK(pr[0] == P.curve(i));
        // a curve far from the window projects to nothing or something inside
        auto other = project(Y, P.curve(1 - (i == 0 ? 0 : 1)));
        for (const auto& c : other) CHECK(curve_in_subsurface(c, Y));
    }
    // a crossing curve resolves into window curves, never empty for pants
    Subsurface Y = window_of(P, 0);
    Multicurve m2 = P.as_multicurve();
    auto pr = project(Y, m2);
    CHECK(!pr.empty());
}

TEST_CASE("projections of decompositions are nonempty")
{
    Lab lab({0, 5}, 2);
    MoveOracle oracle(lab.U);
    auto P = PantsDecomposition::base(lab.T);
    auto moves = oracle.moves(P).list;
    REQUIRE(moves.size() >= 2);
    for (const auto& Y : {window_of(P, 0), window_of(P, 1)}) {
        for (size_t k = 0; k < 3 && k < moves.size(); ++k) {
            auto pr = project(Y, moves[k].as_multicurve());
            CHECK(!pr.empty());
        }
    }
}

TEST_CASE("subsurface distance tracks twisting")
{
    Lab lab({0, 5}, 2);
    ProjectionLab plab(lab.U);
    auto P = PantsDecomposition::base(lab.T);
    Subsurface Y = window_of(P, 0);

    auto m = P.as_multicurve();
    auto d0 = plab.subsurface_distance(Y, m, m);
    CHECK(d0.defined());
    CHECK(d0.value <= 2); // projection diameter of one decomposition is small

    // twist powers about a single curve stay at bounded Farey distance
    const DomainMarking& mk = plab.window_marking(Y);
    for (int n = 2; n <= 5; ++n) {
        Multicurve tw = dehn_twist(P.curve(0), mk.ref_zero, n);
        auto Ptw = P.replace(0, tw);
        auto dY = plab.subsurface_distance(Y, m, Ptw.as_multicurve());
        REQUIRE(dY.defined());
        CHECK(dY.value >= 1);
        CHECK(dY.value <= 4);
        CHECK(dY.exact);
    }
    // continued-fraction slopes give genuinely growing window distances
    long long f0 = 1, f1 = 1;
    for (int steps = 0; steps < 7; ++steps) {
        long long f2 = 2 * f1 + f0; // quotient-2 expansion: distance grows by 1
        f0 = f1;
        f1 = f2;
    }
    Slope far = Slope::make(f0, f1);
    Multicurve farc = curve_of_slope(far, mk);
    auto Pfar = P.replace(0, farc);
    auto dfar = plab.subsurface_distance(Y, m, Pfar.as_multicurve());
    REQUIRE(dfar.defined());
    CHECK(dfar.value >= farey_distance(Slope::infinity(), far) - 2);
    CHECK(dfar.value >= 5);
}

TEST_CASE("distance formula on close pairs")
{
    Lab lab({0, 5}, 3);
    ProjectionLab plab(lab.U);
    MoveOracle oracle(lab.U);
    ThresholdConfig cfg;
    cfg.M = 3;
    auto P = PantsDecomposition::base(lab.T);
    auto rep0 = distance_formula_estimate(P, P, plab, &oracle, cfg, 4);
    CHECK(rep0.estimate == 0);
    CHECK(rep0.bfs.value == 0);
    auto Q = oracle.moves(P).list[0];
    auto rep1 = distance_formula_estimate(P, Q, plab, &oracle, cfg, 4);
    CHECK(rep1.bfs.value == 1);
    // adjacent pair: all rows below the cutoff when M exceeds the move bound
    ThresholdConfig big = cfg;
    big.M = 6;
    auto rep2 = distance_formula_estimate(P, Q, plab, &oracle, big, 4);
    CHECK(rep2.estimate == 0);
    // serialization works
    CHECK(!rep1.to_csv().empty());
    CHECK(!rep1.to_json(cfg).empty());
}

TEST_CASE("fit machinery")
{
    std::vector<std::pair<int, double>> pairs;
    for (int d = 0; d <= 10; ++d) pairs.push_back({d, 2.0 * d});
    auto fit = fit_distance_formula(pairs);
    CHECK(fit.satisfied);
    CHECK(fit.Kprime >= 2.0 - 1e-9);
    // inequalities hold
    for (auto [d, est] : pairs) {
        CHECK(est / fit.Kprime - fit.C <= d + 1e-9);
        CHECK(d <= fit.Kprime * est + fit.C + 1e-9);
    }
}
