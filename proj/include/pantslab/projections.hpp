#pragma once

#include <optional>

#include "pantslab/pants.hpp"

namespace pantslab {

struct ThresholdConfig {
    double M = 4;  // distance-formula cutoff
    double M1 = 4; // hierarchy threshold (time order, domain detection)
    double M2 = 2; // component-domain detection threshold, M1 >= M2 > 0
    double k = 1;  // Lipschitz constant for geodesic projections
    double delta = 1;

    void validate() const
    {
        if (!(M1 >= M2 && M2 > 0) || k < 1)
            throw ValidationError("thresholds require M1 >= M2 > 0 and k >= 1");
    }
};

double cutoff(double x, double M);

// Subsurface projection: resolve the essential arcs of m through Y along the
// boundary; curves of m inside Y pass through.
std::vector<Multicurve> project(const Subsurface& Y, const Multicurve& m);

struct DValue {
    int value = -1; // -1 = undefined (an empty projection)
    bool exact = false;
    bool defined() const { return value >= 0; }
};

// Caches subsurface machinery over one universe.
class ProjectionLab {
public:
    explicit ProjectionLab(const CurveUniverse& U);
    const CurveUniverse& universe() const { return *U_; }
    const Triangulation& tri() const { return U_->tri(); }

    // distance in C(Y): Farey-exact on complexity-1 windows, bounded BFS in
    // the curve graph over universe members otherwise
    DValue curve_distance(const Subsurface& Y, const Multicurve& a, const Multicurve& b,
                          int radius = 8);
    DValue subsurface_distance(const Subsurface& Y, const Multicurve& m1, const Multicurve& m2,
                               int radius = 8);
    std::vector<Multicurve> project_cached(const Subsurface& Y, const Multicurve& m);

    // canonical marking of a complexity-1 window (base: least universe curve
    // inside, else a constructed band curve)
    const DomainMarking& window_marking(const Subsurface& Y);

    // universe curves lying inside Y
    const std::vector<int>& curves_inside(const Subsurface& Y);

    // complexity >= 1 subsurfaces with boundary a single universe curve (plus
    // optionally disjoint pairs), including the whole surface
    std::vector<Subsurface> enumerate_subsurfaces(int max_boundary_components);

private:
    const CurveUniverse* U_;
    std::map<std::string, std::shared_ptr<DomainMarking>> markings_;
    std::map<std::string, std::vector<int>> inside_;
    std::map<std::string, std::vector<Multicurve>> proj_;
    std::map<std::string, DValue> dcache_;
};

struct ProjectionRow {
    Subsurface Y;
    DValue dY;
    double cut = 0;
};

struct ProjectionReport {
    std::vector<ProjectionRow> rows;
    double estimate = 0;
    Distance bfs;
    std::string to_json(const ThresholdConfig& cfg) const;
    std::string to_csv() const;
};

ProjectionReport distance_formula_estimate(const PantsDecomposition& P1,
                                           const PantsDecomposition& P2, ProjectionLab& lab,
                                           MoveOracle* oracle, const ThresholdConfig& cfg,
                                           int bfs_radius = 10,
                                           int max_boundary_components = 1);

// Two-sided fit d ~ estimate: smallest C for each K' on a grid, returning the
// (K', C) minimizing C then K'.
struct FitResult {
    double Kprime = 0, C = 0;
    bool satisfied = false; // both inequalities hold on every sample
    std::vector<double> residuals;
};
FitResult fit_distance_formula(const std::vector<std::pair<int, double>>& pairs,
                               double k_max = 10, double k_step = 0.25);

// ---------------------------------------------------------------------------
enum class TimeOrder { FirstThenSecond, SecondThenFirst, Inapplicable, Inconsistent };

struct TimeOrderReport {
    TimeOrder verdict = TimeOrder::Inapplicable;
    std::string reason;
    DValue d1, d2;           // d_{Y1}(P1,P2), d_{Y2}(P1,P2)
    DValue a1, a2, b1, b2;   // the four property-(3) tests
};

TimeOrderReport time_order_check(ProjectionLab& lab, const Subsurface& Y1, const Subsurface& Y2,
                                 const PantsDecomposition& P1, const PantsDecomposition& P2,
                                 const ThresholdConfig& cfg);

struct WitnessCheck {
    bool hypothesis = false;   // d_{Y1}(R,P2) > 2 M1
    bool conclusion1 = false;  // d_{Y2}(P1,R) <= 2 M1
    bool conclusion2 = false;  // |d_{Y2}(P1,P2) - d_{Y2}(R,P2)| <= 2 M1
    double m1 = 0, m2 = 0;     // the measured left-hand sides
};

WitnessCheck time_order_witness(ProjectionLab& lab, const Subsurface& Y1, const Subsurface& Y2,
                                const PantsDecomposition& P1, const PantsDecomposition& P2,
                                const PantsDecomposition& R, const ThresholdConfig& cfg);

} // namespace pantslab
