#pragma once

#include <map>
#include <memory>

#include "pantslab/curves.hpp"
#include "pantslab/farey.hpp"

namespace pantslab {

// Coordinate chart on a complexity-1 window: names the window's curves by
// Farey slopes.  ref_inf/ref_zero/ref_one pin 1/0, 0/1 and 1/1; the
// intersection unit is 1 on a one-holed torus and 2 on a four-holed sphere.
struct DomainMarking {
    Subsurface domain;
    Multicurve ref_inf, ref_zero, ref_one;
    int unit = 1;
    long long shear_inf = 0;  // slope numerator of T_{ref_inf}(ref_zero)
    long long shear_zero = 0; // slope denominator of T_{ref_zero}(ref_inf)

    mutable std::map<Slope, Multicurve> curve_memo;
    mutable std::map<std::string, Slope> slope_memo;
};

// Build a marking for a complexity-1 window around a given curve in it.
// Deterministic; throws OutOfDomainError when the window is not complexity 1
// or the curve is not inside it.
DomainMarking make_marking(const Subsurface& window, const Multicurve& base);

Slope slope_of_curve(const Multicurve& c, const DomainMarking& m);
Multicurve curve_of_slope(Slope s, const DomainMarking& m);

} // namespace pantslab
