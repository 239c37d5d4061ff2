#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pantslab/errors.hpp"

namespace pantslab {

// Vertex of the Farey graph: a reduced rational p/q with q >= 0, plus 1/0.
struct Slope {
    long long p = 0;
    long long q = 1;

    static Slope infinity() { return {1, 0}; }
    static Slope make(long long p, long long q); // reduces and fixes signs

    bool is_infinity() const { return q == 0; }
    bool operator==(const Slope&) const = default;
    auto operator<=>(const Slope&) const = default;

    std::string str() const;
    static Slope parse(const std::string& s);
};

long long farey_det(Slope a, Slope b); // |a.p b.q - a.q b.p|
bool farey_adjacent(Slope a, Slope b);

// Exact graph distance, via continued-fraction pivots after moving `a` to
// 1/0; agrees with breadth-first search.
int farey_distance(Slope a, Slope b);

// A geodesic vertex path from a to b; deterministic tie-breaking by smallest
// (denominator, numerator) at each step.
std::vector<Slope> farey_geodesic(Slope a, Slope b);

// All Farey neighbors of s have the form (u.p + k s.p) / (u.q + k s.q) for a
// fixed neighbor u; returns that u.
Slope some_neighbor(Slope s);
Slope neighbor_line(Slope s, Slope u, long long k);

struct SlopeHash {
    size_t operator()(const Slope& s) const
    {
        return static_cast<size_t>(s.p * 1000003LL ^ s.q * 998244353LL);
    }
};

} // namespace pantslab
