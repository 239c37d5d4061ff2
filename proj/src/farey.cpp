#include "pantslab/farey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace pantslab {

Slope Slope::make(long long p, long long q)
{
    if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a slope");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    long long g = std::gcd(std::llabs(p), q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q == 0) p = 1;
    if (p == 0) q = 1;
    return {p, q};
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

Slope Slope::parse(const std::string& s)
{
    auto k = s.find('/');
    if (k == std::string::npos) return make(std::stoll(s), 1);
    return make(std::stoll(s.substr(0, k)), std::stoll(s.substr(k + 1)));
}

long long farey_det(Slope a, Slope b)
{
    return std::llabs(a.p * b.q - a.q * b.p);
}

bool farey_adjacent(Slope a, Slope b) { return farey_det(a, b) == 1; }

namespace {

// Mobius map as an integer matrix [[a,b],[c,d]], acting by
// p/q -> (a p + b q) / (c p + d q).
struct Mat {
    long long a = 1, b = 0, c = 0, d = 1;
    Slope apply(Slope s) const { return Slope::make(a * s.p + b * s.q, c * s.p + d * s.q); }
};

// Unimodular map sending s to 1/0.
Mat to_infinity(Slope s)
{
    long long p = s.p, q = s.q;
    // extended gcd: p*u + q*v = ±1
    long long old_r = p, r = q;
    long long old_u = 1, u = 0;
    long long old_v = 0, v = 1;
    while (r != 0) {
        long long quo = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - quo * r);
        std::tie(old_u, u) = std::make_tuple(u, old_u - quo * u);
        std::tie(old_v, v) = std::make_tuple(v, old_v - quo * v);
    }
    long long sign = old_r; // ±1
    Mat m{old_u * sign, old_v * sign, -q, p};
    if (m.apply(s) != Slope::infinity())
        throw std::logic_error("to_infinity failed");
    return m;
}

int dist_from_infinity(long long p, long long q, std::map<std::pair<long long, long long>, int>& memo)
{
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) return 0;
    if (q == 1) return 1;
    auto key = std::make_pair(p, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long fl = (p >= 0) ? p / q : -((-p + q - 1) / q);
    int best = 1 << 20;
    for (long long a : {fl, fl + 1}) {
        // move a -> infinity by z -> -1/(z - a): p/q -> -q/(p - a q)
        long long np = -q, nq = p - a * q;
        if (nq == 0) {
            best = std::min(best, 1);
            continue;
        }
        best = std::min(best, 1 + dist_from_infinity(np, nq, memo));
    }
    memo[key] = best;
    return best;
}

} // namespace

int farey_distance(Slope a, Slope b)
{
    if (a == b) return 0;
    Mat m = to_infinity(a);
    Slope t = m.apply(b);
    std::map<std::pair<long long, long long>, int> memo;
    return dist_from_infinity(t.p, t.q, memo);
}

std::vector<Slope> farey_geodesic(Slope a, Slope b)
{
    std::vector<Slope> path{a};
    Slope cur = a;
    int remaining = farey_distance(a, b);
    while (cur != b) {
        Mat m = to_infinity(cur);
        Mat inv{m.d, -m.b, -m.c, m.a};
        Slope t = m.apply(b);
        std::vector<Slope> cand;
        if (t.q == 1) {
            cand.push_back(b);
        } else {
            long long fl = (t.p >= 0) ? t.p / t.q : -((-t.p + t.q - 1) / t.q);
            for (long long x : {fl, fl + 1}) cand.push_back(inv.apply(Slope::make(x, 1)));
        }
        Slope best;
        bool have = false;
        for (Slope nxt : cand) {
            if (farey_distance(nxt, b) != remaining - 1) continue;
            if (!have || std::make_pair(nxt.q, nxt.p) < std::make_pair(best.q, best.p)) {
                best = nxt;
                have = true;
            }
        }
        if (!have) throw std::logic_error("farey geodesic: no pivot advances");
        path.push_back(best);
        cur = best;
        remaining--;
    }
    return path;
}

Slope some_neighbor(Slope s)
{
    if (s.is_infinity()) return Slope::make(0, 1);
    Mat m = to_infinity(s);
    Mat inv{m.d, -m.b, -m.c, m.a};
    return inv.apply(Slope::make(0, 1));
}

Slope neighbor_line(Slope s, Slope u, long long k)
{
    return Slope::make(u.p + k * s.p, u.q + k * s.q);
}

} // namespace pantslab
