#include "doctest.h"

#include <map>
#include <queue>
#include <set>

#include "pantslab/farey.hpp"

using namespace pantslab;

namespace {

// Breadth-first distance restricted to denominators <= cap.
int bfs_distance(Slope a, Slope b, long long cap)
{
    if (a == b) return 0;
    std::map<Slope, int> dist{{a, 0}};
    std::queue<Slope> q;
    q.push(a);
    while (!q.empty()) {
        Slope cur = q.front();
        q.pop();
        Slope u = some_neighbor(cur);
        long long span = cur.q > 0 ? (cap + u.q) / cur.q + 1 : cap + 1;
        for (long long k = -span; k <= span; ++k) {
            Slope nxt = neighbor_line(cur, u, k);
            if (nxt.q > cap) continue;
            if (dist.count(nxt)) continue;
            dist[nxt] = dist[cur] + 1;
            if (nxt == b) return dist[nxt];
            q.push(nxt);
        }
    }
    return -1;
}

} // namespace

TEST_CASE("adjacency determinants")
{
    CHECK(farey_adjacent(Slope::make(0, 1), Slope::infinity()));
    CHECK(farey_adjacent(Slope::make(1, 2), Slope::make(1, 3)));
    CHECK_FALSE(farey_adjacent(Slope::make(0, 1), Slope::make(2, 5)));
}

TEST_CASE("distance basics")
{
    CHECK(farey_distance(Slope::make(0, 1), Slope::infinity()) == 1);
    CHECK(farey_distance(Slope::make(0, 1), Slope::make(0, 1)) == 0);
    CHECK(farey_distance(Slope::make(0, 1), Slope::make(5, 8)) == 3);
    CHECK(farey_distance(Slope::make(5, 8), Slope::make(0, 1)) == 3);
}

TEST_CASE("distance equals bfs for small denominators")
{
    std::vector<Slope> pts{Slope::infinity()};
    for (long long q = 1; q <= 8; ++q)
        for (long long p = -8; p <= 8; ++p) pts.push_back(Slope::make(p, q));
    std::set<Slope> uniq(pts.begin(), pts.end());
    std::vector<Slope> v(uniq.begin(), uniq.end());
    for (size_t i = 0; i < v.size(); i += 3)
        for (size_t j = i; j < v.size(); j += 5) {
            int d1 = farey_distance(v[i], v[j]);
            int d2 = bfs_distance(v[i], v[j], 40);
            CHECK(d1 == d2);
        }
}

TEST_CASE("geodesics are geodesics")
{
    std::vector<std::pair<Slope, Slope>> cases = {
        {Slope::make(0, 1), Slope::infinity()},
        {Slope::make(0, 1), Slope::make(5, 8)},
        {Slope::make(3, 7), Slope::make(-4, 9)},
        {Slope::make(2, 5), Slope::make(2, 5)},
        {Slope::infinity(), Slope::make(13, 21)},
    };
    for (auto [a, b] : cases) {
        auto path = farey_geodesic(a, b);
        CHECK(path.front() == a);
        CHECK(path.back() == b);
        CHECK(static_cast<int>(path.size()) - 1 == farey_distance(a, b));
        for (size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(farey_adjacent(path[i], path[i + 1]));
    }
}

TEST_CASE("metric axioms on sampled triples")
{
    std::vector<Slope> v;
    for (long long q = 0; q <= 6; ++q)
        for (long long p = -6; p <= 6; ++p) {
            if (p == 0 && q == 0) continue;
            v.push_back(Slope::make(p, q));
        }
    std::set<Slope> uniq(v.begin(), v.end());
    std::vector<Slope> w(uniq.begin(), uniq.end());
    for (size_t i = 0; i < w.size(); i += 7)
        for (size_t j = 1; j < w.size(); j += 11)
            for (size_t k = 2; k < w.size(); k += 13) {
                int dij = farey_distance(w[i], w[j]);
                int dji = farey_distance(w[j], w[i]);
                CHECK(dij == dji);
                CHECK(farey_distance(w[i], w[k]) <= dij + farey_distance(w[j], w[k]));
                if (w[i] != w[j]) CHECK(dij > 0);
            }
}
