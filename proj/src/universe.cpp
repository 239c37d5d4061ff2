#include "pantslab/universe.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pantslab/arcs.hpp"

namespace pantslab {

Multicurve enclosing_curve(const Triangulation& T, const std::vector<int>& vertices)
{
    if (vertices.size() < 2) throw InvalidArcError("enclosing_curve needs >= 2 punctures");
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    Multicurve cur;
    for (size_t k = 1; k < vs.size(); ++k) {
        Embedding E(T);
        Anchor a1, a2;
        if (k == 1) {
            a1 = {Anchor::Kind::Puncture, vs[0], -1, {}, 0};
        } else {
            cur.emit(E, 0);
            a1 = {Anchor::Kind::Strand, -1, 0, {}, 0};
        }
        a2 = {Anchor::Kind::Puncture, vs[k], -1, {}, 0};
        auto arc = find_arc(E, 0, a1, a2, -1, 0, 50);
        if (!arc) throw InternalConsistencyError("enclosing_curve: no arc to next puncture");
        cur = band_boundary(E, *arc);
        if (cur.is_empty())
            throw InternalConsistencyError("enclosing_curve: band degenerated");
    }
    // audit: one complement piece is a disk holding exactly these punctures
    auto pieces = complement_pieces(cur);
    bool ok = false;
    for (const auto& p : pieces)
        if (p.punctures == vs && p.genus == 0 && p.boundary_circles == 1) ok = true;
    if (!ok) throw InternalConsistencyError("enclosing_curve audit failed");
    return cur;
}

namespace {

std::vector<Triangulation> reference_chain(int genus, int n0, int n1)
{
    std::vector<Triangulation> out;
    for (int n = n0; n <= n1; ++n) out.push_back(Triangulation::reference({genus, n}));
    return out;
}

std::vector<int> lift_weights_once(const Triangulation& T_small, const std::vector<int>& w)
{
    int t = T_small.num_triangles() - 1; // the triangle that gets coned
    int we[3];
    for (int s = 0; s < 3; ++s) we[s] = w[T_small.edge(t, s)];
    std::vector<int> out = w;
    int m[3];
    for (int k = 0; k < 3; ++k) {
        m[k] = (we[(k + 2) % 3] + we[k] - we[(k + 1) % 3]) / 2;
        if (m[k] < 0 || (we[0] + we[1] + we[2]) % 2 != 0)
            throw EmbeddingViolationError("lift: invalid weights at the coned triangle");
    }
    // appended spoke edges are discovered in the order corner 1, 0, 2
    out.push_back(m[1]);
    out.push_back(m[0]);
    out.push_back(m[2]);
    return out;
}

} // namespace

Multicurve lift_curve(const Triangulation& T_from, const Triangulation& T_to,
                      const Multicurve& c)
{
    const SurfaceSpec a = T_from.spec(), b = T_to.spec();
    if (a.genus != b.genus || a.punctures > b.punctures)
        throw UnsupportedSurfaceError("lift_curve: not a coning chain");
    auto chain = reference_chain(a.genus, a.punctures, b.punctures);
    if (!(chain.front() == T_from) || !(chain.back() == T_to))
        throw UnsupportedSurfaceError("lift_curve: non-reference triangulations");
    std::vector<int> w = c.weights();
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i + 1].num_edges() != chain[i].num_edges() + 3)
            throw InternalConsistencyError("lift_curve: unexpected edge growth");
        w = lift_weights_once(chain[i], w);
    }
    return Multicurve::from_weights(T_to, std::move(w));
}

Multicurve fill_last_puncture(const Triangulation& T_from, const Triangulation& T_to,
                              const Multicurve& c)
{
    const SurfaceSpec a = T_from.spec(), b = T_to.spec();
    if (a.genus != b.genus || a.punctures != b.punctures + 1)
        throw UnsupportedSurfaceError("fill_last_puncture: not one coning step");
    if (!(Triangulation::reference(a) == T_from) || !(Triangulation::reference(b) == T_to))
        throw UnsupportedSurfaceError("fill_last_puncture: non-reference triangulations");

    const Triangulation& small = T_to;
    const int ne_small = small.num_edges();
    const int tstar = small.num_triangles() - 1;
    Embedding E_from(T_from);
    c.emit(E_from, 0);

    const int nt_from = T_from.num_triangles();
    auto is_cone_tri = [&](int tri) {
        return tri == tstar || tri == nt_from - 2 || tri == nt_from - 1;
    };

    Embedding E_to(small);
    std::unordered_map<int, int> pmap;
    for (int e = 0; e < ne_small; ++e) {
        for (int p : E_from.edge_points(e)) {
            int np = E_to.new_point(e);
            E_to.place_point(np, static_cast<int>(E_to.edge_points(e).size()));
            pmap[p] = np;
        }
    }
    for (int s = 0; s < E_from.num_strands(); ++s) {
        const auto& st = E_from.strand(s);
        if (!st.alive) continue;
        Embedding::Strand ns;
        ns.label = 0;
        int n = static_cast<int>(st.pts.size());
        for (int i = 0; i < n; ++i) {
            int p = st.pts[i];
            if (E_from.point_edge(p) >= ne_small) continue; // spoke point dropped
            Corner out = T_from.edge_corner(E_from.point_edge(p), st.outw[i]);
            Corner slot;
            if (is_cone_tri(out.tri)) {
                // the chord dives into the cone; in the filled surface it runs
                // through the coned triangle t*
                int e = E_from.point_edge(p);
                Corner c0 = small.edge_corner(e, 0), c1 = small.edge_corner(e, 1);
                if (c0.tri == tstar) slot = c0;
                else if (c1.tri == tstar) slot = c1;
                else throw InternalConsistencyError("fill: edge not on the coned triangle");
            } else {
                slot = out;
            }
            ns.pts.push_back(pmap.at(p));
            ns.outw.push_back(static_cast<uint8_t>(small.corner_index(slot)));
        }
        if (!ns.pts.empty()) E_to.add_strand(std::move(ns));
    }
    return normalize_family(E_to, 0);
}

std::vector<Multicurve> handle_curves(const Triangulation& T)
{
    if (T.spec().genus != 1) return {};
    auto T11 = Triangulation::reference({1, 1});
    std::vector<Multicurve> out;
    for (auto w : {std::vector<int>{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})
        out.push_back(lift_curve(T11, T, Multicurve::from_weights(T11, w)));
    return out;
}

std::vector<Multicurve> standard_seeds(const Triangulation& T)
{
    const int g = T.spec().genus, n = T.spec().punctures;
    std::vector<Multicurve> out = handle_curves(T);
    if (g == 1 && n >= 2) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        out.push_back(enclosing_curve(T, all));
    }
    bool pairs_ok = (g == 0 && n >= 4) || (g >= 1 && n >= 2);
    if (pairs_ok)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back(enclosing_curve(T, {i, j}));
    int kmax = g == 0 ? n - 2 : (n >= 2 ? n : 0);
    for (int k = 3; k <= kmax; ++k) {
        std::vector<int> block(k);
        for (int i = 0; i < k; ++i) block[i] = i;
        out.push_back(enclosing_curve(T, block));
    }
    std::vector<Multicurve> ded;
    for (auto& c : out) {
        bool seen = false;
        for (auto& d : ded)
            if (d == c) seen = true;
        if (!seen && !c.is_empty()) ded.push_back(c);
    }
    return ded;
}

std::vector<Multicurve> standard_generators(const Triangulation& T)
{
    const int g = T.spec().genus, n = T.spec().punctures;
    std::vector<Multicurve> out = handle_curves(T);
    bool pairs_ok = (g == 0 && n >= 4) || (g >= 1 && n >= 2);
    if (pairs_ok)
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (i == j) continue;
            out.push_back(enclosing_curve(T, {std::min(i, j), std::max(i, j)}));
        }
    std::vector<Multicurve> ded;
    for (auto& c : out) {
        bool seen = false;
        for (auto& d : ded)
            if (d == c) seen = true;
        if (!seen && !c.is_empty()) ded.push_back(c);
    }
    return ded;
}

std::vector<Multicurve> base_decomposition_curves(const Triangulation& T)
{
    const int g = T.spec().genus, n = T.spec().punctures;
    std::vector<Multicurve> out;
    if (g == 0) {
        for (int k = 2; k <= n - 2; ++k) {
            std::vector<int> block(k);
            for (int i = 0; i < k; ++i) block[i] = i;
            out.push_back(enclosing_curve(T, block));
        }
    } else if (g == 1) {
        out.push_back(handle_curves(T)[0]);
        if (n >= 2) {
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i;
            out.push_back(enclosing_curve(T, all));
            for (int k = 2; k <= n - 2; ++k) {
                std::vector<int> block(k);
                for (int i = 0; i < k; ++i) block[i] = i;
                out.push_back(enclosing_curve(T, block));
            }
        }
    } else {
        throw UnsupportedSurfaceError("base decomposition: genus > 1 unsupported");
    }
    if (static_cast<int>(out.size()) != T.spec().complexity())
        throw InternalConsistencyError("base decomposition has wrong size");
    return out;
}

// ---------------------------------------------------------------------------

void CurveUniverse::rebuild_index()
{
    index_.clear();
    for (int i = 0; i < size(); ++i) index_[curves_[i].hash()] = i;
    max_weight_ = 0;
    for (const auto& c : curves_) max_weight_ = std::max(max_weight_, c.total_weight());
}

int CurveUniverse::index_of(const Multicurve& c) const
{
    auto it = index_.find(c.hash());
    if (it == index_.end()) return -1;
    if (curves_[it->second] == c) return it->second;
    for (int i = 0; i < size(); ++i)
        if (curves_[i] == c) return i;
    return -1;
}

CurveUniverse CurveUniverse::generate(const Triangulation& T, std::vector<Multicurve> seeds,
                                      std::vector<Multicurve> generators, int depth)
{
    CurveUniverse U;
    U.tri_ = &T;
    U.depth_ = depth;
    U.seeds_ = seeds;
    U.generators_ = generators;

    std::map<std::string, std::pair<Multicurve, int>> table;
    std::vector<Multicurve> frontier;
    for (const auto& s : seeds) {
        if (s.is_empty() || !s.connected()) continue;
        if (!table.count(s.key())) {
            table[s.key()] = {s, 0};
            frontier.push_back(s);
        }
    }
    for (int d = 1; d <= depth; ++d) {
        std::sort(frontier.begin(), frontier.end(),
                  [](const Multicurve& a, const Multicurve& b) { return a.key() < b.key(); });
        std::vector<Multicurve> next;
        for (const auto& c : frontier) {
            for (const auto& g : generators) {
                for (int sgn : {+1, -1}) {
                    Multicurve img = dehn_twist(c, g, sgn);
                    if (img.is_empty()) continue;
                    auto it = table.find(img.key());
                    if (it == table.end()) {
                        table[img.key()] = {img, d};
                        next.push_back(img);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    for (auto& [k, v] : table) {
        U.curves_.push_back(v.first);
        U.word_length_.push_back(v.second);
    }
    std::vector<int> order(U.curves_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (U.word_length_[x] != U.word_length_[y]) return U.word_length_[x] < U.word_length_[y];
        return U.curves_[x].key() < U.curves_[y].key();
    });
    std::vector<Multicurve> cs;
    std::vector<int> wl;
    for (int i : order) {
        cs.push_back(U.curves_[i]);
        wl.push_back(U.word_length_[i]);
    }
    U.curves_ = std::move(cs);
    U.word_length_ = std::move(wl);
    U.rebuild_index();

    // a member disjoint from every generator never moves under twisting
    U.filling_warning_ = false;
    for (const auto& c : U.curves_) {
        bool moves = false, is_gen = false;
        for (const auto& g : generators) {
            if (geometric_intersection(c, g) != 0) moves = true;
            if (c == g) is_gen = true;
        }
        if (!moves && !is_gen) {
            U.filling_warning_ = true;
            break;
        }
    }
    return U;
}

int CurveUniverse::intersection(int i, int j) const
{
    if (i == j) return 0;
    uint64_t key = (static_cast<uint64_t>(std::min(i, j)) << 32) |
                   static_cast<uint64_t>(std::max(i, j));
    {
        std::lock_guard<std::mutex> lk(*mu_);
        auto it = icache_.find(key);
        if (it != icache_.end()) return it->second;
    }
    int v = geometric_intersection(curves_[i], curves_[j]);
    std::lock_guard<std::mutex> lk(*mu_);
    icache_[key] = v;
    return v;
}

int CurveUniverse::intersection(const Multicurve& a, const Multicurve& b) const
{
    int i = index_of(a), j = index_of(b);
    if (i >= 0 && j >= 0) return intersection(i, j);
    return geometric_intersection(a, b);
}

std::string CurveUniverse::cache_key() const
{
    std::ostringstream os;
    os << "g" << tri_->spec().genus << "n" << tri_->spec().punctures << "d" << depth_ << "-";
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const Multicurve& c) {
        h ^= c.hash();
        h *= 1099511628211ULL;
    };
    for (const auto& s : seeds_) mix(s);
    h ^= 0xabcdULL;
    for (const auto& g : generators_) mix(g);
    os << std::hex << h;
    return os.str();
}

std::string CurveUniverse::to_json() const
{
    nlohmann::json j;
    j["version"] = 1;
    j["genus"] = tri_->spec().genus;
    j["punctures"] = tri_->spec().punctures;
    j["depth"] = depth_;
    j["filling_warning"] = filling_warning_;
    auto dump_curves = [](const std::vector<Multicurve>& cs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cs) arr.push_back(c.weights());
        return arr;
    };
    j["seeds"] = dump_curves(seeds_);
    j["generators"] = dump_curves(generators_);
    j["curves"] = dump_curves(curves_);
    j["word_lengths"] = word_length_;
    return j.dump();
}

CurveUniverse CurveUniverse::from_json(const Triangulation& T, const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) throw ValidationError("unknown universe version");
    CurveUniverse U;
    U.tri_ = &T;
    U.depth_ = j.at("depth").get<int>();
    U.filling_warning_ = j.at("filling_warning").get<bool>();
    auto load = [&](const nlohmann::json& arr) {
        std::vector<Multicurve> out;
        for (const auto& w : arr)
            out.push_back(Multicurve::from_weights(T, w.get<std::vector<int>>()));
        return out;
    };
    U.seeds_ = load(j.at("seeds"));
    U.generators_ = load(j.at("generators"));
    U.curves_ = load(j.at("curves"));
    U.word_length_ = j.at("word_lengths").get<std::vector<int>>();
    U.rebuild_index();
    return U;
}

} // namespace pantslab
