#include "pantslab/projections.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pantslab/arcs.hpp"
#include "pantslab/arrangement.hpp"

namespace pantslab {

double cutoff(double x, double M) { return x >= M ? x : 0.0; }

namespace {

// piece id of the face holding an interior point of a non-wall strand
int point_side(const Embedding& E, const WallArrangement& A, int point, Corner via)
{
    int r = A.wall_rank(E.point_edge(point), E.pos(point));
    return A.face_piece[A.interval_face(via.tri, via.side, r)];
}

struct ArcPiece {
    int strand;                    // m-strand in the overlay
    int chord0, chord1;            // cut chords (crossing the walls)
    Embedding::ChordRef host0, host1;
    int side = -1;                 // wall piece holding the arc
};

// order of wall crossings along one m-chord
std::vector<std::pair<long long, Embedding::ChordRef>> crossings_along(const Embedding& E,
                                                                       Embedding::ChordRef gamma,
                                                                       int wall_label)
{
    std::vector<std::pair<long long, Embedding::ChordRef>> out;
    long long gF = E.bcoord_from(gamma), gT = E.bcoord_to(gamma);
    auto rel = [&](long long x) {
        constexpr long long circle = 3LL * (1LL << 21);
        long long r = (x - gF) % circle;
        return r < 0 ? r + circle : r;
    };
    for (const auto& ch : E.chords_in_tri(E.chord_tri(gamma))) {
        if (E.strand(ch.curve).label != wall_label) continue;
        if (!E.chords_cross(gamma, ch)) continue;
        long long f = E.bcoord_from(ch), t = E.bcoord_to(ch);
        bool f_in = [&] {
            long long a = gF, b = gT;
            if (a < b) return a < f && f < b;
            return f > a || f < b;
        }();
        out.push_back({rel(f_in ? f : t), ch});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Multicurve> project(const Subsurface& Y, const Multicurve& m)
{
    const Triangulation& T = *m.tri();
    auto cls = classify_subsurface(Y);
    if (cls.complexity < 1)
        throw DegenerateSubsurfaceError("projection target must have complexity >= 1");
    if (Y.whole_surface()) {
        std::vector<Multicurve> out;
        for (int i = 0; i < m.num_components(); ++i) out.push_back(m.component(i));
        std::sort(out.begin(), out.end(),
                  [](const Multicurve& a, const Multicurve& b) { return a.key() < b.key(); });
        return out;
    }

    Embedding E(T);
    Y.boundary.emit(E, 0);
    m.emit(E, 1);
    E.minimize_pair(0, 1);
    auto A = build_arrangement(E, 0);

    std::set<std::string> keys;
    std::vector<Multicurve> out;
    auto add = [&](const Multicurve& c) {
        if (c.is_empty() || !c.connected()) return;
        if (Y.boundary.contains_component(c)) return;
        if (side_of_curve(Y.boundary, c) != Y.side) return;
        if (keys.insert(c.key()).second) out.push_back(c);
    };

    for (int s = 0; s < E.num_strands(); ++s) {
        const auto& st = E.strand(s);
        if (!st.alive || st.label != 1) continue;
        // collect wall crossings in order along the strand
        std::vector<std::pair<int, Embedding::ChordRef>> cuts; // (chord idx of m-strand, wall chord)
        for (int ci = 0; ci < E.num_chords(s); ++ci)
            for (auto& [key, wch] : crossings_along(E, {s, ci}, 0)) cuts.push_back({ci, wch});
        if (cuts.empty()) {
            // wall-parallel strands are peripheral in Y and dropped
            std::vector<int> cw(T.num_edges(), 0);
            for (int p : st.pts) cw[E.point_edge(p)]++;
            bool wallish = false;
            for (int i = 0; i < Y.boundary.num_components(); ++i)
                if (Y.boundary.component_weights(i) == cw) wallish = true;
            if (wallish) continue;
            // the whole component: inside or outside
            Corner via = T.edge_corner(E.point_edge(st.pts[0]), st.outw[0]);
            if (point_side(E, A, st.pts[0], via) == Y.side)
                add(Multicurve::from_weights(T, cw));
            continue;
        }
        // arcs between consecutive cuts
        int nc = static_cast<int>(cuts.size());
        for (int a = 0; a < nc; ++a) {
            int b = (a + 1) % nc;
            OpenArc arc = extract_subarc(E, s, cuts[a].second, cuts[a].first, cuts[b].second,
                                         cuts[b].first, 0);
            // consecutive cuts on one chord leave no interior points, except
            // for the pair that wraps around the whole strand
            bool empty_arc = (b == a + 1) && (cuts[a].first == cuts[b].first);
            if (empty_arc) arc.i0 = arc.i1 = -1;
            // side of the arc: an interior point, or the face between the cut
            // chords when the arc is empty
            int side;
            if (!empty_arc) {
                // there is at least one interior point: the point after chord0
                const auto& mst = E.strand(s);
                int n = static_cast<int>(mst.pts.size());
                int idx = (cuts[a].first + 1) % n;
                Corner via = T.edge_corner(E.point_edge(mst.pts[idx]), mst.outw[idx]);
                side = point_side(E, A, mst.pts[idx], via);
            } else {
                // consecutive cuts on one chord: common face of the two walls
                int c0 = -1, c1 = -1;
                for (int ci = 0; ci < static_cast<int>(A.chords.size()); ++ci) {
                    if (A.chords[ci].ref == cuts[a].second) c0 = ci;
                    if (A.chords[ci].ref == cuts[b].second) c1 = ci;
                }
                side = -1;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        if (A.chords[c0].face[x] == A.chords[c1].face[y])
                            side = A.face_piece[A.chords[c0].face[x]];
                if (side < 0 && c0 == c1) side = A.face_piece[A.chords[c0].face[0]];
                if (side < 0)
                    throw InternalConsistencyError("projection: arc face not found");
            }
            if (side != Y.side) continue;
            // resolve
            int h0 = cuts[a].second.curve, h1 = cuts[b].second.curve;
            if (h0 == h1) {
                for (auto& c : host_surgeries(E, arc)) add(c);
            } else {
                add(band_boundary(E, arc));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Multicurve& a, const Multicurve& b) { return a.key() < b.key(); });
    return out;
}

// ---------------------------------------------------------------------------

ProjectionLab::ProjectionLab(const CurveUniverse& U) : U_(&U) {}

const std::vector<int>& ProjectionLab::curves_inside(const Subsurface& Y)
{
    auto it = inside_.find(Y.key());
    if (it != inside_.end()) return it->second;
    std::vector<int> ids;
    for (int i = 0; i < U_->size(); ++i) {
        if (Y.whole_surface() || curve_in_subsurface(U_->curve(i), Y)) ids.push_back(i);
    }
    return inside_.emplace(Y.key(), std::move(ids)).first->second;
}

const DomainMarking& ProjectionLab::window_marking(const Subsurface& Y)
{
    auto it = markings_.find(Y.key());
    if (it != markings_.end()) return *it->second;
    auto cls = classify_subsurface(Y);
    if (cls.complexity != 1) throw OutOfDomainError("marking needs a complexity-1 window");
    Multicurve base;
    const auto& ids = curves_inside(Y);
    if (!ids.empty()) base = U_->curve(ids[0]);
    else {
        // construct a base curve: two punctures of the piece, else give up
        Piece piece = subsurface_piece(Y);
        if (piece.punctures.size() >= 2 && piece.genus == 0) {
            base = enclosing_curve(U_->tri(), {piece.punctures[0], piece.punctures[1]});
            if (!curve_in_subsurface(base, Y)) base = Multicurve();
        }
        if (base.is_empty() || !base.connected())
            throw InternalConsistencyError("no base curve available for the window");
    }
    auto m = std::make_shared<DomainMarking>(make_marking(Y, base));
    return *markings_.emplace(Y.key(), std::move(m)).first->second;
}

DValue ProjectionLab::curve_distance(const Subsurface& Y, const Multicurve& a,
                                     const Multicurve& b, int radius)
{
    auto cls = classify_subsurface(Y);
    DValue out;
    if (a == b) {
        out.value = 0;
        out.exact = true;
        return out;
    }
    if (cls.complexity == 1) {
        const DomainMarking& m = window_marking(Y);
        out.value = farey_distance(slope_of_curve(a, m), slope_of_curve(b, m));
        out.exact = true;
        return out;
    }
    // curve-graph BFS over universe members inside Y
    if (U_->intersection(a, b) == 0) {
        out.value = 1;
        out.exact = true;
        return out;
    }
    const auto& ids = curves_inside(Y);
    int ia = U_->index_of(a), ib = U_->index_of(b);
    std::map<int, int> dist;
    std::queue<int> q;
    if (ia < 0 || ib < 0) return out; // unknown vertices: undefined distance
    dist[ia] = 0;
    q.push(ia);
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        if (dist[cur] >= radius) continue;
        for (int other : ids) {
            if (dist.count(other)) continue;
            if (U_->intersection(cur, other) != 0) continue;
            dist[other] = dist[cur] + 1;
            if (other == ib) {
                out.value = dist[other];
                out.exact = out.value <= 1;
                return out;
            }
            q.push(other);
        }
    }
    return out;
}

std::vector<Multicurve> ProjectionLab::project_cached(const Subsurface& Y, const Multicurve& m)
{
    std::string key = Y.key() + "~" + m.key();
    auto it = proj_.find(key);
    if (it != proj_.end()) return it->second;
    auto out = project(Y, m);
    proj_[key] = out;
    return out;
}

DValue ProjectionLab::subsurface_distance(const Subsurface& Y, const Multicurve& m1,
                                          const Multicurve& m2, int radius)
{
    std::string key = Y.key() + "@" + m1.key() + "@" + m2.key();
    if (auto it = dcache_.find(key); it != dcache_.end()) return it->second;
    auto p1 = project_cached(Y, m1);
    auto p2 = project_cached(Y, m2);
    DValue out;
    if (p1.empty() || p2.empty()) {
        dcache_[key] = out;
        return out;
    }
    std::vector<Multicurve> all = p1;
    all.insert(all.end(), p2.begin(), p2.end());
    out.value = 0;
    out.exact = true;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            DValue d = curve_distance(Y, all[i], all[j], radius);
            if (!d.defined()) {
                out.value = std::max(out.value, radius); // unresolved: lower bound
                out.exact = false;
                continue;
            }
            out.value = std::max(out.value, d.value);
            out.exact = out.exact && d.exact;
        }
    dcache_[key] = out;
    return out;
}

std::vector<Subsurface> ProjectionLab::enumerate_subsurfaces(int max_boundary_components)
{
    std::vector<Subsurface> out;
    out.push_back(Subsurface{Multicurve::empty(U_->tri()), 0});
    for (int i = 0; i < U_->size(); ++i) {
        auto pieces = complement_pieces(U_->curve(i));
        for (int s = 0; s < static_cast<int>(pieces.size()); ++s)
            if (pieces[s].complexity() >= 1) out.push_back(Subsurface{U_->curve(i), s});
    }
    if (max_boundary_components >= 2) {
        for (int i = 0; i < U_->size(); ++i)
            for (int j = i + 1; j < U_->size(); ++j) {
                if (U_->intersection(i, j) != 0) continue;
                Multicurve un = multicurve_union(U_->curve(i), U_->curve(j));
                if (un.num_components() != 2) continue;
                auto pieces = complement_pieces(un);
                for (int s = 0; s < static_cast<int>(pieces.size()); ++s) {
                    if (pieces[s].complexity() < 1) continue;
                    // only pieces adjacent to both components (tight boundary)
                    std::set<std::string> bk(pieces[s].boundary_keys.begin(),
                                             pieces[s].boundary_keys.end());
                    if (bk.size() == 2) out.push_back(Subsurface{un, s});
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------

ProjectionReport distance_formula_estimate(const PantsDecomposition& P1,
                                           const PantsDecomposition& P2, ProjectionLab& lab,
                                           MoveOracle* oracle, const ThresholdConfig& cfg,
                                           int bfs_radius, int max_boundary_components)
{
    cfg.validate();
    ProjectionReport rep;
    Multicurve m1 = P1.as_multicurve(), m2 = P2.as_multicurve();
    for (const auto& Y : lab.enumerate_subsurfaces(max_boundary_components)) {
        ProjectionRow row;
        row.Y = Y;
        row.dY = lab.subsurface_distance(Y, m1, m2);
        if (row.dY.defined()) row.cut = cutoff(row.dY.value, cfg.M);
        rep.rows.push_back(row);
        if (row.dY.defined()) rep.estimate += row.cut;
    }
    if (oracle) rep.bfs = bfs_distance(P1, P2, *oracle, bfs_radius);
    return rep;
}

FitResult fit_distance_formula(const std::vector<std::pair<int, double>>& pairs, double k_max,
                               double k_step)
{
    FitResult best;
    best.C = 1e18;
    for (double K = 1.0; K <= k_max + 1e-9; K += k_step) {
        double C = 0;
        for (auto [d, est] : pairs) {
            C = std::max(C, est / K - d);
            C = std::max(C, d - K * est);
        }
        if (C < best.C - 1e-12) {
            best.C = C;
            best.Kprime = K;
        }
    }
    best.satisfied = best.C < 1e17;
    for (auto [d, est] : pairs) best.residuals.push_back(d - est / best.Kprime);
    return best;
}

std::string ProjectionReport::to_csv() const
{
    std::ostringstream os;
    os << "subsurface,side,d_Y,exact,cutoff\n";
    for (const auto& r : rows)
        os << '"' << r.Y.boundary.key() << '"' << ',' << r.Y.side << ','
           << (r.dY.defined() ? std::to_string(r.dY.value) : std::string("undefined")) << ','
           << (r.dY.exact ? 1 : 0) << ',' << r.cut << "\n";
    return os.str();
}

std::string ProjectionReport::to_json(const ThresholdConfig& cfg) const
{
    nlohmann::json j;
    j["config"] = {{"M", cfg.M}, {"M1", cfg.M1}, {"M2", cfg.M2}, {"k", cfg.k}, {"delta", cfg.delta}};
    j["estimate"] = estimate;
    if (bfs.known()) {
        j["bfs"] = bfs.value;
        j["bfs_exact"] = bfs.exact;
    } else {
        j["bfs"] = nullptr;
        if (bfs.upper_bound >= 0) j["bfs_upper_bound"] = bfs.upper_bound;
    }
    auto& rows_j = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json rj;
        rj["boundary"] = r.Y.boundary.key();
        rj["side"] = r.Y.side;
        if (r.dY.defined()) {
            rj["d"] = r.dY.value;
            rj["exact"] = r.dY.exact;
        } else {
            rj["d"] = nullptr;
        }
        rj["cutoff"] = r.cut;
        rows_j.push_back(rj);
    }
    return j.dump(2);
}

// ---------------------------------------------------------------------------

TimeOrderReport time_order_check(ProjectionLab& lab, const Subsurface& Y1, const Subsurface& Y2,
                                 const PantsDecomposition& P1, const PantsDecomposition& P2,
                                 const ThresholdConfig& cfg)
{
    cfg.validate();
    TimeOrderReport rep;
    auto rel = subsurface_relation(Y1, Y2);
    if (rel != SubsurfaceRelation::Transverse) {
        rep.reason = "domains are not transverse";
        return rep;
    }
    Multicurve m1 = P1.as_multicurve(), m2 = P2.as_multicurve();
    rep.d1 = lab.subsurface_distance(Y1, m1, m2);
    rep.d2 = lab.subsurface_distance(Y2, m1, m2);
    if (!rep.d1.defined() || !rep.d2.defined() || rep.d1.value < 2 * cfg.M1 ||
        rep.d2.value < 2 * cfg.M1) {
        rep.reason = "projection distances below 2 M1";
        return rep;
    }
    // property (3): Y1 < Y2 forces d_{Y2}(P1, bd Y1) <= M1 and
    // d_{Y1}(P2, bd Y2) <= M1; the reverse order swaps the roles.
    rep.a1 = lab.subsurface_distance(Y2, m1, Y1.boundary);
    rep.a2 = lab.subsurface_distance(Y1, m2, Y2.boundary);
    rep.b1 = lab.subsurface_distance(Y1, m1, Y2.boundary);
    rep.b2 = lab.subsurface_distance(Y2, m2, Y1.boundary);
    auto le = [&](const DValue& v) { return v.defined() && v.value <= cfg.M1; };
    bool first = le(rep.a1) && le(rep.a2);
    bool second = le(rep.b1) && le(rep.b2);
    if (first && !second) rep.verdict = TimeOrder::FirstThenSecond;
    else if (second && !first) rep.verdict = TimeOrder::SecondThenFirst;
    else {
        rep.verdict = TimeOrder::Inconsistent;
        rep.reason = first ? "both orders satisfied" : "neither order satisfied";
    }
    return rep;
}

WitnessCheck time_order_witness(ProjectionLab& lab, const Subsurface& Y1, const Subsurface& Y2,
                                const PantsDecomposition& P1, const PantsDecomposition& P2,
                                const PantsDecomposition& R, const ThresholdConfig& cfg)
{
    WitnessCheck w;
    Multicurve m1 = P1.as_multicurve(), m2 = P2.as_multicurve(), mr = R.as_multicurve();
    auto dR2 = lab.subsurface_distance(Y1, mr, m2);
    w.hypothesis = dR2.defined() && dR2.value > 2 * cfg.M1;
    auto c1 = lab.subsurface_distance(Y2, m1, mr);
    auto d12 = lab.subsurface_distance(Y2, m1, m2);
    auto dr2 = lab.subsurface_distance(Y2, mr, m2);
    w.m1 = c1.defined() ? c1.value : -1;
    w.m2 = (d12.defined() && dr2.defined()) ? std::abs(d12.value - dr2.value) : -1;
    w.conclusion1 = c1.defined() && c1.value <= 2 * cfg.M1;
    w.conclusion2 = d12.defined() && dr2.defined() && std::abs(d12.value - dr2.value) <= 2 * cfg.M1;
    return w;
}

} // namespace pantslab
