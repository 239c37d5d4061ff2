#include "pantslab/curves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pantslab/arrangement.hpp"

namespace pantslab {

namespace {
constexpr long long kStride = 1LL << 21;
} // namespace

// ---------------------------------------------------------------------------
// Embedding plumbing
// ---------------------------------------------------------------------------

Embedding::Embedding(const Triangulation& T)
    : tri_(&T), edge_order_(T.num_edges())
{
}

int Embedding::new_point(int edge)
{
    int p = static_cast<int>(pt_edge_.size());
    pt_edge_.push_back(edge);
    pt_pos_.push_back(-1);
    pt_curve_.push_back(-1);
    return p;
}

void Embedding::reindex_edge(int e)
{
    auto& ord = edge_order_[e];
    for (int i = 0; i < static_cast<int>(ord.size()); ++i) pt_pos_[ord[i]] = i;
}

void Embedding::place_point(int p, int position)
{
    auto& ord = edge_order_[pt_edge_[p]];
    ord.insert(ord.begin() + position, p);
    reindex_edge(pt_edge_[p]);
}

void Embedding::place_point_adjacent(int p, int other, bool after)
{
    place_point(p, pt_pos_[other] + (after ? 1 : 0));
}

void Embedding::erase_point(int p)
{
    auto& ord = edge_order_[pt_edge_[p]];
    ord.erase(ord.begin() + pt_pos_[p]);
    pt_pos_[p] = -1;
    reindex_edge(pt_edge_[p]);
}

int Embedding::add_strand(Strand s)
{
    int c = static_cast<int>(strands_.size());
    for (int p : s.pts) pt_curve_[p] = c;
    strands_.push_back(std::move(s));
    return c;
}

void Embedding::kill_strand(int c)
{
    for (int p : strands_[c].pts)
        if (pt_pos_[p] >= 0) erase_point(p);
    strands_[c].pts.clear();
    strands_[c].outw.clear();
    strands_[c].alive = false;
}

int Embedding::num_chords(int c) const
{
    const Strand& s = strands_[c];
    if (!s.alive) return 0;
    int n = static_cast<int>(s.pts.size());
    return s.open ? std::max(0, n - 1) : n;
}

int Embedding::chord_from(ChordRef ch) const { return strands_[ch.curve].pts[ch.idx]; }

int Embedding::chord_to(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    return s.pts[(ch.idx + 1) % s.pts.size()];
}

int Embedding::chord_tri(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    int p = s.pts[ch.idx];
    Corner c = tri_->edge_corner(pt_edge_[p], s.outw[ch.idx]);
    return c.tri;
}

int Embedding::chord_from_side(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    int p = s.pts[ch.idx];
    return tri_->edge_corner(pt_edge_[p], s.outw[ch.idx]).side;
}

int Embedding::chord_to_side(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    int j = (ch.idx + 1) % s.pts.size();
    int q = s.pts[j];
    Corner c = tri_->edge_corner(pt_edge_[q], 1 - s.outw[j]);
    return c.side;
}

namespace {
// ccw rank of a point on a given (tri, side) slot
int ccw_rank(const Embedding& E, int p, Corner slot)
{
    int e = E.point_edge(p);
    bool forward = (slot == E.tri().edge_corner(e, 0));
    int w = static_cast<int>(E.edge_points(e).size());
    return forward ? E.pos(p) : w - 1 - E.pos(p);
}
} // namespace

long long Embedding::corner_bcoord(int side) const { return side * kStride; }

long long Embedding::bcoord_from(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    int p = s.pts[ch.idx];
    Corner slot = tri_->edge_corner(pt_edge_[p], s.outw[ch.idx]);
    return slot.side * kStride + ccw_rank(*this, p, slot) + 1;
}

long long Embedding::bcoord_to(ChordRef ch) const
{
    const Strand& s = strands_[ch.curve];
    int j = (ch.idx + 1) % s.pts.size();
    int q = s.pts[j];
    Corner slot = tri_->edge_corner(pt_edge_[q], 1 - s.outw[j]);
    return slot.side * kStride + ccw_rank(*this, q, slot) + 1;
}

namespace {
bool in_open_arc(long long x, long long u, long long v)
{
    // x in the open ccw arc from u to v
    if (u < v) return u < x && x < v;
    return x > u || x < v;
}
} // namespace

bool Embedding::chords_cross(ChordRef a, ChordRef b) const
{
    if (chord_tri(a) != chord_tri(b)) return false;
    long long a1 = bcoord_from(a), a2 = bcoord_to(a);
    long long b1 = bcoord_from(b), b2 = bcoord_to(b);
    return in_open_arc(b1, a1, a2) != in_open_arc(b2, a1, a2);
}

std::vector<Embedding::ChordRef> Embedding::chords_in_tri(int t) const
{
    std::vector<ChordRef> out;
    for (int c = 0; c < num_strands(); ++c) {
        const Strand& s = strands_[c];
        if (!s.alive) continue;
        int n = num_chords(c);
        for (int i = 0; i < n; ++i) {
            ChordRef ch{c, i};
            if (chord_tri(ch) == t) out.push_back(ch);
        }
    }
    return out;
}

std::vector<int> Embedding::family_weights(int label) const
{
    std::vector<int> w(tri_->num_edges(), 0);
    for (const Strand& s : strands_) {
        if (!s.alive || s.label != label) continue;
        for (int p : s.pts) w[pt_edge_[p]]++;
    }
    return w;
}

int Embedding::count_crossings(int la, int lb) const
{
    int total = 0;
    for (int t = 0; t < tri_->num_triangles(); ++t) {
        auto chords = chords_in_tri(t);
        for (size_t i = 0; i < chords.size(); ++i) {
            if (strands_[chords[i].curve].label != la) continue;
            for (size_t j = 0; j < chords.size(); ++j) {
                if (strands_[chords[j].curve].label != lb) continue;
                if (chords_cross(chords[i], chords[j])) total++;
            }
        }
    }
    return total;
}

void Embedding::validate(bool check_laminar) const
{
    for (int c = 0; c < num_strands(); ++c) {
        const Strand& s = strands_[c];
        if (!s.alive) continue;
        int n = static_cast<int>(s.pts.size());
        if (!s.open && n < 2 && n != 0)
            throw InternalConsistencyError("closed strand with a single point");
        for (int i = 0; i < num_chords(c); ++i) {
            ChordRef ch{c, i};
            int j = (i + 1) % n;
            Corner out = tri_->edge_corner(pt_edge_[s.pts[i]], s.outw[i]);
            Corner in = tri_->edge_corner(pt_edge_[s.pts[j]], 1 - s.outw[j]);
            if (out.tri != in.tri)
                throw InternalConsistencyError("chord endpoints disagree on triangle");
            (void)ch;
        }
        for (int p : s.pts)
            if (pt_pos_[p] < 0 || edge_order_[pt_edge_[p]][pt_pos_[p]] != p)
                throw InternalConsistencyError("point not placed consistently");
    }
    if (check_laminar) {
        for (int t = 0; t < tri_->num_triangles(); ++t) {
            auto chords = chords_in_tri(t);
            for (size_t i = 0; i < chords.size(); ++i)
                for (size_t j = i + 1; j < chords.size(); ++j) {
                    if (strands_[chords[i].curve].label != strands_[chords[j].curve].label)
                        continue;
                    if (chords_cross(chords[i], chords[j]))
                        throw EmbeddingViolationError("strands of one family cross");
                }
        }
    }
}

// ---------------------------------------------------------------------------
// Tightening: remove same-side chords (bigons with triangulation edges).
// ---------------------------------------------------------------------------

void Embedding::tighten(int label)
{
    bool progress = true;
    while (progress) {
        progress = false;
        for (int c = 0; c < num_strands() && !progress; ++c) {
            Strand& s = strands_[c];
            if (!s.alive || s.label != label || s.open) continue;
            int n = static_cast<int>(s.pts.size());
            for (int i = 0; i < n; ++i) {
                int j = (i + 1) % n;
                int p = s.pts[i], q = s.pts[j];
                if (pt_edge_[p] != pt_edge_[q]) continue;
                Corner out = tri_->edge_corner(pt_edge_[p], s.outw[i]);
                Corner in = tri_->edge_corner(pt_edge_[q], 1 - s.outw[j]);
                if (out != in) continue; // transversal pass, not a same-side chord
                if (std::abs(pt_pos_[p] - pt_pos_[q]) != 1) continue; // not innermost
                erase_point(p);
                erase_point(q);
                if (n == 2) {
                    s.pts.clear();
                    s.outw.clear();
                    s.alive = false;
                } else if (j > i) {
                    s.pts.erase(s.pts.begin() + i, s.pts.begin() + i + 2);
                    s.outw.erase(s.outw.begin() + i, s.outw.begin() + i + 2);
                } else { // j == 0, i == n-1
                    s.pts.pop_back();
                    s.outw.pop_back();
                    s.pts.erase(s.pts.begin());
                    s.outw.erase(s.outw.begin());
                }
                progress = true;
                break;
            }
        }
        if (progress) continue;
        // No innermost move found; make sure no same-side chord remains at all.
        for (int c = 0; c < num_strands(); ++c) {
            const Strand& s = strands_[c];
            if (!s.alive || s.label != label || s.open) continue;
            int n = static_cast<int>(s.pts.size());
            for (int i = 0; i < n; ++i) {
                int j = (i + 1) % n;
                if (pt_edge_[s.pts[i]] != pt_edge_[s.pts[j]]) continue;
                Corner out = tri_->edge_corner(pt_edge_[s.pts[i]], s.outw[i]);
                Corner in = tri_->edge_corner(pt_edge_[s.pts[j]], 1 - s.outw[j]);
                if (out == in)
                    throw InternalConsistencyError("same-side chord with no innermost instance");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical tracing from normal coordinates
// ---------------------------------------------------------------------------

namespace {

// corner k of a triangle sits between side k-1 (incoming) and side k (outgoing)
int corner_between(int s1, int s2)
{
    // sides s1 != s2 share exactly one corner
    if (s2 == (s1 + 1) % 3) return s2;
    if (s1 == (s2 + 1) % 3) return s1;
    return -1;
}

struct TraceResult {
    std::vector<Embedding::Strand> strands;
};

} // namespace

// Emit the multicurve into E; points of each edge appended after existing
// content, in canonical (slot-0 ccw) order.  Returns the number of strands.
int Multicurve::emit(Embedding& E, int label) const
{
    const Triangulation& T = E.tri();
    const std::vector<int>& w = weights_;
    // create points
    std::vector<std::vector<int>> mine(T.num_edges());
    for (int e = 0; e < T.num_edges(); ++e) {
        for (int k = 0; k < w[e]; ++k) {
            int p = E.new_point(e);
            E.place_point(p, static_cast<int>(E.edge_points(e).size()));
            mine[e].push_back(p);
        }
    }
    // family-relative ccw rank -> point, per slot
    auto at_rank = [&](Corner slot, int rank) -> int {
        int e = T.edge(slot.tri, slot.side);
        bool fwd = (slot == T.edge_corner(e, 0));
        int r = fwd ? rank : w[e] - 1 - rank;
        return mine[e][r];
    };
    // partner[(point, corner-slot-of-its-edge)] = (point, that point's slot)
    std::map<std::pair<int, int>, std::pair<int, int>> partner;
    for (int t = 0; t < T.num_triangles(); ++t) {
        int we[3];
        for (int s = 0; s < 3; ++s) we[s] = w[T.edge(t, s)];
        if ((we[0] + we[1] + we[2]) % 2 != 0)
            throw EmbeddingViolationError("weights violate parity");
        int mk[3];
        for (int k = 0; k < 3; ++k) {
            mk[k] = (we[(k + 2) % 3] + we[k] - we[(k + 1) % 3]) / 2;
            if (mk[k] < 0)
                throw EmbeddingViolationError("weights violate triangle inequality");
        }
        for (int k = 0; k < 3; ++k) {
            int sp = (k + 2) % 3; // side ending at corner k
            int sn = k;           // side starting at corner k
            int m = mk[k];
            for (int j = 0; j < m; ++j) {
                Corner csp{t, sp}, csn{t, sn};
                int a = at_rank(csp, we[sp] - 1 - j);
                int b = at_rank(csn, j);
                int slot_a = T.corner_index(csp);
                int slot_b = T.corner_index(csn);
                partner[{a, slot_a}] = {b, slot_b};
                partner[{b, slot_b}] = {a, slot_a};
            }
        }
    }
    // walk cycles
    std::set<int> seen;
    int count = 0;
    for (int e = 0; e < T.num_edges(); ++e) {
        for (int p0 : mine[e]) {
            if (seen.count(p0)) continue;
            Embedding::Strand s;
            s.label = label;
            int p = p0;
            int exit_slot = 0;
            do {
                seen.insert(p);
                s.pts.push_back(p);
                s.outw.push_back(static_cast<uint8_t>(exit_slot));
                auto it = partner.find({p, exit_slot});
                if (it == partner.end())
                    throw InternalConsistencyError("trace: missing chord partner");
                p = it->second.first;
                exit_slot = 1 - it->second.second; // entered via that slot; exit the other
            } while (!(p == p0 && exit_slot == 0));
            E.add_strand(std::move(s));
            count++;
        }
    }
    return count;
}

Multicurve Multicurve::empty(const Triangulation& T)
{
    Multicurve m;
    m.tri_ = &T;
    m.weights_.assign(T.num_edges(), 0);
    return m;
}

bool Multicurve::is_empty() const
{
    for (int x : weights_)
        if (x) return false;
    return true;
}

int Multicurve::total_weight() const
{
    return std::accumulate(weights_.begin(), weights_.end(), 0);
}

Multicurve Multicurve::from_weights(const Triangulation& T, std::vector<int> w,
                                    bool allow_peripheral)
{
    if (static_cast<int>(w.size()) != T.num_edges())
        throw EmbeddingViolationError("weight vector length mismatch");
    Multicurve probe;
    probe.tri_ = &T;
    probe.weights_ = std::move(w);
    if (probe.is_empty()) return probe;
    Embedding E(T);
    probe.emit(E, 0);
    return extract_family(E, 0, allow_peripheral);
}

// Normal coordinates of the link circle of a vertex: one crossing per
// incident edge end.
std::vector<int> vertex_link_weights(const Triangulation& T, int v)
{
    std::vector<int> w(T.num_edges(), 0);
    for (int t = 0; t < T.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k) {
            if (T.corner_vertex(t, k) != v) continue;
            // corner k is an end of side k-1 and of side k
            w[T.edge(t, (k + 2) % 3)]++;
            w[T.edge(t, k)]++;
        }
    // each edge end was seen from both adjacent triangles
    for (int& x : w) {
        if (x % 2 != 0) throw InternalConsistencyError("vertex link weight parity");
        x /= 2;
    }
    return w;
}

Multicurve extract_family(const Embedding& E, int label, bool allow_peripheral)
{
    const Triangulation& T = E.tri();
    std::vector<std::vector<int>> links;
    for (int v = 0; v < T.num_vertices(); ++v) links.push_back(vertex_link_weights(T, v));
    Multicurve m;
    m.tri_ = &T;
    m.weights_.assign(T.num_edges(), 0);
    for (int c = 0; c < E.num_strands(); ++c) {
        const Embedding::Strand& s = E.strand(c);
        if (!s.alive || s.label != label) continue;
        if (s.open) throw EmbeddingViolationError("cannot extract open strands");
        std::vector<int> cw(T.num_edges(), 0);
        for (int p : s.pts) cw[E.point_edge(p)]++;
        bool peripheral = std::find(links.begin(), links.end(), cw) != links.end();
        if (peripheral && !allow_peripheral) continue; // dropped
        for (int e = 0; e < T.num_edges(); ++e) m.weights_[e] += cw[e];
        m.components_.push_back(std::move(cw));
    }
    std::sort(m.components_.begin(), m.components_.end());
    return m;
}

Multicurve normalize_family(Embedding& E, int label, bool allow_peripheral)
{
    // Rebuild the family alone so innermost-ness is judged correctly, then
    // tighten there.
    Embedding solo(E.tri());
    std::vector<int> pmap(static_cast<size_t>(E.tri().num_edges()), 0);
    // copy points in edge order, keeping relative order of this family
    std::unordered_map<int, int> newpt;
    for (int e = 0; e < E.tri().num_edges(); ++e) {
        for (int p : E.edge_points(e)) {
            int c = E.point_curve(p);
            if (c < 0 || !E.strand(c).alive || E.strand(c).label != label) continue;
            int np = solo.new_point(e);
            solo.place_point(np, static_cast<int>(solo.edge_points(e).size()));
            newpt[p] = np;
        }
    }
    for (int c = 0; c < E.num_strands(); ++c) {
        const Embedding::Strand& s = E.strand(c);
        if (!s.alive || s.label != label) continue;
        Embedding::Strand ns;
        ns.label = label;
        ns.open = s.open;
        for (size_t i = 0; i < s.pts.size(); ++i) {
            ns.pts.push_back(newpt.at(s.pts[i]));
            ns.outw.push_back(s.outw[i]);
        }
        solo.add_strand(std::move(ns));
    }
    solo.tighten(label);
    solo.validate();
    return extract_family(solo, label, allow_peripheral);
}

Multicurve Multicurve::component(int i) const
{
    return from_weights(*tri_, components_[i], true);
}

bool Multicurve::contains_component(const Multicurve& single) const
{
    if (single.num_components() != 1) return false;
    for (const auto& cw : components_)
        if (cw == single.weights()) return true;
    return false;
}

std::string Multicurve::key() const
{
    std::ostringstream os;
    for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) os << ',';
        os << weights_[i];
    }
    return os.str();
}

uint64_t Multicurve::hash() const
{
    uint64_t h = 1469598103934665603ULL;
    for (int x : weights_) {
        h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Bigon removal between two families
// ---------------------------------------------------------------------------

struct Embedding::BigonHit {
    std::vector<std::pair<int, int>> corridor; // (pointA, pointB) adjacent pairs
};

namespace {

struct Cursor {
    int curve;
    int idx;
    int dir; // +1 walk forward, -1 backward
};

} // namespace

// No chord may cross both the alpha-sub-segment and the beta-sub-segment of a
// wedge at a crossing.  a0/b0 are the far endpoints, pa/pb the wedge exits.
static bool wedge_empty(const Embedding& E, int t, Embedding::ChordRef alpha,
                        Embedding::ChordRef beta, long long a0, long long pa,
                        long long b0, long long pb)
{
    // Determine which reflection we are in.
    long long lo1, hi1, lo2, hi2; // invader endpoint arcs (open)
    if (in_open_arc(b0, a0, pa)) {
        lo1 = b0; hi1 = pa;  // arc (b0 -> pa)
        lo2 = pb; hi2 = a0;  // arc (pb -> a0)
    } else {
        lo1 = pa; hi1 = b0;  // mirrored
        lo2 = a0; hi2 = pb;
    }
    for (const auto& g : E.chords_in_tri(t)) {
        if (g == alpha || g == beta) continue;
        long long g1 = E.bcoord_from(g), g2 = E.bcoord_to(g);
        bool hit = (in_open_arc(g1, lo1, hi1) && in_open_arc(g2, lo2, hi2)) ||
                   (in_open_arc(g2, lo1, hi1) && in_open_arc(g1, lo2, hi2));
        if (hit) return false;
    }
    return true;
}

std::optional<Embedding::BigonHit> Embedding::find_empty_bigon(int la, int lb) const
{
    const int total_pts = static_cast<int>(pt_edge_.size());
    for (int t = 0; t < tri_->num_triangles(); ++t) {
        auto chords = chords_in_tri(t);
        for (const auto& A : chords) {
            if (strands_[A.curve].label != la) continue;
            for (const auto& B : chords) {
                if (strands_[B.curve].label != lb) continue;
                if (!chords_cross(A, B)) continue;
                for (int da : {+1, -1}) {
                    for (int db : {+1, -1}) {
                        // wedge exit points
                        int pa = da > 0 ? chord_to(A) : chord_from(A);
                        int pb = db > 0 ? chord_to(B) : chord_from(B);
                        long long ca = da > 0 ? bcoord_to(A) : bcoord_from(A);
                        long long cb = db > 0 ? bcoord_to(B) : bcoord_from(B);
                        long long fa = da > 0 ? bcoord_from(A) : bcoord_to(A);
                        long long fb = db > 0 ? bcoord_from(B) : bcoord_to(B);
                        if (ca / kStride != cb / kStride) continue; // different sides
                        if (!wedge_empty(*this, t, A, B, fa, ca, fb, cb)) continue;

                        BigonHit hit;
                        Cursor ua{A.curve, A.idx, da};
                        Cursor ub{B.curve, B.idx, db};
                        int xa = pa, xb = pb;
                        bool ok = false;
                        for (int guard = 0; guard <= total_pts; ++guard) {
                            if (std::abs(pt_pos_[xa] - pt_pos_[xb]) != 1) break;
                            hit.corridor.emplace_back(xa, xb);
                            // advance both cursors
                            int na = static_cast<int>(strands_[ua.curve].pts.size());
                            int nb = static_cast<int>(strands_[ub.curve].pts.size());
                            ua.idx = (ua.idx + ua.dir + na) % na;
                            ub.idx = (ub.idx + ub.dir + nb) % nb;
                            ChordRef A2{ua.curve, ua.idx}, B2{ub.curve, ub.idx};
                            if ((A2 == A && B2 == B)) break; // wrapped all the way
                            if (chord_tri(A2) != chord_tri(B2))
                                throw InternalConsistencyError("corridor strands diverge");
                            int t2 = chord_tri(A2);
                            if (chords_cross(A2, B2)) {
                                // closing wedge: entry points are xa, xb
                                long long ea = ua.dir > 0 ? bcoord_from(A2) : bcoord_to(A2);
                                long long eb = ub.dir > 0 ? bcoord_from(B2) : bcoord_to(B2);
                                long long ga = ua.dir > 0 ? bcoord_to(A2) : bcoord_from(A2);
                                long long gb = ub.dir > 0 ? bcoord_to(B2) : bcoord_from(B2);
                                if (!wedge_empty(*this, t2, A2, B2, ga, ea, gb, eb)) break;
                                ok = true;
                                break;
                            }
                            // same far side, and no strand pierces the quad
                            int sa2 = ua.dir > 0 ? chord_to_side(A2) : chord_from_side(A2);
                            int sb2 = ub.dir > 0 ? chord_to_side(B2) : chord_from_side(B2);
                            if (sa2 != sb2) break;
                            bool pierced = false;
                            for (const auto& g : chords_in_tri(t2)) {
                                if (g == A2 || g == B2) continue;
                                if (chords_cross(g, A2) && chords_cross(g, B2)) {
                                    pierced = true;
                                    break;
                                }
                            }
                            if (pierced) break;
                            xa = ua.dir > 0 ? chord_to(A2) : chord_from(A2);
                            xb = ub.dir > 0 ? chord_to(B2) : chord_from(B2);
                        }
                        if (ok) return hit;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

int Embedding::minimize_pair(int la, int lb)
{
    int before = count_crossings(la, lb);
    while (true) {
        auto hit = find_empty_bigon(la, lb);
        if (!hit) break;
        for (auto [pa, pb] : hit->corridor) {
            auto& ord = edge_order_[pt_edge_[pa]];
            std::swap(ord[pt_pos_[pa]], ord[pt_pos_[pb]]);
            std::swap(pt_pos_[pa], pt_pos_[pb]);
        }
        int now = count_crossings(la, lb);
        if (now != before - 2)
            throw InternalConsistencyError("bigon move failed to reduce crossings by 2");
        before = now;
    }
    return before;
}

// ---------------------------------------------------------------------------
// Intersection / union
// ---------------------------------------------------------------------------

int geometric_intersection(const Multicurve& a, const Multicurve& b)
{
    if (a.tri() != b.tri())
        throw EmbeddingViolationError("curves on different triangulations");
    if (a.is_empty() || b.is_empty()) return 0;
    if (a == b) return 0;
    Embedding E(*a.tri());
    a.emit(E, 0);
    b.emit(E, 1);
    return E.minimize_pair(0, 1);
}

Multicurve multicurve_union(const Multicurve& a, const Multicurve& b)
{
    if (a.tri() != b.tri())
        throw EmbeddingViolationError("curves on different triangulations");
    if (geometric_intersection(a, b) != 0)
        throw EmbeddingViolationError("union of crossing multicurves");
    std::vector<int> w = a.weights();
    for (size_t i = 0; i < w.size(); ++i) w[i] += b.weights()[i];
    return Multicurve::from_weights(*a.tri(), std::move(w));
}

// ---------------------------------------------------------------------------
// Complement pieces and sides
// ---------------------------------------------------------------------------

std::vector<Piece> complement_pieces(const Multicurve& walls)
{
    Embedding E(*walls.tri());
    walls.emit(E, 0);
    return build_arrangement(E, 0).pieces;
}

namespace {

std::string weights_key(const std::vector<int>& w)
{
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

// side of every label-1 strand in a minimized overlay, via the wall faces
std::vector<int> strand_sides(const Embedding& E, const WallArrangement& A)
{
    std::vector<int> out;
    for (int s = 0; s < E.num_strands(); ++s) {
        const auto& st = E.strand(s);
        if (!st.alive || st.label != 1) continue;
        Embedding::ChordRef ch{s, 0};
        int t = E.chord_tri(ch);
        int side = E.chord_from_side(ch);
        int p = E.chord_from(ch);
        int r = A.wall_rank(E.point_edge(p), E.pos(p));
        out.push_back(A.face_piece[A.interval_face(t, side, r)]);
    }
    return out;
}

} // namespace

int side_of_curve(const Multicurve& walls, const Multicurve& c)
{
    if (c.is_empty()) throw EmbeddingViolationError("side of empty curve");
    bool all_wall = true;
    for (int i = 0; i < c.num_components(); ++i) {
        Multicurve comp = c.component(i);
        if (!walls.contains_component(comp)) all_wall = false;
    }
    if (all_wall) return kIsWallComponent;
    Embedding E(*walls.tri());
    walls.emit(E, 0);
    c.emit(E, 1);
    if (E.minimize_pair(0, 1) > 0) return kCrossesWalls;
    auto A = build_arrangement(E, 0);
    auto sides = strand_sides(E, A);
    // wall-parallel components may sit on either side; ignore them
    std::vector<int> real;
    int idx = 0;
    for (int s = 0; s < E.num_strands(); ++s) {
        const auto& st = E.strand(s);
        if (!st.alive || st.label != 1) continue;
        std::vector<int> cw(E.tri().num_edges(), 0);
        for (int p : st.pts) cw[E.point_edge(p)]++;
        bool wallish = false;
        for (int i = 0; i < walls.num_components(); ++i)
            if (walls.component_weights(i) == cw) wallish = true;
        if (!wallish) real.push_back(sides[idx]);
        idx++;
    }
    if (real.empty()) return kIsWallComponent;
    for (int s : real)
        if (s != real[0]) return kCrossesWalls; // mixed sides: not inside one piece
    return real[0];
}

int side_of_puncture(const Multicurve& walls, int vertex)
{
    Embedding E(*walls.tri());
    walls.emit(E, 0);
    auto A = build_arrangement(E, 0);
    return A.piece_of_vertex(vertex);
}

Piece subsurface_piece(const Subsurface& Y)
{
    auto pieces = complement_pieces(Y.boundary);
    if (Y.side < 0 || Y.side >= static_cast<int>(pieces.size()))
        throw DegenerateSubsurfaceError("subsurface side out of range");
    return pieces[Y.side];
}

SubsurfaceClass classify_subsurface(const Subsurface& Y)
{
    auto pieces = complement_pieces(Y.boundary);
    if (Y.side < 0 || Y.side >= static_cast<int>(pieces.size()))
        throw DegenerateSubsurfaceError("subsurface side out of range");
    const Piece& p = pieces[Y.side];
    SubsurfaceClass out;
    out.genus = p.genus;
    out.marks = p.marks();
    out.complexity = p.complexity();
    bool window_type = (p.genus == 1 && p.marks() == 1) || (p.genus == 0 && p.marks() == 4);
    bool other_big = false;
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
        if (i != Y.side && pieces[i].complexity() >= 1) other_big = true;
    out.separated_domain = window_type && other_big;
    return out;
}

bool is_domain_separating(const Multicurve& c)
{
    if (!c.connected()) return false;
    auto pieces = complement_pieces(c);
    if (pieces.size() != 2) return false;
    return pieces[0].complexity() >= 1 && pieces[1].complexity() >= 1;
}

bool curve_in_subsurface(const Multicurve& c, const Subsurface& Y)
{
    if (Y.whole_surface()) return true;
    return side_of_curve(Y.boundary, c) == Y.side;
}

SubsurfaceRelation subsurface_relation(const Subsurface& a, const Subsurface& b)
{
    if (a.boundary == b.boundary && a.side == b.side) return SubsurfaceRelation::Equal;
    if (a.whole_surface() && b.whole_surface()) return SubsurfaceRelation::Equal;
    if (a.whole_surface()) return SubsurfaceRelation::SecondInsideFirst;
    if (b.whole_surface()) return SubsurfaceRelation::FirstInsideSecond;
    if (geometric_intersection(a.boundary, b.boundary) > 0)
        return SubsurfaceRelation::Transverse;

    // disjoint boundaries: realize everything on one embedding and compare
    // the two sides piece by piece
    const Triangulation& T = *a.boundary.tri();
    std::vector<int> uw(T.num_edges(), 0);
    std::vector<std::vector<int>> comps; // distinct component keys
    for (const Multicurve* m : {&a.boundary, &b.boundary})
        for (int i = 0; i < m->num_components(); ++i) {
            auto cw = m->component_weights(i);
            if (std::find(comps.begin(), comps.end(), cw) == comps.end())
                comps.push_back(cw);
        }
    for (const auto& cw : comps)
        for (size_t e = 0; e < uw.size(); ++e) uw[e] += cw[e];
    Multicurve M = Multicurve::from_weights(T, uw);

    Embedding E(T);
    M.emit(E, 0);
    auto A_M = build_arrangement(E, 0);

    auto relabel = [&](const Multicurve& walls, int label) {
        for (int s = 0; s < E.num_strands(); ++s) {
            auto& st = E.strand_mut(s);
            std::vector<int> cw(T.num_edges(), 0);
            for (int p : st.pts) cw[E.point_edge(p)]++;
            bool in_walls = false;
            for (int i = 0; i < walls.num_components(); ++i)
                if (walls.component_weights(i) == cw) in_walls = true;
            st.label = in_walls ? label : 0;
        }
    };

    auto sides_of_M_pieces = [&](const Multicurve& walls, int my_side) {
        relabel(walls, 1);
        auto A_w = build_arrangement(E, 1);
        // map each M piece to a wall piece via a representative segment
        int npieces = static_cast<int>(A_M.pieces.size());
        std::vector<char> inside(npieces, 0);
        for (int t = 0; t < T.num_triangles(); ++t) {
            for (int s = 0; s < 3; ++s) {
                int e = T.edge(t, s);
                const auto& ord = E.edge_points(e);
                bool fwd = (Corner{t, s} == T.edge_corner(e, 0));
                int wM = A_M.wall_prefix_[e].back();
                for (int k = 0; k <= wM; ++k) {
                    // boundary segment at canonical M-interval k: count label-1
                    // points among the first k M-points
                    int count1 = 0, seenM = 0;
                    for (int p : ord) {
                        if (seenM == k) break;
                        seenM++;
                        int cidx = E.point_curve(p);
                        if (cidx >= 0 && E.strand(cidx).label == 1) count1++;
                    }
                    int ccwM = fwd ? k : wM - k;
                    int fM = A_M.segment_face(t, s, ccwM);
                    int fw = A_w.interval_face(t, s, count1);
                    if (A_w.face_piece[fw] == my_side)
                        inside[A_M.face_piece[fM]] = 1;
                }
            }
        }
        relabel(walls, 0); // restore
        return inside;
    };

    auto in_a = sides_of_M_pieces(a.boundary, a.side);
    auto in_b = sides_of_M_pieces(b.boundary, b.side);
    bool a_sub_b = true, b_sub_a = true, meet = false;
    for (size_t i = 0; i < in_a.size(); ++i) {
        if (in_a[i] && !in_b[i]) a_sub_b = false;
        if (in_b[i] && !in_a[i]) b_sub_a = false;
        if (in_a[i] && in_b[i]) meet = true;
    }
    if (a_sub_b && b_sub_a) return SubsurfaceRelation::Equal;
    if (a_sub_b) return SubsurfaceRelation::FirstInsideSecond;
    if (b_sub_a) return SubsurfaceRelation::SecondInsideFirst;
    if (!meet) return SubsurfaceRelation::Disjoint;
    return SubsurfaceRelation::Transverse;
}

// ---------------------------------------------------------------------------
// Dehn twist by explicit cabling
// ---------------------------------------------------------------------------

namespace {

long long rel_coord(long long x, long long base)
{
    constexpr long long circle = 3 * kStride;
    long long r = (x - base) % circle;
    return r < 0 ? r + circle : r;
}

} // namespace

Multicurve dehn_twist(const Multicurve& c, const Multicurve& about, int power)
{
    const Triangulation& T = *c.tri();
    if (!about.connected())
        throw EmbeddingViolationError("dehn twist about a disconnected multicurve");
    if (power == 0 || c.is_empty()) return c;

    Embedding E(T);
    c.emit(E, 0);
    about.emit(E, 1);
    if (E.minimize_pair(0, 1) == 0) return c;

    int ts = -1;
    for (int s = 0; s < E.num_strands(); ++s)
        if (E.strand(s).alive && E.strand(s).label == 1) ts = s;
    const auto& tst = E.strand(ts);
    const int m = static_cast<int>(tst.pts.size());
    const int n = std::abs(power);
    const int sigma = power > 0 ? +1 : -1;
    const int nm = n * m;

    // crossings of c-chords with t-chords
    struct Crossing {
        int cs;      // c strand
        int ci;      // c chord
        int tj;      // t chord
        long long along_c; // order key along the c chord
        long long along_t; // order key along the t chord
        int rho = 0;       // rank along the t chord
        bool from_right = false;
        int id = 0;
    };
    std::vector<Crossing> xs;
    for (int cs = 0; cs < E.num_strands(); ++cs) {
        const auto& st = E.strand(cs);
        if (!st.alive || st.label != 0) continue;
        for (int ci = 0; ci < E.num_chords(cs); ++ci) {
            Embedding::ChordRef gamma{cs, ci};
            for (int tj = 0; tj < m; ++tj) {
                Embedding::ChordRef tau{ts, tj};
                if (!E.chords_cross(gamma, tau)) continue;
                Crossing x;
                x.cs = cs;
                x.ci = ci;
                x.tj = tj;
                long long gF = E.bcoord_from(gamma), gT = E.bcoord_to(gamma);
                long long tF = E.bcoord_from(tau), tT = E.bcoord_to(tau);
                long long tpt = in_open_arc(tF, gF, gT) ? tF : tT;
                x.along_c = rel_coord(tpt, gF);
                long long gpt = in_open_arc(gF, tF, tT) ? gF : gT;
                x.along_t = rel_coord(gpt, tF);
                // left of directed tau is the ccw arc (to -> from)
                x.from_right = !in_open_arc(gF, tT, tF);
                xs.push_back(x);
            }
        }
    }
    // ranks along each t chord
    {
        std::vector<std::vector<int>> per_tau(m);
        for (int i = 0; i < static_cast<int>(xs.size()); ++i) per_tau[xs[i].tj].push_back(i);
        for (auto& lst : per_tau) {
            std::sort(lst.begin(), lst.end(),
                      [&](int a, int b) { return xs[a].along_t < xs[b].along_t; });
            for (int r = 0; r < static_cast<int>(lst.size()); ++r) xs[lst[r]].rho = r;
        }
        for (int i = 0; i < static_cast<int>(xs.size()); ++i) xs[i].id = i;
    }

    // cable points: crossing x, k = 1..nm, at t-point index q(x, k)
    auto q_of = [&](const Crossing& x, int k) {
        int q = sigma > 0 ? x.tj + k : x.tj - (k - 1);
        return ((q % m) + m) % m;
    };
    // height order key at a fixed t-point; smaller = closer to the right side
    auto h_key = [&](const Crossing& x, int k) {
        // sigma=+1: h = (k - rho_frac)/nm  -> (k asc, rho desc)
        // sigma=-1: h = (k - 1 + rho_frac)/nm -> (k asc, rho asc)
        long long big = static_cast<long long>(xs.size()) + 2;
        return sigma > 0 ? k * big + (big - 1 - x.rho) : k * big + x.rho;
    };

    // group cable points per t-point
    std::vector<std::vector<std::pair<long long, std::pair<int, int>>>> blocks(m);
    for (const auto& x : xs)
        for (int k = 1; k <= nm; ++k)
            blocks[q_of(x, k)].push_back({h_key(x, k), {x.id, k}});
    for (auto& b : blocks) std::sort(b.begin(), b.end());

    // orientation of the block along the edge at t-point q
    auto asc_is_right = [&](int q) {
        int p = tst.pts[q];
        Corner slot = T.edge_corner(E.point_edge(p), tst.outw[q]);
        // ccw-after the departure point is the right side of the strand
        return slot == T.edge_corner(E.point_edge(p), 0);
    };

    // out slot of a cable point at t-point q for travel direction d (+1 along
    // ascending k): effective direction along t is sigma*d
    auto cable_outw = [&](int q, int d) -> uint8_t {
        return sigma * d > 0 ? tst.outw[q] : static_cast<uint8_t>(1 - tst.outw[q]);
    };

    // build the result embedding from scratch
    Embedding E2(T);
    std::unordered_map<int, int> cmap;         // old c point -> new point
    std::map<std::pair<int, int>, int> xmap;   // (crossing id, k) -> new point
    for (int e = 0; e < T.num_edges(); ++e) {
        for (int p : E.edge_points(e)) {
            int cs = E.point_curve(p);
            if (E.strand(cs).label == 0) {
                int np = E2.new_point(e);
                E2.place_point(np, static_cast<int>(E2.edge_points(e).size()));
                cmap[p] = np;
            } else {
                // t point: replaced by its block
                int q = -1;
                for (int i = 0; i < m; ++i)
                    if (tst.pts[i] == p) q = i;
                auto blk = blocks[q];
                // ascending positions point rightward iff asc_is_right; the
                // block is sorted by ascending height (right -> left)
                if (asc_is_right(q)) std::reverse(blk.begin(), blk.end());
                for (auto& item : blk) {
                    int np = E2.new_point(e);
                    E2.place_point(np, static_cast<int>(E2.edge_points(e).size()));
                    xmap[item.second] = np;
                }
            }
        }
    }

    for (int cs = 0; cs < E.num_strands(); ++cs) {
        const auto& st = E.strand(cs);
        if (!st.alive || st.label != 0) continue;
        Embedding::Strand ns;
        ns.label = 0;
        std::vector<const Crossing*> mine;
        for (int ci = 0; ci < E.num_chords(cs); ++ci) {
            ns.pts.push_back(cmap.at(st.pts[ci]));
            ns.outw.push_back(st.outw[ci]);
            mine.clear();
            for (const auto& x : xs)
                if (x.cs == cs && x.ci == ci) mine.push_back(&x);
            std::sort(mine.begin(), mine.end(),
                      [](const Crossing* a, const Crossing* b) { return a->along_c < b->along_c; });
            for (const Crossing* x : mine) {
                int d = x->from_right ? +1 : -1;
                for (int step = 0; step < nm; ++step) {
                    int k = d > 0 ? step + 1 : nm - step;
                    int q = q_of(*x, k);
                    ns.pts.push_back(xmap.at({x->id, k}));
                    ns.outw.push_back(cable_outw(q, d));
                }
            }
        }
        E2.add_strand(std::move(ns));
    }
    E2.validate(false);
    return normalize_family(E2, 0);
}

} // namespace pantslab
