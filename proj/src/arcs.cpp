#include "pantslab/arcs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace pantslab {

namespace {

int fresh_label(const Embedding& E)
{
    int m = 0;
    for (int c = 0; c < E.num_strands(); ++c)
        m = std::max(m, E.strand(c).label + 1);
    return m;
}

// Place a fresh point adjacent to a template point.  `out_corner` is the
// corner slot of the template's outgoing chord (forward orientation);
// left = absolute left of the template strand's forward direction.
int parallel_point(Embedding& E, int tpl, int out_corner, bool left)
{
    int p = E.new_point(E.point_edge(tpl));
    bool right_is_after = (out_corner == 0); // ccw-after the departure = right
    bool after = left ? !right_is_after : right_is_after;
    E.place_point_adjacent(p, tpl, after);
    return p;
}

struct Walk {
    std::vector<int> pts;
    std::vector<uint8_t> outw;
};

// Vertex loop points around the vertex at `sector`, in rotation direction
// dir (+1 = rotate_about_vertex, -1 = reverse).  Starts by leaving the
// sector and ends re-entering it.
void append_vertex_loop(Embedding& E, Corner sector, int dir, Walk& w)
{
    const Triangulation& T = E.tri();
    auto rot_cw = [&](Corner c) {
        Corner g = T.glued({c.tri, (c.side + 2) % 3});
        return Corner{g.tri, g.side};
    };
    std::vector<Corner> corners;
    Corner c = sector;
    do {
        corners.push_back(c);
        c = dir > 0 ? T.rotate_about_vertex(c) : rot_cw(c);
    } while (c != sector);
    const int deg = static_cast<int>(corners.size());
    for (int i = 0; i < deg; ++i) {
        Corner ci = corners[i];
        Corner cross_slot = dir > 0 ? Corner{ci.tri, ci.side}
                                    : Corner{ci.tri, (ci.side + 2) % 3};
        int e = T.edge(cross_slot);
        // v sits at the ccw start of the crossed side for dir > 0, at the
        // ccw end for dir < 0
        bool v_at_ccw_start = dir > 0;
        bool canonical_start = (cross_slot == T.edge_corner(e, 0)) ? v_at_ccw_start
                                                                   : !v_at_ccw_start;
        int near_pos = canonical_start ? 0 : static_cast<int>(E.edge_points(e).size());
        int p = E.new_point(e);
        E.place_point(p, near_pos);
        Corner partner = T.glued(cross_slot);
        w.pts.push_back(p);
        w.outw.push_back(static_cast<uint8_t>(T.corner_index(partner)));
    }
}

struct ArcFrame {
    const Embedding::Strand* s;
    int i0, i1;
    int n;
    std::vector<int> idx; // index sequence i0..i1 forward
};

ArcFrame frame_of(const Embedding& E, const OpenArc& arc)
{
    ArcFrame f;
    f.s = &E.strand(arc.strand);
    f.n = static_cast<int>(f.s->pts.size());
    if (f.s->open) {
        f.i0 = f.n > 0 ? 0 : -1;
        f.i1 = f.n - 1;
    } else {
        f.i0 = arc.i0;
        f.i1 = arc.i1;
    }
    if (f.i0 >= 0) {
        int i = f.i0;
        while (true) {
            f.idx.push_back(i);
            if (i == f.i1) break;
            i = (i + 1) % f.n;
        }
    }
    return f;
}

// Parallel copies of the arc points; dir = +1 runs e0 -> e1, dir = -1 runs
// e1 -> e0.  `left` is the absolute side (of the arc's forward direction).
void append_arc_copy(Embedding& E, const ArcFrame& f, int dir, bool left, Walk& w)
{
    if (f.i0 < 0) return;
    std::vector<int> order = f.idx;
    if (dir < 0) std::reverse(order.begin(), order.end());
    for (int i : order) {
        int tpl = f.s->pts[i];
        int fwd_out = f.s->outw[i];
        int p = parallel_point(E, tpl, fwd_out, left);
        w.pts.push_back(p);
        w.outw.push_back(static_cast<uint8_t>(dir > 0 ? fwd_out : 1 - fwd_out));
    }
}

// Full parallel loop around a host strand, entered at the host chord `at`,
// traveling in direction dir, offset on the absolute side `left` of the
// host's own orientation.
void append_host_loop(Embedding& E, Embedding::ChordRef at, int dir, bool left, Walk& w)
{
    const auto& s = E.strand(at.curve);
    int n = static_cast<int>(s.pts.size());
    for (int step = 1; step <= n; ++step) {
        int i = dir > 0 ? (at.idx + step) % n : ((at.idx + 1 - step) % n + n) % n;
        int tpl = s.pts[i];
        int p = parallel_point(E, tpl, s.outw[i], left);
        w.pts.push_back(p);
        w.outw.push_back(static_cast<uint8_t>(dir > 0 ? s.outw[i] : 1 - s.outw[i]));
    }
}

int crossings_with_strand(const Embedding& E, int strand_a, int strand_b)
{
    int total = 0;
    for (int i = 0; i < E.num_chords(strand_a); ++i)
        for (int j = 0; j < E.num_chords(strand_b); ++j)
            if (E.chords_cross({strand_a, i}, {strand_b, j})) total++;
    return total;
}

bool chords_consistent(const Embedding& E, const Embedding::Strand& s)
{
    const Triangulation& T = E.tri();
    int n = static_cast<int>(s.pts.size());
    if (n < 2) return false;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        Corner out = T.edge_corner(E.point_edge(s.pts[i]), s.outw[i]);
        Corner in = T.edge_corner(E.point_edge(s.pts[j]), 1 - s.outw[j]);
        if (out.tri != in.tri) return false;
    }
    return true;
}

bool self_laminar(const Embedding& E, int sid)
{
    for (int i = 0; i < E.num_chords(sid); ++i)
        for (int j = i + 1; j < E.num_chords(sid); ++j)
            if (E.chords_cross({sid, i}, {sid, j})) return false;
    return true;
}

} // namespace

std::optional<OpenArc> find_arc(Embedding& E, int wall_label, const Anchor& from,
                                const Anchor& to, int must_cross_strand, int cross_count,
                                int arc_label)
{
    const Triangulation& T = E.tri();
    WallArrangement A = build_arrangement(E, wall_label);

    struct Move {
        bool is_portal;
        int portal;
        int chord;
        int to_face;
    };
    std::vector<std::vector<Move>> adj(A.num_faces);
    for (int i = 0; i < static_cast<int>(A.portals.size()); ++i) {
        const auto& p = A.portals[i];
        adj[p.face_a].push_back({true, i, -1, p.face_b});
        adj[p.face_b].push_back({true, i, -1, p.face_a});
    }
    if (must_cross_strand >= 0) {
        for (int i = 0; i < static_cast<int>(A.chords.size()); ++i) {
            const auto& wc = A.chords[i];
            if (wc.ref.curve != must_cross_strand) continue;
            adj[wc.face[0]].push_back({false, -1, i, wc.face[1]});
            adj[wc.face[1]].push_back({false, -1, i, wc.face[0]});
        }
    }

    // anchor faces, with bookkeeping to recover the sector / host chord
    struct Start { int face; Corner sector; int chord_id; };
    auto faces_of_anchor = [&](const Anchor& a) {
        std::vector<Start> out;
        if (a.kind == Anchor::Kind::Puncture) {
            for (int t = 0; t < T.num_triangles(); ++t)
                for (int k = 0; k < 3; ++k)
                    if (T.corner_vertex(t, k) == a.vertex)
                        out.push_back({A.corner_face(t, k), Corner{t, k}, -1});
        } else if (a.kind == Anchor::Kind::Strand) {
            for (int i = 0; i < static_cast<int>(A.chords.size()); ++i)
                if (A.chords[i].ref.curve == a.strand)
                    for (int side = 0; side < 2; ++side)
                        out.push_back({A.chords[i].face[side], Corner{-1, -1}, i});
        } else {
            for (int i = 0; i < static_cast<int>(A.chords.size()); ++i)
                if (A.chords[i].ref == a.chord)
                    out.push_back({A.chords[i].face[a.chord_side], Corner{-1, -1}, i});
        }
        return out;
    };

    auto starts = faces_of_anchor(from);
    auto goals = faces_of_anchor(to);
    if (starts.empty() || goals.empty()) return std::nullopt;

    const int C = cross_count + 1;
    std::vector<int> prev(A.num_faces * C, -2);
    std::vector<int> via(A.num_faces * C, -1);
    std::queue<int> q;
    std::map<int, int> start_idx; // face -> index into starts
    for (int si = 0; si < static_cast<int>(starts.size()); ++si) {
        int st = starts[si].face * C;
        if (prev[st] != -2) continue;
        prev[st] = -1;
        start_idx[starts[si].face] = si;
        q.push(st);
    }
    int goal_state = -1, goal_idx = -1;
    while (!q.empty() && goal_state < 0) {
        int st = q.front();
        q.pop();
        int f = st / C, used = st % C;
        if (used == cross_count)
            for (int gi = 0; gi < static_cast<int>(goals.size()); ++gi)
                if (goals[gi].face == f) {
                    goal_state = st;
                    goal_idx = gi;
                    break;
                }
        if (goal_state >= 0) break;
        for (int mi = 0; mi < static_cast<int>(adj[f].size()); ++mi) {
            const Move& mv = adj[f][mi];
            int nused = used + (mv.is_portal ? 0 : 1);
            if (nused >= C) continue;
            int nst = mv.to_face * C + nused;
            if (prev[nst] != -2) continue;
            prev[nst] = st;
            via[nst] = mi;
            q.push(nst);
        }
    }
    if (goal_state < 0) return std::nullopt;

    std::vector<Move> path;
    int st = goal_state;
    while (prev[st] >= 0) {
        int ps = prev[st];
        path.push_back(adj[ps / C][via[st]]);
        st = ps;
    }
    std::reverse(path.begin(), path.end());
    int first_face = st / C;

    Embedding::Strand ns;
    ns.label = arc_label;
    ns.open = true;
    auto is_wall_pt = [&](int p) {
        int c = E.point_curve(p);
        return c >= 0 && E.strand(c).alive && E.strand(c).label == wall_label;
    };
    for (const Move& mv : path) {
        if (!mv.is_portal) continue;
        const auto& portal = A.portals[mv.portal];
        int e = portal.edge;
        // insertion position: just before the interval's upper wall point
        int posn = static_cast<int>(E.edge_points(e).size());
        for (int pos = 0; pos < static_cast<int>(E.edge_points(e).size()); ++pos)
            if (is_wall_pt(E.edge_points(e)[pos]) && A.wall_rank(e, pos) == portal.interval) {
                posn = pos;
                break;
            }
        int p = E.new_point(e);
        E.place_point(p, posn);
        int out_slot = (mv.to_face == portal.face_b) ? 1 : 0;
        ns.pts.push_back(p);
        ns.outw.push_back(static_cast<uint8_t>(out_slot));
    }

    OpenArc arc;
    auto fill_end = [&](const Anchor& a, const Start& srec, ArcEnd& end) {
        if (a.kind == Anchor::Kind::Puncture) {
            end.at_vertex = true;
            end.vertex = a.vertex;
            end.sector = srec.sector;
        } else {
            end.at_vertex = false;
            end.host = A.chords[srec.chord_id].ref;
        }
    };
    fill_end(from, starts[start_idx.at(first_face)], arc.e0);
    fill_end(to, goals[goal_idx], arc.e1);
    arc.strand = E.add_strand(std::move(ns));
    arc.i0 = 0;
    arc.i1 = static_cast<int>(E.strand(arc.strand).pts.size()) - 1;
    return arc;
}

namespace {

int try_band_walk(Embedding& E, const OpenArc& arc, int dir_far, bool side_far,
                  int dir_near, bool side_near, int out_label)
{
    ArcFrame f = frame_of(E, arc);
    Walk w;
    append_arc_copy(E, f, +1, true, w);
    if (arc.e1.at_vertex)
        append_vertex_loop(E, arc.e1.sector, dir_far, w);
    else
        append_host_loop(E, arc.e1.host, dir_far, side_far, w);
    append_arc_copy(E, f, -1, false, w);
    if (arc.e0.at_vertex)
        append_vertex_loop(E, arc.e0.sector, dir_near, w);
    else
        append_host_loop(E, arc.e0.host, dir_near, side_near, w);

    Embedding::Strand s;
    s.label = out_label;
    s.pts = w.pts;
    s.outw = w.outw;
    if (!chords_consistent(E, s)) {
        for (int p : s.pts) E.erase_point(p);
        return -1;
    }
    return E.add_strand(std::move(s));
}

} // namespace

Multicurve band_boundary(Embedding& E, const OpenArc& arc)
{
    int lab = fresh_label(E);
    std::vector<int> hosts{arc.strand};
    if (!arc.e0.at_vertex) hosts.push_back(arc.e0.host.curve);
    if (!arc.e1.at_vertex) hosts.push_back(arc.e1.host.curve);
    for (int combo = 0; combo < 16; ++combo) {
        int dir_far = (combo & 1) ? -1 : +1;
        bool side_far = combo & 2;
        int dir_near = (combo & 4) ? -1 : +1;
        bool side_near = combo & 8;
        int sid = try_band_walk(E, arc, dir_far, side_far, dir_near, side_near, lab);
        if (sid < 0) continue;
        bool ok = self_laminar(E, sid);
        for (int h : hosts)
            if (ok && crossings_with_strand(E, sid, h) != 0) ok = false;
        if (!ok) {
            E.kill_strand(sid);
            continue;
        }
        Multicurve out = normalize_family(E, lab);
        E.kill_strand(sid);
        return out;
    }
    throw InternalConsistencyError("band_boundary: no orientation assembles");
}

std::vector<Multicurve> host_surgeries(Embedding& E, const OpenArc& arc)
{
    if (arc.e0.at_vertex || arc.e1.at_vertex || arc.e0.host.curve != arc.e1.host.curve)
        throw InvalidArcError("host_surgeries requires both ends on one host strand");
    int hostc = arc.e0.host.curve;
    const std::vector<int> host_pts = E.strand(hostc).pts;
    const std::vector<uint8_t> host_outw = E.strand(hostc).outw;
    int n = static_cast<int>(host_pts.size());
    int lab = fresh_label(E);
    std::vector<Multicurve> out;

    for (int way = 0; way < 2; ++way) {
        bool got = false;
        for (int arc_left = 0; arc_left < 2 && !got; ++arc_left) {
            for (int host_left = 0; host_left < 2 && !got; ++host_left) {
                ArcFrame f = frame_of(E, arc);
                Walk w;
                append_arc_copy(E, f, +1, arc_left == 0, w);
                int j1 = arc.e1.host.idx;
                int j0 = arc.e0.host.idx;
                if (way == 0) {
                    int steps = j1 == j0 ? 0 : ((j0 - j1 - 1 + n) % n) + 1;
                    for (int t = 1; t <= steps; ++t) {
                        int i = (j1 + t) % n;
                        int p = parallel_point(E, host_pts[i], host_outw[i], host_left == 0);
                        w.pts.push_back(p);
                        w.outw.push_back(host_outw[i]);
                    }
                } else {
                    int steps = j1 == j0 ? n : ((j1 - j0 - 1 + n) % n) + 1;
                    for (int t = 0; t < steps; ++t) {
                        int i = ((j1 - t) % n + n) % n;
                        int p = parallel_point(E, host_pts[i], host_outw[i], host_left == 0);
                        w.pts.push_back(p);
                        w.outw.push_back(static_cast<uint8_t>(1 - host_outw[i]));
                    }
                }
                Embedding::Strand s;
                s.label = lab;
                s.pts = w.pts;
                s.outw = w.outw;
                if (!chords_consistent(E, s)) {
                    for (int p : s.pts) E.erase_point(p);
                    continue;
                }
                int sid = E.add_strand(std::move(s));
                bool ok = self_laminar(E, sid) &&
                          crossings_with_strand(E, sid, arc.strand) == 0 &&
                          crossings_with_strand(E, sid, hostc) == 0;
                if (!ok) {
                    E.kill_strand(sid);
                    continue;
                }
                out.push_back(normalize_family(E, lab));
                E.kill_strand(sid);
                got = true;
            }
        }
        if (!got) out.push_back(Multicurve::empty(E.tri()));
    }
    return out;
}

std::optional<Multicurve> closed_cross_loop(Embedding& E, int wall_label,
                                            Embedding::ChordRef gate)
{
    Anchor a0{Anchor::Kind::ChordSide, -1, -1, gate, 0};
    Anchor a1{Anchor::Kind::ChordSide, -1, -1, gate, 1};
    int lab = fresh_label(E);
    auto arc = find_arc(E, wall_label, a0, a1, -1, 0, lab);
    if (!arc) return std::nullopt;
    auto& s = E.strand_mut(arc->strand);
    s.open = false;
    if (s.pts.size() < 2) {
        E.kill_strand(arc->strand);
        return std::nullopt;
    }
    Multicurve out = normalize_family(E, lab);
    E.kill_strand(arc->strand);
    if (out.is_empty() || !out.connected()) return std::nullopt;
    return out;
}

OpenArc extract_subarc(Embedding& E, int strand, Embedding::ChordRef cut0_host,
                       int cut0_chord, Embedding::ChordRef cut1_host, int cut1_chord,
                       int arc_label)
{
    (void)arc_label;
    OpenArc arc;
    arc.strand = strand;
    const auto& s = E.strand(strand);
    int n = static_cast<int>(s.pts.size());
    arc.i0 = (cut0_chord + 1) % n;
    arc.i1 = cut1_chord;
    arc.e0.at_vertex = false;
    arc.e0.host = cut0_host;
    arc.e1.at_vertex = false;
    arc.e1.host = cut1_host;
    return arc;
}

} // namespace pantslab
