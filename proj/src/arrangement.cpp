#include "pantslab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pantslab {

namespace {

struct DSU {
    std::vector<int> up;
    explicit DSU(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x)
    {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

int WallArrangement::wall_rank(int e, int pos) const
{
    return wall_prefix_[e][pos];
}

int WallArrangement::segment_face(int t, int side, int ccw_rank) const
{
    return seg_face_[t][side_base_[t][side] + ccw_rank];
}

int WallArrangement::interval_face(int t, int side, int k) const
{
    const Triangulation& T = E->tri();
    int e = T.edge(t, side);
    int w = wall_prefix_[e].empty() ? 0 : wall_prefix_[e].back();
    bool fwd = (Corner{t, side} == T.edge_corner(e, 0));
    return segment_face(t, side, fwd ? k : w - k);
}

int WallArrangement::piece_of_vertex(int v) const
{
    const Triangulation& T = E->tri();
    for (int t = 0; t < T.num_triangles(); ++t)
        for (int k = 0; k < 3; ++k)
            if (T.corner_vertex(t, k) == v) return face_piece[corner_face(t, k)];
    return -1;
}

WallArrangement build_arrangement(const Embedding& E, int wall_label)
{
    const Triangulation& T = E.tri();
    WallArrangement A;
    A.E = &E;
    A.wall_label = wall_label;

    auto is_wall_pt = [&](int p) {
        int c = E.point_curve(p);
        return c >= 0 && E.strand(c).alive && E.strand(c).label == wall_label;
    };

    // wall prefix counts per edge: wall_prefix_[e][pos] = # wall points before pos
    A.wall_prefix_.resize(T.num_edges());
    for (int e = 0; e < T.num_edges(); ++e) {
        const auto& ord = E.edge_points(e);
        A.wall_prefix_[e].resize(ord.size() + 1, 0);
        for (size_t i = 0; i < ord.size(); ++i)
            A.wall_prefix_[e][i + 1] = A.wall_prefix_[e][i] + (is_wall_pt(ord[i]) ? 1 : 0);
    }

    // wall chord of a point on a given slot of its edge
    std::map<std::pair<int, int>, int> chord_at; // (point, corner-slot) -> chord id
    // collect wall chords
    for (int c = 0; c < E.num_strands(); ++c) {
        const auto& s = E.strand(c);
        if (!s.alive || s.label != wall_label) continue;
        for (int i = 0; i < E.num_chords(c); ++i) {
            Embedding::ChordRef ref{c, i};
            WallArrangement::WallChord wc;
            wc.ref = ref;
            wc.face[0] = wc.face[1] = -1;
            int id = static_cast<int>(A.chords.size());
            A.chords.push_back(wc);
            int pf = E.chord_from(ref);
            int pt = E.chord_to(ref);
            chord_at[{pf, s.outw[i]}] = id;
            int j = (i + 1) % static_cast<int>(s.pts.size());
            chord_at[{pt, 1 - s.outw[j]}] = id;
        }
    }

    // per-triangle sweep
    A.corner_face_.assign(3 * T.num_triangles(), -1);
    A.seg_face_.resize(T.num_triangles());
    A.side_base_.resize(T.num_triangles());
    for (int t = 0; t < T.num_triangles(); ++t) {
        // boundary items ccw: corner s, then wall points of side s in ccw order
        struct Item { bool corner; int k; int pt; int slot; };
        std::vector<Item> items;
        for (int s = 0; s < 3; ++s) {
            items.push_back({true, s, -1, -1});
            int e = T.edge(t, s);
            Corner slot{t, s};
            bool fwd = (slot == T.edge_corner(e, 0));
            const auto& ord = E.edge_points(e);
            std::vector<int> pts;
            for (int p : ord)
                if (is_wall_pt(p)) pts.push_back(p);
            if (!fwd) std::reverse(pts.begin(), pts.end());
            for (int p : pts) items.push_back({false, s, p, T.corner_index(slot)});
        }
        // side_base_: packed index of segment (side s, ccw rank 0)
        std::vector<int> sb(3, 0);
        {
            int acc = 0;
            for (int s = 0; s < 3; ++s) {
                sb[s] = acc;
                int e = T.edge(t, s);
                int w = A.wall_prefix_[e].back();
                acc += w + 1;
            }
            A.side_base_[t] = sb;
            A.seg_face_[t].assign(acc, -1);
        }

        std::vector<int> stack;
        auto new_face = [&]() {
            A.face_tri.push_back(t);
            return A.num_faces++;
        };
        int f_out = new_face();
        int current = f_out;
        std::map<int, int> open_chord_of_pt; // first-seen endpoints
        // segment ccw rank counter per side
        std::vector<int> segrank(3, 0);
        for (size_t i = 0; i < items.size(); ++i) {
            const Item& it = items[i];
            if (it.corner) {
                A.corner_face_[3 * t + it.k] = current;
            } else {
                int id = chord_at.at({it.pt, it.slot});
                auto& wc = A.chords[id];
                bool from_end = (E.chord_from(wc.ref) == it.pt &&
                                 E.strand(wc.ref.curve).outw[wc.ref.idx] == it.slot);
                int endpoint = from_end ? 0 : 1;
                int e = T.edge(t, it.k);
                int w = A.wall_prefix_[e].back();
                bool fwd = (Corner{t, it.k} == T.edge_corner(e, 0));
                int before_rank = segrank[it.k];        // ccw rank of segment before this point
                int canon_before = fwd ? before_rank : w - before_rank;
                int canon_after = fwd ? before_rank + 1 : w - before_rank - 1;
                if (wc.face[0] < 0 && wc.face[1] < 0) {
                    // opening
                    wc.face[1] = current; // outer
                    wc.interval_at[endpoint][1] = canon_before;
                    wc.interval_at[endpoint][0] = canon_after;
                    stack.push_back(current);
                    current = new_face();
                    wc.face[0] = current; // inner
                } else {
                    // closing
                    if (wc.face[0] != current)
                        throw InternalConsistencyError("arrangement sweep: mismatched closing");
                    wc.interval_at[endpoint][0] = canon_before;
                    wc.interval_at[endpoint][1] = canon_after;
                    current = stack.back();
                    stack.pop_back();
                }
            }
            // segment after this item
            int s_now = it.k;
            if (it.corner) segrank[s_now] = 0;
            else segrank[s_now]++;
            A.seg_face_[t][A.side_base_[t][s_now] + segrank[s_now]] = current;
        }
        if (!stack.empty() || current != f_out)
            throw InternalConsistencyError("arrangement sweep: unbalanced chords");
    }

    // portals: glue faces across edge intervals
    DSU dsu(A.num_faces);
    for (int e = 0; e < T.num_edges(); ++e) {
        int w = A.wall_prefix_[e].back();
        Corner a = T.edge_corner(e, 0);
        Corner b = T.edge_corner(e, 1);
        for (int k = 0; k <= w; ++k) {
            int fa = A.segment_face(a.tri, a.side, k);
            int fb = A.segment_face(b.tri, b.side, w - k);
            A.portals.push_back({e, k, fa, fb});
            dsu.join(fa, fb);
        }
    }
    // piece numbering: by least face id
    A.face_piece.assign(A.num_faces, -1);
    int np = 0;
    for (int f = 0; f < A.num_faces; ++f) {
        int r = dsu.find(f);
        if (A.face_piece[r] < 0) A.face_piece[r] = np++;
        A.face_piece[f] = A.face_piece[r];
    }
    A.pieces.assign(np, {});

    // boundary circles: link (chord, side) cells across shared endpoints
    // key: (point, canonical interval) -> list of (chord id, side)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> at;
    for (int id = 0; id < static_cast<int>(A.chords.size()); ++id) {
        const auto& wc = A.chords[id];
        int pf = E.chord_from(wc.ref);
        int pt = E.chord_to(wc.ref);
        for (int side = 0; side < 2; ++side) {
            at[{pf, wc.interval_at[0][side]}].push_back({id, side});
            at[{pt, wc.interval_at[1][side]}].push_back({id, side});
        }
    }
    A.chord_circle.assign(A.chords.size(), {-1, -1});
    A.num_circles = 0;
    A.circle_piece.clear();
    A.circle_strand.clear();
    auto partner_of = [&](int id, int side, int point) -> std::pair<int, int> {
        int interval = -1;
        const auto& wc = A.chords[id];
        if (E.chord_from(wc.ref) == point) interval = wc.interval_at[0][side];
        if (E.chord_to(wc.ref) == point) interval = wc.interval_at[1][side];
        for (auto [oid, oside] : at.at({point, interval}))
            if (oid != id) return {oid, oside};
        throw InternalConsistencyError("boundary circle trace: missing partner");
    };
    for (int id = 0; id < static_cast<int>(A.chords.size()); ++id) {
        for (int side = 0; side < 2; ++side) {
            if (A.chord_circle[id][side] >= 0) continue;
            int circle = A.num_circles++;
            A.circle_piece.push_back(A.face_piece[A.chords[id].face[side]]);
            A.circle_strand.push_back(A.chords[id].ref.curve);
            int cid = id, cside = side;
            int enter_pt = E.chord_from(A.chords[cid].ref);
            while (A.chord_circle[cid][cside] < 0) {
                A.chord_circle[cid][cside] = circle;
                int exit_pt = (enter_pt == E.chord_from(A.chords[cid].ref))
                                  ? E.chord_to(A.chords[cid].ref)
                                  : E.chord_from(A.chords[cid].ref);
                auto [nid, nside] = partner_of(cid, cside, exit_pt);
                cid = nid;
                cside = nside;
                enter_pt = exit_pt;
            }
        }
    }

    // piece statistics
    std::vector<int> faces_in(np, 0), eint(np, 0), ebnd(np, 0), vsplit(np, 0);
    std::vector<std::vector<int>> punct(np);
    for (int f = 0; f < A.num_faces; ++f) faces_in[A.face_piece[f]]++;
    for (const auto& portal : A.portals) {
        if (A.face_piece[portal.face_a] != A.face_piece[portal.face_b])
            throw InternalConsistencyError("portal faces in different pieces");
        eint[A.face_piece[portal.face_a]]++;
    }
    for (const auto& wc : A.chords)
        for (int side = 0; side < 2; ++side) ebnd[A.face_piece[wc.face[side]]]++;
    // split point copies: one per (wall point, adjacent interval side); the
    // copy on interval k belongs to the faces glued there
    for (int e = 0; e < T.num_edges(); ++e) {
        const auto& ord = E.edge_points(e);
        Corner a = T.edge_corner(e, 0);
        for (int pos = 0; pos < static_cast<int>(ord.size()); ++pos) {
            if (!is_wall_pt(ord[pos])) continue;
            int k = A.wall_prefix_[e][pos]; // interval below the point
            int f_lo = A.segment_face(a.tri, a.side, k);
            int f_hi = A.segment_face(a.tri, a.side, k + 1);
            vsplit[A.face_piece[f_lo]]++;
            vsplit[A.face_piece[f_hi]]++;
        }
    }
    for (int v = 0; v < T.num_vertices(); ++v) {
        int pc = A.piece_of_vertex(v);
        punct[pc].push_back(v);
    }
    std::vector<int> circ(np, 0);
    for (int cidx = 0; cidx < A.num_circles; ++cidx) circ[A.circle_piece[cidx]]++;

    // component key per wall strand
    std::map<int, std::string> strand_key;
    for (int c = 0; c < E.num_strands(); ++c) {
        const auto& s = E.strand(c);
        if (!s.alive || s.label != wall_label) continue;
        std::vector<int> cw(T.num_edges(), 0);
        for (int p : s.pts) cw[E.point_edge(p)]++;
        std::ostringstream os;
        for (size_t i = 0; i < cw.size(); ++i) {
            if (i) os << ',';
            os << cw[i];
        }
        strand_key[c] = os.str();
    }

    for (int pc = 0; pc < np; ++pc) {
        Piece& piece = A.pieces[pc];
        int V = vsplit[pc] + static_cast<int>(punct[pc].size());
        int Eg = eint[pc] + ebnd[pc];
        int F = faces_in[pc];
        int chi = V - Eg + F;
        piece.boundary_circles = circ[pc];
        int twog = 2 - chi - circ[pc];
        if (twog < 0 || twog % 2 != 0)
            throw InternalConsistencyError("piece Euler characteristic inconsistent");
        piece.genus = twog / 2;
        std::sort(punct[pc].begin(), punct[pc].end());
        piece.punctures = punct[pc];
    }
    for (int cidx = 0; cidx < A.num_circles; ++cidx)
        A.pieces[A.circle_piece[cidx]].boundary_keys.push_back(strand_key.at(A.circle_strand[cidx]));
    for (auto& piece : A.pieces)
        std::sort(piece.boundary_keys.begin(), piece.boundary_keys.end());

    return A;
}

} // namespace pantslab
