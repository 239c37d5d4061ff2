#pragma once

#include <array>
#include <vector>

#include "pantslab/curves.hpp"

namespace pantslab {

// Faces of the per-triangle chord diagrams of one family ("walls") in an
// embedding, glued across edge intervals into the complement pieces of the
// wall multicurve.  Face and piece numbering depend only on the family's own
// combinatorics, so they agree between a canonical embedding of the walls and
// any overlay containing them.
struct WallArrangement {
    const Embedding* E = nullptr;
    int wall_label = 0;

    int num_faces = 0;
    std::vector<int> face_tri;
    std::vector<int> face_piece;
    std::vector<Piece> pieces;

    struct WallChord {
        Embedding::ChordRef ref;
        int face[2];           // 0 = inner (pushed at opening), 1 = outer
        int interval_at[2][2]; // [endpoint 0=from,1=to][side 0=inner,1=outer]
                               // -> canonical wall interval on that edge
    };
    std::vector<WallChord> chords;
    

    struct Portal {
        int edge = 0;
        int interval = 0; // canonical wall interval, 0..w
        int face_a = 0, face_b = 0;
    };
    std::vector<Portal> portals;

    int num_circles = 0;
    std::vector<int> circle_piece;
    std::vector<int> circle_strand;           // wall strand of each boundary circle
    std::vector<std::array<int, 2>> chord_circle; // circle id per (chord, side)

    // face of the boundary segment at ccw rank r (among wall points) on side
    // `side` of triangle t; r ranges 0..w_side
    int segment_face(int t, int side, int ccw_rank) const;
    int corner_face(int t, int k) const { return corner_face_[3 * t + k]; }
    int piece_of_vertex(int v) const;

    // number of wall points before `pos` in the canonical order of edge e
    int wall_rank(int e, int pos) const;
    // face seen from slot (t, side) at canonical interval k
    int interval_face(int t, int side, int k) const;

    // internal tables
    std::vector<int> corner_face_;
    std::vector<std::vector<int>> seg_face_; // per tri: 3*(w+1) packed by side
    std::vector<std::vector<int>> side_base_;
    std::vector<std::vector<int>> wall_prefix_; // per edge: prefix counts of wall points
};

WallArrangement build_arrangement(const Embedding& E, int wall_label);

} // namespace pantslab
