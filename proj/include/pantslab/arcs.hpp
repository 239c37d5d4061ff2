#pragma once

#include <optional>
#include <vector>

#include "pantslab/arrangement.hpp"
#include "pantslab/curves.hpp"

namespace pantslab {

// An endpoint of an embedded arc: a puncture (vertex) or a transversal
// landing on a chord of a host strand.
struct ArcEnd {
    bool at_vertex = false;
    int vertex = -1;
    Corner sector;                 // vertex case: corner of the landing sector
    Embedding::ChordRef host;      // crossing case: host chord the end crosses
};

struct OpenArc {
    int strand = -1; // strand carrying the arc
    // inclusive point-index range along the strand (the whole strand when it
    // is open; a cyclic range when the arc is a segment of a closed strand);
    // i0 = -1 marks an arc with no interior points
    int i0 = -1, i1 = -1;
    ArcEnd e0, e1;
};

// Anchor for arc search: a puncture, a wall strand, or one side of a
// specific wall chord.
struct Anchor {
    enum class Kind { Puncture, Strand, ChordSide } kind = Kind::Puncture;
    int vertex = -1;
    int strand = -1;
    Embedding::ChordRef chord;
    int chord_side = 0; // 0 = inner face, 1 = outer face of the chord
};

// Shortest embedded arc between the anchors through the complement faces of
// the wall family, crossing the wall strand `must_cross` exactly
// `cross_count` times (and no other wall).  Realized as an open strand with
// `arc_label`.  Returns nothing when no such face path exists.
std::optional<OpenArc> find_arc(Embedding& E, int wall_label, const Anchor& from,
                                const Anchor& to, int must_cross_strand, int cross_count,
                                int arc_label);

// Boundary curve of a regular neighborhood of (anchor0 ∪ arc ∪ anchor1),
// the component that runs along the arc.  Anchors are taken from the arc's
// ends (vertex loops for punctures, full parallel loops for host strands).
// The result is normalized on a fresh embedding.
Multicurve band_boundary(Embedding& E, const OpenArc& arc);

// For an arc with both ends on the same host strand: the two curves
// (host-arc + arc), one per way around the host.  Entries may be empty
// multicurves when a side comes out inessential.
std::vector<Multicurve> host_surgeries(Embedding& E, const OpenArc& arc);

// Closed loop crossing the wall chord `gate` exactly once, built from a face
// path between the two sides of the gate.  Empty optional if the sides are
// not connected off the walls.
std::optional<Multicurve> closed_cross_loop(Embedding& E, int wall_label,
                                            Embedding::ChordRef gate);

// Copy the points of a closed strand between two of its chords' crossings
// into a fresh open strand running parallel on the given absolute side.
// cut0/cut1: crossings (host chord of the cut, and the chord index of the
// strand being cut).  Used to extract arcs of one curve relative to another.
OpenArc extract_subarc(Embedding& E, int strand, Embedding::ChordRef cut0_host,
                       int cut0_chord, Embedding::ChordRef cut1_host, int cut1_chord,
                       int arc_label);

} // namespace pantslab
