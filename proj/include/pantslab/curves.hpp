#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pantslab/surface.hpp"

namespace pantslab {

// ---------------------------------------------------------------------------
// Embedding: a system of strands on a triangulation, with an explicit
// transverse order of crossing points along every edge.  Strands of one
// family never cross each other; strands of different families may, and the
// crossings are implicit in the per-edge orders (two chords of a triangle
// cross iff their endpoints interleave around the triangle boundary).
// ---------------------------------------------------------------------------
class Embedding {
public:
    explicit Embedding(const Triangulation& T);

    struct Strand {
        std::vector<int> pts;      // point ids, cyclic (or linear when open)
        std::vector<uint8_t> outw; // outw[i]: corner slot of pts[i]'s edge entered by chord i -> i+1
        int label = 0;
        bool alive = true;
        bool open = false;
    };

    const Triangulation& tri() const { return *tri_; }
    int num_strands() const { return static_cast<int>(strands_.size()); }
    const Strand& strand(int c) const { return strands_[c]; }
    Strand& strand_mut(int c) { return strands_[c]; }

    // point plumbing
    int new_point(int edge);                       // unplaced
    void place_point(int p, int position);         // insert into the edge order
    void place_point_adjacent(int p, int other, bool after);
    void erase_point(int p);
    int point_edge(int p) const { return pt_edge_[p]; }
    int pos(int p) const { return pt_pos_[p]; }
    const std::vector<int>& edge_points(int e) const { return edge_order_[e]; }

    int add_strand(Strand s);
    void kill_strand(int c); // remove its points and mark dead

    // chord geometry -------------------------------------------------------
    struct ChordRef {
        int curve = -1;
        int idx = -1; // chord from pts[idx] to pts[idx+1 mod n]
        auto operator<=>(const ChordRef&) const = default;
    };
    int chord_tri(ChordRef ch) const;
    int chord_from(ChordRef ch) const;
    int chord_to(ChordRef ch) const;
    int chord_from_side(ChordRef ch) const;
    int chord_to_side(ChordRef ch) const;
    // circular boundary coordinate of an endpoint within the chord triangle
    long long bcoord_from(ChordRef ch) const;
    long long bcoord_to(ChordRef ch) const;
    long long corner_bcoord(int side) const; // coordinate of corner `side`
    bool chords_cross(ChordRef a, ChordRef b) const;

    std::vector<ChordRef> chords_in_tri(int t) const;
    int num_chords(int c) const;

    // families ---------------------------------------------------------------
    std::vector<int> family_weights(int label) const;
    int count_crossings(int label_a, int label_b) const;

    // Remove inner-family bigons with the triangulation edges (same-side
    // chords), dropping components that shrink to nothing.  Innermost-ness is
    // judged against the given label only; do not call while another family
    // must be kept in minimal position against this one.
    void tighten(int label);

    // Remove all bigons between the two families; afterwards the crossing
    // count is the geometric intersection number.  Returns it.
    int minimize_pair(int label_a, int label_b);

    void validate(bool check_laminar = true) const; // throws on breakage

private:
    const Triangulation* tri_;
    std::vector<Strand> strands_;
    std::vector<int> pt_edge_;
    std::vector<int> pt_pos_;
    std::vector<int> pt_curve_;
    std::vector<std::vector<int>> edge_order_;

    void reindex_edge(int e);
    friend class WalkBuilder;
    friend struct OverlayAccess;

    struct BigonHit;
    std::optional<BigonHit> find_empty_bigon(int la, int lb) const;

public:
    int point_curve(int p) const { return pt_curve_[p]; }
    void set_point_curve(int p, int c) { pt_curve_[p] = c; }
};

// ---------------------------------------------------------------------------
// Multicurve: canonical value type for an isotopy class of an embedded
// multicurve.  Normal coordinates on the reference triangulation are a
// complete invariant, so equality and hashing go through the weight vector.
// ---------------------------------------------------------------------------
class Multicurve {
public:
    Multicurve() = default;

    static Multicurve empty(const Triangulation& T);
    // weights must satisfy the per-triangle counting constraints; components
    // that are puncture-parallel are rejected unless allow_peripheral.
    static Multicurve from_weights(const Triangulation& T, std::vector<int> w,
                                   bool allow_peripheral = false);

    const Triangulation* tri() const { return tri_; }
    const std::vector<int>& weights() const { return weights_; }
    bool is_empty() const;
    int num_components() const { return static_cast<int>(components_.size()); }
    const std::vector<int>& component_weights(int i) const { return components_[i]; }
    Multicurve component(int i) const;
    bool connected() const { return num_components() == 1; }
    bool contains_component(const Multicurve& single) const;

    std::string key() const;
    uint64_t hash() const;
    bool operator==(const Multicurve& o) const
    {
        return weights_ == o.weights_;
    }
    int total_weight() const;

    // Trace this multicurve into an embedding as one family.
    int emit(Embedding& E, int label) const;

private:
    const Triangulation* tri_ = nullptr;
    std::vector<int> weights_;
    std::vector<std::vector<int>> components_; // sorted canonical keys
    friend Multicurve extract_family(const Embedding& E, int label, bool allow_peripheral);
};

struct MulticurveHash {
    size_t operator()(const Multicurve& m) const { return static_cast<size_t>(m.hash()); }
};

// Extraction of a family from an embedding into canonical form.  The family
// must already be tight (no same-side chords); peripheral components are
// dropped unless allowed.
Multicurve extract_family(const Embedding& E, int label, bool allow_peripheral = false);

// Normalize a raw (possibly slack) family in place, then extract it.
Multicurve normalize_family(Embedding& E, int label, bool allow_peripheral = false);

int geometric_intersection(const Multicurve& a, const Multicurve& b);
Multicurve dehn_twist(const Multicurve& c, const Multicurve& about, int power);
Multicurve multicurve_union(const Multicurve& a, const Multicurve& b); // needs i(a,b) = 0

// ---------------------------------------------------------------------------
// Complement pieces and subsurfaces.
// ---------------------------------------------------------------------------
struct Piece {
    int genus = 0;
    int boundary_circles = 0;
    std::vector<int> punctures; // vertex ids inside, sorted
    // multiset of (component key of the walls) bounding this piece; a
    // component appears twice when both its sides face the piece
    std::vector<std::string> boundary_keys;

    int marks() const { return boundary_circles + static_cast<int>(punctures.size()); }
    int complexity() const { return 3 * genus - 3 + marks(); }
    bool is_pants() const { return complexity() == 0 && genus == 0; }
};

std::vector<Piece> complement_pieces(const Multicurve& walls);

// Which complement piece of `walls` the curve `c` lies in: piece index, or
// kCrossesWalls / kIsWallComponent.
inline constexpr int kCrossesWalls = -1;
inline constexpr int kIsWallComponent = -2;
int side_of_curve(const Multicurve& walls, const Multicurve& c);
int side_of_puncture(const Multicurve& walls, int vertex);

struct Subsurface {
    Multicurve boundary; // empty boundary = the whole surface
    int side = 0;

    bool whole_surface() const { return boundary.is_empty(); }
    std::string key() const { return boundary.key() + "#" + std::to_string(side); }
    bool operator==(const Subsurface& o) const
    {
        return boundary == o.boundary && side == o.side;
    }
};

Piece subsurface_piece(const Subsurface& Y);

struct SubsurfaceClass {
    int genus = 0;
    int marks = 0;
    int complexity = 0;
    bool separated_domain = false;
};
SubsurfaceClass classify_subsurface(const Subsurface& Y);

// True iff the curve is connected, essential, and splits the surface into two
// pieces neither of which is a three-holed sphere.
bool is_domain_separating(const Multicurve& c);

// Containment/overlap relations between subsurfaces.
enum class SubsurfaceRelation { Equal, FirstInsideSecond, SecondInsideFirst, Disjoint, Transverse, Overlap };
SubsurfaceRelation subsurface_relation(const Subsurface& a, const Subsurface& b);

// Does curve c lie inside subsurface Y (disjoint from its boundary, on the
// right side, not boundary-parallel)?
bool curve_in_subsurface(const Multicurve& c, const Subsurface& Y);

} // namespace pantslab
