#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pantslab/errors.hpp"

namespace pantslab {

struct SurfaceSpec {
    int genus = 0;
    int punctures = 0;

    int complexity() const { return 3 * genus - 3 + punctures; }
    bool operator==(const SurfaceSpec&) const = default;
    std::string name() const; // "S_{g,n}"
};

// A (triangle, side) slot. Sides 0,1,2 are in ccw order; corner k is the
// vertex at the start of side k, so side k runs from corner k to corner k+1.
struct Corner {
    int tri = -1;
    int side = -1;
    auto operator<=>(const Corner&) const = default;
};

// Ideal triangulation of a punctured surface: vertices are the punctures.
// Gluings are a fixed-point-free involution on (triangle, side) slots and are
// always side-reversing, so the surface is oriented by the ccw triangles.
class Triangulation {
public:
    // Deterministic reference triangulation: genus handled by a fanned
    // 4g-gon (double triangle for genus 0 / S_{0,3}), extra punctures by
    // coning a vertex into the highest-index triangle.
    static Triangulation reference(const SurfaceSpec& spec);

    const SurfaceSpec& spec() const { return spec_; }
    int num_triangles() const { return static_cast<int>(glue_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_vertices() const { return num_vertices_; }

    Corner glued(Corner c) const { return glue_[c.tri][c.side]; }
    int edge(int tri, int side) const { return edge_of_[tri][side]; }
    int edge(Corner c) const { return edge_of_[c.tri][c.side]; }

    // which = 0 gives the lexicographically smaller slot; the canonical
    // direction of an edge is the ccw traversal of that slot's side.
    Corner edge_corner(int e, int which) const { return which == 0 ? edges_[e].first : edges_[e].second; }
    // 0 or 1: which slot of its edge this corner is.
    int corner_index(Corner c) const { return c == edges_[edge(c)].first ? 0 : 1; }

    int corner_vertex(int tri, int k) const { return vertex_of_[tri][k]; }

    // Rotation one step around the vertex at corner k of tri (consistent
    // direction); orbits of this map are the vertices.
    Corner rotate_about_vertex(Corner corner_slot) const;

    // Corners (as corner indices k, paired with triangle) around a vertex, in
    // rotation order starting from the lexicographically least.
    std::vector<Corner> vertex_star(int vertex) const;

    void audit() const; // throws InternalConsistencyError on breakage

    std::string to_json() const;
    static Triangulation from_json(const std::string& text);

    bool operator==(const Triangulation& o) const
    {
        return spec_ == o.spec_ && glue_ == o.glue_;
    }

private:
    SurfaceSpec spec_;
    std::vector<std::array<Corner, 3>> glue_;
    std::vector<std::array<int, 3>> edge_of_;
    std::vector<std::pair<Corner, Corner>> edges_;
    std::vector<std::array<int, 3>> vertex_of_;
    int num_vertices_ = 0;

    void finish(); // derive edges_, edge_of_, vertices from glue_
    void cone_last_triangle();
};

} // namespace pantslab
