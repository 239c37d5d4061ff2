#include "pantslab/surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pantslab {

std::string SurfaceSpec::name() const
{
    return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
}

Corner Triangulation::rotate_about_vertex(Corner c) const
{
    // Side c.side starts at corner c.side; its glued partner ends at the
    // matching corner of the partner side.
    Corner g = glued({c.tri, c.side});
    return {g.tri, (g.side + 1) % 3};
}

std::vector<Corner> Triangulation::vertex_star(int vertex) const
{
    Corner least{-1, -1};
    for (int t = 0; t < num_triangles(); ++t)
        for (int k = 0; k < 3; ++k)
            if (vertex_of_[t][k] == vertex) {
                Corner c{t, k};
                if (least.tri < 0 || c < least) least = c;
            }
    std::vector<Corner> star;
    Corner c = least;
    do {
        star.push_back(c);
        c = rotate_about_vertex(c);
    } while (c != least);
    return star;
}

void Triangulation::finish()
{
    const int nt = num_triangles();
    edge_of_.assign(nt, {-1, -1, -1});
    edges_.clear();
    for (int t = 0; t < nt; ++t) {
        for (int s = 0; s < 3; ++s) {
            if (edge_of_[t][s] >= 0) continue;
            Corner here{t, s};
            Corner there = glue_[t][s];
            Corner a = std::min(here, there);
            Corner b = std::max(here, there);
            int e = static_cast<int>(edges_.size());
            edges_.emplace_back(a, b);
            edge_of_[a.tri][a.side] = e;
            edge_of_[b.tri][b.side] = e;
        }
    }
    vertex_of_.assign(nt, {-1, -1, -1});
    num_vertices_ = 0;
    for (int t = 0; t < nt; ++t) {
        for (int k = 0; k < 3; ++k) {
            if (vertex_of_[t][k] >= 0) continue;
            int v = num_vertices_++;
            Corner c{t, k};
            do {
                vertex_of_[c.tri][c.side] = v;
                c = rotate_about_vertex(c);
            } while (c != Corner{t, k});
        }
    }
}

void Triangulation::cone_last_triangle()
{
    // Replace triangle t by three triangles around a new interior vertex.
    // T_k keeps old side k as its side 0; sides 1,2 are the new spokes.
    const int t = num_triangles() - 1;
    std::array<Corner, 3> old = glue_[t];
    int t0 = t;
    int t1 = num_triangles();
    int t2 = t1 + 1;
    glue_.resize(glue_.size() + 2);
    std::array<int, 3> tri{t0, t1, t2};
    // The coned triangle may be glued to itself; such partners (t, s)
    // become (tri[s], 0).
    auto remap = [&](Corner c) -> Corner {
        if (c.tri == t) return {tri[c.side], 0};
        return c;
    };
    for (int k = 0; k < 3; ++k) {
        Corner p = remap(old[k]);
        glue_[tri[k]][0] = p;
        glue_[p.tri][p.side] = {tri[k], 0};
        glue_[tri[k]][1] = {tri[(k + 1) % 3], 2};
        glue_[tri[k]][2] = {tri[(k + 2) % 3], 1};
    }
    spec_.punctures += 1;
    finish();
}

Triangulation Triangulation::reference(const SurfaceSpec& spec)
{
    if (spec.punctures < 1)
        throw UnsupportedSurfaceError("closed surfaces are unsupported: " + spec.name());
    if (spec.genus < 0 || spec.complexity() < 1)
        throw UnsupportedSurfaceError("complexity below 1: " + spec.name());

    Triangulation T;
    const int g = spec.genus;
    if (g == 0) {
        // Double triangle = S_{0,3}.
        T.spec_ = {0, 3};
        T.glue_.resize(2);
        T.glue_[0] = {Corner{1, 2}, Corner{1, 1}, Corner{1, 0}};
        T.glue_[1] = {Corner{0, 2}, Corner{0, 1}, Corner{0, 0}};
    } else {
        // Fanned 4g-gon with the a b a^-1 b^-1 ... identification: S_{g,1}.
        T.spec_ = {g, 1};
        const int n = 4 * g;
        const int nt = n - 2;
        T.glue_.resize(nt);
        // Diagonals d_j (from polygon vertex 0 to vertex j), j = 2..n-2:
        // shared between consecutive fan triangles.
        for (int i = 0; i + 1 < nt; ++i) {
            T.glue_[i][2] = {i + 1, 0};
            T.glue_[i + 1][0] = {i, 2};
        }
        // Polygon boundary side j: location in the fan.
        auto side_loc = [&](int j) -> Corner {
            if (j == 0) return {0, 0};
            if (j == n - 1) return {nt - 1, 2};
            return {j - 1, 1};
        };
        for (int k = 0; k < g; ++k) {
            int a1 = 4 * k, a2 = 4 * k + 2;
            int b1 = 4 * k + 1, b2 = 4 * k + 3;
            Corner ca1 = side_loc(a1), ca2 = side_loc(a2);
            Corner cb1 = side_loc(b1), cb2 = side_loc(b2);
            T.glue_[ca1.tri][ca1.side] = ca2;
            T.glue_[ca2.tri][ca2.side] = ca1;
            T.glue_[cb1.tri][cb1.side] = cb2;
            T.glue_[cb2.tri][cb2.side] = cb1;
        }
    }
    T.finish();
    while (T.spec_.punctures < spec.punctures)
        T.cone_last_triangle();
    T.audit();
    if (T.spec_ != spec || T.num_vertices() != spec.punctures)
        throw InternalConsistencyError("reference triangulation audit failed for " + spec.name());
    return T;
}

void Triangulation::audit() const
{
    const int nt = num_triangles();
    for (int t = 0; t < nt; ++t) {
        for (int s = 0; s < 3; ++s) {
            Corner c{t, s};
            Corner g = glue_[t][s];
            if (g.tri < 0 || g.tri >= nt || g.side < 0 || g.side > 2)
                throw InternalConsistencyError("gluing out of range");
            if (glued(g) != c) throw InternalConsistencyError("gluing not an involution");
            if (g == c) throw InternalConsistencyError("side glued to itself");
        }
    }
    // Each edge must carry exactly two slots.
    std::vector<int> uses(num_edges(), 0);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) uses[edge_of_[t][s]]++;
    for (int e = 0; e < num_edges(); ++e)
        if (uses[e] != 2) throw InternalConsistencyError("edge not 2-regular");
    // Euler characteristic of the punctured surface: F - E = 2 - 2g - n,
    // with vertices the punctures.
    int chi_open = num_triangles() - num_edges();
    if (chi_open != 2 - 2 * spec_.genus - spec_.punctures)
        throw InternalConsistencyError("Euler characteristic audit failed");
    if (num_vertices_ != spec_.punctures)
        throw InternalConsistencyError("vertex count != punctures");
}

std::string Triangulation::to_json() const
{
    nlohmann::json j;
    j["version"] = 1;
    j["genus"] = spec_.genus;
    j["punctures"] = spec_.punctures;
    auto& g = j["gluing"] = nlohmann::json::array();
    for (const auto& tri : glue_) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : tri) row.push_back({c.tri, c.side});
        g.push_back(row);
    }
    auto& e = j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges_)
        e.push_back({{a.tri, a.side}, {b.tri, b.side}});
    return j.dump();
}

Triangulation Triangulation::from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1)
        throw ValidationError("unknown triangulation version");
    Triangulation T;
    T.spec_ = {j.at("genus").get<int>(), j.at("punctures").get<int>()};
    for (const auto& row : j.at("gluing")) {
        std::array<Corner, 3> tri;
        for (int s = 0; s < 3; ++s)
            tri[s] = {row[s][0].get<int>(), row[s][1].get<int>()};
        T.glue_.push_back(tri);
    }
    T.finish();
    T.audit();
    return T;
}

} // namespace pantslab
