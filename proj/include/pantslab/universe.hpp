#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pantslab/curves.hpp"

namespace pantslab {

// Deterministic standard curves on a reference triangulation.

// Curve bounding a disk containing exactly the given punctures (2 <= k <= n-2
// for punctured spheres; on genus surfaces the full set is allowed and cuts
// off the handle).  Audited against the complement pieces.
Multicurve enclosing_curve(const Triangulation& T, const std::vector<int>& vertices);

// Weight-level transfer of a curve through the puncture-coning that builds
// reference triangulations: S_{g,k} -> S_{g,k+1} -> ... (old edge ids are
// stable; new spokes get the corner-arc counts of the coned triangle).
Multicurve lift_curve(const Triangulation& T_from, const Triangulation& T_to,
                      const Multicurve& c);

// Forget the last puncture: S_{g,n} -> S_{g,n-1}.  May return an empty
// multicurve when the image is inessential.
Multicurve fill_last_puncture(const Triangulation& T_from, const Triangulation& T_to,
                              const Multicurve& c);

// Handle curves of S_{1,n}: the three minimal slopes of S_{1,1} lifted.
std::vector<Multicurve> handle_curves(const Triangulation& T);

// Standard seeds and twist generators for universe generation.
std::vector<Multicurve> standard_seeds(const Triangulation& T);
std::vector<Multicurve> standard_generators(const Triangulation& T);

// The fixed base pants decomposition curves (prefix blocks, plus a handle
// curve and the handle boundary on genus-1 surfaces).
std::vector<Multicurve> base_decomposition_curves(const Triangulation& T);

// ---------------------------------------------------------------------------

class CurveUniverse {
public:
    static CurveUniverse generate(const Triangulation& T, std::vector<Multicurve> seeds,
                                  std::vector<Multicurve> generators, int depth);

    const Triangulation& tri() const { return *tri_; }
    int size() const { return static_cast<int>(curves_.size()); }
    const Multicurve& curve(int i) const { return curves_[i]; }
    int index_of(const Multicurve& c) const;
    bool contains(const Multicurve& c) const { return index_of(c) >= 0; }
    int word_length(int i) const { return word_length_[i]; }
    int depth() const { return depth_; }
    int max_total_weight() const { return max_weight_; }
    bool filling_warning() const { return filling_warning_; }
    const std::vector<Multicurve>& generators() const { return generators_; }

    // lazily cached pairwise geometric intersection
    int intersection(int i, int j) const;
    int intersection(const Multicurve& a, const Multicurve& b) const;

    std::string cache_key() const; // deterministic content hash of the inputs
    std::string to_json() const;
    static CurveUniverse from_json(const Triangulation& T, const std::string& text);

private:
    const Triangulation* tri_ = nullptr;
    int depth_ = 0;
    int max_weight_ = 0;
    bool filling_warning_ = false;
    std::vector<Multicurve> curves_;
    std::vector<int> word_length_;
    std::vector<Multicurve> seeds_, generators_;
    std::unordered_map<uint64_t, int> index_;
    mutable std::unordered_map<uint64_t, int> icache_;
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();

    void rebuild_index();
};

} // namespace pantslab
