#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pantslab/chart.hpp"
#include "pantslab/universe.hpp"

namespace pantslab {

class PantsDecomposition {
public:
    PantsDecomposition() = default;
    // validates: pairwise disjoint, distinct, complement all pants
    static PantsDecomposition make(std::vector<Multicurve> curves);
    static PantsDecomposition make_unchecked(std::vector<Multicurve> curves);
    static PantsDecomposition base(const Triangulation& T);

    int size() const { return static_cast<int>(curves_.size()); }
    const Multicurve& curve(int i) const { return curves_[i]; }
    const std::vector<Multicurve>& curves() const { return curves_; }
    bool contains(const Multicurve& c) const;
    int index_of(const Multicurve& c) const;
    Multicurve as_multicurve() const;
    PantsDecomposition replace(int i, const Multicurve& c, bool check = true) const;

    const std::string& key() const { return key_; }
    bool operator==(const PantsDecomposition& o) const { return key_ == o.key_; }

private:
    std::vector<Multicurve> curves_; // sorted by key
    std::string key_;
    void finish();
};

struct PantsKeyHash {
    size_t operator()(const std::string& k) const { return std::hash<std::string>()(k); }
};

// The complexity-1 window that curve i of P moves in.
Subsurface window_of(const PantsDecomposition& P, int i);

// ---------------------------------------------------------------------------
// Chart-backed elementary move generation over a truncated universe.
// ---------------------------------------------------------------------------
class MoveOracle {
public:
    explicit MoveOracle(const CurveUniverse& U, int hard_cap = 64);

    struct Moves {
        std::vector<PantsDecomposition> list; // deterministic order
        bool truncated = false;               // universe boundary visible
    };
    const Moves& moves(const PantsDecomposition& P);

    const CurveUniverse& universe() const { return *U_; }
    // slope chart of the window of P's i-th curve; cached by (window, curve)
    const DomainMarking& marking(const PantsDecomposition& P, int i);
    // neighbor slopes of 1/0 in the window of curve i that stay in the
    // universe, with a flag when enumeration hit the boundary
    struct WindowMoves {
        std::vector<Multicurve> replacements;
        bool truncated = false;
    };
    const WindowMoves& window_moves(const PantsDecomposition& P, int i);

    size_t cached_nodes() const { return move_cache_.size(); }

private:
    const CurveUniverse* U_;
    int hard_cap_;
    std::unordered_map<std::string, Moves> move_cache_;
    std::map<std::pair<std::string, std::string>, std::shared_ptr<DomainMarking>> marking_cache_;
    std::map<std::pair<std::string, std::string>, WindowMoves> window_cache_;
};

// ---------------------------------------------------------------------------
struct Distance {
    int value = -1;
    bool exact = false;
    int upper_bound = -1; // best path found, when any
    bool known() const { return value >= 0; }
};

Distance bfs_distance(const PantsDecomposition& a, const PantsDecomposition& b,
                      MoveOracle& oracle, int radius);

// All geodesic vertex paths (up to max_count, deterministic order).
std::vector<std::vector<PantsDecomposition>> all_geodesics(const PantsDecomposition& a,
                                                           const PantsDecomposition& b,
                                                           MoveOracle& oracle, int radius,
                                                           int max_count);

// Count of geodesics without materializing them (capped).
long long count_geodesics(const PantsDecomposition& a, const PantsDecomposition& b,
                          MoveOracle& oracle, int radius, long long cap);

// ---------------------------------------------------------------------------
// Product region X_gamma for a domain-separating curve on a zeta = 3 surface.
// ---------------------------------------------------------------------------
struct ProductRegion {
    Multicurve gamma;
    Subsurface window[2];
    std::shared_ptr<DomainMarking> factor[2];
};

ProductRegion make_product_region(const Multicurve& gamma);

// Factor coordinates of a decomposition containing gamma.
std::pair<Slope, Slope> region_coordinates(const ProductRegion& R, const PantsDecomposition& P);
// l^1 distance inside the region; throws NotInRegionError when gamma missing.
int product_region_distance(const ProductRegion& R, const PantsDecomposition& A,
                            const PantsDecomposition& B);
// The decomposition at given factor slopes.
PantsDecomposition region_point(const ProductRegion& R, Slope s0, Slope s1);

} // namespace pantslab
