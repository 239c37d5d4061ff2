#include "pantslab/pants.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pantslab/arcs.hpp"

namespace pantslab {

void PantsDecomposition::finish()
{
    std::sort(curves_.begin(), curves_.end(),
              [](const Multicurve& a, const Multicurve& b) { return a.key() < b.key(); });
    key_.clear();
    for (size_t i = 0; i < curves_.size(); ++i) {
        if (i) key_ += "|";
        key_ += curves_[i].key();
    }
}

PantsDecomposition PantsDecomposition::make_unchecked(std::vector<Multicurve> curves)
{
    PantsDecomposition P;
    P.curves_ = std::move(curves);
    P.finish();
    return P;
}

PantsDecomposition PantsDecomposition::make(std::vector<Multicurve> curves)
{
    if (curves.empty()) throw EmbeddingViolationError("empty pants decomposition");
    const Triangulation& T = *curves[0].tri();
    if (static_cast<int>(curves.size()) != T.spec().complexity())
        throw EmbeddingViolationError("pants decomposition has wrong curve count");
    for (size_t i = 0; i < curves.size(); ++i) {
        if (!curves[i].connected())
            throw EmbeddingViolationError("pants decomposition entries must be connected");
        for (size_t j = i + 1; j < curves.size(); ++j) {
            if (curves[i] == curves[j])
                throw EmbeddingViolationError("duplicate curve in decomposition");
            if (geometric_intersection(curves[i], curves[j]) != 0)
                throw EmbeddingViolationError("crossing curves in decomposition");
        }
    }
    PantsDecomposition P = make_unchecked(std::move(curves));
    for (const auto& piece : complement_pieces(P.as_multicurve()))
        if (!piece.is_pants())
            throw EmbeddingViolationError("complement piece is not a pair of pants");
    return P;
}

PantsDecomposition PantsDecomposition::base(const Triangulation& T)
{
    return make(base_decomposition_curves(T));
}

bool PantsDecomposition::contains(const Multicurve& c) const { return index_of(c) >= 0; }

int PantsDecomposition::index_of(const Multicurve& c) const
{
    for (int i = 0; i < size(); ++i)
        if (curves_[i] == c) return i;
    return -1;
}

Multicurve PantsDecomposition::as_multicurve() const
{
    std::vector<int> w(curves_[0].tri()->num_edges(), 0);
    for (const auto& c : curves_)
        for (size_t e = 0; e < w.size(); ++e) w[e] += c.weights()[e];
    return Multicurve::from_weights(*curves_[0].tri(), std::move(w));
}

PantsDecomposition PantsDecomposition::replace(int i, const Multicurve& c, bool check) const
{
    std::vector<Multicurve> cs = curves_;
    cs[i] = c;
    return check ? make(std::move(cs)) : make_unchecked(std::move(cs));
}

Subsurface window_of(const PantsDecomposition& P, int i)
{
    const Triangulation& T = *P.curve(0).tri();
    if (P.size() == 1) return Subsurface{Multicurve::empty(T), 0};
    std::vector<int> w(T.num_edges(), 0);
    for (int j = 0; j < P.size(); ++j) {
        if (j == i) continue;
        for (size_t e = 0; e < w.size(); ++e) w[e] += P.curve(j).weights()[e];
    }
    Multicurve walls = Multicurve::from_weights(T, std::move(w));
    int side = side_of_curve(walls, P.curve(i));
    if (side < 0) throw InternalConsistencyError("window_of: curve not inside its window");
    return Subsurface{walls, side};
}

// ---------------------------------------------------------------------------

MoveOracle::MoveOracle(const CurveUniverse& U, int hard_cap) : U_(&U), hard_cap_(hard_cap) {}

const DomainMarking& MoveOracle::marking(const PantsDecomposition& P, int i)
{
    Subsurface w = window_of(P, i);
    auto key = std::make_pair(w.key(), P.curve(i).key());
    auto it = marking_cache_.find(key);
    if (it == marking_cache_.end()) {
        auto m = std::make_shared<DomainMarking>(make_marking(w, P.curve(i)));
        it = marking_cache_.emplace(key, std::move(m)).first;
    }
    return *it->second;
}

const MoveOracle::WindowMoves& MoveOracle::window_moves(const PantsDecomposition& P, int i)
{
    Subsurface w = window_of(P, i);
    auto key = std::make_pair(w.key(), P.curve(i).key());
    auto it = window_cache_.find(key);
    if (it != window_cache_.end()) return it->second;

    const DomainMarking& m = marking(P, i);
    WindowMoves out;
    const int maxw = U_->max_total_weight();
    for (int sgn : {+1, -1}) {
        int misses_beyond = 0;
        for (int k = (sgn > 0 ? 0 : 1); k <= hard_cap_; ++k) {
            Slope s = Slope::make(sgn * k, 1);
            Multicurve c = curve_of_slope(s, m);
            if (U_->contains(c)) {
                out.replacements.push_back(c);
                misses_beyond = 0;
            } else if (c.total_weight() <= maxw) {
                out.truncated = true; // a hole inside the weight range
            } else if (++misses_beyond >= 3) {
                break;
            }
            if (k == hard_cap_ && c.total_weight() <= maxw) out.truncated = true;
        }
    }
    std::sort(out.replacements.begin(), out.replacements.end(),
              [](const Multicurve& a, const Multicurve& b) { return a.key() < b.key(); });
    return window_cache_.emplace(key, std::move(out)).first->second;
}

const MoveOracle::Moves& MoveOracle::moves(const PantsDecomposition& P)
{
    auto it = move_cache_.find(P.key());
    if (it != move_cache_.end()) return it->second;
    Moves out;
    for (int i = 0; i < P.size(); ++i) {
        const WindowMoves& wm = window_moves(P, i);
        out.truncated = out.truncated || wm.truncated;
        for (const auto& c : wm.replacements)
            out.list.push_back(P.replace(i, c, /*check=*/false));
    }
    std::sort(out.list.begin(), out.list.end(),
              [](const PantsDecomposition& a, const PantsDecomposition& b) {
                  return a.key() < b.key();
              });
    out.list.erase(std::unique(out.list.begin(), out.list.end()), out.list.end());
    return move_cache_.emplace(P.key(), std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

namespace {

struct Side {
    std::unordered_map<std::string, int> dist;
    std::vector<std::vector<PantsDecomposition>> layers;
    bool truncated = false;
};

void expand_layer(Side& s, MoveOracle& oracle)
{
    std::vector<PantsDecomposition> next;
    for (const auto& P : s.layers.back()) {
        const auto& mv = oracle.moves(P);
        if (mv.truncated) s.truncated = true;
        for (const auto& Q : mv.list) {
            if (s.dist.count(Q.key())) continue;
            s.dist[Q.key()] = static_cast<int>(s.layers.size());
            next.push_back(Q);
        }
    }
    s.layers.push_back(std::move(next));
}

} // namespace

Distance bfs_distance(const PantsDecomposition& a, const PantsDecomposition& b,
                      MoveOracle& oracle, int radius)
{
    Distance d;
    if (a == b) {
        d.value = 0;
        d.exact = true;
        d.upper_bound = 0;
        return d;
    }
    Side A, B;
    A.dist[a.key()] = 0;
    A.layers.push_back({a});
    B.dist[b.key()] = 0;
    B.layers.push_back({b});

    int best = -1;
    auto meet_check = [&](Side& grown, Side& other) {
        for (const auto& P : grown.layers.back()) {
            auto it = other.dist.find(P.key());
            if (it == other.dist.end()) continue;
            int total = grown.dist[P.key()] + it->second;
            if (best < 0 || total < best) best = total;
        }
    };
    while (true) {
        int ra = static_cast<int>(A.layers.size()) - 1;
        int rb = static_cast<int>(B.layers.size()) - 1;
        if (best >= 0 && ra + rb >= best) break;
        if (ra + rb >= radius) break;
        Side& grow = A.layers.back().size() <= B.layers.back().size() ? A : B;
        Side& other = (&grow == &A) ? B : A;
        if (grow.layers.back().empty()) break;
        expand_layer(grow, oracle);
        meet_check(grow, other);
    }
    d.upper_bound = best;
    if (best >= 0 && best <= radius) {
        d.value = best;
        d.exact = !(A.truncated || B.truncated);
    }
    return d;
}

namespace {

struct Ball {
    std::unordered_map<std::string, int> dist;
    std::unordered_map<std::string, std::vector<std::string>> parents;
    std::unordered_map<std::string, PantsDecomposition> node;
};

Ball grow_ball(const PantsDecomposition& a, MoveOracle& oracle, int radius)
{
    Ball ball;
    ball.dist[a.key()] = 0;
    ball.node[a.key()] = a;
    std::vector<PantsDecomposition> frontier{a};
    for (int r = 1; r <= radius; ++r) {
        std::vector<PantsDecomposition> next;
        for (const auto& P : frontier) {
            for (const auto& Q : oracle.moves(P).list) {
                auto it = ball.dist.find(Q.key());
                if (it == ball.dist.end()) {
                    ball.dist[Q.key()] = r;
                    ball.node[Q.key()] = Q;
                    ball.parents[Q.key()].push_back(P.key());
                    next.push_back(Q);
                } else if (it->second == r) {
                    ball.parents[Q.key()].push_back(P.key());
                }
            }
        }
        frontier = std::move(next);
    }
    return ball;
}

void assemble_paths(const Ball& ball, const std::string& key,
                    std::vector<PantsDecomposition>& stack,
                    std::vector<std::vector<PantsDecomposition>>& out, int max_count)
{
    if (static_cast<int>(out.size()) >= max_count) return;
    stack.push_back(ball.node.at(key));
    auto it = ball.parents.find(key);
    if (it == ball.parents.end()) {
        out.emplace_back(stack.rbegin(), stack.rend());
    } else {
        std::vector<std::string> ps = it->second;
        std::sort(ps.begin(), ps.end());
        for (const auto& p : ps) assemble_paths(ball, p, stack, out, max_count);
    }
    stack.pop_back();
}

} // namespace

std::vector<std::vector<PantsDecomposition>> all_geodesics(const PantsDecomposition& a,
                                                           const PantsDecomposition& b,
                                                           MoveOracle& oracle, int radius,
                                                           int max_count)
{
    Distance d = bfs_distance(a, b, oracle, radius);
    if (!d.known()) return {};
    Ball ball = grow_ball(a, oracle, d.value);
    auto bit = ball.dist.find(b.key());
    if (bit == ball.dist.end() || bit->second != d.value)
        throw InternalConsistencyError("geodesic ball misses the target");
    std::vector<std::vector<PantsDecomposition>> out;
    std::vector<PantsDecomposition> stack;
    assemble_paths(ball, b.key(), stack, out, max_count);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        std::string kx, ky;
        for (const auto& P : x) kx += P.key() + ";";
        for (const auto& P : y) ky += P.key() + ";";
        return kx < ky;
    });
    return out;
}

long long count_geodesics(const PantsDecomposition& a, const PantsDecomposition& b,
                          MoveOracle& oracle, int radius, long long cap)
{
    Distance d = bfs_distance(a, b, oracle, radius);
    if (!d.known()) return -1;
    Ball ball = grow_ball(a, oracle, d.value);
    if (!ball.dist.count(b.key())) return -1;
    std::unordered_map<std::string, long long> memo;
    std::function<long long(const std::string&)> cnt = [&](const std::string& key) -> long long {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto pit = ball.parents.find(key);
        long long total = 0;
        if (pit == ball.parents.end()) total = 1;
        else
            for (const auto& p : pit->second) {
                total += cnt(p);
                if (total > cap) break;
            }
        memo[key] = std::min(total, cap + 1);
        return memo[key];
    };
    return cnt(b.key());
}

// ---------------------------------------------------------------------------

ProductRegion make_product_region(const Multicurve& gamma)
{
    const Triangulation& T = *gamma.tri();
    if (!is_domain_separating(gamma))
        throw NotInRegionError("product region requires a domain-separating curve");
    auto pieces = complement_pieces(gamma);
    if (pieces.size() != 2 || pieces[0].complexity() != 1 || pieces[1].complexity() != 1)
        throw NotInRegionError("product region factors must have complexity 1");

    ProductRegion R;
    R.gamma = gamma;
    for (int f = 0; f < 2; ++f) {
        R.window[f] = Subsurface{gamma, f};
        Multicurve base;
        if (pieces[f].genus == 0) {
            if (pieces[f].punctures.size() < 2)
                throw InternalConsistencyError("sphere factor with too few punctures");
            base = enclosing_curve(T, {pieces[f].punctures[0], pieces[f].punctures[1]});
        } else {
            for (const auto& h : handle_curves(T))
                if (geometric_intersection(h, gamma) == 0 && side_of_curve(gamma, h) == f) {
                    base = h;
                    break;
                }
            if (base.is_empty())
                throw InternalConsistencyError("no handle curve inside the torus factor");
        }
        if (side_of_curve(gamma, base) != f)
            throw InternalConsistencyError("factor base landed on the wrong side");
        R.factor[f] = std::make_shared<DomainMarking>(make_marking(R.window[f], base));
    }
    return R;
}

std::pair<Slope, Slope> region_coordinates(const ProductRegion& R, const PantsDecomposition& P)
{
    if (!P.contains(R.gamma)) throw NotInRegionError("decomposition misses gamma");
    Slope s[2];
    bool got[2] = {false, false};
    for (int i = 0; i < P.size(); ++i) {
        if (P.curve(i) == R.gamma) continue;
        int side = side_of_curve(R.gamma, P.curve(i));
        if (side != 0 && side != 1)
            throw NotInRegionError("decomposition curve not inside a factor");
        s[side] = slope_of_curve(P.curve(i), *R.factor[side]);
        got[side] = true;
    }
    if (!got[0] || !got[1]) throw NotInRegionError("factor curve missing");
    return {s[0], s[1]};
}

int product_region_distance(const ProductRegion& R, const PantsDecomposition& A,
                            const PantsDecomposition& B)
{
    auto [a0, a1] = region_coordinates(R, A);
    auto [b0, b1] = region_coordinates(R, B);
    return farey_distance(a0, b0) + farey_distance(a1, b1);
}

PantsDecomposition region_point(const ProductRegion& R, Slope s0, Slope s1)
{
    std::vector<Multicurve> cs{R.gamma, curve_of_slope(s0, *R.factor[0]),
                               curve_of_slope(s1, *R.factor[1])};
    return PantsDecomposition::make_unchecked(std::move(cs));
}

} // namespace pantslab
