#include "pantslab/chart.hpp"

#include <algorithm>

#include "pantslab/arcs.hpp"
#include "pantslab/arrangement.hpp"

namespace pantslab {

namespace {

bool in_window(const Multicurve& c, const Subsurface& window)
{
    if (window.whole_surface()) return !c.is_empty() && c.connected();
    return c.connected() && curve_in_subsurface(c, window);
}

// Candidate duals for the base curve in a four-holed-sphere window: banded
// curves over pairs of marks of the window, with connecting arcs crossing the
// base exactly once.
std::vector<Multicurve> sphere_window_bands(const Subsurface& window, const Multicurve& base)
{
    const Triangulation& T = *base.tri();
    std::vector<Multicurve> out;

    Embedding E(T);
    Multicurve walls = window.whole_surface() ? base : multicurve_union(window.boundary, base);
    walls.emit(E, 0);
    int base_strand = -1, base_first = 0;
    std::vector<int> boundary_strands;
    for (int s = 0; s < E.num_strands(); ++s) {
        std::vector<int> cw(T.num_edges(), 0);
        for (int p : E.strand(s).pts) cw[E.point_edge(p)]++;
        if (cw == base.weights()) base_strand = s;
        else boundary_strands.push_back(s);
    }
    base_first = static_cast<int>(boundary_strands.size());
    if (base_strand < 0) throw InternalConsistencyError("window chart: base strand lost");

    // marks: punctures of the window piece + boundary strands facing it
    std::vector<Anchor> marks;
    Piece piece = window.whole_surface()
                      ? complement_pieces(Multicurve::empty(T))[0]
                      : subsurface_piece(window);
    for (int v : piece.punctures) {
        Anchor a;
        a.kind = Anchor::Kind::Puncture;
        a.vertex = v;
        marks.push_back(a);
    }
    if (!window.whole_surface()) {
        for (int s : boundary_strands) {
            std::vector<int> cw(T.num_edges(), 0);
            for (int p : E.strand(s).pts) cw[E.point_edge(p)]++;
            std::string key;
            for (size_t i = 0; i < cw.size(); ++i)
                key += (i ? "," : "") + std::to_string(cw[i]);
            if (std::find(piece.boundary_keys.begin(), piece.boundary_keys.end(), key) !=
                piece.boundary_keys.end()) {
                Anchor a;
                a.kind = Anchor::Kind::Strand;
                a.strand = s;
                marks.push_back(a);
            }
        }
    }

    for (size_t i = 0; i < marks.size(); ++i) {
        for (size_t j = i + 1; j < marks.size(); ++j) {
            auto arc = find_arc(E, 0, marks[i], marks[j], base_strand, 1, 100);
            if (!arc) continue;
            try {
                Multicurve cand = band_boundary(E, *arc);
                if (!cand.is_empty()) out.push_back(cand);
            } catch (const InternalConsistencyError&) {
            }
            E.kill_strand(arc->strand);
        }
    }
    return out;
}

Multicurve torus_window_dual(const Subsurface& window, const Multicurve& base)
{
    const Triangulation& T = *base.tri();
    Embedding E(T);
    Multicurve walls = window.whole_surface() ? base : multicurve_union(window.boundary, base);
    walls.emit(E, 0);
    int base_strand = -1;
    for (int s = 0; s < E.num_strands(); ++s) {
        std::vector<int> cw(T.num_edges(), 0);
        for (int p : E.strand(s).pts) cw[E.point_edge(p)]++;
        if (cw == base.weights()) base_strand = s;
    }
    if (base_strand < 0) throw InternalConsistencyError("torus window: base strand lost");
    auto loop = closed_cross_loop(E, 0, {base_strand, 0});
    if (!loop) throw InternalConsistencyError("torus window dual: no crossing loop");
    return *loop;
}

} // namespace

DomainMarking make_marking(const Subsurface& window, const Multicurve& base)
{
    if (!base.connected()) throw OutOfDomainError("marking base must be connected");
    if (!in_window(base, window)) throw OutOfDomainError("marking base not in window");
    Piece piece = window.whole_surface()
                      ? complement_pieces(Multicurve::empty(*base.tri()))[0]
                      : subsurface_piece(window);
    if (piece.complexity() != 1)
        throw OutOfDomainError("marking window must have complexity 1");

    DomainMarking m;
    m.domain = window;
    m.ref_inf = base;
    bool torus = piece.genus == 1;
    m.unit = torus ? 1 : 2;

    if (torus) {
        m.ref_zero = torus_window_dual(window, base);
        if (geometric_intersection(m.ref_zero, base) != 1)
            throw InternalConsistencyError("torus dual intersects base wrongly");
        m.ref_one = dehn_twist(m.ref_zero, base, 1);
    } else {
        auto cands = sphere_window_bands(window, base);
        const Multicurve* zero = nullptr;
        for (const auto& c : cands)
            if (in_window(c, window) && geometric_intersection(c, base) == 2 && !(c == base)) {
                zero = &c;
                break;
            }
        if (!zero) throw InternalConsistencyError("sphere window: no dual found");
        m.ref_zero = *zero;
        const Multicurve* one = nullptr;
        for (const auto& c : cands)
            if (in_window(c, window) && geometric_intersection(c, base) == 2 &&
                geometric_intersection(c, m.ref_zero) == 2 && !(c == base))
            {
                one = &c;
                break;
            }
        if (!one) throw InternalConsistencyError("sphere window: no unit diagonal found");
        m.ref_one = *one;
    }

    // measure twist shears; sign conventions live here
    {
        Multicurve tz = dehn_twist(m.ref_zero, m.ref_inf, 1);
        long long pp = geometric_intersection(tz, m.ref_zero) / m.unit;
        // slope of T_inf(ref_zero) is (±unit)/1; fix the sign against ref_one
        long long against_one = geometric_intersection(tz, m.ref_one) / m.unit;
        // candidate +unit: |p - q| = unit - 1... compare exact predictions
        long long plus = std::abs(m.unit * 1 - 1 * 1);  // |p*1 - q*1| for p=+unit,q=1
        long long minus = std::abs(-m.unit * 1 - 1 * 1);
        (void)pp;
        if (against_one == plus && against_one != minus) m.shear_inf = m.unit;
        else if (against_one == minus && against_one != plus) m.shear_inf = -m.unit;
        else throw InternalConsistencyError("cannot orient T_inf shear");

        Multicurve ti = dehn_twist(m.ref_inf, m.ref_zero, 1);
        long long a1 = geometric_intersection(ti, m.ref_one) / m.unit;
        long long p2 = std::abs(1 * 1 - m.unit * 1); // slope 1/(±unit) vs 1/1
        long long mi2 = std::abs(1 * 1 + m.unit * 1);
        if (a1 == p2 && a1 != mi2) m.shear_zero = m.unit;
        else if (a1 == mi2 && a1 != p2) m.shear_zero = -m.unit;
        else throw InternalConsistencyError("cannot orient T_zero shear");
    }
    return m;
}

Slope slope_of_curve(const Multicurve& c, const DomainMarking& m)
{
    auto it = m.slope_memo.find(c.key());
    if (it != m.slope_memo.end()) return it->second;
    if (!in_window(c, m.domain)) throw OutOfDomainError("curve not supported in the window");
    long long p = geometric_intersection(c, m.ref_zero);
    long long q = geometric_intersection(c, m.ref_inf);
    if (p % m.unit || q % m.unit)
        throw OutOfDomainError("intersection numbers not multiples of the unit");
    p /= m.unit;
    q /= m.unit;
    if (p == 0 && q == 0) throw OutOfDomainError("curve parallel to both references");
    Slope s;
    if (p == 0 || q == 0) {
        s = Slope::make(p == 0 ? 0 : 1, p == 0 ? 1 : 0);
    } else {
        long long d1 = geometric_intersection(c, m.ref_one) / m.unit;
        long long pos = std::abs(p - q), neg = std::abs(p + q);
        if (d1 == pos && d1 != neg) s = Slope::make(p, q);
        else if (d1 == neg && d1 != pos) s = Slope::make(-p, q);
        else throw InternalConsistencyError("sign of slope undetermined");
    }
    m.slope_memo[c.key()] = s;
    return s;
}

Multicurve curve_of_slope(Slope s, const DomainMarking& m)
{
    auto it = m.curve_memo.find(s);
    if (it != m.curve_memo.end()) return it->second;
    Multicurve out;
    if (s == Slope::infinity()) out = m.ref_inf;
    else if (s == Slope::make(0, 1)) out = m.ref_zero;
    else if (s == Slope::make(1, 1)) out = m.ref_one;
    else {
        long long p = s.p, q = s.q;
        // descend to a reference slope by inverse twists; T_inf^k acts as
        // p += shear_inf*k*q, T_zero^k as q += shear_zero*k*p
        struct Op { bool about_inf; long long power; };
        std::vector<Op> ops;
        auto terminal = [&] {
            return (p == 0 && std::llabs(q) == 1) || (std::llabs(p) == 1 && q == 0) ||
                   (p == q && std::llabs(p) == 1) ;
        };
        int guard = 0;
        while (!terminal()) {
            if (++guard > 400) throw InternalConsistencyError("slope descent diverges");
            if (std::llabs(p) == std::llabs(q)) {
                // (-1,1)-type endgame: one unit step lands on a reference
                bool fixed = false;
                for (long long kk : {-2LL, -1LL, 1LL, 2LL}) {
                    long long np = p + m.shear_inf * kk * q;
                    if (np == 0 || np == q) {
                        p = np;
                        ops.push_back({true, -kk});
                        fixed = true;
                        break;
                    }
                }
                if (!fixed)
                    throw InternalConsistencyError("slope descent stuck at " + std::to_string(p) +
                                                   "/" + std::to_string(q));
                continue;
            }
            auto reduce = [](long long x, long long step) {
                long long k0 = -x / step;
                long long bk = k0, bv = x + step * k0;
                for (long long kk : {k0 - 1, k0 + 1}) {
                    long long v = x + step * kk;
                    if (std::llabs(v) < std::llabs(bv)) { bv = v; bk = kk; }
                }
                return std::make_pair(bk, bv);
            };
            if (std::llabs(p) > std::llabs(q)) {
                auto [k, best] = reduce(p, m.shear_inf * q);
                if (k == 0 || std::llabs(best) >= std::llabs(p))
                    throw InternalConsistencyError("slope descent no progress (inf)");
                p = best;
                ops.push_back({true, -k});
            } else {
                auto [k, best] = reduce(q, m.shear_zero * p);
                if (k == 0 || std::llabs(best) >= std::llabs(q))
                    throw InternalConsistencyError("slope descent no progress (zero)");
                q = best;
                ops.push_back({false, -k});
            }
        }
        if (q < 0) { q = -q; p = -p; }
        if (p < 0 && q == 0) p = -p;
        Multicurve cur = (p == 0) ? m.ref_zero : (q == 0 ? m.ref_inf : m.ref_one);
        for (auto op = ops.rbegin(); op != ops.rend(); ++op)
            cur = dehn_twist(cur, op->about_inf ? m.ref_inf : m.ref_zero,
                             static_cast<int>(op->power));
        out = cur;
    }
    if (slope_of_curve(out, m) != s)
        throw InternalConsistencyError("curve_of_slope round trip failed for " + s.str());
    m.curve_memo[s] = out;
    return out;
}

} // namespace pantslab
