#include "freeze/disk.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace freeze {

std::vector<Point> boundary(const Image& X) {
    std::vector<Point> out;
    if (X.empty()) return out;
    Adjacency a = c1(X.dim());
    for (const Point& p : X) {
        for (const Point& q : lattice_neighbors(p, a))
            if (!X.contains(q)) {
                out.push_back(p);
                break;
            }
    }
    return out;
}

std::vector<Point> interior(const Image& X) {
    Image bd{boundary(X)};
    std::vector<Point> out;
    for (const Point& p : X)
        if (!bd.contains(p)) out.push_back(p);
    return out;
}

DiskValidation validate_bounding_curve(const Image& D, const CurveCycle& S) {
    DiskValidation v;
    if (D.empty() || D.dim() != 2 || S.adj.dimension != 2) {
        v.reason = "bounding curves are defined in Z^2 only";
        return v;
    }
    for (const Point& p : S.points)
        if (!D.contains(p)) {
            v.reason = "curve point " + p.str() + " is not in D";
            return v;
        }

    std::vector<Point> all = D.points();
    all.insert(all.end(), S.points.begin(), S.points.end());
    Box region = bounding_box(all);
    auto comps = connected_components(S.points, c1(), region);

    int finite = 0, inf = 0;
    const std::vector<Point>* finite_comp = nullptr;
    for (const auto& c : comps) {
        if (c.infinite) {
            ++inf;
        } else {
            ++finite;
            finite_comp = &c.points;
            v.bounded_components.push_back(c.points);
        }
    }
    if (finite != 1) {
        v.reason = "Z^2 \\ S has " + std::to_string(finite) +
                   " bounded c1-components (need exactly 1)";
        return v;
    }
    if (inf != 1) {
        v.reason = "Z^2 \\ S has no infinite component";  // cannot happen for finite S
        return v;
    }

    std::vector<Point> du = S.points;
    du.insert(du.end(), finite_comp->begin(), finite_comp->end());
    if (Image{du} != D) {
        v.reason = "D is not the union of S and the finite component of Z^2 \\ S";
        return v;
    }
    v.bounded_components.clear();
    v.decomposition = DiskDecomposition{D, S, *finite_comp, false};
    return v;
}

std::vector<Point> moore_trace(const Image& D) {
    // clockwise scan order, y up
    static const Point dirs[8] = {{1, 0}, {1, -1}, {0, -1}, {-1, -1},
                                  {-1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    std::vector<Point> out;
    if (D.empty() || D.dim() != 2) return out;
    const Point start = D[0];  // canonical least; its south neighbor is outside D
    const Point back0 = start + Point(0, -1);
    out.push_back(start);

    bool isolated = true;
    for (const Point& d : dirs)
        if (D.contains(start + d)) isolated = false;
    if (isolated) return out;

    Point cur = start, back = back0;
    const size_t limit = 4 * D.size() + 16;
    while (out.size() <= limit) {
        int pos = -1;
        for (int k = 0; k < 8; ++k)
            if (cur + dirs[k] == back) {
                pos = k;
                break;
            }
        Point last_bg = back, m = cur, nb = back;
        for (int k = 1; k <= 8; ++k) {
            Point cand = cur + dirs[(pos + k) % 8];
            if (D.contains(cand)) {
                m = cand;
                nb = last_bg;
                break;
            }
            last_bg = cand;
        }
        if (m == start && nb == back0) break;  // Jacob's stopping criterion
        out.push_back(m);
        cur = m;
        back = nb;
    }
    return out;
}

namespace {

// S as a point set is a bounding curve set for D iff Bd(D) <= S <= D,
// Z^2 \ S splits correctly, and S carries a c2 Hamiltonian cycle.
std::optional<DiskDecomposition> try_curve_set(const Image& D, const std::vector<Point>& set) {
    Image s{set};
    Box region = bounding_box(D.points());
    auto comps = connected_components(s.points(), c1(), region);
    const std::vector<Point>* finite_comp = nullptr;
    int finite = 0;
    for (const auto& c : comps)
        if (!c.infinite) {
            ++finite;
            finite_comp = &c.points;
        }
    if (finite != 1) return std::nullopt;
    std::vector<Point> du = s.points();
    du.insert(du.end(), finite_comp->begin(), finite_comp->end());
    if (Image{du} != D) return std::nullopt;
    auto cyc = cycle_through(s.points(), c2());
    if (!cyc) return std::nullopt;
    return DiskDecomposition{D, *cyc, *finite_comp, false};
}

std::vector<DiskDecomposition> enumerate_curves(const Image& D, bool stop_at_smallest) {
    std::vector<DiskDecomposition> out;
    std::vector<Point> bd = boundary(D);
    std::vector<Point> in = interior(D);
    const int ni = static_cast<int>(in.size());
    if (ni > 20) throw std::length_error("bounding-curve enumeration: interior too large");
    for (int k = 0; k <= ni; ++k) {
        bool found = false;
        for (uint32_t mask = 0; mask < (1u << ni); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<Point> set = bd;
            for (int i = 0; i < ni; ++i)
                if (mask & (1u << i)) set.push_back(in[static_cast<size_t>(i)]);
            if (auto dec = try_curve_set(D, set)) {
                out.push_back(*dec);
                found = true;
            }
        }
        if (stop_at_smallest && found) break;
    }
    std::sort(out.begin(), out.end(), [](const DiskDecomposition& a, const DiskDecomposition& b) {
        if (a.curve.points.size() != b.curve.points.size())
            return a.curve.points.size() < b.curve.points.size();
        std::vector<Point> sa = a.curve.points, sb = b.curve.points;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return sa < sb;
    });
    return out;
}

std::optional<DiskDecomposition> shortcut_heuristic(DiskDecomposition dec) {
    // replace axis-parallel L-corners by a diagonal while validation passes
    bool improved = true;
    while (improved) {
        improved = false;
        const auto& pts = dec.curve.points;
        const int m = static_cast<int>(pts.size());
        for (int i = 0; i < m; ++i) {
            const Point prev = dec.curve.at(i - 1), p = dec.curve.at(i), next = dec.curve.at(i + 1);
            Point d1 = p - prev, d2 = next - p;
            bool axis1 = d1.x() == 0 || d1.y() == 0, axis2 = d2.x() == 0 || d2.y() == 0;
            if (!(axis1 && axis2) || !are_adjacent(prev, next, c2())) continue;
            std::vector<Point> trimmed;
            for (int k = 0; k < m; ++k)
                if (k != i) trimmed.push_back(pts[static_cast<size_t>(k)]);
            auto made = make_closed_curve(trimmed, c2());
            auto* cur = std::get_if<CurveCycle>(&made);
            if (!cur) continue;
            auto val = validate_bounding_curve(dec.disk, *cur);
            if (val.ok()) {
                dec = *val.decomposition;
                improved = true;
                break;
            }
        }
    }
    dec.heuristic = true;
    return dec;
}

}  // namespace

std::vector<DiskDecomposition> find_bounding_curves(const Image& D, CurveSearchMode mode,
                                                    int exhaustive_threshold) {
    std::vector<DiskDecomposition> out;
    if (D.empty() || D.dim() != 2) return out;
    const bool small = static_cast<int>(D.size()) <= exhaustive_threshold;

    auto canonical = [&]() -> std::optional<DiskDecomposition> {
        auto made = make_closed_curve(moore_trace(D), c2());
        if (auto* cur = std::get_if<CurveCycle>(&made)) {
            auto val = validate_bounding_curve(D, canonicalize(*cur));
            if (val.ok()) return val.decomposition;
        }
        if (small) {
            auto all = enumerate_curves(D, true);
            if (!all.empty()) return all.front();
        }
        return std::nullopt;
    };

    switch (mode) {
        case CurveSearchMode::Canonical: {
            if (auto dec = canonical()) out.push_back(*dec);
            break;
        }
        case CurveSearchMode::Minimal: {
            if (small) {
                auto best = enumerate_curves(D, true);
                if (!best.empty()) out.push_back(best.front());
            } else if (auto dec = canonical()) {
                if (auto shr = shortcut_heuristic(*dec)) out.push_back(*shr);
            }
            break;
        }
        case CurveSearchMode::All: {
            if (!small)
                throw std::length_error(
                    "find_bounding_curves: mode=all refused above the exhaustive threshold; "
                    "use minimal or canonical");
            out = enumerate_curves(D, false);
            break;
        }
    }
    return out;
}

std::string orientation_name(Orientation o) {
    switch (o) {
        case Orientation::Horizontal: return "horizontal";
        case Orientation::Vertical: return "vertical";
        case Orientation::SlantPos: return "slant+";
        case Orientation::SlantNeg: return "slant-";
    }
    return "?";
}

namespace {

Orientation orientation_of_step(const Point& d) {
    if (d.y() == 0) return Orientation::Horizontal;
    if (d.x() == 0) return Orientation::Vertical;
    return d.x() == d.y() ? Orientation::SlantPos : Orientation::SlantNeg;
}

// unit direction index at multiples of 45 degrees, counterclockwise from +x
const Point kDirs[8] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

int dir_index(const Point& d) {
    for (int k = 0; k < 8; ++k)
        if (kDirs[k] == d) return k;
    throw std::logic_error("dir_index: not a unit step");
}

}  // namespace

std::vector<Segment> segments_of(const CurveCycle& curve) {
    std::vector<Segment> out;
    const int m = curve.size();
    if (m < 3) {
        if (m >= 1) {
            Segment s;
            s.a = curve.points.front();
            s.b = curve.points.back();
            s.members = curve.points;
            s.orientation = m == 2 ? orientation_of_step(curve.points[1] - curve.points[0])
                                   : Orientation::Horizontal;
            out.push_back(std::move(s));
        }
        return out;
    }
    auto step = [&](int i) { return curve.at(i + 1) - curve.at(i); };
    int start = 0;
    while (start < m && step(start - 1) == step(start)) ++start;
    // start is now the beginning of a maximal run
    int i = start;
    do {
        Segment s;
        Point d = step(i);
        s.orientation = orientation_of_step(d);
        s.a = curve.at(i);
        s.members.push_back(curve.at(i));
        int j = i;
        while (step(j) == d) {
            ++j;
            s.members.push_back(curve.at(j));
        }
        s.b = s.members.back();
        out.push_back(std::move(s));
        i = j;
    } while (i % m != start % m);
    return out;
}

namespace {

// interior angle plus the unit directions strictly inside it
std::pair<int, std::vector<Point>> angle_at(const DiskDecomposition& dec, const Point& p,
                                            const Segment& s_in, const Segment& s_out) {
    const Point d1 = s_in.members[s_in.members.size() - 2] - p;   // into the incoming side
    const Point d2 = s_out.members[1] - p;                        // into the outgoing side
    const int i1 = dir_index(d1), i2 = dir_index(d2);

    auto strict_dirs = [&](int from, int steps, int sign) {
        std::vector<Point> dirs;
        for (int k = 1; k < steps; ++k) dirs.push_back(kDirs[((from + sign * k) % 8 + 8) % 8]);
        return dirs;
    };
    const int ccw = ((i2 - i1) % 8 + 8) % 8;
    const int cw = 8 - ccw;

    // candidate q in X outside both sides, c2-adjacent to p; prefer true
    // interior points per the angle's definition
    std::vector<Point> cands_int, cands_other;
    Image inter{dec.curve_interior};
    for (const Point& d : kDirs) {
        Point q = p + d;
        if (!dec.disk.contains(q)) continue;
        bool on_sides = std::find(s_in.members.begin(), s_in.members.end(), q) != s_in.members.end() ||
                        std::find(s_out.members.begin(), s_out.members.end(), q) != s_out.members.end();
        if (on_sides) continue;
        (inter.contains(q) ? cands_int : cands_other).push_back(q);
    }
    std::sort(cands_int.begin(), cands_int.end());
    std::sort(cands_other.begin(), cands_other.end());
    cands_int.insert(cands_int.end(), cands_other.begin(), cands_other.end());

    for (const Point& q : cands_int) {
        const int iq = dir_index(q - p);
        const int off = ((iq - i1) % 8 + 8) % 8;
        if (off > 0 && off < ccw) return {ccw * 45, strict_dirs(i1, ccw, +1)};
        const int offc = ((i1 - iq) % 8 + 8) % 8;
        if (offc > 0 && offc < cw) return {cw * 45, strict_dirs(i1, cw, -1)};
    }
    // no witness q: the 45-degree angle is the interior one
    if (ccw == 1) return {45, {}};
    if (cw == 1) return {45, {}};
    // no q and neither determination is 45: fall back to the narrower sweep
    int steps = std::min(ccw, cw);
    return {steps * 45, strict_dirs(i1, steps, ccw <= cw ? +1 : -1)};
}

}  // namespace

const Vertex* SegmentDecomposition::vertex_at(const Point& p) const {
    for (const Vertex& v : vertices)
        if (v.p == p) return &v;
    return nullptr;
}

SegmentDecomposition maximal_segments(const DiskDecomposition& dec) {
    SegmentDecomposition sd;
    sd.segments = segments_of(dec.curve);
    const int ns = static_cast<int>(sd.segments.size());
    if (ns < 2) return sd;
    for (int k = 0; k < ns; ++k) {
        const Segment& sin = sd.segments[static_cast<size_t>(k)];
        const Segment& sout = sd.segments[static_cast<size_t>((k + 1) % ns)];
        Vertex v;
        v.p = sin.b;
        v.seg_in = k;
        v.seg_out = (k + 1) % ns;
        auto [deg, dirs] = angle_at(dec, v.p, sin, sout);
        v.angle_deg = deg;
        v.interior_dirs = std::move(dirs);
        sd.vertices.push_back(std::move(v));
    }
    return sd;
}

int interior_angle(const DiskDecomposition& dec, const Point& p) {
    SegmentDecomposition sd = maximal_segments(dec);
    const Vertex* v = sd.vertex_at(p);
    if (!v) throw std::invalid_argument("interior_angle: " + p.str() + " is not a vertex");
    return v->angle_deg;
}

}  // namespace freeze
