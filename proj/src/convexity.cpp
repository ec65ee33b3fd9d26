#include "freeze/convexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace freeze {

namespace {

long long cross(const Point& o, const Point& a, const Point& b) {
    return static_cast<long long>(a.x() - o.x()) * (b.y() - o.y()) -
           static_cast<long long>(a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

HullPolygon convex_hull(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty set");
    for (const Point& p : pts)
        if (p.dim != 2) throw std::invalid_argument("convex_hull: dimension 2 only");
    std::vector<Point> s = pts;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    HullPolygon hull;
    if (s.size() == 1) {
        hull.vertices = s;
        hull.kind = HullPolygon::Kind::PointHull;
        return hull;
    }

    // monotone chain, strictly convex turns only
    const size_t n = s.size();
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], s[i]) <= 0) --k;
        h[k++] = s[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], s[i]) <= 0) --k;
        h[k++] = s[i];
    }
    h.resize(k - 1);
    hull.vertices = std::move(h);
    if (hull.vertices.size() <= 2) {
        // collinear input: hull is the extreme pair
        hull.vertices = {s.front(), s.back()};
        hull.kind = HullPolygon::Kind::SegmentHull;
    } else {
        hull.kind = HullPolygon::Kind::Polygon;
    }
    return hull;
}

bool is_digital_segment(const Image& Y) {
    const size_t n = Y.size();
    if (n < 2) return false;
    const std::vector<Point>& p = Y.points();  // canonical order walks the line
    Point d = p[1] - p[0];
    bool unit = (std::abs(d.x()) <= 1 && std::abs(d.y()) <= 1 && !(d.x() == 0 && d.y() == 0));
    if (!unit) return false;
    if (d.x() != 0 && d.y() != 0 && std::abs(d.x()) != std::abs(d.y())) return false;
    for (size_t i = 1; i + 1 < n; ++i)
        if (p[i + 1] - p[i] != d) return false;
    return true;
}

ConvexityCertificate is_digitally_convex(const Image& Y) {
    ConvexityCertificate cert;
    if (Y.empty()) {
        cert.failing = "empty image";
        return cert;
    }
    if (Y.dim() != 2) {
        cert.failing = "digital convexity is defined in Z^2 only";
        return cert;
    }
    if (Y.size() == 1) {
        cert.convex = true;
        cert.clause = ConvexityCertificate::Clause::SinglePoint;
        return cert;
    }
    if (is_digital_segment(Y)) {
        cert.convex = true;
        cert.clause = ConvexityCertificate::Clause::LineSegment;
        return cert;
    }

    HullPolygon hull = convex_hull(Y.points());
    std::vector<Point> hv = hull.vertices;
    std::sort(hv.begin(), hv.end());

    std::vector<DiskDecomposition> candidates;
    for (auto mode : {CurveSearchMode::Canonical, CurveSearchMode::Minimal}) {
        for (auto& dec : find_bounding_curves(Y, mode)) candidates.push_back(dec);
    }
    if (static_cast<int>(Y.size()) <= 36) {
        for (auto& dec : find_bounding_curves(Y, CurveSearchMode::All)) candidates.push_back(dec);
    }
    if (candidates.empty()) {
        cert.failing = "not a point, a digital segment, or a digital disk";
        return cert;
    }
    // hull edges as unordered vertex pairs, for the traversal check below
    std::vector<std::pair<Point, Point>> hull_edges;
    for (size_t i = 0; i < hull.vertices.size(); ++i) {
        Point a = hull.vertices[i];
        Point b = hull.vertices[(i + 1) % hull.vertices.size()];
        if (b < a) std::swap(a, b);
        hull_edges.emplace_back(a, b);
    }
    for (const auto& dec : candidates) {
        SegmentDecomposition sd = maximal_segments(dec);
        std::vector<Point> endpoints;
        // The endpoints must be the hull vertices, and the curve must
        // traverse the hull: every maximal segment lies on a hull edge.
        // (Endpoint-set equality alone admits zigzag curves whose segments
        // cut across the interior.)
        bool traverses = true;
        for (const Segment& s : sd.segments) {
            endpoints.push_back(s.a);
            endpoints.push_back(s.b);
            Point a = s.a, b = s.b;
            if (b < a) std::swap(a, b);
            traverses = traverses && (a == b || std::find(hull_edges.begin(), hull_edges.end(),
                                                          std::make_pair(a, b)) != hull_edges.end());
        }
        std::sort(endpoints.begin(), endpoints.end());
        endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
        if (endpoints == hv && traverses) {
            cert.convex = true;
            cert.clause = ConvexityCertificate::Clause::DiskCurve;
            cert.witness = dec.curve;
            return cert;
        }
    }
    cert.failing = "no bounding curve traverses the hull with maximal-segment endpoints equal to "
                   "the hull vertices";
    return cert;
}

std::string ThickViolation::str() const {
    return p.str() + (clause == Clause::SlantInterior ? " lacks the interior diagonal point"
                                                      : " lacks interior support at a 135-degree vertex");
}

long long signed_area2(const CurveCycle& curve) {
    long long a = 0;
    const int m = curve.size();
    for (int i = 0; i < m; ++i) {
        const Point& p = curve.at(i);
        const Point& q = curve.at(i + 1);
        a += static_cast<long long>(p.x()) * q.y() - static_cast<long long>(q.x()) * p.y();
    }
    return a;
}

namespace {

Point left_normal(const Point& d) { return Point(-d.y(), d.x()); }

void slant_clause_violations(const std::vector<Segment>& segments, bool ccw, const Image& X,
                             bool either_side, std::vector<ThickViolation>& out) {
    for (const Segment& s : segments) {
        if (s.orientation != Orientation::SlantPos && s.orientation != Orientation::SlantNeg)
            continue;
        if (s.members.size() < 3) continue;
        const Point d = s.members[1] - s.members[0];
        const Point n = ccw ? left_normal(d) : Point(d.y(), -d.x());
        for (size_t k = 1; k + 1 < s.members.size(); ++k) {
            const Point& p = s.members[k];
            bool ok = either_side ? (X.contains(p + n) || X.contains(p - n)) : X.contains(p + n);
            if (!ok) out.push_back({p, ThickViolation::Clause::SlantInterior});
        }
    }
}

void angle_clause_violations(const DiskDecomposition& dec, const SegmentDecomposition& sd,
                             std::vector<ThickViolation>& out) {
    for (const Vertex& v : sd.vertices) {
        if (v.angle_deg != 135) continue;
        // the strict interior of a 135-degree angle holds one diagonal and
        // one axis direction; thickness asks for both supporting points
        bool have_b = false, have_bp = false;
        for (const Point& d : v.interior_dirs) {
            bool diagonal = d.x() != 0 && d.y() != 0;
            if (dec.disk.contains(v.p + d)) (diagonal ? have_b : have_bp) = true;
        }
        if (!(have_b && have_bp)) out.push_back({v.p, ThickViolation::Clause::Angle135});
    }
}

}  // namespace

ThicknessReport is_thick(const DiskDecomposition& dec) {
    ThicknessReport r;
    SegmentDecomposition sd = maximal_segments(dec);
    const bool ccw = signed_area2(dec.curve) > 0;
    slant_clause_violations(sd.segments, ccw, dec.disk, false, r.violations);
    angle_clause_violations(dec, sd, r.violations);
    std::sort(r.violations.begin(), r.violations.end());
    r.thick = r.violations.empty();
    return r;
}

ThicknessReport is_thick_bd(const DiskDecomposition& dec) {
    ThicknessReport r;
    // clause (a) over slanted segments of Bd(X)
    Image bd{boundary(dec.disk)};
    for (const auto& comp : components_of(bd, c2())) {
        if (auto cyc = cycle_through(comp, c2())) {
            slant_clause_violations(segments_of(*cyc), true, dec.disk, true, r.violations);
        }
    }
    SegmentDecomposition sd = maximal_segments(dec);
    angle_clause_violations(dec, sd, r.violations);
    std::sort(r.violations.begin(), r.violations.end());
    r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
    r.thick = r.violations.empty();
    return r;
}

std::optional<DiskDecomposition> thick_witness(const Image& D, bool bd_reading) {
    std::vector<DiskDecomposition> candidates;
    for (auto mode : {CurveSearchMode::Canonical, CurveSearchMode::Minimal})
        for (auto& dec : find_bounding_curves(D, mode)) candidates.push_back(dec);
    if (static_cast<int>(D.size()) <= 36)
        for (auto& dec : find_bounding_curves(D, CurveSearchMode::All)) candidates.push_back(dec);
    for (const auto& dec : candidates) {
        ThicknessReport r = bd_reading ? is_thick_bd(dec) : is_thick(dec);
        if (r.thick) return dec;
    }
    return std::nullopt;
}

}  // namespace freeze
