#include <doctest.h>

#include <algorithm>
#include <map>

#include "freeze/convexity.hpp"
#include "helpers.hpp"

using namespace freeze;
using testutil::rect_minus;

TEST_CASE("hull of a box is its corners") {
    Image box = rect_minus(4, 4);
    HullPolygon h = convex_hull(box.points());
    CHECK(h.kind == HullPolygon::Kind::Polygon);
    std::vector<Point> v = h.vertices;
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Point>{Point(0, 0), Point(0, 4), Point(4, 0), Point(4, 4)});
}

TEST_CASE("hull degeneracies") {
    CHECK(convex_hull({Point(2, 3)}).kind == HullPolygon::Kind::PointHull);
    HullPolygon seg = convex_hull({Point(0, 0), Point(1, 1), Point(3, 3)});
    CHECK(seg.kind == HullPolygon::Kind::SegmentHull);
    CHECK(seg.vertices == std::vector<Point>{Point(0, 0), Point(3, 3)});
    CHECK_THROWS(convex_hull({}));
}

TEST_CASE("hull of the diamond is its four outer points") {
    HullPolygon h = convex_hull(testutil::diamond().points());
    CHECK(h.vertices.size() == 4);
    for (const Point& p : h.vertices) CHECK(p != Point(1, 1));
}

TEST_CASE("hull of the convex fig-5 disk") {
    Image D = rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)});
    HullPolygon h = convex_hull(D.points());
    std::vector<Point> v = h.vertices;
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Point>{Point(0, 0), Point(0, 2), Point(2, 4), Point(4, 0), Point(4, 4)});
}

TEST_CASE("hull commutes with the lattice symmetries") {
    std::mt19937 rng(23);
    auto apply = [](const Point& p, int t) {
        int x = p[0], y = p[1];
        switch (t) {
            case 0: return Point(x, y);
            case 1: return Point(-x, y);
            case 2: return Point(x, -y);
            case 3: return Point(-x, -y);
            case 4: return Point(y, x);
            case 5: return Point(-y, x);
            case 6: return Point(y, -x);
            default: return Point(-y, -x);
        }
    };
    for (int it = 0; it < 40; ++it) {
        Image X = testutil::random_connected_image(rng, 9);
        HullPolygon base = convex_hull(X.points());
        for (int t = 0; t < 8; ++t) {
            std::vector<Point> mapped;
            for (const Point& p : X) mapped.push_back(apply(p, t));
            std::vector<Point> hv;
            for (const Point& p : base.vertices) hv.push_back(apply(p, t));
            std::sort(hv.begin(), hv.end());
            std::vector<Point> got = convex_hull(mapped).vertices;
            std::sort(got.begin(), got.end());
            CHECK(got == hv);
        }
    }
}

TEST_CASE("digital segments") {
    CHECK(is_digital_segment(Image({Point(0, 0), Point(1, 0), Point(2, 0)})));
    CHECK(is_digital_segment(Image({Point(0, 0), Point(1, 1), Point(2, 2)})));
    CHECK(is_digital_segment(Image({Point(2, 5), Point(2, 6)})));
    CHECK(!is_digital_segment(Image({Point(0, 0)})));               // single point: other clause
    CHECK(!is_digital_segment(Image({Point(0, 0), Point(2, 0)}))); // gap
    CHECK(!is_digital_segment(Image({Point(0, 0), Point(1, 0), Point(1, 1)})));
    CHECK(!is_digital_segment(Image({Point(0, 0), Point(1, 2)})));  // slope not 0, inf, +-1
}

TEST_CASE("digital convexity clauses") {
    CHECK(is_digitally_convex(Image({Point(7, -2)})).clause ==
          ConvexityCertificate::Clause::SinglePoint);
    CHECK(is_digitally_convex(Image({Point(0, 0), Point(1, 0), Point(2, 0)})).clause ==
          ConvexityCertificate::Clause::LineSegment);

    Image fig5 = rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)});
    ConvexityCertificate cert = is_digitally_convex(fig5);
    CHECK(cert.convex);
    CHECK(cert.clause == ConvexityCertificate::Clause::DiskCurve);
    REQUIRE(cert.witness.has_value());
    CHECK(validate_bounding_curve(fig5, *cert.witness).ok());

    Image nonconvex = rect_minus(3, 6, {Point(3, 3)});
    CHECK(!is_digitally_convex(nonconvex).convex);
}

TEST_CASE("zigzag curves whose segment endpoints mimic the hull are not convex") {
    // a bounding curve can weave through the interior and still end its
    // maximal segments on hull vertices; convexity must reject this
    Image snake({Point(0, 1), Point(0, 4), Point(1, 0), Point(1, 1), Point(1, 2), Point(1, 3),
                 Point(1, 4), Point(2, 0), Point(2, 1), Point(2, 2), Point(2, 3), Point(3, 1)});
    CHECK(!find_bounding_curves(snake, CurveSearchMode::Canonical).empty());  // it is a disk
    CHECK(!is_digitally_convex(snake).convex);
}

TEST_CASE("convex images meet every lattice line in a contiguous run") {
    std::vector<Image> samples = {
        rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)}),
        rect_minus(3, 3),
        testutil::diamond(),
        rect_minus(2, 2, {Point(0, 2)}),
    };
    for (const Image& X : samples) {
        if (!is_digitally_convex(X).convex) continue;
        std::map<int, std::vector<int>> rows, cols;
        for (const Point& p : X) {
            rows[p[1]].push_back(p[0]);
            cols[p[0]].push_back(p[1]);
        }
        for (auto& [k, v] : rows) {
            std::sort(v.begin(), v.end());
            CHECK(v.back() - v.front() + 1 == static_cast<int>(v.size()));
        }
        for (auto& [k, v] : cols) {
            std::sort(v.begin(), v.end());
            CHECK(v.back() - v.front() + 1 == static_cast<int>(v.size()));
        }
    }
}

TEST_CASE("the fig-5 disk is thick") {
    Image D = rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)});
    auto decs = find_bounding_curves(D, CurveSearchMode::Minimal);
    REQUIRE(!decs.empty());
    ThicknessReport rep = is_thick(decs[0]);
    CHECK(rep.thick);
    CHECK(rep.violations.empty());
    CHECK(is_thick_bd(decs[0]).thick);
    CHECK(thick_witness(D).has_value());
}

TEST_CASE("the diamond is vacuously thick") {
    auto decs = find_bounding_curves(testutil::diamond(), CurveSearchMode::Minimal);
    REQUIRE(!decs.empty());
    CHECK(is_thick(decs[0]).thick);
}

TEST_CASE("a disk with an unsupported 135-degree vertex is not thick") {
    Image D({Point(1, 0), Point(2, 0), Point(0, 1), Point(1, 1), Point(2, 1), Point(3, 1),
             Point(0, 2), Point(2, 2)});
    auto decs = find_bounding_curves(D, CurveSearchMode::Minimal);
    REQUIRE(!decs.empty());
    ThicknessReport rep = is_thick(decs[0]);
    CHECK(!rep.thick);
    REQUIRE(!rep.violations.empty());
    CHECK(std::is_sorted(rep.violations.begin(), rep.violations.end()));
    bool at01 = false;
    for (const auto& v : rep.violations)
        at01 = at01 || (v.p == Point(0, 1) && v.clause == ThickViolation::Clause::Angle135);
    CHECK(at01);
    CHECK(!thick_witness(D).has_value());  // no curve certifies thickness
}

TEST_CASE("a disk with a bare slanted run is not thick") {
    Image D({Point(1, 0), Point(3, 0), Point(4, 0), Point(0, 1), Point(1, 1), Point(2, 1),
             Point(3, 1), Point(1, 2), Point(2, 2)});
    auto decs = find_bounding_curves(D, CurveSearchMode::Minimal);
    REQUIRE(!decs.empty());
    ThicknessReport rep = is_thick(decs[0]);
    CHECK(!rep.thick);
    bool slant = false;
    for (const auto& v : rep.violations)
        slant = slant || v.clause == ThickViolation::Clause::SlantInterior;
    CHECK(slant);
    CHECK(!thick_witness(D).has_value());
}

TEST_CASE("thickness evaluation is stable across recomputation") {
    Image D = rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)});
    auto decs = find_bounding_curves(D, CurveSearchMode::Minimal);
    REQUIRE(!decs.empty());
    ThicknessReport a = is_thick(decs[0]);
    ThicknessReport b = is_thick(decs[0]);
    CHECK(a.thick == b.thick);
    CHECK(a.violations == b.violations);
}

TEST_CASE("signed area orientation") {
    auto cyc = cycle_through({Point(1, 0), Point(2, 1), Point(1, 2), Point(0, 1)}, c2(2));
    REQUIRE(cyc.has_value());
    long long a = signed_area2(*cyc);
    CHECK(a != 0);
    CurveCycle rev = *cyc;
    std::reverse(rev.points.begin(), rev.points.end());
    CHECK(signed_area2(rev) == -a);
}
