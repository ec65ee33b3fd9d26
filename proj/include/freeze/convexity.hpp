#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeze/disk.hpp"

namespace freeze {

// Convex hull of a planar lattice point set, exact integer arithmetic.
struct HullPolygon {
    enum class Kind { PointHull, SegmentHull, Polygon };
    std::vector<Point> vertices;  // counterclockwise, no three consecutive collinear
    Kind kind = Kind::PointHull;
};

HullPolygon convex_hull(const std::vector<Point>& pts);

// Digital convexity: a point, a digital line segment, or a disk with a
// bounding curve whose maximal-segment endpoints equal the hull vertices.
struct ConvexityCertificate {
    bool convex = false;
    enum class Clause { SinglePoint, LineSegment, DiskCurve, NotConvex } clause = Clause::NotConvex;
    std::optional<CurveCycle> witness;  // for the disk clause
    std::string failing;                // why not, when convex == false
};

ConvexityCertificate is_digitally_convex(const Image& Y);

// True when the point set is a digital line segment: collinear along a
// horizontal, vertical or slope +-1 line, with consecutive members adjacent.
bool is_digital_segment(const Image& Y);

struct ThickViolation {
    Point p;
    enum class Clause { SlantInterior, Angle135 } clause;
    auto operator<=>(const ThickViolation&) const = default;
    std::string str() const;
};

struct ThicknessReport {
    bool thick = false;
    std::vector<ThickViolation> violations;
};

// Thickness of a disk with respect to its chosen bounding curve: every
// non-endpoint of a slanted curve segment has the interior-side diagonal
// point in X, and every 135-degree vertex has both strict-interior
// neighbors in X.
ThicknessReport is_thick(const DiskDecomposition& dec);

// Alternate reading of the definition: the slanted-segment clause ranges
// over slanted segments of Bd(X) rather than of the chosen curve (a point
// passes when either perpendicular diagonal lies in X); the angle clause is
// unchanged. Exposed so disagreements between the readings can be flagged.
ThicknessReport is_thick_bd(const DiskDecomposition& dec);

// Existential form: a bounding curve of D certifying thickness, if any.
std::optional<DiskDecomposition> thick_witness(const Image& D, bool bd_reading = false);

// Twice the signed area of the cyclic curve polygon; positive when the
// traversal is counterclockwise.
long long signed_area2(const CurveCycle& curve);

}  // namespace freeze
