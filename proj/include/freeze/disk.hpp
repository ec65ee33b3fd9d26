#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeze/curve.hpp"
#include "freeze/grid.hpp"

namespace freeze {

// Bd(X): points of X with a c1-neighbor outside X. Works in any supported
// dimension.
std::vector<Point> boundary(const Image& X);
// Int(X) = X \ Bd(X)
std::vector<Point> interior(const Image& X);

// A disk together with a witnessing bounding curve: the curve is c2-closed
// and Z^2 \ curve has exactly two c1-components, the finite one being
// disk \ curve.
struct DiskDecomposition {
    Image disk;
    CurveCycle curve;
    std::vector<Point> curve_interior;
    bool heuristic = false;  // set when the curve came from the shortcut heuristic
};

struct DiskValidation {
    std::optional<DiskDecomposition> decomposition;
    std::string reason;  // failing clause, empty on success
    std::vector<std::vector<Point>> bounded_components;

    bool ok() const { return decomposition.has_value(); }
};

// Definition check for "S is a bounding curve of D".
DiskValidation validate_bounding_curve(const Image& D, const CurveCycle& S);

enum class CurveSearchMode { Canonical, Minimal, All };

// Bounding curves of D. Canonical traces the outer contour; Minimal returns
// a curve of least cardinality (exhaustive up to `exhaustive_threshold`
// points of D, corner-shortcut heuristic above); All enumerates every curve
// point set (small D only; throws std::length_error above the threshold).
// An empty result means D is not a disk.
std::vector<DiskDecomposition> find_bounding_curves(const Image& D, CurveSearchMode mode,
                                                    int exhaustive_threshold = 36);

// Moore-neighbor outer contour trace; raw sequence, not validated.
std::vector<Point> moore_trace(const Image& D);

enum class Orientation { Horizontal, Vertical, SlantPos, SlantNeg };

std::string orientation_name(Orientation o);

struct Segment {
    Point a, b;                  // endpoints along the traversal
    Orientation orientation;
    std::vector<Point> members;  // consecutive along the curve, a first
};

struct Vertex {
    Point p;
    int angle_deg = 0;       // interior angle, a positive multiple of 45 below 360
    int seg_in = -1;         // segment ending at p
    int seg_out = -1;        // segment starting at p
    // directions strictly inside the interior angle, as unit steps from p
    std::vector<Point> interior_dirs;
};

struct SegmentDecomposition {
    std::vector<Segment> segments;
    std::vector<Vertex> vertices;

    const Vertex* vertex_at(const Point& p) const;
};

// Partition of the bounding curve into maximal collinear runs, with
// interior angles at the shared endpoints.
SegmentDecomposition maximal_segments(const DiskDecomposition& dec);

// Maximal collinear runs of a closed curve without angle data (used for
// boundary components that are not tied to a disk decomposition).
std::vector<Segment> segments_of(const CurveCycle& curve);

// Interior angle of the disk at vertex p of its segment decomposition.
int interior_angle(const DiskDecomposition& dec, const Point& p);

}  // namespace freeze
