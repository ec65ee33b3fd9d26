#include "freeze/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeze {

namespace {

void sort_unique(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

bool is_axis(Orientation o) {
    return o == Orientation::Horizontal || o == Orientation::Vertical;
}

// A1 u A2 (resp. B1 u B2) from a list of maximal segments of one closed curve.
std::vector<Point> from_segments(const std::vector<Segment>& segs, bool axis_full) {
    std::vector<Point> out;
    for (const Segment& s : segs) {
        const bool full = is_axis(s.orientation) == axis_full;
        if (full) {
            out.insert(out.end(), s.members.begin(), s.members.end());
        } else {
            out.push_back(s.a);
            out.push_back(s.b);
        }
    }
    sort_unique(out);
    return out;
}

}  // namespace

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Corners: return "corners";
        case Construction::C1A1A2: return "c1_A1A2";
        case Construction::C2B1B2: return "c2_B1B2";
        case Construction::Boundary: return "boundary";
        case Construction::BoundingCurve: return "bounding_curve";
        case Construction::Custom: return "custom";
    }
    return "?";
}

std::string claim_name(Claim c) {
    return c == Claim::MinimalFreezing ? "minimal_freezing" : "freezing";
}

CandidateSet corner_set(const Box& box) {
    const int d = box.dim();
    for (int i = 0; i < d; ++i)
        if (box.hi[i] <= box.lo[i]) throw std::invalid_argument("corner_set: degenerate box side");
    CandidateSet cs;
    cs.construction = Construction::Corners;
    cs.provenance = "corners of " + box.lo.str() + ".." + box.hi.str();
    for (int mask = 0; mask < (1 << d); ++mask) {
        Point p = box.lo;
        for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) p.c[static_cast<size_t>(i)] = box.hi[i];
        cs.points.push_back(p);
    }
    sort_unique(cs.points);
    return cs;
}

CandidateSet c1_candidate(const DiskDecomposition& dec) {
    SegmentDecomposition sd = maximal_segments(dec);
    CandidateSet cs;
    cs.construction = Construction::C1A1A2;
    cs.provenance = "axis endpoints + slant points of a bounding curve, " +
                    std::to_string(dec.curve.points.size()) + " curve points";
    cs.points = from_segments(sd.segments, /*axis_full=*/false);
    return cs;
}

CandidateSet c2_candidate(const DiskDecomposition& dec) {
    SegmentDecomposition sd = maximal_segments(dec);
    CandidateSet cs;
    cs.construction = Construction::C2B1B2;
    cs.provenance = "slant endpoints + axis points of a bounding curve, " +
                    std::to_string(dec.curve.points.size()) + " curve points";
    cs.points = from_segments(sd.segments, /*axis_full=*/true);
    return cs;
}

std::vector<TheoremClaim> theorem_claims(const Image& D) {
    std::vector<TheoremClaim> claims;
    if (D.empty()) return claims;

    const std::vector<Point> bd = boundary(D);

    // Bd(X) freezes, both adjacencies.
    for (const Adjacency& adj : {c1(D.dim()), c2(D.dim())}) {
        TheoremClaim tc;
        tc.set.points = bd;
        tc.set.construction = Construction::Boundary;
        tc.set.provenance = "Bd(X)";
        tc.adjacency = adj;
        tc.claim = Claim::Freezing;
        tc.hypotheses = "none";
        claims.push_back(std::move(tc));
    }

    // Box: the corner set freezes under c1, minimally in dimension <= 2.
    {
        Box bb = bounding_box(std::vector<Point>(D.begin(), D.end()));
        bool is_box = static_cast<long long>(D.size()) == bb.cell_count();
        bool nondegenerate = true;
        for (int i = 0; i < D.dim(); ++i) nondegenerate = nondegenerate && bb.hi[i] > bb.lo[i];
        if (is_box && nondegenerate) {
            TheoremClaim tc;
            tc.set = corner_set(bb);
            tc.adjacency = c1(D.dim());
            tc.claim = D.dim() <= 2 ? Claim::MinimalFreezing : Claim::Freezing;
            tc.hypotheses = "box shape verified; minimality asserted only for dimension <= 2";
            claims.push_back(std::move(tc));
        }
    }

    if (D.dim() != 2) return claims;

    // Disk-based constructions, fed by the minimal bounding curve when it
    // can be certified, the canonical curve otherwise.
    std::vector<DiskDecomposition> curves;
    try {
        curves = find_bounding_curves(D, CurveSearchMode::Minimal);
    } catch (const std::length_error&) {
        curves = find_bounding_curves(D, CurveSearchMode::Canonical);
    }
    if (!curves.empty()) {
        const DiskDecomposition& dec = curves.front();
        for (const Adjacency& adj : {c1(2), c2(2)}) {
            TheoremClaim tc;
            tc.set.points = dec.curve.points;
            sort_unique(tc.set.points);
            tc.set.construction = Construction::BoundingCurve;
            tc.set.provenance =
                dec.heuristic ? "bounding curve (heuristic shortcut)" : "bounding curve";
            tc.adjacency = adj;
            tc.claim = Claim::Freezing;
            tc.hypotheses = "disk validated";
            claims.push_back(std::move(tc));
        }

        const bool convex = is_digitally_convex(D).convex;
        const bool thick = is_thick(dec).thick;
        const std::string hyp = std::string("disk validated; convex=") + (convex ? "yes" : "no") +
                                " thick=" + (thick ? "yes" : "no");
        TheoremClaim a;
        a.set = c1_candidate(dec);
        a.adjacency = c1(2);
        a.claim = (convex && thick) ? Claim::MinimalFreezing : Claim::Freezing;
        a.hypotheses = hyp;
        claims.push_back(std::move(a));

        TheoremClaim b;
        b.set = c2_candidate(dec);
        b.adjacency = c2(2);
        b.claim = (convex && thick) ? Claim::MinimalFreezing : Claim::Freezing;
        b.hypotheses = hyp;
        claims.push_back(std::move(b));
    } else {
        // Not a disk: the A/B constructions still apply when Bd(X) splits
        // into disjoint c2-closed curves (one per boundary component).
        Image bd_img(bd);
        std::vector<std::vector<Point>> comps = components_of(bd_img, c2(2));
        std::vector<std::vector<Segment>> seglists;
        bool decomposed = true;
        for (const std::vector<Point>& pts : comps) {
            auto cyc = cycle_through(pts, c2(2));
            if (!cyc || cyc->points.size() < 4) {
                decomposed = false;
                break;
            }
            seglists.push_back(segments_of(*cyc));
        }
        if (decomposed && !comps.empty()) {
            for (bool axis_full : {false, true}) {
                TheoremClaim tc;
                for (const auto& segs : seglists) {
                    auto part = from_segments(segs, axis_full);
                    tc.set.points.insert(tc.set.points.end(), part.begin(), part.end());
                }
                sort_unique(tc.set.points);
                tc.set.construction = axis_full ? Construction::C2B1B2 : Construction::C1A1A2;
                tc.set.provenance = "per-component curves of Bd(X), " +
                                    std::to_string(seglists.size()) + " component(s)";
                tc.adjacency = axis_full ? c2(2) : c1(2);
                tc.claim = Claim::Freezing;
                tc.hypotheses = "Bd(X) decomposes into closed curves; not a disk, no minimality";
                claims.push_back(std::move(tc));
            }
        }
    }
    return claims;
}

}  // namespace freeze
