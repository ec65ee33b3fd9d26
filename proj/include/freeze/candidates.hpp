#pragma once

#include <string>
#include <vector>

#include "freeze/convexity.hpp"
#include "freeze/disk.hpp"

namespace freeze {

enum class Construction { Corners, C1A1A2, C2B1B2, Boundary, BoundingCurve, Custom };

std::string construction_name(Construction c);

// A named candidate freezing set together with how it was built.
struct CandidateSet {
    std::vector<Point> points;  // sorted, unique
    Construction construction = Construction::Custom;
    std::string provenance;
};

// The 2^n corner points of the box.
CandidateSet corner_set(const Box& box);

// Endpoints of the maximal horizontal/vertical segments of the bounding
// curve, together with every point of its slanted segments.
CandidateSet c1_candidate(const DiskDecomposition& dec);

// Endpoints of the maximal slanted segments of the bounding curve, together
// with every point of its horizontal/vertical segments.
CandidateSet c2_candidate(const DiskDecomposition& dec);

enum class Claim { Freezing, MinimalFreezing };

std::string claim_name(Claim c);

// A candidate set with the strongest verdict the construction theorems
// support for it, given which hypotheses verified on D.
struct TheoremClaim {
    CandidateSet set;
    Adjacency adjacency;
    Claim claim = Claim::Freezing;
    std::string hypotheses;  // versions of the checked hypotheses, human readable
};

// Every construction applicable to D, each tagged minimal_freezing only
// when its hypotheses (convexity, thickness, box shape) verify.
std::vector<TheoremClaim> theorem_claims(const Image& D);

}  // namespace freeze
