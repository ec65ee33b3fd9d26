#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freeze/image.hpp"

namespace freeze {

// Exhaustive answer, up to bounds, to: is every digitally convex disk thick?
struct OpenQuestionReport {
    int max_w = 0, max_h = 0;
    long long masks_considered = 0;
    long long connected_canonical = 0;  // canonical under translation + symmetry
    long long disks = 0;
    long long convex_disks = 0;
    long long thick_chosen_reading = 0;  // thickness w.r.t. the chosen curve
    long long thick_bd_reading = 0;      // slant clause over Bd(X)
    // convex disks failing thickness, under each reading
    std::vector<Image> counterexamples_chosen;
    std::vector<Image> counterexamples_bd;

    std::string text() const;  // deterministic; never asserts the universal claim
};

// Enumerates every digital disk fitting in a max_w x max_h box (sizes are
// point counts per side), up to translation and the 8 lattice symmetries.
// Refuses bounds above 6x6. `progress`, when given, receives occasional
// status lines (not part of the report).
OpenQuestionReport search_open_question(int max_w, int max_h, std::ostream* progress = nullptr);

}  // namespace freeze
