#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freeze/selfmap.hpp"

namespace freeze {

// Optional layers drawn on top of the base image. Every overlay point must
// belong to the image (std::invalid_argument otherwise).
struct Overlays {
    std::vector<Point> boundary;
    std::vector<Point> curve;       // drawn in cyclic order when used for SVG polylines
    std::vector<Point> candidate;
    char candidate_glyph = 'a';     // 'a' for c1 candidates, 'b' for c2
    std::optional<SelfMap> witness; // arrows from moved points to their images
};

// One glyph per lattice point plus a legend; deterministic.
std::string render_ascii(const Image& X, const Overlays& ov);

// Unit-square diagram; byte-identical across runs for identical inputs.
std::string render_svg(const Image& X, const Overlays& ov);

}  // namespace freeze
