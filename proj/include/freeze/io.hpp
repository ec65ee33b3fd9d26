#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freeze/image.hpp"

namespace freeze {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                             msg),
          line(l),
          column(c) {}
};

// A digital image as read from disk, with optional declarations.
struct ImageDocument {
    std::string name;
    Image image;
    std::optional<Adjacency> adjacency;
    std::optional<std::vector<Point>> curve;  // declared bounding curve, validated lazily
};

// Accepts either format:
//   * grid: optional "@origin x y" header, then rows of '#' (member) and
//     '.' (non-member); row 0 is the top of the picture, y grows upward
//     internally.
//   * structured: a JSON object {"name", "adjacency", "points", "curve"}.
// Throws ParseError with line/column on malformed input.
ImageDocument parse_image(const std::string& text);

// Canonical grid emission; parse(emit_grid(d)) reproduces d's point set.
std::string emit_grid(const ImageDocument& doc);

// Canonical structured emission.
std::string emit_json(const ImageDocument& doc);

}  // namespace freeze
