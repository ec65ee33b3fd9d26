#pragma once

#include <memory>
#include <vector>

#include "freeze/image.hpp"

namespace freeze {

// A total self-map f: X -> X, targets aligned to the image's canonical order.
struct SelfMap {
    std::shared_ptr<const Image> image;
    std::vector<int> targets;  // targets[i] = index of f(x_i)

    Point apply(const Point& p) const;
    bool is_identity() const;
    std::vector<Point> fixed_points() const;   // Fix(f)
    std::vector<Point> moved_points() const;   // X \ Fix(f)
};

SelfMap identity_map(std::shared_ptr<const Image> image);
SelfMap constant_map(std::shared_ptr<const Image> image, const Point& target);

// f with x <-> x' implying f(x) = f(x') or f(x) <-> f(x').
bool is_continuous(const SelfMap& f, const Adjacency& adj);

// Pointwise composition g(f(x)); both maps must share an image.
SelfMap compose(const SelfMap& g, const SelfMap& f);

}  // namespace freeze
