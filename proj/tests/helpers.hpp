#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "freeze/image.hpp"

namespace testutil {

using freeze::Image;
using freeze::Point;

// [0,x1] x [0,y1] minus the listed points
inline Image rect_minus(int x1, int y1, const std::vector<Point>& excluded = {}) {
    std::vector<Point> pts;
    for (int x = 0; x <= x1; ++x)
        for (int y = 0; y <= y1; ++y) {
            Point p(x, y);
            if (std::find(excluded.begin(), excluded.end(), p) == excluded.end())
                pts.push_back(p);
        }
    return Image(std::move(pts));
}

inline Image diamond() {
    return Image({Point(1, 0), Point(0, 1), Point(2, 1), Point(1, 2), Point(1, 1)});
}

// The diamond translated so its lowest point sits at `base`.
inline Image diamond_at(const Point& base) {
    std::vector<Point> pts;
    for (const Point& p : diamond()) pts.push_back(p + base - Point(1, 0));
    return Image(std::move(pts));
}

// Connected image grown by a random walk; c1-connected by construction.
inline Image random_connected_image(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(2, max_size);
    const int target = size_dist(rng);
    std::vector<Point> pts = {Point(0, 0)};
    const Point steps[4] = {Point(1, 0), Point(-1, 0), Point(0, 1), Point(0, -1)};
    while (static_cast<int>(pts.size()) < target) {
        Point base = pts[std::uniform_int_distribution<size_t>(0, pts.size() - 1)(rng)];
        Point q = base + steps[std::uniform_int_distribution<int>(0, 3)(rng)];
        if (std::abs(q[0]) > 3 || std::abs(q[1]) > 3) continue;
        if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
    return Image(std::move(pts));
}

}  // namespace testutil
