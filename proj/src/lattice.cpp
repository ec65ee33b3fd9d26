#include "freeze/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace freeze {

std::string Point::str() const {
    std::string s = "(";
    for (int i = 0; i < dim; ++i) {
        if (i) s += ",";
        s += std::to_string(c[static_cast<size_t>(i)]);
    }
    return s + ")";
}

std::string Adjacency::str() const { return "c" + std::to_string(order); }

bool are_adjacent(const Point& p, const Point& q, const Adjacency& adj) {
    if (p.dim != adj.dimension || q.dim != adj.dimension)
        throw std::invalid_argument("are_adjacent: dimension mismatch");
    int diff = 0;
    for (int i = 0; i < adj.dimension; ++i) {
        int d = std::abs(p[i] - q[i]);
        if (d > 1) return false;
        diff += d;
    }
    return diff >= 1 && diff <= adj.order;
}

std::vector<Point> lattice_neighbors(const Point& p, const Adjacency& adj) {
    if (p.dim != adj.dimension)
        throw std::invalid_argument("lattice_neighbors: dimension mismatch");
    std::vector<Point> out;
    const int n = adj.dimension;
    const int total = n == 1 ? 3 : n == 2 ? 9 : 27;
    for (int code = 0; code < total; ++code) {
        int v = code, diff = 0;
        Point q = p;
        for (int i = 0; i < n; ++i) {
            int d = v % 3 - 1;
            v /= 3;
            q[i] += d;
            diff += std::abs(d);
        }
        if (diff >= 1 && diff <= adj.order) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> Box::cells() const {
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(std::max(0LL, cell_count())));
    const int n = dim();
    if (n == 1) {
        for (int x = lo[0]; x <= hi[0]; ++x) out.push_back(Point(x));
    } else if (n == 2) {
        for (int x = lo[0]; x <= hi[0]; ++x)
            for (int y = lo[1]; y <= hi[1]; ++y) out.push_back(Point(x, y));
    } else {
        for (int x = lo[0]; x <= hi[0]; ++x)
            for (int y = lo[1]; y <= hi[1]; ++y)
                for (int z = lo[2]; z <= hi[2]; ++z) out.push_back(Point(x, y, z));
    }
    return out;
}

Box bounding_box(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("bounding_box: empty set");
    Box b{pts[0], pts[0]};
    for (const Point& p : pts) {
        for (int i = 0; i < p.dim; ++i) {
            b.lo[i] = std::min(b.lo[i], p[i]);
            b.hi[i] = std::max(b.hi[i], p[i]);
        }
    }
    return b;
}

}  // namespace freeze
