#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace freeze {

// A point of the integer lattice Z^n, 1 <= n <= 3.
// Canonical order is lexicographic on coordinates.
struct Point {
    std::array<int, 3> c{0, 0, 0};
    int dim = 2;

    constexpr Point() = default;
    explicit constexpr Point(int x) : c{x, 0, 0}, dim(1) {}
    constexpr Point(int x, int y) : c{x, y, 0}, dim(2) {}
    constexpr Point(int x, int y, int z) : c{x, y, z}, dim(3) {}

    int operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int& operator[](int i) { return c[static_cast<size_t>(i)]; }
    int x() const { return c[0]; }
    int y() const { return c[1]; }

    auto operator<=>(const Point&) const = default;

    Point operator+(const Point& o) const {
        Point r = *this;
        for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] += o[i];
        return r;
    }
    Point operator-(const Point& o) const {
        Point r = *this;
        for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] -= o[i];
        return r;
    }

    std::string str() const;
};

// The c_u adjacency relation on Z^n: distinct points whose coordinates
// differ by at most 1, with at most `order` coordinates differing.
// In Z^2, order 1 is 4-adjacency and order 2 is 8-adjacency.
struct Adjacency {
    int dimension = 2;
    int order = 1;

    Adjacency() = default;
    Adjacency(int dim, int u) : dimension(dim), order(u) {
        if (dim < 1 || dim > 3 || u < 1 || u > dim)
            throw std::invalid_argument("adjacency requires 1 <= u <= n <= 3");
    }

    auto operator<=>(const Adjacency&) const = default;
    std::string str() const;
};

inline Adjacency c1(int dim = 2) { return Adjacency(dim, 1); }
inline Adjacency c2(int dim = 2) { return Adjacency(dim, 2); }

bool are_adjacent(const Point& p, const Point& q, const Adjacency& adj);

// x <-> y or x == y
inline bool adjacent_or_equal(const Point& p, const Point& q, const Adjacency& adj) {
    return p == q || are_adjacent(p, q, adj);
}

// All lattice neighbors of p under adj, in canonical order.
std::vector<Point> lattice_neighbors(const Point& p, const Adjacency& adj);

// Axis-aligned box [lo, hi], all coordinates inclusive.
struct Box {
    Point lo;
    Point hi;

    int dim() const { return lo.dim; }
    bool contains(const Point& p) const {
        for (int i = 0; i < lo.dim; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
    Box inflated(int k) const {
        Box b = *this;
        for (int i = 0; i < lo.dim; ++i) {
            b.lo[i] -= k;
            b.hi[i] += k;
        }
        return b;
    }
    long long cell_count() const {
        long long n = 1;
        for (int i = 0; i < lo.dim; ++i) n *= hi[i] - lo[i] + 1;
        return n;
    }
    std::vector<Point> cells() const;
};

Box bounding_box(const std::vector<Point>& pts);

}  // namespace freeze
