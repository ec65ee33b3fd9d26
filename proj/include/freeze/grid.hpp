#pragma once

#include <optional>
#include <vector>

#include "freeze/image.hpp"

namespace freeze {

// A kappa-path: nonempty point sequence with consecutive members
// adjacent-or-equal under `adj`. Length is points.size() - 1.
struct LatticePath {
    std::vector<Point> points;
    Adjacency adj;

    int length() const { return static_cast<int>(points.size()) - 1; }
};

// N(X,kappa,x) together with x itself. x must belong to X.
std::vector<Point> closed_neighborhood(const Image& X, const Adjacency& adj, const Point& x);
// N(X,kappa,x): the members of X adjacent to x.
std::vector<Point> open_neighborhood(const Image& X, const Adjacency& adj, const Point& x);

// Every pair of points of X joined by a path inside X.
// The empty image counts as connected.
bool is_connected(const Image& X, const Adjacency& adj);

// Connected components of a point set (not of a complement), canonical order.
std::vector<std::vector<Point>> components_of(const Image& X, const Adjacency& adj);

struct Component {
    std::vector<Point> points;  // for the infinite component: members inside the region only
    bool infinite = false;
};

// Components of region \ P under adj, computed on the region inflated by a
// one-unit shell; a component touching the shell is the infinite component
// of Z^n \ P. Bounded components are reported exactly. Ordered by least point.
std::vector<Component> connected_components(const std::vector<Point>& P, const Adjacency& adj,
                                            const Box& region);

// The unique shortest kappa-path in X from a to b, when exactly one
// geodesic exists. Any continuous map fixing a and b fixes this path.
std::optional<LatticePath> unique_shortest_path(const Image& X, const Adjacency& adj,
                                                const Point& a, const Point& b);

}  // namespace freeze
