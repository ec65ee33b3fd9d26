#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freeze/image.hpp"

namespace freeze {

// A digital closed curve: cyclic sequence of distinct points, consecutive
// members adjacent under `adj` (the closing repetition is implicit).
// `simple` records whether every adjacency between members is a cyclic one.
struct CurveCycle {
    std::vector<Point> points;
    Adjacency adj;
    bool simple = false;

    int size() const { return static_cast<int>(points.size()); }
    const Point& at(int i) const {  // cyclic access
        int m = size();
        return points[static_cast<size_t>(((i % m) + m) % m)];
    }
    bool contains(const Point& p) const;

    // Same curve up to rotation and reversal.
    bool same_cycle(const CurveCycle& o) const;
};

struct CurveRejection {
    int index = -1;  // offending position in the input sequence, -1 if global
    std::string reason;
};

// Validates a point sequence as a closed curve. A trailing repetition of the
// first point is accepted and dropped. With jct_mode the Jordan curve theorem
// conventions are enforced: the curve must be simple with at least 8 points
// under c1 and at least 4 under c2.
std::variant<CurveCycle, CurveRejection> make_closed_curve(const std::vector<Point>& seq,
                                                           const Adjacency& adj,
                                                           bool jct_mode = false);

// Rotates/reflects the cyclic order into a canonical representative:
// starts at the least point, against the lexicographically lesser direction.
CurveCycle canonicalize(const CurveCycle& c);

// A canonical Hamiltonian cycle of `pts` under adj, if the set carries one;
// this is how a point set is promoted to a closed curve. Deterministic.
std::optional<CurveCycle> cycle_through(const std::vector<Point>& pts, const Adjacency& adj);

}  // namespace freeze
