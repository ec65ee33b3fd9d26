#include "freeze/curve.hpp"

#include <algorithm>

namespace freeze {

bool CurveCycle::contains(const Point& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

bool CurveCycle::same_cycle(const CurveCycle& o) const {
    if (size() != o.size() || adj != o.adj) return false;
    return canonicalize(*this).points == canonicalize(o).points;
}

std::variant<CurveCycle, CurveRejection> make_closed_curve(const std::vector<Point>& seq,
                                                           const Adjacency& adj,
                                                           bool jct_mode) {
    std::vector<Point> pts = seq;
    if (pts.empty()) return CurveRejection{-1, "empty sequence"};
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();

    const int m = static_cast<int>(pts.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pts[static_cast<size_t>(i)] == pts[static_cast<size_t>(j)])
                return CurveRejection{j, "repeated point " + pts[static_cast<size_t>(j)].str()};
    for (int i = 0; i < m && m > 1; ++i) {
        const Point& a = pts[static_cast<size_t>(i)];
        const Point& b = pts[static_cast<size_t>((i + 1) % m)];
        if (!are_adjacent(a, b, adj))
            return CurveRejection{i, "consecutive points " + a.str() + " and " + b.str() +
                                         " are not " + adj.str() + "-adjacent"};
    }

    bool simple = true;
    for (int i = 0; i < m && simple; ++i)
        for (int j = i + 1; j < m && simple; ++j) {
            if (!are_adjacent(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)], adj)) continue;
            int d = j - i;
            if (d != 1 && d != m - 1) simple = false;
        }

    if (jct_mode) {
        int need = adj.order == 1 ? 8 : 4;
        if (m < need)
            return CurveRejection{-1, "JCT mode needs at least " + std::to_string(need) +
                                          " points under " + adj.str()};
        if (!simple) return CurveRejection{-1, "JCT mode requires a simple closed curve"};
    }
    return CurveCycle{std::move(pts), adj, simple};
}

CurveCycle canonicalize(const CurveCycle& c) {
    const int m = c.size();
    if (m <= 1) return c;
    auto least = std::min_element(c.points.begin(), c.points.end());
    int s = static_cast<int>(least - c.points.begin());
    std::vector<Point> fwd, rev;
    fwd.reserve(static_cast<size_t>(m));
    rev.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        fwd.push_back(c.at(s + k));
        rev.push_back(c.at(s - k));
    }
    CurveCycle out = c;
    out.points = fwd <= rev ? std::move(fwd) : std::move(rev);
    return out;
}

namespace {

bool ham_extend(const Graph& g, std::vector<int>& path, Bits& used, int target) {
    const int n = g.n();
    if (static_cast<int>(path.size()) == n)
        return g.closed_nbr_bits[static_cast<size_t>(path.back())].test(target) &&
               path.back() != target;
    // prune: unvisited vertices must stay connected and reachable from the tip
    Bits seen(n);
    int tip = path.back();
    std::vector<int> stack{tip};
    seen.set(tip);
    int reached = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : g.nbrs[static_cast<size_t>(i)])
            if (!used.test(j) && !seen.test(j)) {
                seen.set(j);
                ++reached;
                stack.push_back(j);
            }
    }
    if (reached < n - static_cast<int>(path.size()) + 1) return false;

    for (int j : g.nbrs[static_cast<size_t>(tip)]) {
        if (used.test(j)) continue;
        used.set(j);
        path.push_back(j);
        if (ham_extend(g, path, used, target)) return true;
        path.pop_back();
        used.reset(j);
    }
    return false;
}

}  // namespace

std::optional<CurveCycle> cycle_through(const std::vector<Point>& pts, const Adjacency& adj) {
    Image img{pts};
    const int n = static_cast<int>(img.size());
    if (n == 0) return std::nullopt;
    if (n == 1) return CurveCycle{{img[0]}, adj, true};
    Graph g{img, adj};
    for (int i = 0; i < n; ++i) {
        size_t deg = g.nbrs[static_cast<size_t>(i)].size();
        if (deg < (n == 2 ? 1u : 2u)) return std::nullopt;
    }
    std::vector<int> path{0};
    Bits used(n);
    used.set(0);
    if (!ham_extend(g, path, used, 0)) return std::nullopt;
    std::vector<Point> seq;
    seq.reserve(static_cast<size_t>(n));
    for (int i : path) seq.push_back(img[static_cast<size_t>(i)]);
    auto made = make_closed_curve(seq, adj);
    if (auto* cur = std::get_if<CurveCycle>(&made)) return canonicalize(*cur);
    return std::nullopt;
}

}  // namespace freeze
