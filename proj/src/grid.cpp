#include "freeze/grid.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace freeze {

std::vector<Point> closed_neighborhood(const Image& X, const Adjacency& adj, const Point& x) {
    if (!X.contains(x)) throw std::invalid_argument("closed_neighborhood: x not in X");
    std::vector<Point> out = open_neighborhood(X, adj, x);
    out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> open_neighborhood(const Image& X, const Adjacency& adj, const Point& x) {
    if (!X.contains(x)) throw std::invalid_argument("open_neighborhood: x not in X");
    std::vector<Point> out;
    for (const Point& q : lattice_neighbors(x, adj))
        if (X.contains(q)) out.push_back(q);
    return out;
}

bool is_connected(const Image& X, const Adjacency& adj) {
    if (X.size() <= 1) return true;
    return components_of(X, adj).size() == 1;
}

std::vector<std::vector<Point>> components_of(const Image& X, const Adjacency& adj) {
    const int n = static_cast<int>(X.size());
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::vector<std::vector<Point>> comps;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(comps.size());
        comps.push_back({});
        std::deque<int> q{s};
        label[static_cast<size_t>(s)] = id;
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            comps.back().push_back(X[static_cast<size_t>(i)]);
            for (const Point& nb : lattice_neighbors(X[static_cast<size_t>(i)], adj)) {
                if (auto j = X.index_of(nb); j && label[static_cast<size_t>(*j)] < 0) {
                    label[static_cast<size_t>(*j)] = id;
                    q.push_back(*j);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    // BFS from canonical order already yields components ordered by least point
    return comps;
}

std::vector<Component> connected_components(const std::vector<Point>& P, const Adjacency& adj,
                                            const Box& region) {
    for (const Point& p : P)
        if (!region.contains(p))
            throw std::invalid_argument("connected_components: region must contain P");
    const Box outer = region.inflated(1);
    const Box inner = region;
    Image pset{P};
    std::vector<Point> free_cells;
    for (const Point& c : outer.cells())
        if (!pset.contains(c)) free_cells.push_back(c);
    Image freespace{std::move(free_cells)};

    std::vector<Component> out;
    for (std::vector<Point>& comp : components_of(freespace, adj)) {
        bool touches_shell = false;
        for (const Point& p : comp)
            if (!inner.contains(p)) {
                touches_shell = true;
                break;
            }
        if (touches_shell) {
            out.push_back(Component{std::move(comp), true});
        } else {
            out.push_back(Component{std::move(comp), false});
        }
    }
    return out;
}

std::optional<LatticePath> unique_shortest_path(const Image& X, const Adjacency& adj,
                                                const Point& a, const Point& b) {
    auto ia = X.index_of(a), ib = X.index_of(b);
    if (!ia || !ib) throw std::invalid_argument("unique_shortest_path: endpoint not in X");
    const int n = static_cast<int>(X.size());
    Graph g{X, adj};
    std::vector<int> dist(static_cast<size_t>(n), -1);
    std::vector<int> cnt(static_cast<size_t>(n), 0);  // geodesic count, saturating at 2
    std::queue<int> q;
    dist[static_cast<size_t>(*ia)] = 0;
    cnt[static_cast<size_t>(*ia)] = 1;
    q.push(*ia);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : g.nbrs[static_cast<size_t>(i)]) {
            if (dist[static_cast<size_t>(j)] < 0) {
                dist[static_cast<size_t>(j)] = dist[static_cast<size_t>(i)] + 1;
                cnt[static_cast<size_t>(j)] = cnt[static_cast<size_t>(i)];
                q.push(j);
            } else if (dist[static_cast<size_t>(j)] == dist[static_cast<size_t>(i)] + 1) {
                cnt[static_cast<size_t>(j)] = std::min(2, cnt[static_cast<size_t>(j)] + cnt[static_cast<size_t>(i)]);
            }
        }
    }
    if (dist[static_cast<size_t>(*ib)] < 0 || cnt[static_cast<size_t>(*ib)] != 1) return std::nullopt;

    // Unique geodesic: walk back through the (necessarily unique) predecessors.
    std::vector<Point> rev{b};
    int cur = *ib;
    while (cur != *ia) {
        int prev = -1;
        for (int j : g.nbrs[static_cast<size_t>(cur)])
            if (dist[static_cast<size_t>(j)] == dist[static_cast<size_t>(cur)] - 1 && cnt[static_cast<size_t>(j)] >= 1) {
                prev = j;
                break;
            }
        cur = prev;
        rev.push_back(X[static_cast<size_t>(cur)]);
    }
    std::reverse(rev.begin(), rev.end());
    return LatticePath{std::move(rev), adj};
}

}  // namespace freeze
