#include "freeze/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <stdexcept>

namespace freeze {

RigidityProblem RigidityProblem::make(std::shared_ptr<const Graph> g) {
    RigidityProblem p;
    p.graph = std::move(g);
    const int n = p.graph->n();
    Bits full(n);
    full.set_all();
    p.domains.assign(static_cast<size_t>(n), full);
    return p;
}

bool RigidityProblem::pin(int index) {
    Bits& d = domains[static_cast<size_t>(index)];
    if (!d.test(index)) return false;
    Bits single(static_cast<int>(domains.size()));
    single.set(index);
    d = single;
    return true;
}

bool RigidityProblem::contradiction() const {
    for (const Bits& d : domains)
        if (d.none()) return true;
    return false;
}

namespace {

// Per-coordinate threshold masks used by the pulling rule.
struct CoordMasks {
    // gt[i][v] = indices of points t with p_i(t) > v; lt likewise
    std::array<std::map<int, Bits>, 3> gt, lt;

    static CoordMasks build(const Graph& g) {
        CoordMasks m;
        const int n = g.n();
        const int dim = g.image.empty() ? 2 : g.image.dim();
        for (int i = 0; i < dim; ++i) {
            for (int t = 0; t < n; ++t) {
                int v = g.image[static_cast<size_t>(t)][i];
                auto& gslot = m.gt[static_cast<size_t>(i)];
                auto& lslot = m.lt[static_cast<size_t>(i)];
                if (!gslot.count(v)) gslot.emplace(v, Bits(n));
                if (!lslot.count(v)) lslot.emplace(v, Bits(n));
            }
            for (auto& [v, bits] : m.gt[static_cast<size_t>(i)])
                for (int t = 0; t < n; ++t)
                    if (g.image[static_cast<size_t>(t)][i] > v) bits.set(t);
            for (auto& [v, bits] : m.lt[static_cast<size_t>(i)])
                for (int t = 0; t < n; ++t)
                    if (g.image[static_cast<size_t>(t)][i] < v) bits.set(t);
        }
        return m;
    }
};

struct Search {
    std::shared_ptr<const Graph> graph;
    CoordMasks masks;
    SearchLimits limits;
    SearchStats stats;
    bool undecided = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    bool budget_exceeded() {
        if (limits.node_cap && stats.nodes > limits.node_cap) return true;
        if (limits.time_cap_s > 0 && (stats.nodes & 1023) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (el > limits.time_cap_s) return true;
        }
        return false;
    }

    // arc consistency + pulling to fixpoint; false on contradiction
    bool run_propagation(RigidityProblem& pr) {
        const Graph& g = *graph;
        const int n = g.n();
        std::vector<char> dirty(static_cast<size_t>(n), 1);
        bool again = true;
        while (again) {
            again = false;
            // AC sweep
            bool ac_change = true;
            while (ac_change) {
                ac_change = false;
                for (int x = 0; x < n; ++x) {
                    for (int y : g.nbrs[static_cast<size_t>(x)]) {
                        if (!dirty[static_cast<size_t>(y)] && !dirty[static_cast<size_t>(x)]) continue;
                        Bits& dx = pr.domains[static_cast<size_t>(x)];
                        const Bits& dy = pr.domains[static_cast<size_t>(y)];
                        for (int t = dx.first(); t >= 0; t = dx.next(t)) {
                            if (!dy.intersects(g.closed_nbr_bits[static_cast<size_t>(t)])) {
                                dx.reset(t);
                                ++stats.propagations;
                                dirty[static_cast<size_t>(x)] = 1;
                                ac_change = true;
                            }
                        }
                        if (dx.none()) return false;
                    }
                }
                if (ac_change) again = true;
                std::fill(dirty.begin(), dirty.end(), 0);
            }
            if (!limits.pulling) continue;
            // pulling sweep (Lemma-style coordinate rules)
            const int dim = g.image.dim();
            for (int q = 0; q < n; ++q) {
                for (int qp : g.nbrs[static_cast<size_t>(q)]) {
                    const Point& Q = g.image[static_cast<size_t>(q)];
                    const Point& Qp = g.image[static_cast<size_t>(qp)];
                    for (int i = 0; i < dim; ++i) {
                        if (Q[i] <= Qp[i]) continue;  // handled with roles swapped
                        const int a = Q[i], b = Qp[i];
                        const Bits& gta = masks.gt[static_cast<size_t>(i)].at(a);
                        const Bits& gtb = masks.gt[static_cast<size_t>(i)].at(b);
                        const Bits& lta = masks.lt[static_cast<size_t>(i)].at(a);
                        const Bits& ltb = masks.lt[static_cast<size_t>(i)].at(b);
                        Bits& dq = pr.domains[static_cast<size_t>(q)];
                        Bits& dqp = pr.domains[static_cast<size_t>(qp)];

                        auto prune = [&](Bits& d, const Bits& forbidden) {
                            int before = d.count();
                            d.and_not(forbidden);
                            int removed = before - d.count();
                            if (removed > 0) {
                                stats.propagations += static_cast<uint64_t>(removed);
                                again = true;
                            }
                        };
                        // f(q') cannot exceed b  =>  f(q) cannot exceed a
                        if (!dqp.intersects(gtb)) prune(dq, gta);
                        // every f(q) exceeds a  =>  f(q') exceeds b
                        {
                            Bits rest = dq;
                            rest.and_not(gta);
                            if (rest.none() && dq.any()) {
                                Bits forb = dqp;
                                forb.and_not(gtb);
                                prune(dqp, forb);
                            }
                        }
                        // f(q) cannot go below a  =>  f(q') cannot go below b
                        if (!dq.intersects(lta)) prune(dqp, ltb);
                        // every f(q') is below b  =>  f(q) is below a
                        {
                            Bits rest = dqp;
                            rest.and_not(ltb);
                            if (rest.none() && dqp.any()) {
                                Bits forb = dq;
                                forb.and_not(lta);
                                prune(dq, forb);
                            }
                        }
                        if (dq.none() || dqp.none()) return false;
                    }
                }
            }
            if (again) std::fill(dirty.begin(), dirty.end(), 1);
        }
        return !pr.contradiction();
    }

    // pin the unique geodesic between every pair of pinned-to-self points
    bool seed_geodesics(RigidityProblem& pr) {
        if (!limits.pulling) return true;
        const Graph& g = *graph;
        const int n = g.n();
        auto pinned_self = [&](int i) {
            return pr.domains[static_cast<size_t>(i)].count() == 1 &&
                   pr.domains[static_cast<size_t>(i)].test(i);
        };
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> pins;
            for (int i = 0; i < n; ++i)
                if (pinned_self(i)) pins.push_back(i);
            for (int a : pins) {
                // BFS with geodesic counting from a
                std::vector<int> dist(static_cast<size_t>(n), -1), cnt(static_cast<size_t>(n), 0);
                std::queue<int> q;
                dist[static_cast<size_t>(a)] = 0;
                cnt[static_cast<size_t>(a)] = 1;
                q.push(a);
                while (!q.empty()) {
                    int u = q.front();
                    q.pop();
                    for (int v : g.nbrs[static_cast<size_t>(u)]) {
                        if (dist[static_cast<size_t>(v)] < 0) {
                            dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                            cnt[static_cast<size_t>(v)] = cnt[static_cast<size_t>(u)];
                            q.push(v);
                        } else if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
                            cnt[static_cast<size_t>(v)] =
                                std::min(2, cnt[static_cast<size_t>(v)] + cnt[static_cast<size_t>(u)]);
                        }
                    }
                }
                for (int b : pins) {
                    if (b <= a || dist[static_cast<size_t>(b)] <= 1 || cnt[static_cast<size_t>(b)] != 1)
                        continue;
                    int cur = b;
                    while (cur != a) {
                        int prev = -1;
                        for (int v : g.nbrs[static_cast<size_t>(cur)])
                            if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(cur)] - 1 &&
                                cnt[static_cast<size_t>(v)] >= 1) {
                                prev = v;
                                break;
                            }
                        cur = prev;
                        if (cur != a && !pinned_self(cur)) {
                            if (!pr.pin(cur)) return false;
                            ++stats.propagations;
                            grew = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    // DFS over the remaining domains; returns targets of the first solution
    std::optional<std::vector<int>> dfs(RigidityProblem& pr) {
        if (budget_exceeded()) {
            undecided = true;
            return std::nullopt;
        }
        const int n = graph->n();
        int var = -1, best = INT32_MAX;
        for (int i = 0; i < n; ++i) {
            int c = pr.domains[static_cast<size_t>(i)].count();
            if (c > 1 && c < best) {
                best = c;
                var = i;
            }
        }
        if (var < 0) {
            std::vector<int> targets(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) targets[static_cast<size_t>(i)] = pr.domains[static_cast<size_t>(i)].first();
            return targets;
        }
        const Bits dom = pr.domains[static_cast<size_t>(var)];
        std::vector<int> order;
        if (dom.test(var)) order.push_back(var);  // self first
        for (int t = dom.first(); t >= 0; t = dom.next(t))
            if (t != var) order.push_back(t);
        for (int t : order) {
            ++stats.nodes;
            RigidityProblem child = pr;
            Bits single(n);
            single.set(t);
            child.domains[static_cast<size_t>(var)] = single;
            if (!run_propagation(child)) continue;
            if (auto sol = dfs(child)) return sol;
            if (undecided) return std::nullopt;
        }
        return std::nullopt;
    }
};

}  // namespace

bool propagate(RigidityProblem& problem, bool pulling, SearchStats& stats) {
    Search s;
    s.graph = problem.graph;
    s.masks = CoordMasks::build(*problem.graph);
    s.limits.pulling = pulling;
    bool ok = s.run_propagation(problem);
    stats += s.stats;
    return ok;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Freezing: return "freezing";
        case Verdict::NotFreezing: return "not-freezing";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

WitnessResult find_witness(const Image& X, const Adjacency& adj, const std::vector<Point>& A,
                           const SearchLimits& limits) {
    WitnessResult res;
    const auto t0 = std::chrono::steady_clock::now();
    if (X.size() <= 1) {
        res.stats.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;  // only the identity exists
    }
    auto graph = std::make_shared<const Graph>(X, adj);
    std::vector<int> pinned;
    for (const Point& p : A) {
        auto i = X.index_of(p);
        if (!i) throw std::invalid_argument("find_witness: pinned point " + p.str() + " not in X");
        pinned.push_back(*i);
    }

    Search s;
    s.graph = graph;
    s.masks = CoordMasks::build(*graph);
    s.limits = limits;

    const int n = graph->n();
    auto shared_image = std::make_shared<const Image>(X);
    // branch on the first moved point, in canonical order
    for (int mover = 0; mover < n && !s.undecided; ++mover) {
        if (std::find(pinned.begin(), pinned.end(), mover) != pinned.end()) continue;
        RigidityProblem pr = RigidityProblem::make(graph);
        bool feasible = true;
        for (int i : pinned) feasible = feasible && pr.pin(i);
        for (int i = 0; i < mover && feasible; ++i) feasible = feasible && pr.pin(i);
        if (feasible) {
            pr.domains[static_cast<size_t>(mover)].reset(mover);
            feasible = pr.domains[static_cast<size_t>(mover)].any();
        }
        if (!feasible) continue;
        if (!s.seed_geodesics(pr)) continue;
        if (!s.run_propagation(pr)) continue;
        if (auto sol = s.dfs(pr)) {
            SelfMap f{shared_image, *sol};
            // independent soundness re-check
            if (!is_continuous(f, adj) || f.is_identity())
                throw std::logic_error("find_witness: unsound witness produced");
            for (int i : pinned)
                if (f.targets[static_cast<size_t>(i)] != i)
                    throw std::logic_error("find_witness: witness moves a pinned point");
            res.witness = std::move(f);
            break;
        }
    }
    res.undecided = s.undecided;
    res.stats = s.stats;
    res.stats.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

FreezingReport is_freezing_set(const Image& X, const Adjacency& adj, const std::vector<Point>& A,
                               const SearchLimits& limits) {
    FreezingReport rep;
    rep.candidate = A;
    std::sort(rep.candidate.begin(), rep.candidate.end());
    rep.candidate.erase(std::unique(rep.candidate.begin(), rep.candidate.end()), rep.candidate.end());
    rep.adjacency = adj;
    WitnessResult w = find_witness(X, adj, rep.candidate, limits);
    rep.stats = w.stats;
    if (w.witness) {
        rep.verdict = Verdict::NotFreezing;
        rep.witness = std::move(w.witness);
    } else {
        rep.verdict = w.undecided ? Verdict::Undecided : Verdict::Freezing;
    }
    return rep;
}

FreezingReport is_minimal_freezing_set(const Image& X, const Adjacency& adj,
                                       const std::vector<Point>& A, const SearchLimits& limits) {
    FreezingReport rep = is_freezing_set(X, adj, A, limits);
    rep.minimality_checked = true;
    if (rep.verdict != Verdict::Freezing) {
        if (rep.verdict == Verdict::NotFreezing) rep.minimal = false;
        return rep;
    }
    bool all_witnessed = true, any_undecided = false;
    for (const Point& p : rep.candidate) {
        std::vector<Point> rest;
        for (const Point& q : rep.candidate)
            if (q != p) rest.push_back(q);
        WitnessResult w = find_witness(X, adj, rest, limits);
        rep.stats += w.stats;
        FreezingReport::PointCheck pc;
        pc.removed = p;
        if (w.witness) {
            pc.verdict = Verdict::NotFreezing;
            pc.witness = std::move(w.witness);
        } else if (w.undecided) {
            pc.verdict = Verdict::Undecided;
            any_undecided = true;
        } else {
            pc.verdict = Verdict::Freezing;  // A \ {p} still freezes: A not minimal
            all_witnessed = false;
            if (!rep.removable) rep.removable = p;
        }
        rep.point_checks.push_back(std::move(pc));
    }
    if (rep.removable) {
        rep.minimal = false;
    } else if (!any_undecided && all_witnessed) {
        rep.minimal = true;
    }
    return rep;
}

std::vector<std::vector<Point>> minimum_freezing_sets(const Image& X, const Adjacency& adj,
                                                      int cap, bool override_size_guard,
                                                      const SearchLimits& limits) {
    const int n = static_cast<int>(X.size());
    if (n > 20 && !override_size_guard)
        throw std::length_error("minimum_freezing_sets: refusing #X > 20 without override");
    std::vector<std::vector<Point>> out;
    for (int k = 0; k <= std::min(cap, n); ++k) {
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<Point> A;
            for (int i : comb) A.push_back(X[static_cast<size_t>(i)]);
            WitnessResult w = find_witness(X, adj, A, limits);
            if (!w.witness && !w.undecided) out.push_back(A);
            // next combination
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
        if (!out.empty()) break;
    }
    return out;
}

namespace {

std::string points_str(const std::vector<Point>& pts) {
    std::string s = "{";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += pts[i].str();
    }
    return s + "}";
}

std::string witness_str(const SelfMap& f) {
    std::string s;
    for (const Point& p : f.moved_points()) {
        if (!s.empty()) s += ", ";
        s += p.str() + "->" + f.apply(p).str();
    }
    return s;
}

}  // namespace

std::string FreezingReport::text() const {
    std::string s;
    s += "candidate: " + points_str(candidate) + " (" + std::to_string(candidate.size()) +
         " points)\n";
    s += "adjacency: " + adjacency.str() + "\n";
    s += "verdict: " + verdict_name(verdict) + "\n";
    if (witness) s += "witness: " + witness_str(*witness) + "\n";
    if (minimality_checked) {
        if (minimal.has_value())
            s += std::string("minimal: ") + (*minimal ? "yes" : "no") + "\n";
        else
            s += "minimal: undecided\n";
        if (removable) s += "removable point: " + removable->str() + "\n";
        for (const PointCheck& pc : point_checks) {
            s += "  remove " + pc.removed.str() + ": " + verdict_name(pc.verdict);
            if (pc.witness) s += " via " + witness_str(*pc.witness);
            s += "\n";
        }
    }
    s += "nodes: " + std::to_string(stats.nodes) +
         " propagations: " + std::to_string(stats.propagations) + "\n";
    return s;
}

}  // namespace freeze
