// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// pass. argv[1] (optional) is the path to the workbench binary used for the
// determinism criterion; it defaults to ./workbench.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freeze/candidates.hpp"
#include "freeze/disk.hpp"
#include "freeze/openquestion.hpp"
#include "freeze/scenarios.hpp"
#include "freeze/solver.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace freeze;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, double secs, const std::string& what) {
    std::printf("criterion %d: %s (%.1fs) %s\n", criterion, ok ? "pass" : "FAIL", secs,
                what.c_str());
    if (!ok) ++failures;
}

struct ScenarioOutcome {
    bool ok = false;
    double secs = 0;
    std::string detail;
};

ScenarioOutcome timed_scenario(const std::string& name, double budget_s) {
    ScenarioOutcome o;
    auto t0 = Clock::now();
    ScenarioResult r = run_scenario(name, {});
    o.secs = seconds_since(t0);
    o.ok = r.passed && !r.undecided && o.secs < budget_s;
    o.detail = name + (r.passed ? "" : " [scenario FAILED]") +
               (r.undecided ? " [undecided]" : "") +
               (o.secs < budget_s ? "" : " [over budget]");
    if (!r.passed) std::cerr << r.report;
    return o;
}

// ---- criterion 6: randomized engine-vs-oracle property suite ----------

bool lemma_holds(const Image& X, const std::vector<int>& t, int order) {
    const int n = static_cast<int>(X.size());
    for (int q = 0; q < n; ++q)
        for (int qp = 0; qp < n; ++qp) {
            if (q == qp || !oracle::adj_or_eq(X[static_cast<size_t>(q)],
                                              X[static_cast<size_t>(qp)], order))
                continue;
            const Point& Q = X[static_cast<size_t>(q)];
            const Point& Qp = X[static_cast<size_t>(qp)];
            const Point& FQ = X[static_cast<size_t>(t[static_cast<size_t>(q)])];
            const Point& FQp = X[static_cast<size_t>(t[static_cast<size_t>(qp)])];
            for (int i = 0; i < X.dim(); ++i) {
                if (FQ[i] > Q[i] && Q[i] > Qp[i] && !(FQp[i] > Qp[i])) return false;
                if (FQ[i] < Q[i] && Q[i] < Qp[i] && !(FQp[i] < Qp[i])) return false;
            }
        }
    return true;
}

bool property_suite(std::string& detail) {
    std::mt19937 rng(20260826);
    const int kImages = 120;
    long long maps_checked = 0;
    for (int it = 0; it < kImages; ++it) {
        Image X = testutil::random_connected_image(rng, 9);
        std::vector<Point> bd = boundary(X);

        // a few candidate sets, engine verdict vs brute force
        std::vector<std::vector<Point>> candidates = {{}, {X[0]}, bd};
        {
            std::vector<Point> rnd;
            for (const Point& p : X)
                if (rng() & 1u) rnd.push_back(p);
            candidates.push_back(rnd);
        }

        for (int order = 1; order <= 2; ++order) {
            Adjacency adj(2, order);
            for (const auto& A : candidates) {
                WitnessResult w = find_witness(X, adj, A);
                if (w.undecided) {
                    detail = "engine undecided on a 9-point image";
                    return false;
                }
                if (!w.witness.has_value() != oracle::is_freezing(X, order, A)) {
                    detail = "engine and oracle disagree on a candidate set";
                    return false;
                }
            }
            // Bd(X) always freezes
            if (find_witness(X, adj, bd).witness.has_value()) {
                detail = "Bd(X) failed to freeze";
                return false;
            }

            // unique geodesics, precomputed per pair
            const int n = static_cast<int>(X.size());
            std::map<std::pair<int, int>, std::vector<int>> geo;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    auto p = unique_shortest_path(X, adj, X[static_cast<size_t>(a)],
                                                  X[static_cast<size_t>(b)]);
                    if (!p || p->points.size() <= 2) continue;
                    std::vector<int> idx;
                    for (const Point& pt : p->points) idx.push_back(*X.index_of(pt));
                    geo[{a, b}] = idx;
                }

            bool ok = true;
            oracle::for_each_continuous_map(X, order, [&](const std::vector<int>& t) {
                ++maps_checked;
                if (!lemma_holds(X, t, order)) {
                    detail = "pulling lemma violated by a continuous map";
                    ok = false;
                    return false;
                }
                for (const auto& [ab, path] : geo) {
                    if (t[static_cast<size_t>(ab.first)] != ab.first ||
                        t[static_cast<size_t>(ab.second)] != ab.second)
                        continue;
                    for (int i : path)
                        if (t[static_cast<size_t>(i)] != i) {
                            detail = "unique-geodesic fixing property violated";
                            ok = false;
                            return false;
                        }
                }
                return true;
            });
            if (!ok) return false;
        }

        // every validated bounding curve of X freezes, both adjacencies
        for (const DiskDecomposition& dec : find_bounding_curves(X, CurveSearchMode::Canonical)) {
            for (int order = 1; order <= 2; ++order) {
                Adjacency adj(2, order);
                if (find_witness(X, adj, dec.curve.points).witness.has_value()) {
                    detail = "a validated bounding curve failed to freeze";
                    return false;
                }
                if (!oracle::is_freezing(X, order, dec.curve.points)) {
                    detail = "oracle refutes bounding-curve freezing";
                    return false;
                }
            }
        }
    }
    std::ostringstream os;
    os << kImages << " random images, " << maps_checked << " continuous maps checked";
    detail = os.str();
    return true;
}

// ---- criterion 8: byte-level determinism across thread counts ---------

bool capture(const std::string& cmd, std::string& out) {
    out.clear();
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return false;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    return pclose(p) == 0;
}

bool determinism(const std::string& workbench, std::string& detail) {
    std::string a, b;
    if (!capture(workbench + " scenario --all --threads 1", a) ||
        !capture(workbench + " scenario --all --threads 8", b)) {
        detail = "workbench invocation failed (" + workbench + ")";
        return false;
    }
    if (a != b) {
        detail = "scenario --all output differs between --threads 1 and --threads 8";
        return false;
    }
    std::string c, d;
    if (!capture(workbench + " open-question --max-w 4 --max-h 4 --threads 1", c) ||
        !capture(workbench + " open-question --max-w 4 --max-h 4 --threads 8", d)) {
        detail = "open-question invocation failed";
        return false;
    }
    if (c != d) {
        detail = "open-question output differs between thread counts";
        return false;
    }
    detail = "scenario --all and open-question 4x4 byte-identical across thread counts";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string workbench = argc > 1 ? argv[1] : "./workbench";

    {
        ScenarioOutcome o = timed_scenario("example-3.3", 60);
        report(1, o.ok, o.secs, o.detail + " (minimal freezing, c1)");
    }
    {
        ScenarioOutcome o = timed_scenario("example-4.1", 60);
        report(2, o.ok, o.secs, o.detail + " (minimal freezing, c2, removal maps)");
    }
    {
        ScenarioOutcome boxes = timed_scenario("thm-3.1-boxes", 10);
        ScenarioOutcome cube = timed_scenario("thm-3.1-cube", 60);
        report(3, boxes.ok && cube.ok, boxes.secs + cube.secs,
               boxes.detail + " + " + cube.detail + " (box corners)");
    }
    {
        ScenarioOutcome o = timed_scenario("fig-5-convex-disk", 60);
        report(4, o.ok, o.secs, o.detail + " (both candidates minimal)");
    }
    {
        ScenarioOutcome d = timed_scenario("fig-1-diamond", 60);
        ScenarioOutcome c = timed_scenario("fig-2-curves", 60);
        ScenarioOutcome r = timed_scenario("fig-3-not-a-disk", 60);
        report(5, d.ok && c.ok && r.ok, d.secs + c.secs + r.secs,
               d.detail + " + " + c.detail + " + " + r.detail);
    }
    {
        auto t0 = Clock::now();
        std::string detail;
        bool ok = property_suite(detail);
        double secs = seconds_since(t0);
        report(6, ok && secs < 300, secs, detail);
    }
    {
        auto t0 = Clock::now();
        OpenQuestionReport r = search_open_question(5, 5);
        double secs = seconds_since(t0);
        std::ostringstream os;
        os << "5x5 exhaustive: " << r.convex_disks << " convex disks, "
           << r.counterexamples_chosen.size() << " non-thick (chosen reading), "
           << r.counterexamples_bd.size() << " non-thick (Bd reading)";
        report(7, secs < 600, secs, os.str());
    }
    {
        auto t0 = Clock::now();
        std::string detail;
        bool ok = determinism(workbench, detail);
        report(8, ok, seconds_since(t0), detail);
    }

    return failures == 0 ? 0 : 1;
}
