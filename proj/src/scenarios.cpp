#include "freeze/scenarios.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "freeze/candidates.hpp"
#include "freeze/convexity.hpp"

namespace freeze {

namespace {

struct Ctx {
    std::string out;
    bool ok = true;
    bool undecided = false;

    void check(bool cond, const std::string& what) {
        out += (cond ? "ok: " : "FAIL: ") + what + "\n";
        ok = ok && cond;
    }
    void note(const std::string& s) { out += s + "\n"; }
};

Image rect_minus(int x1, int y1, const std::vector<Point>& excluded) {
    std::vector<Point> pts;
    for (int x = 0; x <= x1; ++x)
        for (int y = 0; y <= y1; ++y) {
            Point p(x, y);
            if (std::find(excluded.begin(), excluded.end(), p) == excluded.end())
                pts.push_back(p);
        }
    return Image(std::move(pts));
}

std::string points_str(const std::vector<Point>& pts) {
    std::string s = "{";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ",";
        s += pts[i].str();
    }
    return s + "}";
}

void expect_minimal_freezing(Ctx& c, const Image& D, const Adjacency& adj,
                             const std::vector<Point>& A, const SearchLimits& limits,
                             const std::string& label) {
    FreezingReport rep = is_minimal_freezing_set(D, adj, A, limits);
    bool und = rep.verdict == Verdict::Undecided;
    for (const auto& pc : rep.point_checks) und = und || pc.verdict == Verdict::Undecided;
    c.undecided = c.undecided || und;
    c.check(rep.verdict == Verdict::Freezing, label + " freezes under " + adj.str());
    c.check(rep.minimal.value_or(false), label + " is minimal under " + adj.str());
    c.out += rep.text();
}

// the map equal to the identity except at p, which goes to q
SelfMap one_point_map(const std::shared_ptr<const Image>& X, const Point& p, const Point& q) {
    SelfMap f = identity_map(X);
    auto ip = X->index_of(p), iq = X->index_of(q);
    if (!ip || !iq) throw std::invalid_argument("one_point_map: point outside image");
    f.targets[static_cast<size_t>(*ip)] = *iq;
    return f;
}

void check_removal_map(Ctx& c, const std::shared_ptr<const Image>& X, const Adjacency& adj,
                       const Point& b, const Point& target) {
    SelfMap f = one_point_map(X, b, target);
    bool cont = is_continuous(f, adj);
    bool fix = f.moved_points() == std::vector<Point>{b};
    c.check(cont && fix, "map moving only " + b.str() + " to " + target.str() + " is " +
                             adj.str() + "-continuous with Fix = D-{" + b.str() + "}");
}

bool c1_simple(const CurveCycle& cyc) {
    const size_t m = cyc.points.size();
    for (size_t i = 0; i < m; ++i) {
        Point d = cyc.at(i + 1) - cyc.at(i);
        if (std::abs(d[0]) + std::abs(d[1]) != 1) return false;
    }
    return true;
}

// ---- scenarios ------------------------------------------------------

ScenarioResult fig_1_diamond(const SearchLimits&) {
    Ctx c;
    std::vector<Point> s = {Point(1, 0), Point(-1, 0), Point(0, 1), Point(0, -1)};
    Image S(s);
    std::vector<Point> dpts = s;
    dpts.push_back(Point(0, 0));
    Image D(dpts);
    c.check(is_connected(S, c2(2)), "S is c2-connected");
    c.check(!is_connected(S, c1(2)), "S is not c1-connected");
    auto cyc = cycle_through(s, c2(2));
    c.check(cyc && cyc->points.size() == 4, "S carries a 4-point c2-closed curve");
    if (cyc) {
        DiskValidation v = validate_bounding_curve(D, *cyc);
        c.check(v.ok(), "S bounds the diamond disk");
    }
    return {"fig-1-diamond", c.ok, c.undecided, c.out};
}

ScenarioResult fig_2_curves(const SearchLimits&) {
    Ctx c;
    Image D = rect_minus(3, 3, {Point(3, 3)});
    std::vector<DiskDecomposition> all = find_bounding_curves(D, CurveSearchMode::All);
    c.check(!all.empty(), "the image is a disk");
    size_t minsz = all.empty() ? 0 : all.front().curve.points.size();
    c.check(minsz == 11, "minimal bounding curve has 11 points (exhaustive)");
    std::vector<Point> bd = boundary(D);
    if (!all.empty()) {
        std::vector<Point> mc = all.front().curve.points;
        std::sort(mc.begin(), mc.end());
        c.check(mc == bd, "the minimal curve is exactly Bd(D)");
    }
    std::vector<Point> expect = bd;
    expect.push_back(Point(2, 2));
    std::sort(expect.begin(), expect.end());
    const DiskDecomposition* tw = nullptr;
    for (const auto& dec : all) {
        std::vector<Point> tc = dec.curve.points;
        std::sort(tc.begin(), tc.end());
        if (tc == expect) tw = &dec;
    }
    c.check(tw != nullptr, "Bd(D) plus (2,2) is a 12-point bounding curve");
    if (tw) {
        auto c1cyc = cycle_through(expect, c1(2));
        c.check(c1cyc.has_value() && c1_simple(*c1cyc), "that curve is c1-simple");
        CandidateSet from12 = c1_candidate(*tw);
        bool has22 = std::find(from12.points.begin(), from12.points.end(), Point(2, 2)) !=
                     from12.points.end();
        c.check(has22, "the non-minimal curve would (misleadingly) suggest (2,2)");
    }
    std::vector<DiskDecomposition> mins = find_bounding_curves(D, CurveSearchMode::Minimal);
    if (!mins.empty()) {
        CandidateSet fromMin = c1_candidate(mins.front());
        bool has22 = std::find(fromMin.points.begin(), fromMin.points.end(), Point(2, 2)) !=
                     fromMin.points.end();
        c.check(!has22, "the minimal curve does not suggest (2,2)");
    }
    return {"fig-2-curves", c.ok, c.undecided, c.out};
}

ScenarioResult fig_3_not_a_disk(const SearchLimits&) {
    Ctx c;
    Image D = rect_minus(6, 2, {Point(3, 2)});
    std::vector<Point> inner = {Point(1, 1), Point(2, 1), Point(4, 1), Point(5, 1)};
    std::vector<Point> spts;
    for (const Point& p : D)
        if (std::find(inner.begin(), inner.end(), p) == inner.end()) spts.push_back(p);
    c.check(spts.size() == 16, "candidate curve has 16 points");
    auto cyc = cycle_through(spts, c2(2));
    c.check(cyc.has_value(), "the 16 points do form a c2-closed curve");
    if (cyc) {
        DiskValidation v = validate_bounding_curve(D, *cyc);
        c.check(!v.ok(), "rejected as a bounding curve of the image");
        std::vector<std::vector<Point>> expect = {{Point(1, 1), Point(2, 1)},
                                                  {Point(4, 1), Point(5, 1)}};
        c.check(v.bounded_components == expect,
                "complement has the two bounded components {(1,1),(2,1)} and {(4,1),(5,1)}");
        c.note("reason: " + v.reason);
    }
    return {"fig-3-not-a-disk", c.ok, c.undecided, c.out};
}

ScenarioResult example_3_3(const SearchLimits& limits) {
    Ctx c;
    auto D = std::make_shared<const Image>(rect_minus(3, 6, {Point(3, 3)}));
    c.check(D->size() == 27, "D has 27 points");
    std::vector<Point> A = {Point(0, 0), Point(3, 0), Point(3, 2),
                            Point(3, 4), Point(3, 6), Point(0, 6)};
    expect_minimal_freezing(c, *D, c1(2), A, limits, "A " + points_str(A));
    // the explicit one-point maps certifying each removal
    check_removal_map(c, D, c1(2), Point(0, 0), Point(1, 1));
    check_removal_map(c, D, c1(2), Point(3, 0), Point(2, 1));
    check_removal_map(c, D, c1(2), Point(3, 2), Point(2, 1));
    check_removal_map(c, D, c1(2), Point(3, 4), Point(2, 5));
    check_removal_map(c, D, c1(2), Point(3, 6), Point(2, 5));
    check_removal_map(c, D, c1(2), Point(0, 6), Point(1, 5));
    return {"example-3.3", c.ok, c.undecided, c.out};
}

ScenarioResult example_4_1(const SearchLimits& limits) {
    Ctx c;
    auto D = std::make_shared<const Image>(rect_minus(3, 6, {Point(3, 3)}));
    std::vector<Point> B;
    for (const Point& p : boundary(*D))
        if (p != Point(2, 3)) B.push_back(p);
    c.check(B.size() == 17, "B = Bd(D) minus (2,3) has 17 points");
    expect_minimal_freezing(c, *D, c2(2), B, limits, "B");
    // the explicit one-point maps certifying each removal
    std::map<Point, Point> table;
    table[Point(0, 0)] = Point(1, 1);
    for (int i : {1, 2}) table[Point(i, 0)] = Point(i, 1);
    for (int j = 1; j <= 5; ++j) table[Point(0, j)] = Point(1, j);
    table[Point(0, 6)] = Point(1, 5);
    for (int i : {1, 2}) table[Point(i, 6)] = Point(i, 5);
    table[Point(3, 6)] = Point(2, 5);
    for (int j : {1, 2, 4, 5}) table[Point(3, j)] = Point(2, j);
    table[Point(3, 0)] = Point(2, 1);
    c.check(table.size() == B.size(), "one removal map per point of B");
    for (const auto& [b, t] : table) check_removal_map(c, D, c2(2), b, t);
    return {"example-4.1", c.ok, c.undecided, c.out};
}

ScenarioResult boxes(const SearchLimits& limits) {
    Ctx c;
    for (int m1 = 1; m1 <= 5; ++m1)
        for (int m2 = 1; m2 <= 5; ++m2) {
            Image D = rect_minus(m1, m2, {});
            CandidateSet corners = corner_set(bounding_box(D.points()));
            expect_minimal_freezing(c, D, c1(2), corners.points, limits,
                                    "corners of [0," + std::to_string(m1) + "]x[0," +
                                        std::to_string(m2) + "]");
        }
    c.note("25 boxes checked");
    return {"thm-3.1-boxes", c.ok, c.undecided, c.out};
}

ScenarioResult cube(const SearchLimits& limits) {
    Ctx c;
    std::vector<Point> pts;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) pts.emplace_back(x, y, z);
    Image D(pts);
    CandidateSet corners = corner_set(bounding_box(D.points()));
    c.check(corners.points.size() == 8, "the cube has 8 corners");
    FreezingReport rep = is_freezing_set(D, c1(3), corners.points, limits);
    c.undecided = c.undecided || rep.verdict == Verdict::Undecided;
    c.check(rep.verdict == Verdict::Freezing, "corners of [0,2]^3 freeze under c1");
    c.note("minimality deliberately not asserted in dimension 3");
    c.out += rep.text();
    return {"thm-3.1-cube", c.ok, c.undecided, c.out};
}

ScenarioResult fig_5(const SearchLimits& limits) {
    Ctx c;
    Image D = rect_minus(4, 4, {Point(0, 3), Point(0, 4), Point(1, 4)});
    c.check(D.size() == 22, "D has 22 points");
    ConvexityCertificate conv = is_digitally_convex(D);
    c.check(conv.convex, "D is digitally convex");
    std::vector<DiskDecomposition> curves = find_bounding_curves(D, CurveSearchMode::Minimal);
    c.check(!curves.empty(), "D is a disk");
    if (curves.empty()) return {"fig-5-convex-disk", c.ok, c.undecided, c.out};
    const DiskDecomposition& dec = curves.front();
    ThicknessReport th = is_thick(dec);
    c.check(th.thick, "D is thick");

    CandidateSet A = c1_candidate(dec);
    std::vector<Point> expectA = {Point(0, 0), Point(0, 2), Point(1, 3),
                                  Point(2, 4), Point(4, 0), Point(4, 4)};
    c.check(A.points == expectA, "c1 candidate is the 6 points " + points_str(expectA));
    expect_minimal_freezing(c, D, c1(2), A.points, limits, "the c1 candidate");

    CandidateSet B = c2_candidate(dec);
    bool no13 = std::find(B.points.begin(), B.points.end(), Point(1, 3)) == B.points.end();
    std::vector<Point> curve_sorted = dec.curve.points;
    std::sort(curve_sorted.begin(), curve_sorted.end());
    std::vector<Point> expectB;
    for (const Point& p : curve_sorted)
        if (p != Point(1, 3)) expectB.push_back(p);
    c.check(no13 && B.points == expectB, "c2 candidate is the whole curve except (1,3)");
    expect_minimal_freezing(c, D, c2(2), B.points, limits, "the c2 candidate");
    return {"fig-5-convex-disk", c.ok, c.undecided, c.out};
}

using Runner = ScenarioResult (*)(const SearchLimits&);

const std::vector<std::pair<std::string, Runner>>& registry() {
    static const std::vector<std::pair<std::string, Runner>> r = {
        {"example-3.3", example_3_3},
        {"example-4.1", example_4_1},
        {"fig-1-diamond", fig_1_diamond},
        {"fig-2-curves", fig_2_curves},
        {"fig-3-not-a-disk", fig_3_not_a_disk},
        {"fig-5-convex-disk", fig_5},
        {"thm-3.1-boxes", boxes},
        {"thm-3.1-cube", cube},
    };
    return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& [n, _] : registry()) names.push_back(n);
    return names;
}

ScenarioResult run_scenario(const std::string& name, const SearchLimits& limits) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(limits);
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace freeze
