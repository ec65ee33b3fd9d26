#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "freeze/candidates.hpp"
#include "freeze/convexity.hpp"
#include "freeze/io.hpp"
#include "freeze/openquestion.hpp"
#include "freeze/render.hpp"
#include "freeze/scenarios.hpp"
#include "freeze/solver.hpp"

using namespace freeze;

namespace {

// exit codes: 0 pass, 1 verdict mismatch, 2 undecided, 3 input error
constexpr int kPass = 0, kMismatch = 1, kUndecided = 2, kInputError = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ImageDocument load(const std::string& path) { return parse_image(slurp(path)); }

std::string points_line(const std::vector<Point>& pts) {
    std::string s;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += " ";
        s += pts[i].str();
    }
    return s;
}

Adjacency parse_adj(const std::string& s) {
    if (s == "c1") return c1(2);
    if (s == "c2") return c2(2);
    throw std::runtime_error("adjacency must be c1 or c2");
}

int cmd_parse(const std::string& path) {
    ImageDocument doc = load(path);
    std::cout << "points: " << doc.image.size() << "\n";
    std::cout << emit_grid(doc);
    return kPass;
}

int cmd_bd(const std::string& path) {
    ImageDocument doc = load(path);
    std::cout << "Bd: " << points_line(boundary(doc.image)) << "\n";
    std::cout << "Int: " << points_line(interior(doc.image)) << "\n";
    return kPass;
}

int cmd_curves(const std::string& path, const std::string& mode) {
    ImageDocument doc = load(path);
    CurveSearchMode m = mode == "minimal" ? CurveSearchMode::Minimal
                      : mode == "all"     ? CurveSearchMode::All
                                          : CurveSearchMode::Canonical;
    std::vector<DiskDecomposition> decs = find_bounding_curves(doc.image, m);
    if (decs.empty()) {
        std::cout << "not a disk: no bounding curve exists\n";
        return kMismatch;
    }
    for (const auto& dec : decs) {
        std::cout << "curve (" << dec.curve.points.size() << " points"
                  << (dec.heuristic ? ", heuristic" : "") << "):";
        for (const Point& p : dec.curve.points) std::cout << " " << p.str();
        std::cout << "\n";
    }
    return kPass;
}

int cmd_convex(const std::string& path) {
    ImageDocument doc = load(path);
    ConvexityCertificate cert = is_digitally_convex(doc.image);
    if (cert.convex) {
        const char* clause = cert.clause == ConvexityCertificate::Clause::SinglePoint ? "single point"
                             : cert.clause == ConvexityCertificate::Clause::LineSegment
                                 ? "digital line segment"
                                 : "disk with hull-traversing bounding curve";
        std::cout << "convex: yes (" << clause << ")\n";
        if (cert.witness) std::cout << "witness curve: " << points_line(cert.witness->points) << "\n";
        return kPass;
    }
    std::cout << "convex: no (" << cert.failing << ")\n";
    return kMismatch;
}

int cmd_thick(const std::string& path) {
    ImageDocument doc = load(path);
    std::vector<DiskDecomposition> decs = find_bounding_curves(doc.image, CurveSearchMode::Minimal);
    if (decs.empty()) {
        std::cout << "not a disk: thickness undefined\n";
        return kInputError;
    }
    const DiskDecomposition& dec = decs.front();
    ThicknessReport rep = is_thick(dec);
    ThicknessReport repBd = is_thick_bd(dec);
    std::cout << "thick (chosen-curve reading): " << (rep.thick ? "yes" : "no") << "\n";
    for (const auto& v : rep.violations) std::cout << "  violation: " << v.str() << "\n";
    std::cout << "thick (boundary reading): " << (repBd.thick ? "yes" : "no") << "\n";
    for (const auto& v : repBd.violations) std::cout << "  violation: " << v.str() << "\n";
    if (rep.thick != repBd.thick)
        std::cout << "note: the two readings of the thickness definition disagree here\n";
    return rep.thick ? kPass : kMismatch;
}

int cmd_candidate(const std::string& path, const std::string& adjs) {
    ImageDocument doc = load(path);
    Adjacency adj = parse_adj(adjs);
    std::vector<DiskDecomposition> decs = find_bounding_curves(doc.image, CurveSearchMode::Minimal);
    if (decs.empty()) {
        std::cout << "not a disk: no curve-based candidate\n";
        return kInputError;
    }
    CandidateSet cs = adj.order == 1 ? c1_candidate(decs.front()) : c2_candidate(decs.front());
    std::cout << construction_name(cs.construction) << " (" << cs.points.size()
              << " points): " << points_line(cs.points) << "\n";
    std::cout << "from: " << cs.provenance << "\n";
    return kPass;
}

int cmd_verify(const std::string& path, const std::string& set_path, const std::string& adjs,
               bool minimal, const SearchLimits& limits) {
    ImageDocument doc = load(path);
    ImageDocument set_doc = load(set_path);
    Adjacency adj = parse_adj(adjs);
    std::vector<Point> A(set_doc.image.begin(), set_doc.image.end());
    FreezingReport rep = minimal ? is_minimal_freezing_set(doc.image, adj, A, limits)
                                 : is_freezing_set(doc.image, adj, A, limits);
    std::cout << rep.text();
    std::cerr << "wall: " << rep.stats.wall_s << " s\n";
    bool undecided = rep.verdict == Verdict::Undecided;
    for (const auto& pc : rep.point_checks) undecided = undecided || pc.verdict == Verdict::Undecided;
    if (undecided) return kUndecided;
    bool pass = rep.verdict == Verdict::Freezing && (!minimal || rep.minimal.value_or(false));
    return pass ? kPass : kMismatch;
}

int cmd_scenario(std::vector<std::string> names, bool all, int threads,
                 const SearchLimits& limits) {
    if (all) names = scenario_names();
    if (names.empty()) throw std::runtime_error("no scenario given (try --all)");
    for (const std::string& n : names) {
        auto known = scenario_names();
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw std::runtime_error("unknown scenario '" + n + "'");
    }
    std::sort(names.begin(), names.end());
    std::vector<ScenarioResult> results(names.size());
    std::mutex mu;
    size_t next = 0;
    auto worker = [&] {
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lk(mu);
                if (next >= names.size()) return;
                i = next++;
            }
            results[i] = run_scenario(names[i], limits);
        }
    };
    std::vector<std::thread> pool;
    int k = std::max(1, threads);
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool any_fail = false, any_undecided = false;
    for (const ScenarioResult& r : results) {  // already in name order
        std::cout << "=== " << r.name << ": "
                  << (r.passed ? "pass" : (r.undecided ? "undecided" : "FAIL")) << "\n";
        std::cout << r.report;
        any_fail = any_fail || !r.passed;
        any_undecided = any_undecided || r.undecided;
    }
    if (any_undecided) return kUndecided;
    return any_fail ? kMismatch : kPass;
}

int cmd_open_question(int w, int h) {
    OpenQuestionReport rep = search_open_question(w, h, &std::cerr);
    std::cout << rep.text();
    return kPass;
}

int cmd_render(const std::string& path, const std::vector<std::string>& overlays,
               const std::string& format, const std::string& set_path, const std::string& adjs,
               const SearchLimits& limits) {
    ImageDocument doc = load(path);
    Overlays ov;
    std::vector<DiskDecomposition> decs;
    auto need_curve = [&]() -> const DiskDecomposition& {
        if (decs.empty()) decs = find_bounding_curves(doc.image, CurveSearchMode::Minimal);
        if (decs.empty()) throw std::runtime_error("overlay needs a disk, but the image is not one");
        return decs.front();
    };
    for (const std::string& o : overlays) {
        if (o == "boundary") {
            ov.boundary = boundary(doc.image);
        } else if (o == "curve") {
            ov.curve = need_curve().curve.points;
        } else if (o == "candidate-c1") {
            ov.candidate = c1_candidate(need_curve()).points;
            ov.candidate_glyph = 'a';
        } else if (o == "candidate-c2") {
            ov.candidate = c2_candidate(need_curve()).points;
            ov.candidate_glyph = 'b';
        } else if (o == "witness") {
            if (set_path.empty() || adjs.empty())
                throw std::runtime_error("witness overlay needs --set and --adjacency");
            ImageDocument set_doc = load(set_path);
            std::vector<Point> A(set_doc.image.begin(), set_doc.image.end());
            WitnessResult w = find_witness(doc.image, parse_adj(adjs), A, limits);
            if (!w.witness) throw std::runtime_error("no witness: the set freezes (or search was capped)");
            ov.witness = w.witness;
        } else {
            throw std::runtime_error("unknown overlay '" + o + "'");
        }
    }
    std::cout << (format == "svg" ? render_svg(doc.image, ov) : render_ascii(doc.image, ov));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital-image freezing-set workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    SearchLimits limits;
    int threads = 1;
    double time_cap = 0;
    bool no_pulling = false;
    app.add_option("--node-cap", limits.node_cap, "search node budget");
    app.add_option("--time-cap", time_cap, "search time budget, seconds");
    app.add_option("--threads", threads, "worker threads for scenario batches");
    app.add_flag("--no-pulling", no_pulling, "disable the pulling propagation rule");

    std::string image_path, set_path, adjs, mode = "canonical", format = "ascii";
    bool minimal = false, all_scenarios = false;
    std::vector<std::string> names, overlays;
    int max_w = 5, max_h = 5;

    auto* parse_cmd = app.add_subcommand("parse", "parse an image file and re-emit it");
    parse_cmd->add_option("file", image_path)->required();
    auto* bd_cmd = app.add_subcommand("bd", "boundary and interior of the image");
    bd_cmd->add_option("file", image_path)->required();
    auto* curves_cmd = app.add_subcommand("curves", "bounding curves of the image");
    curves_cmd->add_option("file", image_path)->required();
    curves_cmd->add_option("--mode", mode)->check(CLI::IsMember({"canonical", "minimal", "all"}));
    auto* convex_cmd = app.add_subcommand("convex", "digital convexity check");
    convex_cmd->add_option("file", image_path)->required();
    auto* thick_cmd = app.add_subcommand("thick", "thickness check (both readings)");
    thick_cmd->add_option("file", image_path)->required();
    auto* cand_cmd = app.add_subcommand("candidate", "construct the candidate freezing set");
    cand_cmd->add_option("file", image_path)->required();
    cand_cmd->add_option("--adjacency", adjs)->required()->check(CLI::IsMember({"c1", "c2"}));
    auto* verify_cmd = app.add_subcommand("verify", "verify a freezing set");
    verify_cmd->add_option("file", image_path)->required();
    verify_cmd->add_option("--set", set_path)->required();
    verify_cmd->add_option("--adjacency", adjs)->required()->check(CLI::IsMember({"c1", "c2"}));
    verify_cmd->add_flag("--minimal", minimal, "also check minimality");
    auto* scen_cmd = app.add_subcommand("scenario", "run built-in scenarios");
    scen_cmd->add_option("name", names);
    scen_cmd->add_flag("--all", all_scenarios);
    scen_cmd->add_flag("--list", [](int64_t) {
        for (const std::string& n : scenario_names()) std::cout << n << "\n";
        std::exit(0);
    });
    auto* oq_cmd = app.add_subcommand("open-question", "search for convex-but-not-thick disks");
    oq_cmd->add_option("--max-w", max_w);
    oq_cmd->add_option("--max-h", max_h);
    auto* render_cmd = app.add_subcommand("render", "draw the image with overlays");
    render_cmd->add_option("file", image_path)->required();
    render_cmd->add_option("--overlay", overlays)->delimiter(',');
    render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
    render_cmd->add_option("--set", set_path);
    render_cmd->add_option("--adjacency", adjs);

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);
    limits.time_cap_s = time_cap;
    limits.pulling = !no_pulling;

    try {
        if (*parse_cmd) return cmd_parse(image_path);
        if (*bd_cmd) return cmd_bd(image_path);
        if (*curves_cmd) return cmd_curves(image_path, mode);
        if (*convex_cmd) return cmd_convex(image_path);
        if (*thick_cmd) return cmd_thick(image_path);
        if (*cand_cmd) return cmd_candidate(image_path, adjs);
        if (*verify_cmd) return cmd_verify(image_path, set_path, adjs, minimal, limits);
        if (*scen_cmd) return cmd_scenario(names, all_scenarios, threads, limits);
        if (*oq_cmd) return cmd_open_question(max_w, max_h);
        if (*render_cmd) return cmd_render(image_path, overlays, format, set_path, adjs, limits);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
