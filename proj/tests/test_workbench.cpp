#include <doctest.h>

#include <algorithm>
#include <memory>
#include <sstream>

#include "freeze/disk.hpp"
#include "freeze/io.hpp"
#include "freeze/openquestion.hpp"
#include "freeze/render.hpp"
#include "freeze/scenarios.hpp"
#include "helpers.hpp"

using namespace freeze;
using testutil::rect_minus;

TEST_CASE("grid parsing") {
    // 4 columns x 7 rows with the top-right cell missing: 27 points
    std::string grid =
        "####\n"
        "####\n"
        "####\n"
        "###.\n"
        "####\n"
        "####\n"
        "####\n";
    ImageDocument doc = parse_image(grid);
    CHECK(doc.image == rect_minus(3, 6, {Point(3, 3)}));

    ImageDocument one = parse_image("#\n");
    CHECK(one.image.size() == 1);
    CHECK(one.image[0] == Point(0, 0));
}

TEST_CASE("grid parse errors carry line and column") {
    CHECK(parse_image("").image.empty());
    CHECK(parse_image("...\n...\n").image.empty());
    try {
        parse_image("##\n#x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_image("###\n##\n"), ParseError);  // ragged rows
}

TEST_CASE("origin header offsets the grid") {
    ImageDocument doc = parse_image("@origin 2 -1\n##\n##\n");
    std::vector<Point> expect = {Point(2, -1), Point(2, 0), Point(3, -1), Point(3, 0)};
    CHECK(doc.image.points() == expect);
    CHECK_THROWS_AS(parse_image("@origin 2\n##\n"), ParseError);
    CHECK_THROWS_AS(parse_image("##\n@origin 0 0\n##\n"), ParseError);
}

TEST_CASE("json parsing") {
    std::string text = R"({"name":"pair","adjacency":"c2",
                           "points":[[0,0],[1,1]]})";
    ImageDocument doc = parse_image(text);
    CHECK(doc.name == "pair");
    CHECK(doc.image.size() == 2);
    REQUIRE(doc.adjacency.has_value());
    CHECK(doc.adjacency->str() == "c2");
    CHECK(!doc.curve.has_value());
    CHECK_THROWS_AS(parse_image(R"({"points":[[0,0]],"curve":null})"), ParseError);

    CHECK_THROWS_AS(parse_image(R"({"points":[[0,0],[0,0]]})"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_image(R"({"points":[[0,0],)"), ParseError);         // malformed
    CHECK_THROWS_AS(parse_image(R"({"points":[[0,0]],"adjacency":"c9"})"), ParseError);
}

TEST_CASE("round trips") {
    Image D = rect_minus(3, 6, {Point(3, 3)});
    ImageDocument doc{"d", D, c1(2), std::nullopt};
    CHECK(parse_image(emit_grid(doc)).image == D);
    ImageDocument back = parse_image(emit_json(doc));
    CHECK(back.image == D);
    CHECK(back.name == "d");
    REQUIRE(back.adjacency.has_value());
    CHECK(back.adjacency->str() == "c1");

    // negative coordinates force an @origin header
    ImageDocument neg{"n", testutil::diamond_at(Point(-1, -1)), std::nullopt, std::nullopt};
    std::string g = emit_grid(neg);
    CHECK(g.find("@origin") != std::string::npos);
    CHECK(parse_image(g).image == neg.image);
}

TEST_CASE("ascii rendering glyph precedence and witness arrows") {
    auto X = std::make_shared<const Image>(rect_minus(2, 1));
    Overlays ov;
    ov.boundary = boundary(*X);
    ov.candidate = {Point(0, 0), Point(2, 1)};
    ov.candidate_glyph = 'a';
    SelfMap f = identity_map(X);
    f.targets[static_cast<size_t>(*X->index_of(Point(1, 1)))] = *X->index_of(Point(1, 0));
    ov.witness = f;

    std::string out = render_ascii(*X, ov);
    CHECK(std::count(out.begin(), out.end(), 'a') >= 2);  // two glyphs (+legend)
    CHECK(out.find("ooa") != std::string::npos);          // candidate beats boundary
    CHECK(out.find("arrow: (1,1) -> (1,0)") != std::string::npos);
    CHECK(out.find("legend:") != std::string::npos);
    CHECK(render_ascii(*X, ov) == out);  // deterministic
}

TEST_CASE("overlay points outside the image are rejected") {
    Image X = rect_minus(1, 1);
    Overlays ov;
    ov.candidate = {Point(5, 5)};
    CHECK_THROWS_AS(render_ascii(X, ov), std::invalid_argument);
    CHECK_THROWS_AS(render_svg(X, ov), std::invalid_argument);
}

TEST_CASE("svg rendering is byte-deterministic and draws every layer") {
    Image D = testutil::diamond();
    auto curves = find_bounding_curves(D, CurveSearchMode::Minimal);
    REQUIRE(!curves.empty());
    Overlays ov;
    ov.boundary = boundary(D);
    ov.curve = curves.front().curve.points;
    std::string svg = render_svg(D, ov);
    CHECK(svg == render_svg(D, ov));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("scenario registry") {
    std::vector<std::string> names = scenario_names();
    CHECK(names.size() == 8);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::find(names.begin(), names.end(), "fig-1-diamond") != names.end());
    CHECK_THROWS_AS(run_scenario("no-such-scenario", {}), std::invalid_argument);
    ScenarioResult r = run_scenario("fig-1-diamond", {});
    CHECK(r.passed);
    CHECK(!r.undecided);
    CHECK(r.report == run_scenario("fig-1-diamond", {}).report);
}

TEST_CASE("open question search, small bounds with frozen counts") {
    OpenQuestionReport r = search_open_question(3, 3);
    CHECK(r.masks_considered == 511);
    CHECK(r.connected_canonical == 27);
    CHECK(r.disks == 6);
    CHECK(r.convex_disks == 6);
    CHECK(r.thick_chosen_reading == 6);
    CHECK(r.thick_bd_reading == 6);
    CHECK(r.counterexamples_chosen.empty());
    CHECK(r.counterexamples_bd.empty());
    CHECK(r.text() == search_open_question(3, 3).text());

    OpenQuestionReport tiny = search_open_question(1, 1);
    CHECK(tiny.disks == 0);  // below the 5-point floor: vacuous

    CHECK_THROWS_AS(search_open_question(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(search_open_question(0, 3), std::invalid_argument);
}
