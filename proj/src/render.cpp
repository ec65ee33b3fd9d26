#include "freeze/render.hpp"

#include <algorithm>
#include <stdexcept>

#include "freeze/lattice.hpp"

namespace freeze {

namespace {

void check_overlay(const Image& X, const std::vector<Point>& pts, const char* which) {
    for (const Point& p : pts)
        if (!X.contains(p))
            throw std::invalid_argument(std::string("overlay '") + which + "' point " + p.str() +
                                        " is not in the image");
}

void check_all(const Image& X, const Overlays& ov) {
    check_overlay(X, ov.boundary, "boundary");
    check_overlay(X, ov.curve, "curve");
    check_overlay(X, ov.candidate, "candidate");
    if (ov.witness && !(*ov.witness->image == X))
        throw std::invalid_argument("witness overlay is for a different image");
}

bool member(const std::vector<Point>& pts, const Point& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

std::string render_ascii(const Image& X, const Overlays& ov) {
    check_all(X, ov);
    if (X.empty()) return "(empty image)\n";
    Box bb = bounding_box(X.points());
    std::string out;
    bool used_candidate = false, used_curve = false, used_boundary = false;
    for (int y = bb.hi[1]; y >= bb.lo[1]; --y) {
        for (int x = bb.lo[0]; x <= bb.hi[0]; ++x) {
            Point p(x, y);
            char g = '.';
            if (X.contains(p)) {
                g = '#';
                if (member(ov.boundary, p)) g = 'o', used_boundary = true;
                if (member(ov.curve, p)) g = '*', used_curve = true;
                if (member(ov.candidate, p)) g = ov.candidate_glyph, used_candidate = true;
            }
            out += g;
        }
        out += '\n';
    }
    out += "legend: '#' member, '.' empty";
    if (used_boundary) out += ", 'o' boundary";
    if (used_curve) out += ", '*' curve";
    if (used_candidate) out += std::string(", '") + ov.candidate_glyph + "' candidate";
    out += '\n';
    if (ov.witness) {
        for (const Point& p : ov.witness->moved_points())
            out += "arrow: " + p.str() + " -> " + ov.witness->apply(p).str() + "\n";
    }
    return out;
}

std::string render_svg(const Image& X, const Overlays& ov) {
    check_all(X, ov);
    const int cell = 24;
    Box bb = X.empty() ? Box{Point(0, 0), Point(0, 0)} : bounding_box(X.points());
    const int w = (bb.hi[0] - bb.lo[0] + 1) * cell;
    const int h = (bb.hi[1] - bb.lo[1] + 1) * cell;
    auto cx = [&](const Point& p) { return (p[0] - bb.lo[0]) * cell + cell / 2; };
    auto cy = [&](const Point& p) { return (bb.hi[1] - p[1]) * cell + cell / 2; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
    s += "<defs><marker id=\"tip\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#a00\"/></marker></defs>\n";
    for (const Point& p : X) {
        s += "<rect x=\"" + std::to_string(cx(p) - cell / 2) + "\" y=\"" +
             std::to_string(cy(p) - cell / 2) + "\" width=\"" + std::to_string(cell) +
             "\" height=\"" + std::to_string(cell) +
             "\" fill=\"#eee\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    }
    // curve as a closed dark polyline through the points in the given order
    if (ov.curve.size() >= 2) {
        for (size_t i = 0; i < ov.curve.size(); ++i) {
            const Point& a = ov.curve[i];
            const Point& b = ov.curve[(i + 1) % ov.curve.size()];
            s += "<line x1=\"" + std::to_string(cx(a)) + "\" y1=\"" + std::to_string(cy(a)) +
                 "\" x2=\"" + std::to_string(cx(b)) + "\" y2=\"" + std::to_string(cy(b)) +
                 "\" stroke=\"#333\" stroke-width=\"2\"/>\n";
        }
    }
    for (const Point& p : ov.boundary)
        s += "<circle cx=\"" + std::to_string(cx(p)) + "\" cy=\"" + std::to_string(cy(p)) +
             "\" r=\"7\" fill=\"none\" stroke=\"#06c\" stroke-width=\"2\"/>\n";
    for (const Point& p : ov.curve)
        s += "<circle cx=\"" + std::to_string(cx(p)) + "\" cy=\"" + std::to_string(cy(p)) +
             "\" r=\"4\" fill=\"#333\"/>\n";
    for (const Point& p : ov.candidate)
        s += std::string("<text x=\"") + std::to_string(cx(p) + 5) + "\" y=\"" +
             std::to_string(cy(p) - 5) + "\" font-family=\"monospace\" font-size=\"11\" "
             "fill=\"#000\">" + ov.candidate_glyph + "</text>\n";
    if (ov.witness) {
        for (const Point& p : ov.witness->moved_points()) {
            Point q = ov.witness->apply(p);
            s += "<line x1=\"" + std::to_string(cx(p)) + "\" y1=\"" + std::to_string(cy(p)) +
                 "\" x2=\"" + std::to_string(cx(q)) + "\" y2=\"" + std::to_string(cy(q)) +
                 "\" stroke=\"#a00\" stroke-width=\"2\" marker-end=\"url(#tip)\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace freeze
