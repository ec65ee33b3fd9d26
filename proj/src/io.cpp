#include "freeze/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace freeze {

namespace {

using nlohmann::json;

Adjacency adjacency_from_string(const std::string& s) {
    if (s == "c1") return c1(2);
    if (s == "c2") return c2(2);
    throw ParseError(1, 1, "unknown adjacency '" + s + "' (want c1 or c2)");
}

std::vector<Point> points_from_json(const json& arr, const char* field) {
    if (!arr.is_array()) throw ParseError(1, 1, std::string(field) + " must be an array");
    std::vector<Point> pts;
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(1, 1, std::string(field) + " entries must be [x,y] integer pairs");
        pts.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return pts;
}

ImageDocument parse_structured(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, 1, e.what());
    }
    if (!j.is_object()) throw ParseError(1, 1, "structured document must be a JSON object");
    ImageDocument doc;
    if (j.contains("name")) doc.name = j["name"].get<std::string>();
    if (!j.contains("points")) throw ParseError(1, 1, "missing 'points' field");
    std::vector<Point> pts = points_from_json(j["points"], "points");
    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(1, 1, "duplicate point in 'points'");
    doc.image = Image(std::move(pts));
    if (j.contains("adjacency")) doc.adjacency = adjacency_from_string(j["adjacency"].get<std::string>());
    if (j.contains("curve")) doc.curve = points_from_json(j["curve"], "curve");
    return doc;
}

ImageDocument parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int ox = 0, oy = 0;
    std::vector<std::string> rows;
    std::vector<int> row_lines;
    bool saw_origin = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("@origin", 0) == 0) {
            if (saw_origin || !rows.empty())
                throw ParseError(lineno, 1, "@origin must appear once, before the grid");
            std::istringstream hs(line.substr(7));
            if (!(hs >> ox >> oy)) throw ParseError(lineno, 8, "@origin needs two integers");
            saw_origin = true;
            continue;
        }
        if (line.empty() && rows.empty()) continue;  // leading blank lines
        if (line.empty()) break;                     // blank line ends the grid
        rows.push_back(line);
        row_lines.push_back(lineno);
    }
    std::vector<Point> pts;
    const int nrows = static_cast<int>(rows.size());
    size_t width = nrows ? rows[0].size() : 0;
    for (int r = 0; r < nrows; ++r) {
        if (rows[static_cast<size_t>(r)].size() != width)
            throw ParseError(row_lines[static_cast<size_t>(r)],
                             static_cast<int>(rows[static_cast<size_t>(r)].size()) + 1,
                             "ragged grid row");
        for (size_t c = 0; c < width; ++c) {
            char ch = rows[static_cast<size_t>(r)][c];
            if (ch == '#')
                pts.emplace_back(ox + static_cast<int>(c), oy + (nrows - 1 - r));
            else if (ch != '.')
                throw ParseError(row_lines[static_cast<size_t>(r)], static_cast<int>(c) + 1,
                                 std::string("unknown character '") + ch + "'");
        }
    }
    ImageDocument doc;
    doc.image = Image(std::move(pts));
    return doc;
}

}  // namespace

ImageDocument parse_image(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') continue;
        if (ch == '{') return parse_structured(text);
        break;
    }
    return parse_grid(text);
}

std::string emit_grid(const ImageDocument& doc) {
    const Image& X = doc.image;
    if (X.empty()) return "";
    Box bb = bounding_box(X.points());
    std::string out;
    if (bb.lo[0] != 0 || bb.lo[1] != 0)
        out += "@origin " + std::to_string(bb.lo[0]) + " " + std::to_string(bb.lo[1]) + "\n";
    for (int y = bb.hi[1]; y >= bb.lo[1]; --y) {
        for (int x = bb.lo[0]; x <= bb.hi[0]; ++x)
            out += X.contains(Point(x, y)) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string emit_json(const ImageDocument& doc) {
    json j = json::object();
    if (!doc.name.empty()) j["name"] = doc.name;
    json pts = json::array();
    for (const Point& p : doc.image) pts.push_back({p[0], p[1]});
    j["points"] = pts;
    if (doc.adjacency) j["adjacency"] = doc.adjacency->str();
    if (doc.curve) {
        json cv = json::array();
        for (const Point& p : *doc.curve) cv.push_back({p[0], p[1]});
        j["curve"] = cv;
    }
    return j.dump(2) + "\n";
}

}  // namespace freeze
