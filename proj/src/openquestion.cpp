#include "freeze/openquestion.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "freeze/convexity.hpp"
#include "freeze/disk.hpp"

namespace freeze {

namespace {

// point sets packed row-major into a 64-bit word: bit y*w + x
struct Packed {
    int w, h;
    uint64_t bits;
    auto operator<=>(const Packed&) const = default;
};

uint64_t col_mask(int w, int h, int x) {
    uint64_t m = 0;
    for (int y = 0; y < h; ++y) m |= 1ULL << (y * w + x);
    return m;
}

// c1 flood fill within `m`, seeded from its lowest bit
bool connected_mask(uint64_t m, int w, int h) {
    if (m == 0) return false;
    const uint64_t not_col0 = ~col_mask(w, h, 0);
    const uint64_t not_colL = ~col_mask(w, h, w - 1);
    uint64_t r = m & (~m + 1);
    while (true) {
        uint64_t g = r | ((r & not_colL) << 1) | ((r & not_col0) >> 1) | (r << w) | (r >> w);
        g &= m;
        if (g == r) break;
        r = g;
    }
    return r == m;
}

// the 8 lattice symmetries of (x,y) within a b0 x b1 bounding box
Packed transform(const std::vector<std::pair<int, int>>& pts, int b0, int b1, int which) {
    Packed out{};
    uint64_t bits = 0;
    int w = 0, h = 0;
    for (auto [x, y] : pts) {
        int u = 0, v = 0;
        switch (which) {
            case 0: u = x; v = y; break;
            case 1: u = b0 - x; v = y; break;
            case 2: u = x; v = b1 - y; break;
            case 3: u = b0 - x; v = b1 - y; break;
            case 4: u = y; v = x; break;
            case 5: u = b1 - y; v = x; break;
            case 6: u = y; v = b0 - x; break;
            case 7: u = b1 - y; v = b0 - x; break;
        }
        w = which < 4 ? b0 + 1 : b1 + 1;
        h = which < 4 ? b1 + 1 : b0 + 1;
        bits |= 1ULL << (v * w + u);
    }
    out.w = w;
    out.h = h;
    out.bits = bits;
    return out;
}

}  // namespace

OpenQuestionReport search_open_question(int max_w, int max_h, std::ostream* progress) {
    if (max_w < 1 || max_h < 1 || max_w > 6 || max_h > 6 || max_w * max_h > 30)
        throw std::invalid_argument("open-question bounds refused: need 1 <= w,h <= 6 and w*h <= 30");
    OpenQuestionReport rep;
    rep.max_w = max_w;
    rep.max_h = max_h;
    const int w = max_w, h = max_h, n = w * h;
    const uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const uint64_t col0 = col_mask(w, h, 0);
    const uint64_t row0 = (1ULL << w) - 1;

    // flood the padded complement from its corner to detect holes
    const int pw = w + 2, ph = h + 2;
    auto has_hole = [&](uint64_t m) {
        uint64_t pad = 0;
        for (int y = 0; y < h; ++y)
            pad |= ((m >> (y * w)) & row0) << ((y + 1) * pw + 1);
        uint64_t comp = ~pad & ((pw * ph == 64) ? ~0ULL : (1ULL << (pw * ph)) - 1);
        return !connected_mask(comp, pw, ph);
    };

    for (uint64_t m = 1; m <= all; ++m) {
        ++rep.masks_considered;
        if (std::popcount(m) < 5) continue;
        if (!(m & col0) || !(m & row0)) continue;  // translation-canonical
        if (!connected_mask(m, w, h)) continue;

        std::vector<std::pair<int, int>> pts;
        int b0 = 0, b1 = 0;
        for (int i = 0; i < n; ++i)
            if (m & (1ULL << i)) {
                int x = i % w, y = i / w;
                pts.emplace_back(x, y);
                b0 = std::max(b0, x);
                b1 = std::max(b1, y);
            }
        Packed self = transform(pts, b0, b1, 0);
        bool canonical = true;
        for (int t = 1; t < 8 && canonical; ++t)
            canonical = !(transform(pts, b0, b1, t) < self);
        if (!canonical) continue;
        ++rep.connected_canonical;
        if (has_hole(m)) continue;

        std::vector<Point> ppts;
        for (auto [x, y] : pts) ppts.emplace_back(x, y);
        Image D(std::move(ppts));
        std::vector<DiskDecomposition> curves;
        try {
            curves = find_bounding_curves(D, CurveSearchMode::Canonical);
        } catch (const std::length_error&) {
            continue;
        }
        if (curves.empty()) continue;
        ++rep.disks;
        if (progress && rep.disks % 1000 == 0)
            *progress << "open-question: " << rep.disks << " disks so far ("
                      << rep.masks_considered << " masks)\n";
        if (!is_digitally_convex(D).convex) continue;
        ++rep.convex_disks;

        if (thick_witness(D, /*bd_reading=*/false))
            ++rep.thick_chosen_reading;
        else
            rep.counterexamples_chosen.push_back(D);
        if (thick_witness(D, /*bd_reading=*/true))
            ++rep.thick_bd_reading;
        else
            rep.counterexamples_bd.push_back(D);
    }
    return rep;
}

std::string OpenQuestionReport::text() const {
    std::string s;
    s += "open question: is every digitally convex disk thick?\n";
    s += "bounds: " + std::to_string(max_w) + "x" + std::to_string(max_h) + " (point counts)\n";
    s += "masks considered: " + std::to_string(masks_considered) + "\n";
    s += "connected canonical sets: " + std::to_string(connected_canonical) + "\n";
    s += "disks: " + std::to_string(disks) + "\n";
    s += "convex disks: " + std::to_string(convex_disks) + "\n";
    s += "thick (chosen-curve reading): " + std::to_string(thick_chosen_reading) + "\n";
    s += "thick (boundary reading): " + std::to_string(thick_bd_reading) + "\n";
    auto emit = [&s](const char* label, const std::vector<Image>& xs) {
        if (xs.empty()) {
            s += std::string("no convex-but-not-thick disk up to bounds (") + label + ")\n";
        } else {
            s += std::string("counterexamples (") + label + "):\n";
            for (const Image& X : xs) {
                s += "  {";
                for (size_t i = 0; i < X.size(); ++i) {
                    if (i) s += ",";
                    s += X[i].str();
                }
                s += "}\n";
            }
        }
    };
    emit("chosen-curve reading", counterexamples_chosen);
    emit("boundary reading", counterexamples_bd);
    s += "note: this search is exhaustive only up to the stated bounds; it does not decide the\n";
    s += "universal question.\n";
    return s;
}

}  // namespace freeze
