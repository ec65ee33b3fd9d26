#include "freeze/image.hpp"

#include <algorithm>
#include <bit>

namespace freeze {

Image::Image(std::vector<Point> pts) : pts_(std::move(pts)) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    if (!pts_.empty()) {
        dim_ = pts_[0].dim;
        for (const Point& p : pts_)
            if (p.dim != dim_) throw std::invalid_argument("Image: mixed dimensions");
    }
}

bool Image::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::optional<int> Image::index_of(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || *it != p) return std::nullopt;
    return static_cast<int>(it - pts_.begin());
}

int Bits::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool Bits::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

int Bits::first() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<int>(k * 64 + static_cast<size_t>(std::countr_zero(w_[k])));
    return -1;
}

int Bits::next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = static_cast<size_t>(i) >> 6;
    uint64_t w = w_[k] & (~0ULL << (i & 63));
    while (true) {
        if (w) return static_cast<int>(k * 64 + static_cast<size_t>(std::countr_zero(w)));
        if (++k >= w_.size()) return -1;
        w = w_[k];
    }
}

bool Bits::intersects(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & o.w_[k]) return true;
    return false;
}

Bits& Bits::operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
}

Bits& Bits::operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
}

Bits& Bits::and_not(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
}

Graph::Graph(Image img, Adjacency a) : image(std::move(img)), adj(a) {
    if (!image.empty() && image.dim() != adj.dimension)
        throw std::invalid_argument("Graph: image/adjacency dimension mismatch");
    const int m = n();
    nbrs.assign(static_cast<size_t>(m), {});
    closed_nbr_bits.assign(static_cast<size_t>(m), Bits(m));
    for (int i = 0; i < m; ++i) {
        closed_nbr_bits[static_cast<size_t>(i)].set(i);
        for (const Point& q : lattice_neighbors(image[static_cast<size_t>(i)], adj)) {
            if (auto j = image.index_of(q)) {
                nbrs[static_cast<size_t>(i)].push_back(*j);
                closed_nbr_bits[static_cast<size_t>(i)].set(*j);
            }
        }
    }
}

}  // namespace freeze
