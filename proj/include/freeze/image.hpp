#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freeze/lattice.hpp"

namespace freeze {

// A finite digital image: a duplicate-free point set held in canonical
// (lexicographic) order. Immutable after construction.
class Image {
public:
    Image() = default;
    explicit Image(std::vector<Point> pts);

    size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    int dim() const { return dim_; }

    const Point& operator[](size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    bool contains(const Point& p) const;
    // Index in canonical order, or nullopt.
    std::optional<int> index_of(const Point& p) const;

    bool operator==(const Image&) const = default;

private:
    std::vector<Point> pts_;
    int dim_ = 2;
};

// Fixed-size bitset over image point indices.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((static_cast<size_t>(n) + 63) / 64, 0) {}

    int size() const { return n_; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set_all() {
        for (auto& w : w_) w = ~0ULL;
        trim();
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const;
    bool any() const;
    bool none() const { return !any(); }
    // Lowest set index, -1 if empty.
    int first() const;
    // Next set index strictly after i, -1 if none.
    int next(int i) const;

    bool intersects(const Bits& o) const;
    Bits& operator&=(const Bits& o);
    Bits& operator|=(const Bits& o);
    // this &= ~o
    Bits& and_not(const Bits& o);

    bool operator==(const Bits&) const = default;

private:
    void trim() {
        if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// An image together with an adjacency: neighbor lists and closed
// neighborhoods by index, precomputed once.
struct Graph {
    Image image;
    Adjacency adj;
    std::vector<std::vector<int>> nbrs;   // open neighborhoods
    std::vector<Bits> closed_nbr_bits;    // N*(x) = N(x) + {x}

    Graph(Image img, Adjacency a);
    int n() const { return static_cast<int>(image.size()); }
};

}  // namespace freeze
