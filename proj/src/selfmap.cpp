#include "freeze/selfmap.hpp"

#include <stdexcept>

namespace freeze {

Point SelfMap::apply(const Point& p) const {
    auto i = image->index_of(p);
    if (!i) throw std::invalid_argument("SelfMap::apply: point not in image");
    return (*image)[static_cast<size_t>(targets[static_cast<size_t>(*i)])];
}

bool SelfMap::is_identity() const {
    for (size_t i = 0; i < targets.size(); ++i)
        if (targets[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<Point> SelfMap::fixed_points() const {
    std::vector<Point> out;
    for (size_t i = 0; i < targets.size(); ++i)
        if (targets[i] == static_cast<int>(i)) out.push_back((*image)[i]);
    return out;
}

std::vector<Point> SelfMap::moved_points() const {
    std::vector<Point> out;
    for (size_t i = 0; i < targets.size(); ++i)
        if (targets[i] != static_cast<int>(i)) out.push_back((*image)[i]);
    return out;
}

SelfMap identity_map(std::shared_ptr<const Image> image) {
    SelfMap f{std::move(image), {}};
    f.targets.resize(f.image->size());
    for (size_t i = 0; i < f.targets.size(); ++i) f.targets[i] = static_cast<int>(i);
    return f;
}

SelfMap constant_map(std::shared_ptr<const Image> image, const Point& target) {
    auto t = image->index_of(target);
    if (!t) throw std::invalid_argument("constant_map: target not in image");
    SelfMap f{std::move(image), {}};
    f.targets.assign(f.image->size(), *t);
    return f;
}

bool is_continuous(const SelfMap& f, const Adjacency& adj) {
    const Image& X = *f.image;
    Graph g{X, adj};
    for (int i = 0; i < g.n(); ++i)
        for (int j : g.nbrs[static_cast<size_t>(i)]) {
            if (j < i) continue;
            int ti = f.targets[static_cast<size_t>(i)], tj = f.targets[static_cast<size_t>(j)];
            if (ti != tj && !g.closed_nbr_bits[static_cast<size_t>(ti)].test(tj)) return false;
        }
    return true;
}

SelfMap compose(const SelfMap& g, const SelfMap& f) {
    if (*g.image != *f.image) throw std::invalid_argument("compose: image mismatch");
    SelfMap h{f.image, {}};
    h.targets.resize(f.targets.size());
    for (size_t i = 0; i < f.targets.size(); ++i)
        h.targets[i] = g.targets[static_cast<size_t>(f.targets[i])];
    return h;
}

}  // namespace freeze
