#include <doctest.h>

#include <random>
#include <set>

#include "freeze/grid.hpp"
#include "helpers.hpp"

using namespace freeze;
using testutil::rect_minus;

TEST_CASE("c_u adjacency basics") {
    CHECK(are_adjacent(Point(0, 0), Point(1, 0), c1(2)));
    CHECK(are_adjacent(Point(0, 0), Point(0, 1), c1(2)));
    CHECK(!are_adjacent(Point(0, 0), Point(1, 1), c1(2)));
    CHECK(are_adjacent(Point(0, 0), Point(1, 1), c2(2)));
    CHECK(!are_adjacent(Point(0, 0), Point(2, 0), c2(2)));
    CHECK(!are_adjacent(Point(0, 0), Point(0, 0), c1(2)));  // irreflexive
    CHECK(adjacent_or_equal(Point(0, 0), Point(0, 0), c1(2)));
    CHECK(are_adjacent(Point(0, 0, 0), Point(1, 1, 1), Adjacency(3, 3)));
    CHECK(!are_adjacent(Point(0, 0, 0), Point(1, 1, 1), Adjacency(3, 2)));
    CHECK_THROWS_AS(Adjacency(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Adjacency(0, 1), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and monotone in u") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 500; ++it) {
        Point p(d(rng), d(rng)), q(d(rng), d(rng));
        for (int u = 1; u <= 2; ++u) {
            Adjacency adj(2, u);
            CHECK(are_adjacent(p, q, adj) == are_adjacent(q, p, adj));
        }
        if (are_adjacent(p, q, c1(2))) CHECK(are_adjacent(p, q, c2(2)));
    }
}

TEST_CASE("lattice neighbor counts") {
    CHECK(lattice_neighbors(Point(0, 0), c1(2)).size() == 4);
    CHECK(lattice_neighbors(Point(0, 0), c2(2)).size() == 8);
    CHECK(lattice_neighbors(Point(0, 0, 0), Adjacency(3, 1)).size() == 6);
    CHECK(lattice_neighbors(Point(0, 0, 0), Adjacency(3, 2)).size() == 18);
    CHECK(lattice_neighbors(Point(0, 0, 0), Adjacency(3, 3)).size() == 26);
    CHECK(lattice_neighbors(Point(0), Adjacency(1, 1)).size() == 2);
}

TEST_CASE("image canonical order and lookup") {
    Image X({Point(2, 1), Point(0, 0), Point(1, 1)});
    REQUIRE(X.size() == 3);
    CHECK(X[0] == Point(0, 0));
    CHECK(X[1] == Point(1, 1));
    CHECK(X[2] == Point(2, 1));
    CHECK(X.contains(Point(1, 1)));
    CHECK(!X.contains(Point(1, 0)));
    CHECK(X.index_of(Point(2, 1)) == 2);
    CHECK(!X.index_of(Point(5, 5)).has_value());
}

TEST_CASE("neighborhoods require membership") {
    Image X = rect_minus(1, 1);
    CHECK(closed_neighborhood(X, c2(2), Point(0, 0)).size() == 4);
    CHECK(open_neighborhood(X, c1(2), Point(0, 0)).size() == 2);
    CHECK_THROWS(closed_neighborhood(X, c1(2), Point(9, 9)));
}

TEST_CASE("connectivity of the diamond curve differs by adjacency") {
    Image S({Point(1, 0), Point(0, 1), Point(2, 1), Point(1, 2)});
    CHECK(is_connected(S, c2(2)));
    CHECK(!is_connected(S, c1(2)));
    CHECK(is_connected(Image(), c1(2)));
    CHECK(is_connected(Image({Point(0, 0)}), c1(2)));
}

TEST_CASE("components split as expected") {
    Image X({Point(1, 1), Point(2, 1), Point(4, 1), Point(5, 1)});
    auto comps = components_of(X, c1(2));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Point>{Point(1, 1), Point(2, 1)});
    CHECK(comps[1] == std::vector<Point>{Point(4, 1), Point(5, 1)});
    CHECK(components_of(X, c2(2)).size() == 2);  // gap of 2 is not c2-adjacent either
}

TEST_CASE("complement components of a closed curve: one finite, one infinite") {
    std::vector<Point> ring;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            if (x != 1 || y != 1) ring.emplace_back(x, y);
    Image S(ring);
    Box region = bounding_box(S.points()).inflated(1);
    auto comps = connected_components(S.points(), c1(2), region);
    int finite = 0, infinite = 0;
    for (const auto& c : comps) {
        if (c.infinite)
            ++infinite;
        else {
            ++finite;
            CHECK(c.points == std::vector<Point>{Point(1, 1)});
        }
    }
    CHECK(finite == 1);
    CHECK(infinite == 1);
}

TEST_CASE("component stability under extra inflation") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        Image X = testutil::random_connected_image(rng, 8);
        Box r1 = bounding_box(X.points()).inflated(1);
        Box r2 = bounding_box(X.points()).inflated(3);
        auto a = connected_components(X.points(), c1(2), r1);
        auto b = connected_components(X.points(), c1(2), r2);
        // finite components must agree regardless of how much free space surrounds X
        std::vector<std::vector<Point>> fa, fb;
        for (const auto& c : a)
            if (!c.infinite) fa.push_back(c.points);
        for (const auto& c : b)
            if (!c.infinite) fb.push_back(c.points);
        CHECK(fa == fb);
    }
}

TEST_CASE("unique shortest paths") {
    Image X = rect_minus(3, 3);
    // along an edge: unique
    auto p = unique_shortest_path(X, c1(2), Point(0, 0), Point(3, 0));
    REQUIRE(p.has_value());
    CHECK(p->points == std::vector<Point>{Point(0, 0), Point(1, 0), Point(2, 0), Point(3, 0)});
    // across the diagonal: many geodesics
    CHECK(!unique_shortest_path(X, c1(2), Point(0, 0), Point(3, 3)).has_value());
    // same point: trivial path
    auto q = unique_shortest_path(X, c1(2), Point(1, 1), Point(1, 1));
    REQUIRE(q.has_value());
    CHECK(q->points.size() == 1);
    // c2 diagonal of the box: unique
    auto r = unique_shortest_path(X, c2(2), Point(0, 0), Point(3, 3));
    REQUIRE(r.has_value());
    CHECK(r->points.size() == 4);
}

TEST_CASE("unique shortest path in an L-shaped image") {
    // only one geodesic exists around the corner
    Image X({Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 1), Point(2, 2)});
    auto p = unique_shortest_path(X, c1(2), Point(0, 0), Point(2, 2));
    REQUIRE(p.has_value());
    CHECK(p->points.size() == 5);
}

TEST_CASE("bits operations") {
    Bits b(70);
    CHECK(b.none());
    b.set(0);
    b.set(69);
    CHECK(b.count() == 2);
    CHECK(b.first() == 0);
    CHECK(b.next(0) == 69);
    CHECK(b.next(69) == -1);
    Bits c(70);
    c.set(69);
    CHECK(b.intersects(c));
    b.and_not(c);
    CHECK(b.count() == 1);
    b.set_all();
    CHECK(b.count() == 70);
}

TEST_CASE("graph neighbor lists match the adjacency") {
    Image X = rect_minus(2, 2);
    Graph g(X, c2(2));
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            bool adj = are_adjacent(X[static_cast<size_t>(i)], X[static_cast<size_t>(j)], c2(2));
            bool listed = std::find(g.nbrs[static_cast<size_t>(i)].begin(),
                                    g.nbrs[static_cast<size_t>(i)].end(),
                                    j) != g.nbrs[static_cast<size_t>(i)].end();
            CHECK(adj == listed);
            CHECK(g.closed_nbr_bits[static_cast<size_t>(i)].test(j) == (adj || i == j));
        }
}
