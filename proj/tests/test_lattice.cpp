#include <random>
#include <set>

#include "doctest.h"
#include "sdw/lattice.hpp"

using namespace sdw;

namespace {

// independent oracle: Minkowski sum by raw nested loops over point vectors
std::set<std::vector<int>> sum_oracle(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
    std::set<std::vector<int>> out;
    for (const auto& p : a)
        for (const auto& q : b) {
            std::vector<int> r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] + q[i];
            out.insert(r);
        }
    return out;
}

Shape random_shape(std::mt19937& rng, int dim, int max_pts) {
    std::uniform_int_distribution<int> coord(-4, 4), count(1, max_pts);
    std::vector<Point> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(static_cast<std::size_t>(dim));
        for (auto& x : c) x = coord(rng);
        pts.push_back(Point(c));
    }
    return Shape(pts);
}

}  // namespace

TEST_CASE("shape_sum basics") {
    CHECK(shape_sum(Shape::interval(0, 1), Shape::origin(1)) == Shape::interval(0, 1));
    CHECK(shape_sum(Shape::interval(0, 1), Shape::interval(0, 1)) ==
          Shape::interval(0, 2));

    // [0,4] + {-1,0,1} twice = [-2,6]
    Shape grown = shape_sum(shape_sum(Shape::interval(0, 4), Shape::interval(-1, 1)),
                            Shape::interval(-1, 1));
    CHECK(grown == Shape::interval(-2, 6));

    CHECK_THROWS_AS(shape_sum(Shape::interval(0, 1), Shape::origin(2)),
                    std::invalid_argument);
}

TEST_CASE("shape_sum matches the enumeration oracle on random shapes") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = 1 + trial % 2;
        Shape a = random_shape(rng, dim, 6), b = random_shape(rng, dim, 6);
        std::vector<std::vector<int>> av, bv;
        for (const auto& p : a.points()) av.push_back(p.x);
        for (const auto& p : b.points()) bv.push_back(p.x);
        auto expect = sum_oracle(av, bv);
        Shape got = shape_sum(a, b);
        REQUIRE(got.size() == expect.size());
        for (const auto& p : got.points()) CHECK(expect.count(p.x) == 1);
    }
}

TEST_CASE("shape_sum is commutative and associative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Shape a = random_shape(rng, 2, 5), b = random_shape(rng, 2, 5),
              c = random_shape(rng, 2, 5);
        CHECK(shape_sum(a, b) == shape_sum(b, a));
        CHECK(shape_sum(shape_sum(a, b), c) == shape_sum(a, shape_sum(b, c)));
        CHECK(shape_sum(a, Shape::origin(2)) == a);
    }
}

TEST_CASE("is_delta_apart") {
    CHECK(is_delta_apart(Shape({Point{0}}), Shape({Point{2}}), Shape::interval(0, 1)));
    CHECK_FALSE(
        is_delta_apart(Shape({Point{0}}), Shape({Point{1}}), Shape::interval(0, 1)));
    CHECK(is_delta_apart(Shape::interval(0, 1), Shape({Point{5}}), Shape::interval(0, 2)));
}

TEST_CASE("is_delta_apart is symmetric for symmetric delta") {
    std::mt19937 rng(11);
    Shape delta = Shape::interval(-1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        Shape a = random_shape(rng, 1, 5), b = random_shape(rng, 1, 5);
        CHECK(is_delta_apart(a, b, delta) == is_delta_apart(b, a, delta));
    }
}

TEST_CASE("folner_defect") {
    CHECK(folner_defect(Shape::interval(-10, 10), Shape::interval(0, 1)) ==
          Rational(1, 21));
    CHECK(folner_defect(Shape::centered_box(2, 5),
                        Shape({Point{0, 0}, Point{1, 0}})) == Rational(11, 121));
    CHECK(folner_defect(Shape::interval(-10, 10), Shape({Point{0}})) == Rational(0));
    CHECK_THROWS_AS(folner_defect(Shape(), Shape({Point{0}})), std::invalid_argument);
}

TEST_CASE("folner box family") {
    FolnerBoxes plane{2};
    CHECK(plane.box(3) == Shape::centered_box(2, 3));
    for (int n = 1; n <= 8; ++n) {
        Shape box = FolnerBoxes{1}.box(n);
        CHECK(box.size() == static_cast<std::size_t>(2 * n + 1));
        CHECK(box.is_symmetric());
        // box(n) inside box(n+1)
        CHECK(shape_minus(box, Shape::centered_box(1, n + 1)).empty());
        // exact 1/(2n+1) defect for E = {0,1}
        CHECK(folner_defect(box, Shape::interval(0, 1)) == Rational(1, 2 * n + 1));
    }
    for (int n = 1; n <= 5; ++n) {
        Shape box = Shape::centered_box(2, n);
        CHECK(box.size() == static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)));
        CHECK(box.is_symmetric());
    }
    // growth ratio |box E| / |box| approaches 1
    Shape e = Shape::interval(0, 1);
    double prev = 10.0;
    for (int n = 2; n <= 12; n += 2) {
        Shape box = Shape::centered_box(1, n);
        double ratio = static_cast<double>(shape_sum(box, e).size()) /
                       static_cast<double>(box.size());
        CHECK(ratio >= 1.0);
        CHECK(ratio <= prev);
        prev = ratio;
    }

    // defects vanish monotonically for other finite sets too
    for (const Shape& probe : {Shape::interval(0, 2), Shape::interval(-1, 1)}) {
        Rational last(1);
        for (int n = 1; n <= 12; ++n) {
            Rational d = folner_defect(Shape::centered_box(1, n), probe);
            CHECK(d <= last);
            last = d;
        }
        CHECK(last < Rational(1, 8));
    }
}

TEST_CASE("boundary_shape") {
    CHECK(boundary_shape(Shape::interval(0, 4), Shape::interval(-1, 1)) ==
          Shape({Point{-2}, Point{-1}, Point{5}, Point{6}}));
    CHECK(boundary_shape(Shape::origin(1), Shape::origin(1)).empty());

    // 5x5 cross-dilated square minus the 3x3 square: 28 points, against a
    // direct enumeration oracle
    Shape f = Shape::box({0, 0}, {2, 2});
    Shape cross({Point{0, 0}, Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}});
    Shape got = boundary_shape(f, cross);
    std::set<std::vector<int>> expect;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int dx1 = -1; dx1 <= 1; ++dx1)
                for (int dy1 = -1; dy1 <= 1; ++dy1) {
                    if (dx1 != 0 && dy1 != 0) continue;
                    for (int dx2 = -1; dx2 <= 1; ++dx2)
                        for (int dy2 = -1; dy2 <= 1; ++dy2) {
                            if (dx2 != 0 && dy2 != 0) continue;
                            int px = x + dx1 + dx2, py = y + dy1 + dy2;
                            if (px >= 0 && px <= 2 && py >= 0 && py <= 2) continue;
                            expect.insert({px, py});
                        }
                }
    CHECK(got.size() == 28);
    CHECK(got.size() == expect.size());
    for (const auto& p : got.points()) CHECK(expect.count(p.x) == 1);

    CHECK_THROWS_AS(boundary_shape(Shape::interval(0, 4), Shape::interval(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("make_tiling") {
    SublatticeTiling t = make_tiling(Shape::interval(-2, 2));
    CHECK(t.periods == std::vector<int>{5});
    auto centers = t.tile_centers_in(Shape::interval(0, 24));
    CHECK(centers == std::vector<Point>{{2}, {7}, {12}, {17}, {22}});

    SublatticeTiling unit = make_tiling(Shape::origin(1));
    CHECK(unit.periods == std::vector<int>{1});
    auto all = unit.tile_centers_in(Shape::interval(3, 7));
    CHECK(all.size() == 5);

    SublatticeTiling sq = make_tiling(Shape::centered_box(2, 2));
    CHECK(sq.periods == std::vector<int>{5, 5});
    CHECK(sq.tile_centers_in(Shape::centered_box(2, 12)).size() == 25);

    CHECK_THROWS_AS(make_tiling(Shape()), std::invalid_argument);
}

TEST_CASE("tiling translates are pairwise disjoint") {
    for (const Shape& cell :
         {Shape::interval(-2, 2), Shape::interval(0, 3), Shape::centered_box(2, 1)}) {
        SublatticeTiling t = make_tiling(cell);
        int reach = 3 * *std::max_element(t.periods.begin(), t.periods.end());
        auto centers = t.tile_centers_in(Shape::centered_box(cell.dim(), reach));
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = i + 1; j < centers.size(); ++j)
                CHECK(shape_intersect(cell.translated(centers[i]),
                                      cell.translated(centers[j]))
                          .empty());
    }
}

TEST_CASE("tiling center density meets the alpha bound") {
    Shape cell = Shape::interval(-2, 2);
    SublatticeTiling t = make_tiling(cell);
    double alpha = 1.0 / (2.0 * t.periods[0]);
    for (int n = 5; n <= 30; n += 5) {
        Shape box = Shape::centered_box(1, n);
        auto centers = t.tile_centers_in(box);
        CHECK(static_cast<double>(centers.size()) >=
              alpha * static_cast<double>(box.size()));
    }
}
