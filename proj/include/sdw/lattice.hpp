#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdw/rational.hpp"

namespace sdw {

// A point of the integer lattice Z^d. Inversion of a group element is
// coordinate negation.
struct Point {
    std::vector<int> x;

    Point() = default;
    Point(std::initializer_list<int> c) : x(c) {}
    explicit Point(std::vector<int> c) : x(std::move(c)) {}

    int dim() const { return static_cast<int>(x.size()); }
    int operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

    friend Point operator+(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r.x[static_cast<std::size_t>(i)] += b[i];
        return r;
    }
    friend Point operator-(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r.x[static_cast<std::size_t>(i)] -= b[i];
        return r;
    }
    Point operator-() const {
        Point r = *this;
        for (auto& c : r.x) c = -c;
        return r;
    }

    friend auto operator<=>(const Point&, const Point&) = default;
};

// Finite subset of Z^d with set semantics. Points are kept sorted
// lexicographically and deduplicated, so serialization is deterministic.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Point> pts);
    Shape(std::initializer_list<Point> pts) : Shape(std::vector<Point>(pts)) {}

    // 1-D interval [a, b].
    static Shape interval(int a, int b);
    // Axis-aligned product of intervals [lo_i, hi_i].
    static Shape box(const std::vector<int>& lo, const std::vector<int>& hi);
    // Centered cube [-n, n]^d, the Folner schedule member.
    static Shape centered_box(int dim, int n);
    static Shape origin(int dim);

    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    int dim() const { return pts_.empty() ? 0 : pts_.front().dim(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    bool contains(const Point& p) const;
    // Index of p in the sorted point list, or npos.
    std::size_t index_of(const Point& p) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool is_symmetric() const;        // closed under negation
    bool contains_origin() const;

    Shape translated(const Point& t) const;
    Shape negated() const;

    // Componentwise bounding box.
    void bounds(std::vector<int>& lo, std::vector<int>& hi) const;

    std::string to_string() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<Point> pts_;
};

// The centered-cube schedule box(n) = [-n, n]^d: nested, negation-symmetric,
// |box(n)| = (2n+1)^d, with vanishing translation defect.
struct FolnerBoxes {
    int dimension = 1;
    Shape box(int n) const { return Shape::centered_box(dimension, n); }
};

// { p + q : p in s, q in t }, deduplicated. Realizes set products F E.
Shape shape_sum(const Shape& s, const Shape& t);

Shape shape_union(const Shape& s, const Shape& t);
Shape shape_intersect(const Shape& s, const Shape& t);
Shape shape_minus(const Shape& s, const Shape& t);

// True iff shape_sum(s1, delta) does not meet s2.
bool is_delta_apart(const Shape& s1, const Shape& s2, const Shape& delta);

// Erosion: { g : g + delta subseteq f }.
Shape shape_erode(const Shape& f, const Shape& delta);

// |f E \ f| / |f| as an exact rational.
Rational folner_defect(const Shape& f, const Shape& e);

// f Omega^2 \ f. Omega must contain the origin and be negation-symmetric.
Shape boundary_shape(const Shape& f, const Shape& omega);

// Sublattice H = c_1 Z x ... x c_d Z with a tile cell; translates of the cell
// by distinct multiples of the periods are pairwise disjoint because each
// period is the cell's bounding width along that axis.
struct SublatticeTiling {
    int dimension = 0;
    std::vector<int> periods;
    Shape cell;

    // Centers of tiles fully contained in f, aligned to f's min corner
    // (a coset of H; any coset tiles, this one is deterministic and dense in f).
    std::vector<Point> tile_centers_in(const Shape& f) const;
};

SublatticeTiling make_tiling(const Shape& cell);

}  // namespace sdw
