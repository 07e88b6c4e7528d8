#include "sdw/lattice.hpp"

#include <algorithm>
#include <set>

namespace sdw {

Shape::Shape(std::vector<Point> pts) : pts_(std::move(pts)) {
    for (const auto& p : pts_)
        if (p.dim() != pts_.front().dim())
            throw std::invalid_argument("shape: mixed dimensions");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

Shape Shape::interval(int a, int b) {
    std::vector<Point> pts;
    for (int i = a; i <= b; ++i) pts.push_back(Point{i});
    return Shape(std::move(pts));
}

Shape Shape::box(const std::vector<int>& lo, const std::vector<int>& hi) {
    if (lo.size() != hi.size() || lo.empty())
        throw std::invalid_argument("box: bad bounds");
    std::vector<Point> pts;
    std::vector<int> cur = lo;
    for (;;) {
        pts.emplace_back(cur);
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0) {
            if (++cur[static_cast<std::size_t>(i)] <= hi[static_cast<std::size_t>(i)]) break;
            cur[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) break;
    }
    return Shape(std::move(pts));
}

Shape Shape::centered_box(int dim, int n) {
    return box(std::vector<int>(static_cast<std::size_t>(dim), -n),
               std::vector<int>(static_cast<std::size_t>(dim), n));
}

Shape Shape::origin(int dim) {
    return Shape({Point(std::vector<int>(static_cast<std::size_t>(dim), 0))});
}

bool Shape::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::size_t Shape::index_of(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || *it != p) return npos;
    return static_cast<std::size_t>(it - pts_.begin());
}

bool Shape::is_symmetric() const {
    for (const auto& p : pts_)
        if (!contains(-p)) return false;
    return true;
}

bool Shape::contains_origin() const {
    return !pts_.empty() && contains(Point(std::vector<int>(pts_.front().x.size(), 0)));
}

Shape Shape::translated(const Point& t) const {
    std::vector<Point> pts;
    pts.reserve(pts_.size());
    for (const auto& p : pts_) pts.push_back(p + t);
    return Shape(std::move(pts));
}

Shape Shape::negated() const {
    std::vector<Point> pts;
    pts.reserve(pts_.size());
    for (const auto& p : pts_) pts.push_back(-p);
    return Shape(std::move(pts));
}

void Shape::bounds(std::vector<int>& lo, std::vector<int>& hi) const {
    if (pts_.empty()) throw std::invalid_argument("bounds of empty shape");
    lo = hi = pts_.front().x;
    for (const auto& p : pts_)
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = std::min(lo[i], p.x[i]);
            hi[i] = std::max(hi[i], p.x[i]);
        }
}

std::string Shape::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) s += ",";
        s += "(";
        for (int j = 0; j < pts_[i].dim(); ++j) {
            if (j) s += ",";
            s += std::to_string(pts_[i][j]);
        }
        s += ")";
    }
    return s + "}";
}

static void check_same_dim(const Shape& s, const Shape& t, const char* op) {
    if (!s.empty() && !t.empty() && s.dim() != t.dim())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

Shape shape_sum(const Shape& s, const Shape& t) {
    check_same_dim(s, t, "shape_sum");
    std::vector<Point> pts;
    pts.reserve(s.size() * t.size());
    for (const auto& p : s.points())
        for (const auto& q : t.points()) pts.push_back(p + q);
    return Shape(std::move(pts));
}

Shape shape_union(const Shape& s, const Shape& t) {
    check_same_dim(s, t, "shape_union");
    std::vector<Point> pts(s.points());
    pts.insert(pts.end(), t.points().begin(), t.points().end());
    return Shape(std::move(pts));
}

Shape shape_intersect(const Shape& s, const Shape& t) {
    check_same_dim(s, t, "shape_intersect");
    std::vector<Point> pts;
    for (const auto& p : s.points())
        if (t.contains(p)) pts.push_back(p);
    return Shape(std::move(pts));
}

Shape shape_minus(const Shape& s, const Shape& t) {
    check_same_dim(s, t, "shape_minus");
    std::vector<Point> pts;
    for (const auto& p : s.points())
        if (!t.contains(p)) pts.push_back(p);
    return Shape(std::move(pts));
}

bool is_delta_apart(const Shape& s1, const Shape& s2, const Shape& delta) {
    check_same_dim(s1, s2, "is_delta_apart");
    check_same_dim(s1, delta, "is_delta_apart");
    for (const auto& p : s1.points())
        for (const auto& d : delta.points())
            if (s2.contains(p + d)) return false;
    return true;
}

Shape shape_erode(const Shape& f, const Shape& delta) {
    check_same_dim(f, delta, "shape_erode");
    std::vector<Point> pts;
    for (const auto& g : f.points()) {
        bool in = true;
        for (const auto& d : delta.points())
            if (!f.contains(g + d)) { in = false; break; }
        if (in) pts.push_back(g);
    }
    return Shape(std::move(pts));
}

Rational folner_defect(const Shape& f, const Shape& e) {
    if (f.empty()) throw std::invalid_argument("folner_defect: empty shape");
    Shape grown = shape_sum(f, e);
    std::int64_t extra = static_cast<std::int64_t>(shape_minus(grown, f).size());
    return Rational(extra, static_cast<std::int64_t>(f.size()));
}

Shape boundary_shape(const Shape& f, const Shape& omega) {
    if (!omega.contains_origin() || !omega.is_symmetric())
        throw std::invalid_argument(
            "boundary_shape: omega must contain the origin and be symmetric");
    return shape_minus(shape_sum(shape_sum(f, omega), omega), f);
}

SublatticeTiling make_tiling(const Shape& cell) {
    if (cell.empty()) throw std::invalid_argument("make_tiling: empty cell");
    SublatticeTiling t;
    t.dimension = cell.dim();
    t.cell = cell;
    std::vector<int> lo, hi;
    cell.bounds(lo, hi);
    for (std::size_t i = 0; i < lo.size(); ++i) t.periods.push_back(hi[i] - lo[i] + 1);
    return t;
}

std::vector<Point> SublatticeTiling::tile_centers_in(const Shape& f) const {
    if (f.empty()) return {};
    if (f.dim() != dimension)
        throw std::invalid_argument("tile_centers_in: dimension mismatch");
    std::vector<int> flo, fhi, clo, chi;
    f.bounds(flo, fhi);
    cell.bounds(clo, chi);

    // offsets aligning the cell's min corner to f's min corner
    std::vector<int> base(static_cast<std::size_t>(dimension));
    std::vector<int> count(static_cast<std::size_t>(dimension));
    for (std::size_t i = 0; i < base.size(); ++i) {
        base[i] = flo[i] - clo[i];
        int span = fhi[i] - flo[i] + 1;
        count[i] = span >= periods[i] ? 1 + (span - periods[i]) / periods[i] : 0;
        if (count[i] == 0) return {};
    }

    std::vector<Point> centers;
    std::vector<int> idx(static_cast<std::size_t>(dimension), 0);
    for (;;) {
        std::vector<int> c(static_cast<std::size_t>(dimension));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base[i] + idx[i] * periods[i];
        Point h(c);
        if (shape_minus(cell.translated(h), f).empty()) centers.push_back(h);
        int i = dimension - 1;
        while (i >= 0) {
            if (++idx[static_cast<std::size_t>(i)] < count[static_cast<std::size_t>(i)]) break;
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

}  // namespace sdw
