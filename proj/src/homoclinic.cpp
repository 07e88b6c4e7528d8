#include "sdw/homoclinic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sdw/gf2.hpp"

namespace sdw {

namespace {

int mod_floor(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Symbol DescribedConfig::at(const Point& p) const {
    if (!patch.support.empty() && patch.defined_at(p)) return patch.at(p);
    Point q = p;
    for (std::size_t d = 0; d < periods.size(); ++d)
        q.x[d] = mod_floor(q.x[d], periods[d]);
    return background.at(q);
}

DescribedConfig DescribedConfig::uniform(const Alphabet& a, int dimension, Symbol s) {
    DescribedConfig c;
    c.dimension = dimension;
    c.alphabet = a;
    c.periods.assign(static_cast<std::size_t>(dimension), 1);
    Shape domain = Shape::origin(dimension);
    c.background = Pattern(domain, {s});
    return c;
}

DescribedConfig DescribedConfig::periodic_word(const Alphabet& a,
                                               const std::vector<Symbol>& word) {
    if (word.empty()) throw std::invalid_argument("periodic_word: empty word");
    DescribedConfig c;
    c.dimension = 1;
    c.alphabet = a;
    c.periods = {static_cast<int>(word.size())};
    c.background = Pattern::word(word);
    return c;
}

DescribedConfig DescribedConfig::with_patch(Pattern p) const {
    DescribedConfig c = *this;
    c.patch = std::move(p);
    return c;
}

bool background_admissible(const SubshiftHandle& s, const DescribedConfig& c) {
    if (s.kind() == SubshiftHandle::Kind::Full) return true;
    auto pts = toroidally_admissible(s, c.periods);
    return std::binary_search(pts.begin(), pts.end(), c.background);
}

AlmostEqualResult almost_equal(const DescribedConfig& u, const DescribedConfig& v) {
    if (u.dimension != v.dimension || !(u.alphabet == v.alphabet))
        throw std::invalid_argument("almost_equal: incomparable configurations");
    AlmostEqualResult res;

    // compare periodic extensions of the backgrounds on the lcm domain
    std::vector<int> lcm_periods(static_cast<std::size_t>(u.dimension));
    for (std::size_t d = 0; d < lcm_periods.size(); ++d)
        lcm_periods[d] = std::lcm(u.periods[d], v.periods[d]);
    std::vector<int> lo(lcm_periods.size(), 0), hi(lcm_periods.size());
    for (std::size_t d = 0; d < lcm_periods.size(); ++d) hi[d] = lcm_periods[d] - 1;
    DescribedConfig u_plain = u, v_plain = v;
    u_plain.patch = Pattern();
    v_plain.patch = Pattern();
    Shape lcm_domain = Shape::box(lo, hi);
    for (const auto& p : lcm_domain.points()) {
        if (u_plain.at(p) != v_plain.at(p)) {
            res.almost_equal = false;
            res.certificate_period = lcm_periods;
            return res;
        }
    }

    // equal backgrounds: differences live inside the patch supports
    std::vector<Point> diff;
    Shape probe = shape_union(u.patch.support, v.patch.support);
    for (const auto& p : probe.points())
        if (u.at(p) != v.at(p)) diff.push_back(p);
    res.almost_equal = true;
    res.difference = Shape(std::move(diff));
    return res;
}

namespace {

// Vertices of g admitting an infinite run reading the periodic background,
// backward into the given phase (dir < 0) or forward out of it (dir > 0).
std::vector<bool> tail_states(const LabeledGraph& g, const std::vector<Symbol>& word,
                              int phase, int dir) {
    int c = static_cast<int>(word.size());
    std::size_t n = static_cast<std::size_t>(g.vertex_count) * static_cast<std::size_t>(c);
    auto id = [&](int v, int ph) {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(c) +
               static_cast<std::size_t>(ph);
    };
    // phase-annotated edges reading word[ph] from phase ph to ph+1
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(n, 0);
        for (const auto& e : g.edges)
            for (int ph = 0; ph < c; ++ph) {
                if (e.label != word[static_cast<std::size_t>(ph)]) continue;
                std::size_t from = id(e.from, ph), to = id(e.to, (ph + 1) % c);
                if (!alive[from] || !alive[to]) continue;
                // count the degree that matters for the walk direction
                if (dir < 0) ++deg[to];    // backward runs need predecessors
                else         ++deg[from];  // forward runs need successors
            }
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && deg[i] == 0) {
                alive[i] = false;
                changed = true;
            }
    }
    std::vector<bool> out(static_cast<std::size_t>(g.vertex_count), false);
    for (int v = 0; v < g.vertex_count; ++v)
        out[static_cast<std::size_t>(v)] = alive[id(v, mod_floor(phase, c))];
    return out;
}

// Exact member enumeration for a 1-D sofic handle: words on [lo, hi] free on
// f and pinned to the base elsewhere, feasible between periodic tails.
std::vector<Pattern> sofic_members(const SubshiftHandle& s, const DescribedConfig& base,
                                   const Shape& f, int lo, int hi, const Budget& budget,
                                   bool* truncated = nullptr) {
    LabeledGraph g = presentation_1d(s);
    const auto& word = base.background.values;
    auto left_ok = tail_states(g, word, lo, -1);
    auto right_ok = tail_states(g, word, hi + 1, +1);
    auto out_edges = g.out_edges();

    std::vector<Pattern> members;
    std::vector<Symbol> vals;
    std::vector<int> start;
    for (int v = 0; v < g.vertex_count; ++v)
        if (left_ok[static_cast<std::size_t>(v)]) start.push_back(v);

    std::size_t nodes = 0;
    auto rec = [&](auto&& self, std::vector<int> states, int pos) -> void {
        if (++nodes > budget.max_nodes) {
            if (!truncated) throw BudgetExceeded("class_census: node budget exceeded");
            *truncated = true;
            return;
        }
        if (pos > hi) {
            for (int v : states)
                if (right_ok[static_cast<std::size_t>(v)]) {
                    std::vector<Symbol> member;
                    for (const auto& p : f.points())
                        member.push_back(vals[static_cast<std::size_t>(p[0] - lo)]);
                    members.emplace_back(f, std::move(member));
                    return;
                }
            return;
        }
        bool free_cell = f.contains(Point{pos});
        for (std::size_t sym = 0; sym < g.alphabet.size(); ++sym) {
            if (!free_cell &&
                static_cast<Symbol>(sym) != base.at(Point{pos}))
                continue;
            std::vector<int> next;
            for (int v : states)
                for (int ei : out_edges[static_cast<std::size_t>(v)]) {
                    const auto& e = g.edges[static_cast<std::size_t>(ei)];
                    if (e.label == static_cast<Symbol>(sym)) next.push_back(e.to);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.empty()) continue;
            vals[static_cast<std::size_t>(pos - lo)] = static_cast<Symbol>(sym);
            self(self, std::move(next), pos + 1);
        }
    };
    vals.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    if (!start.empty()) rec(rec, start, lo);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

// check that the base configuration itself is admissible around its patch
bool base_admissible(const SubshiftHandle& s, const DescribedConfig& base) {
    if (!background_admissible(s, base)) return false;
    if (base.patch.support.empty()) return true;
    Shape collar;
    switch (s.kind()) {
        case SubshiftHandle::Kind::Sft:
            collar = s.sft().window;
            break;
        case SubshiftHandle::Kind::Ledrappier:
            collar = normalize_window(Shape({Point{0, 0}, Point{1, 0}, Point{0, 1}}), 2);
            break;
        default:
            collar = Shape::origin(base.dimension);
    }
    Shape region = shape_sum(shape_sum(base.patch.support, collar), collar);
    std::vector<Symbol> vals;
    for (const auto& p : region.points()) vals.push_back(base.at(p));
    if (s.kind() == SubshiftHandle::Kind::Sofic1d) {
        std::vector<int> lo, hi;
        region.bounds(lo, hi);
        int pad = 2 * (presentation_1d(s).vertex_count + 1);
        // no free cells: just feasibility of the base between its tails
        return !sofic_members(s, base, Shape(), lo[0] - pad, hi[0] + pad, Budget{})
                    .empty();
    }
    return is_locally_admissible(s, Pattern(region, std::move(vals)));
}

}  // namespace

ClassCensus class_census(const SubshiftHandle& s, const DescribedConfig& base,
                         const Shape& f, const Shape& delta, bool gluing_verified,
                         const Budget& budget) {
    if (f.empty()) throw std::invalid_argument("class_census: empty window");
    if (!base_admissible(s, base))
        throw std::invalid_argument("class_census: base configuration not admissible");

    ClassCensus census;
    census.window = f;
    census.gluing_hypothesis = gluing_verified;

    if (s.kind() == SubshiftHandle::Kind::Sofic1d) {
        // exact scan between periodic tails; the scanned interval covers the
        // base's patch so the tails read pure background
        Shape covered = base.patch.support.empty()
                            ? f
                            : shape_union(f, base.patch.support);
        std::vector<int> lo, hi;
        covered.bounds(lo, hi);
        LabeledGraph g = presentation_1d(s);
        int collar = 2 * (g.vertex_count + 1);
        census.members = sofic_members(s, base, f, lo[0] - collar, hi[0] + collar,
                                       budget, &census.partial);
    } else {
        Shape w = s.kind() == SubshiftHandle::Kind::Sft
                      ? s.sft().window
                      : (s.kind() == SubshiftHandle::Kind::Ledrappier
                             ? normalize_window(
                                   Shape({Point{0, 0}, Point{1, 0}, Point{0, 1}}), 2)
                             : Shape::origin(s.dimension()));
        Shape region = shape_sum(f, shape_sum(w, w));
        Shape rim = shape_minus(region, f);
        std::vector<Symbol> pin_vals;
        for (const auto& p : rim.points()) pin_vals.push_back(base.at(p));
        auto pats = locally_admissible_with_pins(s, region, Pattern(rim, pin_vals),
                                                 budget, &census.partial);
        for (const auto& p : pats) census.members.push_back(p.restricted_to(f));
        std::sort(census.members.begin(), census.members.end());
        census.members.erase(
            std::unique(census.members.begin(), census.members.end()),
            census.members.end());
    }

    census.eroded = shape_erode(f, delta);
    if (!census.eroded.empty()) {
        census.compare_count = pattern_count(
            s, census.eroded,
            s.dimension() == 1 ? CountMode::Global1d : CountMode::Local, budget);
    }
    census.bound_holds = !(BigUint(census.members.size()) < census.compare_count);
    return census;
}

std::size_t ledrappier_finite_support_kernel(int box_side) {
    if (box_side < 1)
        throw std::invalid_argument("ledrappier_finite_support_kernel: side must be >= 1");
    int n = box_side;
    auto var = [&](int x, int y) {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(x);
    };
    auto inside = [&](int x, int y) { return x >= 0 && x < n && y >= 0 && y < n; };
    // one relation per triangle touching the box; outside cells are zero
    std::vector<std::array<int, 2>> corners;
    for (int x = -1; x < n; ++x)
        for (int y = -1; y < n; ++y)
            if (inside(x, y) || inside(x + 1, y) || inside(x, y + 1))
                corners.push_back({x, y});
    Gf2Matrix m(corners.size(), static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < corners.size(); ++r) {
        auto [x, y] = corners[r];
        if (inside(x, y)) m.set(r, var(x, y));
        if (inside(x + 1, y)) m.set(r, var(x + 1, y));
        if (inside(x, y + 1)) m.set(r, var(x, y + 1));
    }
    return m.nullity();
}

std::size_t unconstrained_finite_support_kernel(int box_side) {
    if (box_side < 1)
        throw std::invalid_argument("unconstrained_finite_support_kernel: side must be >= 1");
    return static_cast<std::size_t>(box_side) * static_cast<std::size_t>(box_side);
}

WzFamilyResult wz_family(const SftSpec& s, const Shape& e, const Pattern& u0,
                         const Pattern& u1, Symbol background, const Shape& f,
                         const Budget& budget) {
    Shape cell = shape_sum(e, shape_sum(s.window, s.window));
    if (u0.support != cell || u1.support != cell)
        throw std::invalid_argument("wz_family: patterns must live on E Omega^2");
    if (u0 == u1)
        throw std::invalid_argument("wz_family: the planted patterns must differ");
    Shape off_e = shape_minus(cell, e);
    for (const auto& p : off_e.points())
        if (u0.at(p) != u1.at(p))
            throw std::invalid_argument("wz_family: patterns must agree off E");

    SubshiftHandle h = SubshiftHandle::from_sft(s);
    SublatticeTiling tiling = make_tiling(cell);

    WzFamilyResult res;
    res.centers = tiling.tile_centers_in(f);
    if (res.centers.size() > 20)
        throw BudgetExceeded("wz_family: too many tile centers to materialize");
    res.count = BigUint::pow(2, res.centers.size());

    res.alpha = 1.0;
    for (int c : tiling.periods) res.alpha /= 2.0 * c;
    res.alpha_bound_ok =
        static_cast<double>(res.centers.size()) >= res.alpha * static_cast<double>(f.size());

    // admissibility is checked on f padded by the window against the background
    Shape padded = shape_sum(f, shape_sum(s.window, s.window));
    std::set<Pattern> distinct;
    for (std::uint64_t z = 0; z < (std::uint64_t(1) << res.centers.size()); ++z) {
        std::vector<Symbol> vals(padded.size(), background);
        for (std::size_t ci = 0; ci < res.centers.size(); ++ci) {
            const Pattern& u = (z >> ci) & 1 ? u1 : u0;
            for (std::size_t j = 0; j < cell.size(); ++j) {
                std::size_t at = padded.index_of(cell[j] + res.centers[ci]);
                vals[at] = u.values[j];
            }
        }
        Pattern w(padded, std::move(vals));
        if (!is_locally_admissible(h, w))
            throw std::logic_error("wz_family: constructed pattern not admissible");
        distinct.insert(w.restricted_to(f));
    }
    if (BigUint(distinct.size()) != res.count)
        throw std::logic_error("wz_family: patterns are not pairwise distinct");
    res.patterns.assign(distinct.begin(), distinct.end());
    res.entropy_lower_bound =
        static_cast<double>(res.centers.size()) * M_LN2 / static_cast<double>(f.size());
    (void)budget;
    return res;
}

PhiFamilyReport phi_n_family(const SubshiftHandle& s, const DescribedConfig& u,
                             int n, const Shape& delta, bool gluing_verified,
                             const Budget& budget) {
    PhiFamilyReport rep;
    rep.n = n;
    rep.hypothesis_met = gluing_verified;
    Shape delta_sym = shape_union(delta, delta.negated());
    Shape box = Shape::centered_box(s.dimension(), n);
    Shape window = shape_sum(box, delta_sym);
    ClassCensus census = class_census(s, u, window, delta, gluing_verified, budget);
    rep.partial = census.partial;
    rep.count = BigUint(census.members.size());
    rep.compare_count =
        pattern_count(s, box, s.dimension() == 1 ? CountMode::Global1d : CountMode::Local,
                      budget);
    rep.bound_holds = !(rep.count < rep.compare_count);
    return rep;
}

}  // namespace sdw
