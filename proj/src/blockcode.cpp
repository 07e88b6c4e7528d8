#include "sdw/blockcode.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "sdw/goe.hpp"

namespace sdw {

namespace {

std::size_t table_size(std::size_t k, std::size_t cells) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < cells; ++i) n *= k;
    return n;
}

}  // namespace

LocalRule LocalRule::from_table(int dimension, const Alphabet& src,
                                const Alphabet& tgt, const Shape& neighborhood,
                                std::vector<Symbol> table) {
    LocalRule r;
    r.dimension = dimension;
    r.source_alphabet = src;
    r.target_alphabet = tgt;
    r.neighborhood = neighborhood;
    r.table = std::move(table);
    if (r.table.size() != table_size(src.size(), neighborhood.size()))
        throw std::invalid_argument("local rule: table size must be |A|^|S|");
    for (Symbol v : r.table)
        if (v >= tgt.size())
            throw std::invalid_argument("local rule: table entry outside target alphabet");

    if (!r.neighborhood.contains_origin()) {
        // enlarge with the origin; the lifted table ignores the new cell
        Shape s2 = shape_union(r.neighborhood, Shape::origin(dimension));
        std::vector<std::size_t> sel;  // position of each old point in s2 order
        for (const auto& p : r.neighborhood.points())
            sel.push_back(s2.index_of(p));
        std::size_t k = src.size();
        std::vector<Symbol> lifted(table_size(k, s2.size()));
        std::vector<Symbol> cell(s2.size(), 0);
        for (std::size_t code = 0; code < lifted.size(); ++code) {
            std::size_t c = code;
            for (std::size_t i = s2.size(); i-- > 0;) {
                cell[i] = static_cast<Symbol>(c % k);
                c /= k;
            }
            std::size_t old_code = 0;
            for (auto i : sel) old_code = old_code * k + cell[i];
            lifted[code] = r.table[old_code];
        }
        r.neighborhood = s2;
        r.table = std::move(lifted);
    }
    return r;
}

LocalRule LocalRule::identity(const Alphabet& a, int dimension) {
    std::vector<Symbol> t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) t[i] = static_cast<Symbol>(i);
    return from_table(dimension, a, a, Shape::origin(dimension), std::move(t));
}

LocalRule LocalRule::eca(int number) {
    if (number < 0 || number > 255)
        throw std::invalid_argument("eca: rule number must be in [0, 255]");
    Alphabet b = Alphabet::binary();
    std::vector<Symbol> t(8);
    for (int v = 0; v < 8; ++v) t[static_cast<std::size_t>(v)] = (number >> v) & 1;
    return from_table(1, b, b, Shape({Point{-1}, Point{0}, Point{1}}), std::move(t));
}

LocalRule LocalRule::xor_pair() {
    Alphabet b = Alphabet::binary();
    return from_table(1, b, b, Shape({Point{0}, Point{1}}), {0, 1, 1, 0});
}

LocalRule LocalRule::majority3() {
    Alphabet b = Alphabet::binary();
    std::vector<Symbol> t(8);
    for (int v = 0; v < 8; ++v) {
        int ones = ((v >> 2) & 1) + ((v >> 1) & 1) + (v & 1);
        t[static_cast<std::size_t>(v)] = ones >= 2 ? 1 : 0;
    }
    return from_table(1, b, b, Shape({Point{-1}, Point{0}, Point{1}}), std::move(t));
}

LocalRule LocalRule::shift_left() {
    Alphabet b = Alphabet::binary();
    return from_table(1, b, b, Shape({Point{1}}), {0, 1});
}

LocalRule LocalRule::constant(const Alphabet& a, int dimension, Symbol value) {
    return from_table(dimension, a, a, Shape::origin(dimension),
                      std::vector<Symbol>(a.size(), value));
}

LocalRule LocalRule::triangle_xor_2d() {
    Alphabet b = Alphabet::binary();
    Shape s({Point{0, 0}, Point{1, 0}, Point{0, 1}});
    std::vector<Symbol> t(8);
    for (int v = 0; v < 8; ++v)
        t[static_cast<std::size_t>(v)] =
            (((v >> 2) & 1) ^ ((v >> 1) & 1) ^ (v & 1));
    return from_table(2, b, b, s, std::move(t));
}

Pattern apply_to_pattern(const BlockCode& c, const Pattern& p) {
    Shape out_support = shape_erode(p.support, c.rule.neighborhood);
    if (out_support.empty())
        throw std::invalid_argument("apply_to_pattern: input too small for neighborhood");
    std::vector<Symbol> vals;
    vals.reserve(out_support.size());
    std::vector<Symbol> window(c.rule.neighborhood.size());
    for (const auto& g : out_support.points()) {
        std::size_t i = 0;
        for (const auto& s : c.rule.neighborhood.points()) window[i++] = p.at(g + s);
        vals.push_back(c.rule.eval(window));
    }
    return Pattern(out_support, std::move(vals));
}

Pattern apply_periodic(const BlockCode& c, const Pattern& fundamental,
                       const std::vector<int>& periods) {
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    std::vector<Symbol> vals;
    vals.reserve(fundamental.support.size());
    std::vector<Symbol> window(c.rule.neighborhood.size());
    for (const auto& g : fundamental.support.points()) {
        std::size_t i = 0;
        for (const auto& s : c.rule.neighborhood.points()) {
            Point q = g + s;
            for (std::size_t d = 0; d < periods.size(); ++d)
                q.x[d] = mod(q.x[d], periods[d]);
            window[i++] = fundamental.at(q);
        }
        vals.push_back(c.rule.eval(window));
    }
    return Pattern(fundamental.support, std::move(vals));
}

BlockCode compose(const BlockCode& c1, const BlockCode& c2) {
    if (c1.rule.dimension != c2.rule.dimension)
        throw std::invalid_argument("compose: dimension mismatch");
    if (!(c1.rule.source_alphabet == c2.rule.target_alphabet))
        throw std::invalid_argument("compose: alphabet mismatch");

    const Shape& s1 = c1.rule.neighborhood;
    const Shape& s2 = c2.rule.neighborhood;
    Shape s = shape_sum(s2, s1);
    std::size_t k = c2.rule.source_alphabet.size();

    std::vector<Symbol> table(table_size(k, s.size()));
    std::vector<Symbol> cell(s.size(), 0);
    std::vector<Symbol> mid(s1.size());
    std::vector<Symbol> inner(s2.size());
    for (std::size_t code = 0; code < table.size(); ++code) {
        std::size_t c = code;
        for (std::size_t i = s.size(); i-- > 0;) {
            cell[i] = static_cast<Symbol>(c % k);
            c /= k;
        }
        std::size_t mi = 0;
        for (const auto& p1 : s1.points()) {
            std::size_t ii = 0;
            for (const auto& p2 : s2.points())
                inner[ii++] = cell[s.index_of(p1 + p2)];
            mid[mi++] = c2.rule.eval(inner);
        }
        table[code] = c1.rule.eval(mid);
    }
    LocalRule rule = LocalRule::from_table(c1.rule.dimension, c2.rule.source_alphabet,
                                           c1.rule.target_alphabet, s, std::move(table));
    return make_block_code(std::move(rule), c2.source, c1.target,
                           c1.id + "*" + c2.id, false);
}

namespace {

// Source presentation unrolled to the rule's window: vertices are runs of
// L-1 consecutive source edges, edges are runs of L. Each unrolled edge
// carries the source symbol at the window start and the rule output.
struct WindowGraph {
    struct E {
        int from = 0, to = 0;
        Symbol in = 0, out = 0;
    };
    int vertex_count = 0;
    std::vector<E> edges;
    std::vector<std::vector<Symbol>> window;  // per-vertex source symbols
};

WindowGraph unroll(const LabeledGraph& g, const LocalRule& rule) {
    std::vector<int> lo, hi;
    rule.neighborhood.bounds(lo, hi);
    int L = hi[0] - lo[0] + 1;

    // select rule inputs from an L-window of source symbols
    std::vector<std::size_t> sel;
    for (const auto& s : rule.neighborhood.points())
        sel.push_back(static_cast<std::size_t>(s[0] - lo[0]));
    std::vector<Symbol> input(sel.size());
    auto out_of = [&](const std::vector<Symbol>& win) {
        for (std::size_t i = 0; i < sel.size(); ++i) input[i] = win[sel[i]];
        return rule.eval(input);
    };

    WindowGraph w;
    if (L == 1) {
        w.vertex_count = g.vertex_count;
        w.window.assign(static_cast<std::size_t>(g.vertex_count), {});
        for (const auto& e : g.edges)
            w.edges.push_back({e.from, e.to, e.label, out_of({e.label})});
        return w;
    }

    // paths of L-1 edges, then their one-edge extensions
    std::vector<std::vector<int>> paths;  // edge index sequences
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        paths.push_back({static_cast<int>(i)});
    for (int step = 1; step < L - 1; ++step) {
        std::vector<std::vector<int>> next;
        for (const auto& p : paths) {
            int tail = g.edges[static_cast<std::size_t>(p.back())].to;
            for (std::size_t i = 0; i < g.edges.size(); ++i)
                if (g.edges[i].from == tail) {
                    auto q = p;
                    q.push_back(static_cast<int>(i));
                    next.push_back(std::move(q));
                }
        }
        paths = std::move(next);
    }
    std::map<std::vector<int>, int> id;
    for (const auto& p : paths) {
        id.emplace(p, static_cast<int>(w.window.size()));
        std::vector<Symbol> win;
        for (int ei : p) win.push_back(g.edges[static_cast<std::size_t>(ei)].label);
        w.window.push_back(std::move(win));
    }
    w.vertex_count = static_cast<int>(w.window.size());

    for (const auto& p : paths) {
        int tail = g.edges[static_cast<std::size_t>(p.back())].to;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (g.edges[i].from != tail) continue;
            std::vector<int> suffix(p.begin() + 1, p.end());
            suffix.push_back(static_cast<int>(i));
            auto it = id.find(suffix);
            assert(it != id.end());
            std::vector<Symbol> win = w.window[static_cast<std::size_t>(id.at(p))];
            win.push_back(g.edges[i].label);
            w.edges.push_back({id.at(p), it->second, win[0], out_of(win)});
        }
    }
    return w;
}

}  // namespace

LabeledGraph image_presentation_1d(const BlockCode& c) {
    if (c.rule.dimension != 1)
        throw std::invalid_argument("image_presentation_1d: dimension must be 1");
    WindowGraph w = unroll(presentation_1d(c.source), c.rule);
    LabeledGraph img;
    img.alphabet = c.rule.target_alphabet;
    img.vertex_count = w.vertex_count;
    for (const auto& e : w.edges) img.edges.push_back({e.from, e.to, e.out});
    return trim_essential(img);
}

BlockCode make_block_code(LocalRule rule, SubshiftHandle source,
                          SubshiftHandle target, std::string id, bool validate) {
    if (source.dimension() != rule.dimension || target.dimension() != rule.dimension)
        throw std::invalid_argument("block code: dimension mismatch");
    if (!(source.alphabet() == rule.source_alphabet) ||
        !(target.alphabet() == rule.target_alphabet))
        throw std::invalid_argument("block code: alphabet mismatch");
    BlockCode c{std::move(rule), std::move(source), std::move(target), std::move(id)};
    if (!validate) return c;

    if (c.rule.dimension == 1) {
        auto img = determinize(image_presentation_1d(c));
        auto tgt = determinize(presentation_1d(c.target));
        if (!language_subset(img, tgt))
            throw std::invalid_argument("block code: image leaves the target language");
    } else if (c.target.kind() != SubshiftHandle::Kind::Full) {
        Shape probe = shape_sum(Shape::centered_box(c.rule.dimension, 1),
                                c.rule.neighborhood);
        for (const auto& p : locally_admissible(c.source, probe))
            if (!is_locally_admissible(c.target, apply_to_pattern(c, p)))
                throw std::invalid_argument("block code: image leaves the target (windowed)");
    }
    return c;
}

SurjectivityResult is_surjective_1d(const BlockCode& c) {
    if (c.rule.dimension != 1)
        throw std::invalid_argument("is_surjective_1d: dimension must be 1");
    auto img = determinize(image_presentation_1d(c));
    auto tgt = determinize(presentation_1d(c.target));
    auto diff = language_difference(tgt, img);
    SurjectivityResult r;
    if (!diff) {
        r.surjective = true;
        return r;
    }
    if (!diff->in_first)
        throw std::logic_error("is_surjective_1d: image exceeds target language");
    r.surjective = false;
    r.orphan = Pattern::word(diff->word);
    return r;
}

namespace {

// Pair vertices admitting an infinite run of output-synchronized,
// input-equal edge pairs (backward when dir < 0, forward otherwise). Such
// runs supply the equal tails of a mutually erasable pair; the diagonal is
// always included, and for non-deterministic presentations distinct runs
// reading the same symbols are covered too.
std::vector<bool> equal_tail_pairs(const WindowGraph& w, int dir) {
    std::size_t n = static_cast<std::size_t>(w.vertex_count);
    std::vector<bool> alive(n * n, true);
    auto id = [&](int a, int b) {
        return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(n * n, 0);
        for (const auto& e1 : w.edges)
            for (const auto& e2 : w.edges) {
                if (e1.out != e2.out || e1.in != e2.in) continue;
                std::size_t from = id(e1.from, e2.from), to = id(e1.to, e2.to);
                if (!alive[from] || !alive[to]) continue;
                if (dir < 0) ++deg[to];
                else         ++deg[from];
            }
        for (std::size_t i = 0; i < n * n; ++i)
            if (alive[i] && deg[i] == 0) {
                alive[i] = false;
                changed = true;
            }
    }
    return alive;
}

}  // namespace

PreinjectivityResult is_preinjective_1d(const BlockCode& c) {
    if (c.rule.dimension != 1)
        throw std::invalid_argument("is_preinjective_1d: dimension must be 1");
    // Pair walk over the unrolled presentation with synchronized outputs: a
    // walk between equal-tail pair states whose input symbols differ
    // somewhere is exactly a mutually erasable pair.
    WindowGraph w = unroll(presentation_1d(c.source), c.rule);
    int n = w.vertex_count;

    auto tail_left = equal_tail_pairs(w, -1);
    auto tail_right = equal_tail_pairs(w, +1);
    auto pair_id = [&](int a, int b) {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(b);
    };

    struct HalfEdge {
        int e1, e2;
    };
    // candidate edge pairs grouped by (from1, from2), sorted by (in1, in2)
    std::map<std::pair<int, int>, std::vector<HalfEdge>> by_pair;
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        for (std::size_t j = 0; j < w.edges.size(); ++j) {
            if (w.edges[i].out != w.edges[j].out) continue;
            by_pair[{w.edges[i].from, w.edges[j].from}].push_back(
                {static_cast<int>(i), static_cast<int>(j)});
        }
    for (auto& [k, v] : by_pair)
        std::sort(v.begin(), v.end(), [&](const HalfEdge& a, const HalfEdge& b) {
            auto ka = std::make_tuple(w.edges[static_cast<std::size_t>(a.e1)].in,
                                      w.edges[static_cast<std::size_t>(a.e2)].in, a.e1, a.e2);
            auto kb = std::make_tuple(w.edges[static_cast<std::size_t>(b.e1)].in,
                                      w.edges[static_cast<std::size_t>(b.e2)].in, b.e1, b.e2);
            return ka < kb;
        });

    struct Node {
        int v1, v2;
        bool flag;
        int parent;
        HalfEdge via;
    };
    std::vector<Node> nodes;
    std::set<std::tuple<int, int, bool>> seen;

    // start states in window order for the lexicographic tie-break; both
    // coordinates of an equal-tail pair read the same window symbols
    std::vector<std::pair<int, int>> starts;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (tail_left[pair_id(a, b)] &&
                w.window[static_cast<std::size_t>(a)] ==
                    w.window[static_cast<std::size_t>(b)])
                starts.push_back({a, b});
    std::sort(starts.begin(), starts.end(), [&](const auto& x, const auto& y) {
        return std::make_tuple(w.window[static_cast<std::size_t>(x.first)], x.first,
                               x.second) <
               std::make_tuple(w.window[static_cast<std::size_t>(y.first)], y.first,
                               y.second);
    });
    for (auto [a, b] : starts) {
        nodes.push_back({a, b, false, -1, {-1, -1}});
        seen.insert({a, b, false});
    }

    PreinjectivityResult res;
    for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
        auto cur = nodes[qi];
        auto it = by_pair.find({cur.v1, cur.v2});
        if (it == by_pair.end()) continue;
        for (const auto& he : it->second) {
            const auto& e1 = w.edges[static_cast<std::size_t>(he.e1)];
            const auto& e2 = w.edges[static_cast<std::size_t>(he.e2)];
            bool flag = cur.flag || e1.in != e2.in;
            if (flag && tail_right[pair_id(e1.to, e2.to)] &&
                w.window[static_cast<std::size_t>(e1.to)] ==
                    w.window[static_cast<std::size_t>(e2.to)]) {
                // witness: rebuild both input words, then append the shared
                // final window as the right collar
                std::vector<Symbol> u{e1.in}, v{e2.in};
                for (int at = static_cast<int>(qi); nodes[static_cast<std::size_t>(at)].parent >= 0;
                     at = nodes[static_cast<std::size_t>(at)].parent) {
                    const auto& nd = nodes[static_cast<std::size_t>(at)];
                    u.push_back(w.edges[static_cast<std::size_t>(nd.via.e1)].in);
                    v.push_back(w.edges[static_cast<std::size_t>(nd.via.e2)].in);
                }
                std::reverse(u.begin(), u.end());
                std::reverse(v.begin(), v.end());
                const auto& tail = w.window[static_cast<std::size_t>(e1.to)];
                u.insert(u.end(), tail.begin(), tail.end());
                v.insert(v.end(), tail.begin(), tail.end());
                res.preinjective = false;
                res.witness = {Pattern::word(u), Pattern::word(v)};
                return res;
            }
            if (seen.insert({e1.to, e2.to, flag}).second)
                nodes.push_back({e1.to, e2.to, flag, static_cast<int>(qi), he});
        }
    }
    res.preinjective = true;
    return res;
}

MeSearchResult bounded_me_search(const BlockCode& c, int max_extent,
                                 const Budget& budget) {
    int d = c.rule.dimension;
    if (d > 2)
        throw std::invalid_argument("bounded_me_search: dimension must be 1 or 2");
    MeSearchResult res;
    res.bound = max_extent;

    Shape omega = shape_sum(c.rule.neighborhood, c.rule.neighborhood.negated());
    Shape minus_s = c.rule.neighborhood.negated();

    // the pinned collar must support both the output comparison (rule
    // window dilations) and source admissibility against the background
    // (system window dilations)
    Shape source_window = Shape::origin(d);
    if (c.source.kind() == SubshiftHandle::Kind::Sft)
        source_window = c.source.sft().window;
    else if (c.source.kind() == SubshiftHandle::Kind::Ledrappier)
        source_window = normalize_window(
            Shape({Point{0, 0}, Point{1, 0}, Point{0, 1}}), 2);
    Shape collar = shape_union(shape_sum(omega, omega),
                               shape_sum(source_window, source_window));

    // admissible constant backgrounds
    std::vector<Symbol> backgrounds;
    for (std::size_t a = 0; a < c.source.alphabet().size(); ++a) {
        Shape probe = shape_sum(collar, collar);
        Pattern constant(probe, std::vector<Symbol>(probe.size(), static_cast<Symbol>(a)));
        if (is_locally_admissible(c.source, constant))
            backgrounds.push_back(static_cast<Symbol>(a));
    }

    // candidate supports: boxes anchored at the origin, by volume
    std::vector<Shape> supports;
    if (d == 1) {
        for (int len = 1; len <= max_extent + 1; ++len)
            supports.push_back(Shape::interval(0, len - 1));
    } else {
        std::vector<std::tuple<std::size_t, int, int>> dims;
        for (int a = 1; a <= max_extent + 1; ++a)
            for (int b = 1; b <= max_extent + 1; ++b)
                dims.push_back({static_cast<std::size_t>(a) * b, a, b});
        std::sort(dims.begin(), dims.end());
        for (auto [vol, a, b] : dims)
            supports.push_back(Shape::box({0, 0}, {a - 1, b - 1}));
    }

    std::size_t work = 0;
    try {
        for (const auto& f : supports) {
            Shape region = shape_sum(f, collar);
            Shape out_region = shape_sum(f, minus_s);
            for (Symbol bg : backgrounds) {
                // pin everything outside f to the background
                Shape rim = shape_minus(region, f);
                Pattern pinned(rim, std::vector<Symbol>(rim.size(), bg));
                auto pats = locally_admissible_with_pins(c.source, region, pinned, budget);
                std::map<Pattern, std::size_t> first_with_image;
                for (std::size_t i = 0; i < pats.size(); ++i) {
                    if (++work > budget.max_nodes)
                        throw BudgetExceeded("bounded_me_search: budget exceeded");
                    Pattern img = apply_to_pattern(c, pats[i]).restricted_to(out_region);
                    auto [it, fresh] = first_with_image.emplace(std::move(img), i);
                    if (!fresh) {
                        res.status = MeSearchResult::Status::Witness;
                        res.witness = {pats[it->second], pats[i]};
                        res.support = f;
                        return res;
                    }
                }
            }
        }
    } catch (const BudgetExceeded&) {
        res.status = MeSearchResult::Status::Inconclusive;
        return res;
    }
    res.status = MeSearchResult::Status::NotFound;
    return res;
}

BoundedToOneReport bounded_to_one_check(const BlockCode& c, int period_bound) {
    if (c.rule.dimension != 1)
        throw std::invalid_argument("bounded_to_one_check: dimension must be 1");
    BoundedToOneReport rep;
    for (int q = 1; q <= period_bound; ++q) {
        auto src = periodic_points(c.source, {q});
        auto tgt = periodic_points(c.target, {q});
        std::set<Pattern> tgt_set(tgt.begin(), tgt.end());
        std::map<Pattern, BigUint> count;
        for (const auto& u : src) {
            Pattern img = apply_periodic(c, u, {q});
            if (!tgt_set.count(img))
                throw std::logic_error("bounded_to_one_check: periodic image left the target");
            count[img] += BigUint(1);
        }
        BigUint kq;
        for (const auto& [pat, n] : count) kq = std::max(kq, n);
        rep.profile.emplace_back(q, kq);
    }
    BigUint kmax;
    for (const auto& [q, kq] : rep.profile) kmax = std::max(kmax, kq);
    rep.k_estimate = kmax.fits_u64() && kmax.as_u64() <= 0x7fffffff
                         ? static_cast<int>(kmax.as_u64())
                         : -1;
    std::size_t n = rep.profile.size();
    if (n >= 3) {
        const auto& a = rep.profile[n - 3].second;
        const auto& b = rep.profile[n - 2].second;
        const auto& ck = rep.profile[n - 1].second;
        rep.unbounded_signature = a < b && b < ck;
    }
    return rep;
}

}  // namespace sdw
