#include "sdw/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace sdw {

std::vector<std::vector<int>> LabeledGraph::out_edges() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < edges.size(); ++i)
        out[static_cast<std::size_t>(edges[i].from)].push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> LabeledGraph::in_edges() const {
    std::vector<std::vector<int>> in(static_cast<std::size_t>(vertex_count));
    for (std::size_t i = 0; i < edges.size(); ++i)
        in[static_cast<std::size_t>(edges[i].to)].push_back(static_cast<int>(i));
    return in;
}

bool LabeledGraph::is_essential() const {
    std::vector<int> din(static_cast<std::size_t>(vertex_count), 0), dout = din;
    for (const auto& e : edges) {
        ++dout[static_cast<std::size_t>(e.from)];
        ++din[static_cast<std::size_t>(e.to)];
    }
    for (int v = 0; v < vertex_count; ++v)
        if (din[static_cast<std::size_t>(v)] == 0 || dout[static_cast<std::size_t>(v)] == 0)
            return false;
    return true;
}

bool LabeledGraph::is_deterministic() const {
    std::set<std::pair<int, Symbol>> seen;
    for (const auto& e : edges)
        if (!seen.insert({e.from, e.label}).second) return false;
    return true;
}

LabeledGraph trim_essential(const LabeledGraph& g) {
    std::vector<bool> alive(static_cast<std::size_t>(g.vertex_count), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> din(static_cast<std::size_t>(g.vertex_count), 0), dout = din;
        for (const auto& e : g.edges) {
            if (!alive[static_cast<std::size_t>(e.from)] ||
                !alive[static_cast<std::size_t>(e.to)])
                continue;
            ++dout[static_cast<std::size_t>(e.from)];
            ++din[static_cast<std::size_t>(e.to)];
        }
        for (int v = 0; v < g.vertex_count; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (alive[vi] && (din[vi] == 0 || dout[vi] == 0)) {
                alive[vi] = false;
                changed = true;
            }
        }
    }
    std::vector<int> remap(static_cast<std::size_t>(g.vertex_count), -1);
    LabeledGraph r;
    r.alphabet = g.alphabet;
    for (int v = 0; v < g.vertex_count; ++v)
        if (alive[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = r.vertex_count++;
    for (const auto& e : g.edges) {
        int f = remap[static_cast<std::size_t>(e.from)], t = remap[static_cast<std::size_t>(e.to)];
        if (f >= 0 && t >= 0) r.edges.push_back({f, t, e.label});
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

FactorDfa determinize(const LabeledGraph& g) {
    FactorDfa d;
    d.alphabet = g.alphabet;
    d.alphabet_size = g.alphabet.size();
    if (g.vertex_count == 0) {
        // empty language: a start state with no live transitions
        d.state_count = 1;
        d.next.assign(1, std::vector<int>(d.alphabet_size, -1));
        return d;
    }
    auto out = g.out_edges();

    std::vector<int> full(static_cast<std::size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v) full[static_cast<std::size_t>(v)] = v;

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    ids[full] = 0;
    subsets.push_back(full);
    d.next.emplace_back(d.alphabet_size, -1);

    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (std::size_t a = 0; a < d.alphabet_size; ++a) {
            std::set<int> tgt;
            for (int v : subsets[s])
                for (int ei : out[static_cast<std::size_t>(v)]) {
                    const auto& e = g.edges[static_cast<std::size_t>(ei)];
                    if (e.label == static_cast<Symbol>(a)) tgt.insert(e.to);
                }
            if (tgt.empty()) continue;
            std::vector<int> key(tgt.begin(), tgt.end());
            auto [it, fresh] = ids.emplace(key, static_cast<int>(subsets.size()));
            if (fresh) {
                subsets.push_back(key);
                d.next.emplace_back(d.alphabet_size, -1);
            }
            d.next[s][a] = it->second;
        }
    }
    d.state_count = static_cast<int>(subsets.size());
    return d;
}

std::optional<LanguageDiff> language_difference(const FactorDfa& a, const FactorDfa& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("language_difference: alphabet mismatch");
    // BFS over pairs, -1 meaning "dead" on that side; expand symbols in order
    // so the first mismatch found is shortest, then lexicographically least.
    struct Node { int sa, sb; int parent; Symbol sym; };
    std::vector<Node> nodes{{0, 0, -1, 0}};
    std::set<std::pair<int, int>> seen{{0, 0}};
    for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
        auto [sa, sb, parent, sym] = nodes[qi];
        for (std::size_t c = 0; c < a.alphabet_size; ++c) {
            int na = sa < 0 ? -1 : a.next[static_cast<std::size_t>(sa)][c];
            int nb = sb < 0 ? -1 : b.next[static_cast<std::size_t>(sb)][c];
            if (na < 0 && nb < 0) continue;
            if ((na < 0) != (nb < 0)) {
                LanguageDiff diff;
                diff.in_first = na >= 0;
                diff.word.push_back(static_cast<Symbol>(c));
                for (int at = static_cast<int>(qi); at > 0;
                     at = nodes[static_cast<std::size_t>(at)].parent)
                    diff.word.push_back(nodes[static_cast<std::size_t>(at)].sym);
                std::reverse(diff.word.begin(), diff.word.end());
                return diff;
            }
            if (seen.insert({na, nb}).second)
                nodes.push_back({na, nb, static_cast<int>(qi), static_cast<Symbol>(c)});
        }
    }
    return std::nullopt;
}

bool language_subset(const FactorDfa& a, const FactorDfa& b) {
    // word in L(a) but dead in b => not a subset
    std::set<std::pair<int, int>> seen{{0, 0}};
    std::deque<std::pair<int, int>> q{{0, 0}};
    while (!q.empty()) {
        auto [sa, sb] = q.front();
        q.pop_front();
        for (std::size_t c = 0; c < a.alphabet_size; ++c) {
            int na = a.next[static_cast<std::size_t>(sa)][c];
            if (na < 0) continue;
            int nb = b.next[static_cast<std::size_t>(sb)][c];
            if (nb < 0) return false;
            if (seen.insert({na, nb}).second) q.push_back({na, nb});
        }
    }
    return true;
}

bool accepts(const FactorDfa& d, const std::vector<Symbol>& word) {
    int s = 0;
    for (Symbol c : word) {
        s = d.next[static_cast<std::size_t>(s)][c];
        if (s < 0) return false;
    }
    return true;
}

BigUint count_words(const FactorDfa& d, int n) {
    std::vector<BigUint> cur(static_cast<std::size_t>(d.state_count));
    cur[0] = BigUint(1);
    for (int step = 0; step < n; ++step) {
        std::vector<BigUint> nxt(static_cast<std::size_t>(d.state_count));
        for (int s = 0; s < d.state_count; ++s) {
            if (cur[static_cast<std::size_t>(s)].is_zero()) continue;
            for (std::size_t c = 0; c < d.alphabet_size; ++c) {
                int t = d.next[static_cast<std::size_t>(s)][c];
                if (t >= 0) nxt[static_cast<std::size_t>(t)] += cur[static_cast<std::size_t>(s)];
            }
        }
        cur = std::move(nxt);
    }
    BigUint total;
    for (const auto& v : cur) total += v;
    return total;
}

std::vector<std::vector<Symbol>> enumerate_words(const FactorDfa& d, int n,
                                                 std::size_t max_count) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> word;
    // depth-first in symbol order gives lexicographic output
    auto rec = [&](auto&& self, int state, int depth) -> void {
        if (depth == n) {
            if (out.size() >= max_count)
                throw std::runtime_error("enumerate_words: budget exceeded");
            out.push_back(word);
            return;
        }
        for (std::size_t c = 0; c < d.alphabet_size; ++c) {
            int t = d.next[static_cast<std::size_t>(state)][c];
            if (t < 0) continue;
            word.push_back(static_cast<Symbol>(c));
            self(self, t, depth + 1);
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// Tarjan strongly connected components over an adjacency-count matrix.
std::vector<std::vector<std::size_t>> scc_decompose(
    const std::vector<std::vector<double>>& a) {
    std::size_t n = a.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    int counter = 0;

    auto strongconnect = [&](auto&& self, std::size_t v) -> void {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (a[v][w] == 0.0) continue;
            if (index[w] < 0) {
                self(self, w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            for (;;) {
                std::size_t w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
                if (w == v) break;
            }
            comps.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) strongconnect(strongconnect, v);
    return comps;
}

// Spectral radius of an irreducible nonnegative matrix via power iteration
// on A + I with Collatz-Wielandt bounds.
double irreducible_radius(const std::vector<std::vector<double>>& a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    std::vector<double> v(n, 1.0), w(n);
    double lo = 0.0, hi = 0.0;
    for (int it = 0; it < 200000; ++it) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
            w[i] = s;
            norm = std::max(norm, s);
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ratio = w[i] / v[i];  // v stays strictly positive
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (hi - lo < 1e-13) break;
    }
    return 0.5 * (lo + hi) - 1.0;
}

}  // namespace

std::optional<double> perron_log(const LabeledGraph& g) {
    if (g.vertex_count == 0) return std::nullopt;
    std::size_t n = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges)
        a[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] += 1.0;
    // the spectral radius is attained on a strongly connected component
    double radius = 0.0;
    for (const auto& comp : scc_decompose(a)) {
        std::vector<std::vector<double>> sub(comp.size(),
                                             std::vector<double>(comp.size(), 0.0));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j)
                sub[i][j] = a[comp[i]][comp[j]];
        radius = std::max(radius, irreducible_radius(sub));
    }
    return std::log(radius);
}

BigUint adjacency_trace_power(const LabeledGraph& g, int p) {
    std::size_t n = static_cast<std::size_t>(g.vertex_count);
    std::vector<std::vector<BigUint>> m(n, std::vector<BigUint>(n));
    for (const auto& e : g.edges)
        m[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] += BigUint(1);
    std::vector<std::vector<BigUint>> acc = m;
    for (int step = 1; step < p; ++step) {
        std::vector<std::vector<BigUint>> nxt(n, std::vector<BigUint>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (acc[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!m[k][j].is_zero()) nxt[i][j] += acc[i][k] * m[k][j];
            }
        acc = std::move(nxt);
    }
    BigUint tr;
    for (std::size_t i = 0; i < n; ++i) tr += acc[i][i];
    return tr;
}

bool scan_feasible(const LabeledGraph& g, int lo, int hi,
                   const std::vector<std::optional<Symbol>>& constraints) {
    assert(static_cast<int>(constraints.size()) == hi - lo + 1);
    if (g.vertex_count == 0) return false;
    auto out = g.out_edges();
    // start from every vertex: the essential graph extends left-infinitely
    std::vector<bool> cur(static_cast<std::size_t>(g.vertex_count), true);
    for (int pos = lo; pos <= hi; ++pos) {
        std::vector<bool> nxt(static_cast<std::size_t>(g.vertex_count), false);
        const auto& want = constraints[static_cast<std::size_t>(pos - lo)];
        bool any = false;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (!cur[static_cast<std::size_t>(v)]) continue;
            for (int ei : out[static_cast<std::size_t>(v)]) {
                const auto& e = g.edges[static_cast<std::size_t>(ei)];
                if (want && e.label != *want) continue;
                nxt[static_cast<std::size_t>(e.to)] = true;
                any = true;
            }
        }
        if (!any) return false;
        cur = std::move(nxt);
    }
    return true;
}

}  // namespace sdw
