#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdw/bigint.hpp"
#include "sdw/pattern.hpp"

namespace sdw {

// Finite directed multigraph with symbol-labeled edges. Bi-infinite walks
// through the essential part read exactly the points of a 1-D sofic shift;
// finite walks read its factor language.
struct LabeledGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        Symbol label = 0;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    Alphabet alphabet;

    std::vector<std::vector<int>> out_edges() const;  // vertex -> edge indices
    std::vector<std::vector<int>> in_edges() const;

    bool is_essential() const;   // every vertex has in- and out-degree >= 1
    bool is_deterministic() const;  // no two out-edges of a vertex share a label
    bool empty_language() const { return vertex_count == 0; }
};

// Remove vertices with no incoming or no outgoing edge until stable.
// The result presents the same subshift.
LabeledGraph trim_essential(const LabeledGraph& g);

// Deterministic automaton for the factor language: subset construction
// started from the full vertex set. State 0 is the start; transitions of -1
// mean the word leaves the language. All states accept.
struct FactorDfa {
    int state_count = 0;
    std::size_t alphabet_size = 0;
    std::vector<std::vector<int>> next;  // [state][symbol] -> state or -1
    Alphabet alphabet;
};

FactorDfa determinize(const LabeledGraph& g);

// Exact factor-language comparison. Returns the shortest word (lexicographic
// among shortest) on which membership differs, or nullopt when equal.
struct LanguageDiff {
    std::vector<Symbol> word;
    bool in_first = false;  // word belongs to the first language
};
std::optional<LanguageDiff> language_difference(const FactorDfa& a, const FactorDfa& b);

inline bool language_equal(const FactorDfa& a, const FactorDfa& b) {
    return !language_difference(a, b).has_value();
}

// True iff L(a) is a subset of L(b).
bool language_subset(const FactorDfa& a, const FactorDfa& b);

bool accepts(const FactorDfa& d, const std::vector<Symbol>& word);

// Number of distinct length-n words in the factor language (path count in
// the deterministic automaton, no materialization).
BigUint count_words(const FactorDfa& d, int n);

// All length-n words of the factor language in lexicographic order.
std::vector<std::vector<Symbol>> enumerate_words(const FactorDfa& d, int n,
                                                 std::size_t max_count);

// ln of the Perron root of the adjacency matrix of g (counts are path-based,
// so g should be deterministic when a sofic language's growth is wanted).
// Returns nullopt for an empty graph.
std::optional<double> perron_log(const LabeledGraph& g);

// Trace of the p-th power of the adjacency matrix: closed paths of length p.
BigUint adjacency_trace_power(const LabeledGraph& g, int p);

// Feasibility scan: is there a bi-infinite walk through the essential graph
// whose labels match `constraints` (position -> required symbol) on the
// integer interval [lo, hi]? Positions without constraint are free.
bool scan_feasible(const LabeledGraph& g, int lo, int hi,
                   const std::vector<std::optional<Symbol>>& constraints);

}  // namespace sdw
