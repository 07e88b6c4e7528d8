#include "sdw/entropy.hpp"

#include <cmath>

namespace sdw {

std::string to_string(EntropyMode m) {
    switch (m) {
        case EntropyMode::Local: return "local";
        case EntropyMode::Global1d: return "global1d";
        case EntropyMode::Toroidal: return "toroidal";
    }
    return "?";
}

double entropy_estimate_value(const BigUint& count, std::size_t cells,
                              std::size_t alphabet_size) {
    if (count == BigUint::pow(static_cast<std::uint32_t>(alphabet_size), cells))
        return std::log(static_cast<double>(alphabet_size));
    return count.ln() / static_cast<double>(cells);
}

EntropyTable entropy_estimate(const SubshiftHandle& s, int n_max, EntropyMode mode,
                              const Budget& budget) {
    if (n_max < 1) throw std::invalid_argument("entropy_estimate: n_max must be >= 1");
    if (mode == EntropyMode::Global1d && s.dimension() != 1)
        throw std::invalid_argument("entropy_estimate: global1d requires dimension 1");
    if (mode == EntropyMode::Toroidal && s.dimension() != 2)
        throw std::invalid_argument("entropy_estimate: toroidal mode is for dimension 2");

    EntropyTable t;
    t.system_id = s.id();
    t.mode = mode;
    if (s.dimension() == 2 && mode == EntropyMode::Local &&
        s.kind() != SubshiftHandle::Kind::Ledrappier)
        t.note = "upper bound: local counts dominate the pattern language";
    if (mode == EntropyMode::Toroidal)
        t.note = "lower-bound probe: periodic points only";
    for (int n = 1; n <= n_max; ++n) {
        EntropyRow row;
        row.n = n;
        try {
            if (s.dimension() == 1) {
                Shape f = Shape::centered_box(1, n);
                row.window_cells = f.size();
                row.count = pattern_count(s, f,
                                          mode == EntropyMode::Global1d
                                              ? CountMode::Global1d
                                              : CountMode::Local,
                                          budget);
            } else if (mode == EntropyMode::Toroidal) {
                row.window_cells =
                    static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
                row.count = toroidal_count(s, {n, n}, budget);
            } else {
                Shape f = Shape::box({0, 0}, {n - 1, n - 1});
                row.window_cells = f.size();
                row.count = pattern_count(s, f, CountMode::Local, budget);
            }
        } catch (const BudgetExceeded&) {
            // partial table, flagged
            t.note = (t.note.empty() ? std::string() : t.note + "; ") +
                     "budget exhausted at n=" + std::to_string(n);
            break;
        }
        row.estimate = entropy_estimate_value(row.count, row.window_cells,
                                              s.alphabet().size());
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::optional<double> entropy_exact_1d(const SubshiftHandle& s) {
    if (s.dimension() != 1)
        throw std::invalid_argument("entropy_exact_1d: dimension must be 1");
    FactorDfa dfa = determinize(presentation_1d(s));
    LabeledGraph g;
    g.alphabet = s.alphabet();
    g.vertex_count = dfa.state_count;
    for (int st = 0; st < dfa.state_count; ++st)
        for (std::size_t c = 0; c < dfa.alphabet_size; ++c) {
            int nx = dfa.next[static_cast<std::size_t>(st)][c];
            if (nx >= 0) g.edges.push_back({st, nx, static_cast<Symbol>(c)});
        }
    g = trim_essential(g);
    if (g.vertex_count == 0) return std::nullopt;  // empty subshift
    return perron_log(g);
}

MonotonicityReport strict_monotonicity_probe(const SubshiftHandle& sigma,
                                             const SubshiftHandle& psi, int n,
                                             const Budget& budget) {
    if (sigma.dimension() != psi.dimension())
        throw std::invalid_argument("strict_monotonicity_probe: dimension mismatch");
    MonotonicityReport rep;

    EntropyMode mode =
        sigma.dimension() == 1 ? EntropyMode::Global1d : EntropyMode::Local;
    rep.sigma = entropy_estimate(sigma, n, mode, budget);
    rep.psi = entropy_estimate(psi, n, mode, budget);

    // language containment on the tested windows
    rep.containment_ok = true;
    if (sigma.dimension() == 1) {
        auto da = determinize(presentation_1d(psi));
        auto db = determinize(presentation_1d(sigma));
        rep.containment_ok = language_subset(da, db);
    } else {
        Shape probe = Shape::box({0, 0}, {n - 1, n - 1});
        auto small = locally_admissible(psi, probe, budget);
        for (const auto& p : small)
            if (!is_locally_admissible(sigma, p)) {
                rep.containment_ok = false;
                break;
            }
    }
    if (!rep.containment_ok)
        throw std::invalid_argument("strict_monotonicity_probe: not a sub-system");

    bool strict = false;  // identical tables mean no strict containment signal
    rep.all_gaps_positive = true;
    for (std::size_t i = 0; i < rep.sigma.rows.size(); ++i) {
        double gap = rep.sigma.rows[i].estimate - rep.psi.rows[i].estimate;
        rep.gaps.push_back(gap);
        if (gap <= 0.0) rep.all_gaps_positive = false;
        if (rep.sigma.rows[i].count != rep.psi.rows[i].count) strict = true;
    }
    if (!strict)
        throw std::invalid_argument("strict_monotonicity_probe: containment is not strict");
    return rep;
}

FactorEntropyReport factor_entropy_check(const BlockCode& c, int n) {
    if (c.rule.dimension != 1)
        throw std::invalid_argument("factor_entropy_check: dimension must be 1");
    FactorEntropyReport rep;

    auto src_dfa = determinize(presentation_1d(c.source));
    LabeledGraph img = image_presentation_1d(c);
    auto img_dfa = determinize(img);

    std::vector<int> lo, hi;
    c.rule.neighborhood.bounds(lo, hi);
    int span = hi[0] - lo[0] + 1;

    rep.rows_ok = true;
    for (int len = 1; len <= n; ++len) {
        FactorEntropyReport::Row row;
        row.len = len;
        row.image_count = count_words(img_dfa, len);
        row.source_count_padded = count_words(src_dfa, len + span - 1);
        row.ok = !(row.source_count_padded < row.image_count);
        if (!row.ok) rep.rows_ok = false;
        rep.rows.push_back(std::move(row));
    }

    rep.source_exact = entropy_exact_1d(c.source);
    rep.image_exact = entropy_exact_1d(SubshiftHandle::from_sofic(img, c.id + "-image"));
    double se = rep.source_exact.value_or(-1e300);
    double ie = rep.image_exact.value_or(-1e300);
    rep.inequality_ok = ie <= se + 1e-9;
    return rep;
}

}  // namespace sdw
