#include "sdw/goe.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdw {

std::vector<Pattern> periodic_points(const SubshiftHandle& s,
                                     const std::vector<int>& periods,
                                     const Budget& budget) {
    if (s.dimension() > 2)
        throw std::invalid_argument("periodic_points: dimension must be 1 or 2");
    return toroidally_admissible(s, periods, budget);
}

SurjunctivityReport surjunctivity_check(const BlockCode& c, int p_max,
                                        const Budget& budget) {
    if (!(c.source.id() == c.target.id()) ||
        c.source.kind() != c.target.kind())
        throw std::invalid_argument("surjunctivity_check: source must equal target");
    SurjunctivityReport rep;
    rep.period_bound = p_max;

    std::vector<std::vector<int>> period_vectors;
    if (c.rule.dimension == 1) {
        for (int q = 1; q <= p_max; ++q) period_vectors.push_back({q});
    } else {
        for (int a = 1; a <= p_max; ++a)
            for (int b = 1; b <= p_max; ++b) period_vectors.push_back({a, b});
    }

    for (const auto& periods : period_vectors) {
        auto fix = periodic_points(c.source, periods, budget);
        std::set<Pattern> fix_set(fix.begin(), fix.end());
        SurjunctivityReport::PeriodResult result;
        result.periods = periods;
        result.fix_size = fix.size();

        std::map<Pattern, std::vector<std::size_t>> preimages;
        for (std::size_t i = 0; i < fix.size(); ++i) {
            Pattern img = apply_periodic(c, fix[i], periods);
            if (!fix_set.count(img))
                throw std::logic_error("surjunctivity_check: tau(Fix) left Fix");
            preimages[std::move(img)].push_back(i);
        }
        if (preimages.size() != fix.size()) {
            // lexicographically least colliding pair at this period
            for (const auto& [img, idx] : preimages) {
                if (idx.size() < 2) continue;
                std::pair<Pattern, Pattern> cand{fix[idx[0]], fix[idx[1]]};
                if (!result.collision || cand < *result.collision)
                    result.collision = std::move(cand);
            }
            if (rep.injective_on_periodic) {
                rep.injective_on_periodic = false;
                rep.collision_periods = periods;
                rep.collision = result.collision;
            }
        } else if (preimages.size() != fix_set.size()) {
            // injective on a finite set forces onto
            throw std::logic_error("surjunctivity_check: injective but not onto Fix");
        }
        rep.results.push_back(std::move(result));
    }
    return rep;
}

CodeVerdict decide_code(const BlockCode& c) {
    CodeVerdict v;
    v.code_id = c.id;
    auto surj = is_surjective_1d(c);
    auto pre = is_preinjective_1d(c);
    v.surjective = surj.surjective;
    v.preinjective = pre.preinjective;
    v.orphan = surj.orphan;
    v.me_witness = pre.witness;

    bool full_endo = c.source.kind() == SubshiftHandle::Kind::Full &&
                     c.target.kind() == SubshiftHandle::Kind::Full;
    if (v.preinjective && !v.surjective) {
        v.consistency = "VIOLATION";  // Myhill breach
    } else if (v.surjective && !v.preinjective) {
        v.consistency = full_endo ? "VIOLATION" : "MOORE-FAILURE-EXHIBIT";
    } else {
        v.consistency = "GOE-OK";
    }
    return v;
}

std::vector<CodeVerdict> goe_suite_eca() {
    std::vector<CodeVerdict> out;
    out.reserve(256);
    SubshiftHandle full = SubshiftHandle::full(Alphabet::binary(), 1, "full-binary");
    for (int rule = 0; rule < 256; ++rule) {
        BlockCode c = make_block_code(LocalRule::eca(rule), full, full,
                                      "eca:" + std::to_string(rule), false);
        out.push_back(decide_code(c));
    }
    return out;
}

EndoSearchResult moore_failure_search(const SubshiftHandle& system, int max_width) {
    if (system.dimension() != 1)
        throw std::invalid_argument("moore_failure_search: dimension must be 1");
    EndoSearchResult res;
    res.max_width = max_width;
    std::size_t k = system.alphabet().size();

    for (int w = 1; w <= max_width; ++w) {
        Shape window = Shape::interval(0, w - 1);
        std::size_t inputs = 1;
        for (int i = 0; i < w; ++i) inputs *= k;
        std::size_t tables = 1;
        for (std::size_t i = 0; i < inputs; ++i) tables *= k;

        for (std::size_t t = 0; t < tables; ++t) {
            ++res.rules_checked;
            std::vector<Symbol> table(inputs);
            std::size_t rest = t;
            for (std::size_t i = inputs; i-- > 0;) {
                table[i] = static_cast<Symbol>(rest % k);
                rest /= k;
            }
            // rules that ignore the last cell repeat narrower windows
            if (w > 1) {
                bool depends_last = false;
                for (std::size_t i = 0; i < inputs && !depends_last; i += k)
                    for (std::size_t j = 1; j < k; ++j)
                        if (table[i] != table[i + j]) { depends_last = true; break; }
                if (!depends_last) continue;
            }
            LocalRule rule = LocalRule::from_table(1, system.alphabet(),
                                                   system.alphabet(), window, table);
            BlockCode code;
            try {
                code = make_block_code(rule, system, system,
                                       "endo:w" + std::to_string(w) + ":" +
                                           std::to_string(t),
                                       true);
            } catch (const std::invalid_argument&) {
                continue;  // image leaves the system
            }
            ++res.valid_endomorphisms;
            auto surj = is_surjective_1d(code);
            auto pre = is_preinjective_1d(code);
            if (pre.preinjective && !surj.surjective) ++res.myhill_violations;
            if (!surj.surjective || pre.preinjective) continue;
            CodeVerdict v;
            v.code_id = code.id;
            v.surjective = true;
            v.preinjective = false;
            v.me_witness = pre.witness;
            v.consistency = "MOORE-FAILURE-EXHIBIT";
            res.exhibits.push_back(std::move(v));
        }
    }
    return res;
}

}  // namespace sdw
