#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/blockcode.hpp"

namespace sdw {

// Fix(H) for H = c_1 Z x ... x c_d Z: patterns on the fundamental domain
// whose periodic extension is admissible.
std::vector<Pattern> periodic_points(const SubshiftHandle& s,
                                     const std::vector<int>& periods,
                                     const Budget& budget = {});

// Injectivity of an endomorphism on every Fix(H) with periods <= p_max.
// Injective on a finite Fix(H) forces onto, which is asserted. Each tested
// period carries its own lexicographically least collision, if any.
struct SurjunctivityReport {
    struct PeriodResult {
        std::vector<int> periods;
        std::size_t fix_size = 0;
        std::optional<std::pair<Pattern, Pattern>> collision;  // distinct, equal image
    };
    int period_bound = 0;
    bool injective_on_periodic = true;
    std::vector<int> collision_periods;  // first failing period vector
    std::optional<std::pair<Pattern, Pattern>> collision;
    std::vector<PeriodResult> results;
};
SurjunctivityReport surjunctivity_check(const BlockCode& c, int p_max,
                                        const Budget& budget = {});

// Both sides of the Garden-of-Eden dichotomy for one code, decided exactly
// in d=1, with consistency labeling.
struct CodeVerdict {
    std::string code_id;
    bool surjective = false;
    bool preinjective = false;
    std::optional<Pattern> orphan;
    std::optional<std::pair<Pattern, Pattern>> me_witness;
    // "GOE-OK" | "MOORE-FAILURE-EXHIBIT" | "VIOLATION"
    std::string consistency;
};
CodeVerdict decide_code(const BlockCode& c);

// All 256 elementary rules on the binary full shift.
std::vector<CodeVerdict> goe_suite_eca();

// Bounded search for surjective, non-pre-injective endomorphisms of a 1-D
// system: every rule whose neighborhood fits in a window of width
// <= max_width. Exhibits carry re-verifiable witnesses.
struct EndoSearchResult {
    int max_width = 0;
    std::size_t rules_checked = 0;
    std::size_t valid_endomorphisms = 0;
    std::size_t myhill_violations = 0;  // pre-injective yet not surjective
    std::vector<CodeVerdict> exhibits;  // surjective yet not pre-injective
};
EndoSearchResult moore_failure_search(const SubshiftHandle& system, int max_width);

}  // namespace sdw
