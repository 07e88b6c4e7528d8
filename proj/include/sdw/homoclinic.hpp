#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/subshift.hpp"

namespace sdw {

// Finitely described configuration: a periodic background overridden by a
// finite patch. Almost-equality questions about configurations are decided
// on these descriptions.
struct DescribedConfig {
    int dimension = 1;
    Alphabet alphabet;
    std::vector<int> periods;  // background periods, all >= 1
    Pattern background;        // on the fundamental domain [0, periods)
    Pattern patch;             // finite override (may have empty support)

    Symbol at(const Point& p) const;

    static DescribedConfig uniform(const Alphabet& a, int dimension, Symbol s);
    // 1-D periodic word background.
    static DescribedConfig periodic_word(const Alphabet& a,
                                         const std::vector<Symbol>& word);
    DescribedConfig with_patch(Pattern patch) const;
};

// Is the background's periodic extension admissible in s? (exact for SFT,
// Ledrappier and full handles; cycle check on the presentation for sofic)
bool background_admissible(const SubshiftHandle& s, const DescribedConfig& c);

struct AlmostEqualResult {
    bool almost_equal = false;
    Shape difference;                  // finite difference set when almost equal
    std::vector<int> certificate_period;  // witness periods otherwise
};
AlmostEqualResult almost_equal(const DescribedConfig& u, const DescribedConfig& v);

// Members of the homoclinicity class of `base` visible through the window
// f: admissible patterns on f extending base-compatibly (base values
// outside f). When the gluing hypothesis was verified by the caller, the
// member count is compared against the pattern count on f eroded by delta.
struct ClassCensus {
    Shape window;                  // f
    std::vector<Pattern> members;  // on f, lexicographic
    Shape eroded;                  // f eroded by delta
    BigUint compare_count;         // pattern count on the eroded shape
    bool gluing_hypothesis = false;
    bool bound_holds = false;      // members >= compare_count
    bool partial = false;          // enumeration budget exhausted
};
ClassCensus class_census(const SubshiftHandle& s, const DescribedConfig& base,
                         const Shape& f, const Shape& delta,
                         bool gluing_verified, const Budget& budget = {});

// Dimension of the space of finite-support GF(2) configurations inside the
// n x n box satisfying the triangle relation everywhere on Z^2. Zero means
// the homoclinicity class of 0 is trivial at that support size.
std::size_t ledrappier_finite_support_kernel(int box_side);

// Contrast probe: the same computation with no relations (full binary Z^2).
std::size_t unconstrained_finite_support_kernel(int box_side);

// The tiling-indexed family: one pattern per {0,1}-assignment of the tile
// centers, u0 or u1 planted per tile over the uniform background.
struct WzFamilyResult {
    std::vector<Point> centers;
    BigUint count;                 // 2^|centers|
    std::vector<Pattern> patterns; // on f (materialized when small)
    double entropy_lower_bound = 0.0;  // ln(count)/|f|
    double alpha = 0.0;                // tiling density constant
    bool alpha_bound_ok = false;       // |centers| >= alpha |f|
};
WzFamilyResult wz_family(const SftSpec& s, const Shape& e, const Pattern& u0,
                         const Pattern& u1, Symbol background, const Shape& f,
                         const Budget& budget = {});

// Configurations agreeing with u outside box(n) Delta, counted on the
// window and compared against the pattern count on box(n) when the gluing
// hypothesis holds.
struct PhiFamilyReport {
    int n = 0;
    BigUint count;
    BigUint compare_count;
    bool hypothesis_met = false;
    bool bound_holds = false;
    bool partial = false;
};
PhiFamilyReport phi_n_family(const SubshiftHandle& s, const DescribedConfig& u,
                             int n, const Shape& delta, bool gluing_verified,
                             const Budget& budget = {});

}  // namespace sdw
