#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdw/automaton.hpp"
#include "sdw/subshift.hpp"

namespace sdw {

// Local rule of a sliding-block code: a total table over patterns on the
// neighborhood. The neighborhood is normalized to contain the origin by
// enlarging it (the table then ignores the added cell), which keeps the
// induced map unchanged.
struct LocalRule {
    int dimension = 1;
    Alphabet source_alphabet;
    Alphabet target_alphabet;
    Shape neighborhood;          // sorted points; contains the origin
    std::vector<Symbol> table;   // |A|^|S| entries, lexicographic input order

    // table index of input symbols listed in neighborhood point order,
    // first point most significant
    Symbol eval(const std::vector<Symbol>& input) const {
        std::size_t code = 0;
        for (Symbol v : input) code = code * source_alphabet.size() + v;
        return table[code];
    }

    static LocalRule identity(const Alphabet& a, int dimension);
    // Wolfram numbering over {-1,0,1}: output for window (l,c,r) is bit
    // 4l+2c+r of the rule number.
    static LocalRule eca(int number);
    // 1-D xor of cells 0 and 1 over the binary alphabet.
    static LocalRule xor_pair();
    static LocalRule majority3();
    static LocalRule shift_left();  // u(g) -> u(g+1)
    static LocalRule constant(const Alphabet& a, int dimension, Symbol value);
    // x(0,0) ^ x(1,0) ^ x(0,1) over binary, dimension 2.
    static LocalRule triangle_xor_2d();

    static LocalRule from_table(int dimension, const Alphabet& src,
                                const Alphabet& tgt, const Shape& neighborhood,
                                std::vector<Symbol> table);
};

// G-equivariant continuous map between subshifts, in local-rule form.
struct BlockCode {
    LocalRule rule;
    SubshiftHandle source;
    SubshiftHandle target;
    std::string id;
};

// Construct and (by default) verify that rule images of source-admissible
// patterns are target-admissible: exact language containment in d=1,
// windowed check in d=2.
BlockCode make_block_code(LocalRule rule, SubshiftHandle source,
                          SubshiftHandle target, std::string id,
                          bool validate = true);

// Output support is { g : g + S inside p's support }; throws when empty.
Pattern apply_to_pattern(const BlockCode& c, const Pattern& p);

// Apply to a periodic pattern on the fundamental domain [0,c_1)x...x[0,c_d)
// with wrap-around reads.
Pattern apply_periodic(const BlockCode& c, const Pattern& fundamental,
                       const std::vector<int>& periods);

// c1 after c2. Neighborhood is the Minkowski sum; table by substitution.
BlockCode compose(const BlockCode& c1, const BlockCode& c2);

// Presentation of the image subshift: the source presentation unrolled to
// the rule's window and relabeled through the rule, then trimmed.
LabeledGraph image_presentation_1d(const BlockCode& c);

struct SurjectivityResult {
    bool surjective = false;
    std::optional<Pattern> orphan;  // shortest, lexicographically least
};
SurjectivityResult is_surjective_1d(const BlockCode& c);

struct PreinjectivityResult {
    bool preinjective = false;
    // mutually erasable pair on a common interval support: distinct words
    // with equal end collars and equal rule image
    std::optional<std::pair<Pattern, Pattern>> witness;
};
PreinjectivityResult is_preinjective_1d(const BlockCode& c);

struct MeSearchResult {
    enum class Status { Witness, NotFound, Inconclusive };
    Status status = Status::NotFound;
    int bound = 0;
    std::optional<std::pair<Pattern, Pattern>> witness;
    Shape support;  // the f on which the witness pair differs
};
MeSearchResult bounded_me_search(const BlockCode& c, int max_extent,
                                 const Budget& budget = {});

struct BoundedToOneReport {
    int k_estimate = 0;                        // max preimage count seen
    bool unbounded_signature = false;          // count growing with period
    std::vector<std::pair<int, BigUint>> profile;  // period -> max count
};
BoundedToOneReport bounded_to_one_check(const BlockCode& c, int period_bound);

}  // namespace sdw
