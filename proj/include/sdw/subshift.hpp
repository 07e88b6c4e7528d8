#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdw/automaton.hpp"
#include "sdw/bigint.hpp"
#include "sdw/pattern.hpp"

namespace sdw {

// Enumeration/search budgets. The objects here are infinite; every
// computation is a finite probe and says so when it runs out of room.
struct Budget {
    std::size_t max_patterns = std::size_t(1) << 24;
    std::size_t max_nodes = std::size_t(1) << 26;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Window-and-allowed-set description of a shift of finite type. The window
// is normalized at construction: it contains the origin and is closed under
// negation, and the allowed set lives on exactly that window.
struct SftSpec {
    int dimension = 1;
    Alphabet alphabet;
    Shape window;
    std::vector<Pattern> allowed;  // sorted, supports all equal to window

    bool allows(const Pattern& p) const;  // p.support must equal window
};

// Symmetrize and adjoin the origin.
Shape normalize_window(const Shape& w, int dim);

// Build a spec from forbidden patterns: the window is the symmetrized union
// of the forbidden supports (and of base_window, when given), and a window
// pattern is allowed when no forbidden translate fits inside it.
SftSpec sft_from_forbidden(int dimension, const Alphabet& a,
                           const std::vector<Pattern>& forbidden,
                           const Shape& base_window = Shape());

// Build from an explicit allowed set; the window is normalized and the
// allowed set is tightened to the enlarged window.
SftSpec sft_from_allowed(int dimension, const Alphabet& a, const Shape& window,
                         const std::vector<Pattern>& allowed);

// Uniform handle over the systems the workbench knows how to query.
class SubshiftHandle {
public:
    enum class Kind { Full, Sft, Sofic1d, Ledrappier };

    static SubshiftHandle full(const Alphabet& a, int dimension, std::string id = "full");
    static SubshiftHandle from_sft(SftSpec spec, std::string id = "sft");
    // The graph is trimmed to its essential part on construction.
    static SubshiftHandle from_sofic(LabeledGraph g, std::string id = "sofic");
    static SubshiftHandle ledrappier();

    Kind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& id() const { return id_; }
    const SftSpec& sft() const { return *sft_; }
    const LabeledGraph& sofic() const { return *sofic_; }

private:
    Kind kind_ = Kind::Full;
    int dimension_ = 1;
    Alphabet alphabet_;
    std::string id_;
    std::shared_ptr<const SftSpec> sft_;
    std::shared_ptr<const LabeledGraph> sofic_;
};

// Essential labeled-graph presentation of a 1-D handle. For an SFT this is
// the de Bruijn edge graph on (L-1)-blocks of the window's bounding
// interval; for a sofic handle, its trimmed graph; for the full shift, one
// vertex with a loop per symbol.
LabeledGraph presentation_1d(const SubshiftHandle& s);

// All patterns p on f whose fitting window translates are allowed
// (Full: everything; Ledrappier: GF(2) triangle relations inside f;
// Sofic1d: factor-language words). Lexicographic order in the values.
std::vector<Pattern> locally_admissible(const SubshiftHandle& s, const Shape& f,
                                        const Budget& budget = {});

// True iff p itself passes every window check that fits inside its support.
bool is_locally_admissible(const SubshiftHandle& s, const Pattern& p);

// Exactly the restrictions to [0, n) of the system's configurations,
// computed on the trimmed presentation (bi-extendable words).
std::vector<Pattern> globally_admissible_1d(const SubshiftHandle& s, int n,
                                            const Budget& budget = {});

enum class CountMode { Local, Global1d };

// Cardinality of the pattern set on f, as an exact big integer. 1-D global
// counts on intervals run over the determinized presentation with no
// materialization.
BigUint pattern_count(const SubshiftHandle& s, const Shape& f, CountMode mode,
                      const Budget& budget = {});

// Bounded strong-irreducibility probe. Delta is symmetrized first. A
// counterexample is conclusive; HoldsUpTo is not a proof.
struct IrreducibilityVerdict {
    enum class Status { HoldsUpTo, Counterexample, Inconclusive };
    Status status = Status::HoldsUpTo;
    int bound = 0;
    Shape omega1, omega2;  // counterexample payload
    Pattern p1, p2;
    std::string note;
};

IrreducibilityVerdict check_delta_irreducible(const SubshiftHandle& s,
                                              const Shape& delta, int bound,
                                              const Budget& budget = {});

// Boundary-collar splice: w equals v on f*Omega and u elsewhere on the
// common support. u and v must agree on the boundary f*Omega^2 \ f; the
// result is checked admissible on every fitting window (a failure there is
// an internal invariant violation, not a user error).
struct SpliceBoundaryError : std::invalid_argument {
    Point where;
    explicit SpliceBoundaryError(const Point& p)
        : std::invalid_argument("splice: boundary disagreement"), where(p) {}
};

Pattern splice(const SftSpec& s, const Pattern& u, const Pattern& v, const Shape& f);

// Is there a locally admissible pattern on `region` extending `pinned`?
// (backtracking probe used by the d=2 irreducibility check)
bool admissible_extension_exists(const SubshiftHandle& s, const Shape& region,
                                 const Pattern& pinned, const Budget& budget = {});

// All locally admissible patterns on `region` that agree with `pinned`
// (whose support must lie inside the region). With `truncated` non-null,
// budget exhaustion flags it and returns the partial set instead of
// throwing.
std::vector<Pattern> locally_admissible_with_pins(const SubshiftHandle& s,
                                                  const Shape& region,
                                                  const Pattern& pinned,
                                                  const Budget& budget = {},
                                                  bool* truncated = nullptr);

// Patterns on the fundamental domain [0,c_1)x...x[0,c_d) whose periodic
// extension is admissible (window checks with wrap-around; cycle check on
// the presentation for 1-D sofic handles).
std::vector<Pattern> toroidally_admissible(const SubshiftHandle& s,
                                           const std::vector<int>& periods,
                                           const Budget& budget = {});

// |toroidally_admissible| without materializing (GF(2) rank fast path for
// the Ledrappier system).
BigUint toroidal_count(const SubshiftHandle& s, const std::vector<int>& periods,
                       const Budget& budget = {});

}  // namespace sdw
