#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdw/blockcode.hpp"
#include "sdw/subshift.hpp"

namespace sdw {

enum class EntropyMode { Local, Global1d, Toroidal };

std::string to_string(EntropyMode m);

// One row per window size: exact count plus ln(count)/|window|. Estimates
// are always recomputed from the counts.
struct EntropyRow {
    int n = 0;
    std::size_t window_cells = 0;
    BigUint count;
    double estimate = 0.0;
};

struct EntropyTable {
    std::string system_id;
    EntropyMode mode = EntropyMode::Local;
    std::string note;  // e.g. the d=2 local counts only bound growth from above
    std::vector<EntropyRow> rows;
};

// ln(count)/cells, with the k^cells case routed through ln(k) so full-shift
// rows come out bit-exact.
double entropy_estimate_value(const BigUint& count, std::size_t cells,
                              std::size_t alphabet_size);

// Window schedule: in d=1 the centered boxes [-n, n]; in d=2 the squares
// [0,n)^2 (same counts as any translate; includes even side lengths).
EntropyTable entropy_estimate(const SubshiftHandle& s, int n_max, EntropyMode mode,
                              const Budget& budget = {});

// ln of the Perron root of the determinized, trimmed presentation; nullopt
// for the empty subshift.
std::optional<double> entropy_exact_1d(const SubshiftHandle& s);

// Entropy gap table for a strict sub-system pair. Language containment on
// the tested windows is verified first.
struct MonotonicityReport {
    EntropyTable sigma;
    EntropyTable psi;
    std::vector<double> gaps;  // sigma row - psi row
    bool containment_ok = false;
    bool all_gaps_positive = false;
};
MonotonicityReport strict_monotonicity_probe(const SubshiftHandle& sigma,
                                             const SubshiftHandle& psi, int n,
                                             const Budget& budget = {});

// Counting comparison across a code plus exact spectral values of source
// and image. An image word of length l pulls back to a source word of
// length l + span - 1, so rows compare against the padded source count.
struct FactorEntropyReport {
    struct Row {
        int len = 0;
        BigUint image_count;
        BigUint source_count_padded;
        bool ok = false;
    };
    std::vector<Row> rows;
    bool rows_ok = false;
    std::optional<double> source_exact;
    std::optional<double> image_exact;
    bool inequality_ok = false;  // image <= source (1e-9 slack)
};
FactorEntropyReport factor_entropy_check(const BlockCode& c, int n);

}  // namespace sdw
