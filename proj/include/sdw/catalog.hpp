#pragma once

#include <string>
#include <vector>

#include "sdw/blockcode.hpp"
#include "sdw/subshift.hpp"

namespace sdw {

struct CatalogEntry {
    std::string id;
    std::string kind;  // "system" or "code"
    std::string note;
};

std::vector<CatalogEntry> catalog_entries();

// Systems: full-binary, full-ternary, full-binary-2d, golden-mean, even,
// ledrappier, at-most-one-one, constant-3, aa-ab-sft, zeros.
SubshiftHandle catalog_system(const std::string& id);

// Rules by name: identity, xor, majority3, shift, constant:<symbol>,
// triangle-xor, eca:<0-255>.
LocalRule catalog_rule(const std::string& spec, const Alphabet& source, int dimension);

// Codes: identity:<system>, eca:<n>, xor-full, majority3-full,
// golden-even, shift-golden, constant0-full, triangle-xor-full2d,
// identity:ledrappier.
BlockCode catalog_code(const std::string& id);

// Startup self-checks for every entry; throws on the first failure.
// Returns human-readable check lines.
std::vector<std::string> catalog_verify();

}  // namespace sdw
