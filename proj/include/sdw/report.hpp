#pragma once

#include <string>

#include "json.hpp"

#include "sdw/entropy.hpp"
#include "sdw/goe.hpp"
#include "sdw/homoclinic.hpp"
#include "sdw/subshift.hpp"

namespace sdw {

using Json = nlohmann::ordered_json;

// ---- canonical JSON forms (insertion-ordered, hence byte-deterministic) ----

Json to_json(const Shape& s);
Json to_json(const Pattern& p, const Alphabet& a);
Json to_json(const EntropyTable& t);
Json to_json(const IrreducibilityVerdict& v, const Alphabet& a);
Json to_json(const CodeVerdict& v, const Alphabet& src, const Alphabet& tgt);
Json to_json(const SurjunctivityReport& r, const Alphabet& a);
Json to_json(const ClassCensus& c, const Alphabet& a);
Json to_json(const WzFamilyResult& w, const Alphabet& a);
Json to_json(const PhiFamilyReport& r);
Json to_json(const MonotonicityReport& r);
Json to_json(const FactorEntropyReport& r);
Json to_json(const BoundedToOneReport& r);
Json to_json(const MeSearchResult& r, const Alphabet& a);

std::string entropy_table_csv(const EntropyTable& t);

// ---- file ingestion ----

// SFT spec file: { "dimension": d, "alphabet": [...], and either
// "forbidden": [...] or "window" + "allowed" }. 1-D forbidden entries may
// be plain symbol arrays (words); general entries are
// { "support": [[...],...], "values": [...] }. Windows are normalized on
// ingestion; `warnings` collects notes such as an added origin.
SubshiftHandle ingest_sft(const std::string& path, std::vector<std::string>* warnings = nullptr);
SubshiftHandle ingest_sft_json(const Json& j, std::vector<std::string>* warnings = nullptr);

// Sofic presentation file: { "alphabet": [...], "vertices": n,
// "edges": [[from, to, "symbol"], ...] }.
SubshiftHandle ingest_sofic(const std::string& path);
SubshiftHandle ingest_sofic_json(const Json& j);

// Rule file: { "dimension": d, "alphabet": [...], "target_alphabet": [...]?,
// "neighborhood": [[...],...], "table": ["sym", ...] } with the table in
// lexicographic input order.
LocalRule ingest_rule(const std::string& path);
LocalRule ingest_rule_json(const Json& j);

// ---- experiment envelope ----

// Deterministic payload plus a wall-time field excluded from the hash.
struct ExperimentReport {
    std::string experiment;
    Json inputs;
    Json outputs;
    double wall_ms = 0.0;
    std::string version;
    std::uint64_t report_hash = 0;  // FNV-1a over experiment+inputs+outputs
};

ExperimentReport make_report(const std::string& experiment, Json inputs, Json outputs,
                             double wall_ms);
Json to_json(const ExperimentReport& r);

std::uint64_t fnv1a(const std::string& s);

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace sdw
