#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sdw/bigint.hpp"
#include "sdw/catalog.hpp"
#include "sdw/entropy.hpp"
#include "sdw/rational.hpp"
#include "sdw/report.hpp"

using namespace sdw;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("biguint arithmetic against machine words") {
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(28657).to_string() == "28657");
    CHECK((BigUint(1000000007ull) * BigUint(998244353ull)).to_string() ==
          "998244359987710471");
    CHECK((BigUint::pow(2, 64) * BigUint::pow(2, 64)).to_string() ==
          "340282366920938463463374607431768211456");
    CHECK(BigUint::pow(2, 70).bit_length() == 71);
    CHECK(BigUint::pow(2, 70).is_power_of_two());
    CHECK_FALSE(BigUint(12).is_power_of_two());
    BigUint a(123456789);
    a += BigUint(987654321);
    CHECK(a == BigUint(1111111110ull));
    CHECK(BigUint(5) < BigUint(6));
    CHECK(BigUint::pow(3, 5) == BigUint(243));

    // ln agrees with std::log on representable values
    for (std::uint64_t v : {2ull, 28657ull, 1048576ull, 998244353ull})
        CHECK(BigUint(v).ln() == doctest::Approx(std::log((double)v)).epsilon(1e-12));
    // and scales correctly beyond 64 bits
    CHECK(BigUint::pow(2, 100).ln() ==
          doctest::Approx(100.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 21).to_string() == "1/21");
}

TEST_CASE("sft ingestion: golden mean from forbidden words") {
    std::string path = write_temp("golden.json", R"({
        "dimension": 1,
        "alphabet": ["0", "1"],
        "forbidden": [["1", "1"]]
    })");
    SubshiftHandle s = ingest_sft(path);
    CHECK(pattern_count(s, Shape::interval(0, 2), CountMode::Global1d) == BigUint(5));
}

TEST_CASE("sft ingestion: empty forbidden list behaves like the full shift") {
    std::string path = write_temp("free.json", R"({
        "dimension": 1,
        "alphabet": ["a", "b"],
        "forbidden": []
    })");
    SubshiftHandle s = ingest_sft(path);
    CHECK(pattern_count(s, Shape::interval(0, 4), CountMode::Global1d) == BigUint(32));
}

TEST_CASE("sft ingestion: window without the origin is normalized with a warning") {
    std::string path = write_temp("offwin.json", R"({
        "dimension": 1,
        "alphabet": ["0", "1"],
        "window": [[1]],
        "allowed": [
            {"support": [[1]], "values": ["0"]},
            {"support": [[1]], "values": ["1"]}
        ]
    })");
    std::vector<std::string> warnings;
    SubshiftHandle s = ingest_sft(path, &warnings);
    CHECK_FALSE(warnings.empty());
    CHECK(pattern_count(s, Shape::interval(0, 3), CountMode::Global1d) == BigUint(16));
}

TEST_CASE("sft ingestion: explicit window widens the derived one") {
    std::string path = write_temp("goldenwide.json", R"({
        "dimension": 1,
        "alphabet": ["0", "1"],
        "window": [[-2], [-1], [0], [1], [2]],
        "forbidden": [["1", "1"]]
    })");
    SubshiftHandle s = ingest_sft(path);
    CHECK(s.sft().window == Shape::interval(-2, 2));
    // same subshift regardless of the checking window
    CHECK(pattern_count(s, Shape::interval(0, 3), CountMode::Global1d) == BigUint(8));
}

TEST_CASE("sft ingestion: two-dimensional spec with object patterns") {
    std::string path = write_temp("hardsq.json", R"({
        "dimension": 2,
        "alphabet": ["0", "1"],
        "forbidden": [
            {"support": [[0, 0], [1, 0]], "values": ["1", "1"]},
            {"support": [[0, 0], [0, 1]], "values": ["1", "1"]}
        ]
    })");
    SubshiftHandle s = ingest_sft(path);
    CHECK(s.dimension() == 2);
    // matches the in-code hard-squares construction: 272 on the 3x3 box
    CHECK(pattern_count(s, Shape::box({0, 0}, {2, 2}), CountMode::Local) ==
          BigUint(272));
}

TEST_CASE("sft ingestion rejects malformed input") {
    std::string path = write_temp("broken.json", R"({"alphabet": ["0"]})");
    CHECK_THROWS_AS(ingest_sft(path), std::invalid_argument);
    std::string bad = write_temp("bad.json", "{not json");
    CHECK_THROWS_AS(ingest_sft(bad), std::invalid_argument);
}

TEST_CASE("rule ingestion") {
    std::string path = write_temp("xor.json", R"({
        "dimension": 1,
        "alphabet": ["0", "1"],
        "neighborhood": [[0], [1]],
        "table": ["0", "1", "1", "0"]
    })");
    LocalRule rule = ingest_rule(path);
    CHECK(rule.eval({0, 1}) == 1);
    CHECK(rule.eval({1, 1}) == 0);
}

TEST_CASE("sofic ingestion") {
    std::string path = write_temp("even.json", R"({
        "alphabet": ["0", "1"],
        "vertices": 2,
        "edges": [[0, 0, "0"], [0, 1, "1"], [1, 0, "1"]]
    })");
    SubshiftHandle s = ingest_sofic(path);
    auto dfa = determinize(presentation_1d(s));
    CHECK(accepts(dfa, {0, 1, 1, 0}));
    CHECK_FALSE(accepts(dfa, {0, 1, 0}));
}

TEST_CASE("reports are byte-deterministic with wall time outside the hash") {
    auto golden = catalog_system("golden-mean");
    EntropyTable t = entropy_estimate(golden, 6, EntropyMode::Global1d);
    Json inputs;
    inputs["system"] = "golden-mean";
    inputs["n"] = 6;

    ExperimentReport a = make_report("entropy", inputs, to_json(t), 1.25);
    ExperimentReport b = make_report("entropy", inputs, to_json(t), 99.75);
    CHECK(a.report_hash == b.report_hash);
    Json ja = to_json(a), jb = to_json(b);
    ja.erase("wall_ms");
    jb.erase("wall_ms");
    CHECK(ja.dump() == jb.dump());

    // a changed output changes the hash
    EntropyTable t2 = entropy_estimate(golden, 7, EntropyMode::Global1d);
    ExperimentReport c = make_report("entropy", inputs, to_json(t2), 1.25);
    CHECK(a.report_hash != c.report_hash);
}

TEST_CASE("entropy csv mirrors the table") {
    auto full = catalog_system("full-binary");
    EntropyTable t = entropy_estimate(full, 2, EntropyMode::Global1d);
    std::string csv = entropy_table_csv(t);
    CHECK(csv ==
          "n,window_cells,count,estimate\n"
          "1,3,8,0.693147\n"
          "2,5,32,0.693147\n");
}

TEST_CASE("pattern serialization is canonical") {
    Alphabet b = Alphabet::binary();
    Pattern p(Shape({Point{2}, Point{0}, Point{1}}), {0, 1, 0});
    Json j = to_json(p, b);
    CHECK(j["support"].dump() == "[[0],[1],[2]]");
}
